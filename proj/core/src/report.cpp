#include "polycol/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "polycol/oracle.hpp"

namespace polycol {

namespace {

std::string exact_str(const Vec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].str();
  return s + ")";
}

}  // namespace

std::string format_verdict(const Verdict& v, bool trace) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(v.kind) << "\n";
  if (v.kind == VerdictKind::Sat) {
    os << "witness n: " << v.n << "\n";
    os << "witness x: " << exact_str(v.point) << "\n";
    os << "witness x ~ " << point_str(v.point) << "\n";
    os << "image A^n x: " << exact_str(v.image) << "\n";
  }
  const Trace& t = v.trace;
  for (const auto& a : t.conditional_atoms) os << "conditional on: " << a << "\n";
  for (const auto& n : t.notes) os << "note: " << n << "\n";
  if (trace) {
    os << "trace: tasks vertex=" << t.vertex_tasks << " edge-face=" << t.edge_face_tasks
       << " edge-polytope=" << t.edge_poly_tasks << "\n";
    os << "trace: systems total=" << t.systems << " distinct=" << t.distinct_systems
       << " fm-branches=" << t.fm_branches << " fm-pruned=" << t.fm_pruned << "\n";
    os << "trace: shift=" << t.shift << " prescan-hit=" << (t.prescan_hit ? "yes" : "no")
       << " max-bound=" << t.max_bound << "\n";
    for (const auto& [p, c] : t.paths) os << "trace: path " << p << " x" << c << "\n";
  }
  for (const auto& e : t.emitted) os << "system " << e << "\n";
  return os.str();
}

std::string verdict_block(const Verdict& v) {
  nlohmann::ordered_json j;
  j["kind"] = verdict_name(v.kind);
  if (v.kind == VerdictKind::Sat) {
    j["n"] = v.n;
    nlohmann::ordered_json pt = nlohmann::ordered_json::array();
    for (const auto& c : v.point) pt.push_back(c.str());
    j["point"] = pt;
  }
  const Trace& t = v.trace;
  j["trace"] = {{"vertex_tasks", t.vertex_tasks},
                {"edge_face_tasks", t.edge_face_tasks},
                {"edge_polytope_tasks", t.edge_poly_tasks},
                {"systems", t.systems},
                {"distinct_systems", t.distinct_systems},
                {"shift", t.shift},
                {"prescan_hit", t.prescan_hit},
                {"max_bound", t.max_bound},
                {"paths", t.paths},
                {"conditional_atoms", t.conditional_atoms},
                {"notes", t.notes}};
  return "BEGIN VERDICT\n" + j.dump(2) + "\nEND VERDICT\n";
}

}  // namespace polycol
