#include <CLI11/CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polycol/engine.hpp"
#include "polycol/loop_dsl.hpp"
#include "polycol/oracle.hpp"
#include "polycol/report.hpp"

using namespace polycol;

namespace {

enum Exit { kSat = 0, kUnsat = 1, kUnknown = 2, kInputError = 3 };

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int exit_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Sat: return kSat;
    case VerdictKind::UnsatCertified:
    case VerdictKind::UnsatConditional: return kUnsat;
    default: return kUnknown;
  }
}

struct Flags {
  long max_witness = -1;
  long baker_exponent = -1;
  bool emit_systems = false;
  bool trace = false;
  bool block = false;
};

void apply(const Flags& f, InstanceOptions& o) {
  if (f.max_witness >= 0) o.max_witness = static_cast<unsigned long>(f.max_witness);
  if (f.baker_exponent >= 0) o.baker_exponent = static_cast<unsigned>(f.baker_exponent);
  if (f.emit_systems) o.emit_systems = true;
}

Verdict decide(const Instance& in, const Flags& f, std::ostream& out) {
  Verdict v = run(in);
  out << format_verdict(v, f.trace);
  if (f.block) out << verdict_block(v);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedure for three-dimensional polytope collision"};
  app.require_subcommand(1);
  Flags flags;
  auto common = [&](CLI::App* c) {
    c->add_option("--max-witness", flags.max_witness, "longest exact witness search");
    c->add_option("--baker-exponent", flags.baker_exponent, "exponent D of the linear-forms bound");
    c->add_flag("--emit-systems", flags.emit_systems, "print every eliminated system");
    c->add_flag("--trace", flags.trace, "print the pipeline trace");
    c->add_flag("--json", flags.block, "append the machine-readable verdict block");
  };

  std::string file;
  auto* decide_cmd = app.add_subcommand("decide", "decide an instance file");
  decide_cmd->add_option("file", file, "instance (JSON)")->required();
  common(decide_cmd);

  unsigned long n_max = 100;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force scan of n = 0..K");
  oracle_cmd->add_option("file", file, "instance (JSON)")->required();
  oracle_cmd->add_option("--n-max", n_max, "last exponent scanned");

  std::string delta = "0";
  auto* loop_cmd = app.add_subcommand("loop", "exit queries of a linear loop");
  loop_cmd->add_option("file", file, "loop program")->required();
  loop_cmd->add_option("--delta", delta, "closing shift for strict guard complements");
  common(loop_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*decide_cmd) {
      Instance in = parse_instance(slurp(file));
      apply(flags, in.options);
      return exit_code(decide(in, flags, std::cout).kind);
    }
    if (*oracle_cmd) {
      Instance in = parse_instance(slurp(file));
      OracleResult r = scan(in.matrix, in.p1, in.p2, n_max);
      std::cout << "scanned: 0.." << r.scanned_upto << "\n";
      for (const auto& h : r.hits) std::cout << "hit n=" << h.n << " x ~ " << point_str(h.point) << "\n";
      if (r.hits.empty()) std::cout << "no hits\n";
      return r.hits.empty() ? kUnsat : kSat;
    }
    LoopProgram prog = parse_loop(slurp(file), parse_rational(delta));
    if (prog.exits.empty()) {
      std::cout << "guard is true: the loop never exits\nverdict: UNSAT_certified\n";
      return kUnsat;
    }
    VerdictKind overall = VerdictKind::UnsatCertified;
    std::optional<unsigned long> first;
    for (std::size_t i = 0; i < prog.exits.size(); ++i) {
      Instance in = exit_instance(prog, i);
      apply(flags, in.options);
      std::cout << "exit " << i << ": " << prog.exits[i].label << "\n";
      Verdict v = decide(in, flags, std::cout);
      if (v.kind == VerdictKind::Sat) {
        if (!first || v.n < *first) first = v.n;
        overall = VerdictKind::Sat;
      } else if (overall != VerdictKind::Sat) {
        if (v.kind == VerdictKind::Unknown) overall = VerdictKind::Unknown;
        else if (v.kind == VerdictKind::UnsatConditional && overall == VerdictKind::UnsatCertified)
          overall = v.kind;
      }
    }
    std::cout << "overall: " << verdict_name(overall);
    if (first) std::cout << " (earliest exit n = " << *first << ")";
    std::cout << "\n";
    return exit_code(overall);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
