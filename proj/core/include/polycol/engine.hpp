#pragma once

#include <map>
#include <string>
#include <vector>

#include "polycol/expsolve.hpp"
#include "polycol/instance.hpp"

namespace polycol {

struct EngineOptions {
  unsigned long prescan = 50;  // oracle scan of n = 0..prescan before the symbolic pipeline
  bool emit_systems = false;
  bool oracle_check = true;
  // Largest exponent the oracle may scan to close an eigenvector escape
  // bound; 0 disables the shortcut.
  unsigned long escape_limit = 300;
};

EngineOptions engine_options(const InstanceOptions& o);

struct Trace {
  std::size_t vertex_tasks = 0, edge_face_tasks = 0, edge_poly_tasks = 0;
  std::size_t systems = 0, distinct_systems = 0;
  std::size_t fm_branches = 0, fm_pruned = 0;
  int shift = 0;                           // singular reduction exponent shift
  bool prescan_hit = false;
  unsigned long max_bound = 0;
  std::map<std::string, std::size_t> paths;  // solver path -> systems decided that way
  std::vector<std::string> conditional_atoms;
  std::vector<std::string> notes;
  std::vector<std::string> emitted;        // systems as text when requested
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  unsigned long n = 0;
  Vec point;   // x in P1 with A^n x in P2
  Vec image;
  Trace trace;
};

Verdict run(const Instance& in, const SolveOptions& solve, const EngineOptions& eng);
Verdict run(const Instance& in);

}  // namespace polycol
