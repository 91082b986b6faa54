#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polycol/instance.hpp"

namespace polycol {

// One component of the guard's complement, closed by the shift delta.
struct LoopExit {
  std::string label;
  Polytope target;  // no halfspaces: every state exits
};

// assume <constraints>; while (<constraints>) { x := M*x; }
struct LoopProgram {
  EMatrix matrix;
  Polytope entry;
  std::vector<LoopExit> exits;  // empty for a `true` guard
};

LoopProgram parse_loop(std::string_view text, const Rational& delta = 0);

// Collision instance for exit component i.
Instance exit_instance(const LoopProgram& prog, std::size_t i);

}  // namespace polycol
