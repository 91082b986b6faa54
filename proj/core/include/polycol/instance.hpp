#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polycol/spectral.hpp"

namespace polycol {

struct InstanceOptions {
  unsigned long max_witness = 1000000;  // longest exact witness search
  unsigned baker_exponent = 3;
  bool oracle_check = true;
  bool emit_systems = false;
};

// Matrix and polytopes share one number field (null when all rational).
struct Instance {
  EMatrix matrix;
  Polytope p1, p2;
  InstanceOptions options;
};

// JSON instance document; errors are ParseError naming the offending field.
Instance parse_instance(std::string_view text);

// Inverse of parse_instance for rational instances (used by tests and tools).
std::string instance_json(const Instance& in);

}  // namespace polycol
