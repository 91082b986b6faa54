#pragma once

#include <string>

#include "polycol/engine.hpp"

namespace polycol {

// Line-oriented verdict text; the trace section only when asked for.
std::string format_verdict(const Verdict& v, bool trace);
// Machine-readable block mirroring the Verdict fields (JSON between markers).
std::string verdict_block(const Verdict& v);

}  // namespace polycol
