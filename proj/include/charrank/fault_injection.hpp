#pragma once

// Test hook for mutation testing of the counting recurrences. Each fault
// drops exactly one transition from one DP; the verification sweeps are
// expected to notice. Never set outside of tests and `verify --inject-fault`.

#include <cstdint>
#include <optional>
#include <string_view>

namespace charrank::faults {

enum class Fault {
  None,
  BoxRecurrence,       // row (2,2) of the boxed table loses its shifted term
  SetExactTransition,  // the smallest member's 1 -> 2 parts step is skipped
  SetAnyTransition,    // the first block of the smallest member's stride pass
};

void inject(Fault fault);
Fault active();

std::optional<Fault> parse(std::string_view name);
std::string_view name(Fault fault);

}  // namespace charrank::faults
