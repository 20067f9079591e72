#include "charrank/fault_injection.hpp"

#include <atomic>

#include "charrank/partitions.hpp"

namespace charrank::faults {
namespace {
std::atomic<Fault> g_fault{Fault::None};
}

void inject(Fault fault) {
  g_fault.store(fault);
  clear_count_caches();
}

Fault active() { return g_fault.load(std::memory_order_relaxed); }

std::optional<Fault> parse(std::string_view name) {
  for (Fault f : {Fault::None, Fault::BoxRecurrence, Fault::SetExactTransition,
                  Fault::SetAnyTransition}) {
    if (faults::name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view name(Fault fault) {
  switch (fault) {
    case Fault::None: return "none";
    case Fault::BoxRecurrence: return "box-recurrence";
    case Fault::SetExactTransition: return "set-exact-transition";
    case Fault::SetAnyTransition: return "set-any-transition";
  }
  return "unknown";
}

}  // namespace charrank::faults
