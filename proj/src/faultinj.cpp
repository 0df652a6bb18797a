#include "symdet/faultinj.hpp"

namespace symdet::faultinj {

namespace {
Fault g_active = Fault::None;
}

void set(Fault f) { g_active = f; }
Fault active() { return g_active; }

} // namespace symdet::faultinj
