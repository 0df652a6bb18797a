#ifndef SYMDET_RATLP_HPP
#define SYMDET_RATLP_HPP

#include <vector>

#include "symdet/numeric.hpp"

namespace symdet {

/// Exact feasibility of {x >= 0 : A x = b} over the rationals, decided by a
/// phase-1 simplex with Bland's rule (terminates without cycling; no floats).
bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

} // namespace symdet

#endif
