#ifndef SYMDET_EULER_HPP
#define SYMDET_EULER_HPP

#include <optional>
#include <vector>

#include "symdet/newton.hpp"
#include "symdet/volume.hpp"

namespace symdet {

/// e_0..e_n of the given values, by the product recurrence (exact).
std::vector<Int> elementary_symmetric(const std::vector<std::int64_t>& values);

/// Euler characteristic of the Milnor fiber at the origin, as the alternating
/// sum of determinant-path normalized volumes over the cone's face lattice.
Int chi_face_sum(int n, const DegreeVector& d);
Int chi_face_sum(const VolumeEvaluator& ev, const DegreeVector& d);

/// The same characteristic in closed form:
/// sum_{k=1}^n (-1)^{k-1} 2^{k-1} e_k(d_1,...,d_n).
Int chi_closed_form(int n, const DegreeVector& d);

/// Product consolidation of the closed form: (1 - prod_i (1 - 2 d_i)) / 2.
Int chi_product_form(int n, const DegreeVector& d);

/// chi for a generic linear form (all d_i = 1): 1 for odd n, 0 for even n.
/// Computed through the closed form; the parity value is asserted, not stored.
Int chi_linear(int n);

/// Exact check of sum_{i=0}^n C(n,i) 2^i (1-2)^{n-i} == 1 (binomial identity
/// underlying the parity result).
bool bernstein_identity_check(int n);

/// Local Euler obstruction of the variety at the origin (two-stratum case:
/// equals chi of the Milnor fiber of a generic linear form).
Int euler_obstruction(int n);

/// Local Euler obstruction of a non-degenerate function with the given
/// degrees: Eu(0) minus the face-sum chi.
Int euler_obstruction_f(int n, const DegreeVector& d);
Int euler_obstruction_f(const VolumeEvaluator& ev, const DegreeVector& d);

/// chi of the Milnor fiber of g = x_1^{d_1} + sum_{i>=2} x_i^{2 d_i} on
/// affine n-space, by the face sum over the orthant's face lattice.
/// Requires d_1 >= 2.
Int chi_affine_space(int n, const DegreeVector& d);

/// Milnor number of g, recovered from chi_affine_space via
/// chi = 1 + (-1)^{n-1} mu. Requires d_1 >= 2; never negative.
Int milnor_number(int n, const DegreeVector& d);

/// Evaluates the Milnor-number expression for the obstruction of f
/// (odd n: -mu + tail; even n: -1 + mu + tail, with the tail summed over
/// subsets of {2..n}) and asserts it equals euler_obstruction_f.
Int euler_obstruction_f_via_milnor(int n, const DegreeVector& d);
Int euler_obstruction_f_via_milnor(const VolumeEvaluator& ev, const DegreeVector& d);

/// One computation record: all chi paths, obstructions, and (when d_1 >= 2)
/// the Milnor data, with cross-path agreement flags.
struct ChiReport {
    int n = 0;
    DegreeVector d;
    Int chi_face_sum;
    Int chi_closed;
    Int chi_product;
    Int eu_variety;
    Int eu_function;
    std::optional<Int> chi_affine; // only when d_1 >= 2
    std::optional<Int> milnor_g;   // only when d_1 >= 2
    bool chi_agreement = false;    // all three chi paths equal
    bool milnor_identity_ok = true; // obstruction-via-Milnor identity, when computed
};

ChiReport make_chi_report(int n, const DegreeVector& d);

} // namespace symdet

#endif
