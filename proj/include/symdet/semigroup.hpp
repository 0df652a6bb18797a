#ifndef SYMDET_SEMIGROUP_HPP
#define SYMDET_SEMIGROUP_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "symdet/lattice.hpp"

namespace symdet {

/// The semigroup generators of the rank-one symmetric matrix variety in
/// dimension n: e_1, e_1+e_j and e_1+e_i+e_j, indexed like the entries of an
/// n x n symmetric matrix (m_ij = m_ji, 1 <= i <= j <= n).
///
/// Canonical order: the n ray generators first (m_11 = e_1, then
/// m_jj = e_1 + 2 e_j for j = 2..n), then m_1j = e_1 + e_j for j = 2..n,
/// then m_ij = e_1 + e_i + e_j for 2 <= i < j <= n in lexicographic order.
struct GeneratorSet {
    int n = 0;
    std::vector<LatticeVector> generators;

    int size() const { return static_cast<int>(generators.size()); }

    /// Position (0-based) of m_ij for 1 <= i,j <= n; symmetric in (i,j).
    int position(int i, int j) const;

    /// Matrix label (i,j), i <= j, of the generator at a 0-based position.
    std::pair<int, int> label(int pos) const;

    const LatticeVector& at(int i, int j) const { return generators[position(i, j)]; }
};

GeneratorSet build_generators(int n);

/// Ambient dimension N = n(n+1)/2 and dim of the rank-(t-1) locus,
/// N - (n-t+1)(n-t+2)/2, for 2 <= t <= n.
std::pair<Int, Int> ambient_and_dimension(int n, int t);

struct RelationReport {
    std::int64_t checked = 0;
    std::vector<std::array<int, 4>> violations; // (i, j, k, l) quadruples that failed

    bool ok() const { return violations.empty(); }
};

/// Verify m_ij + m_kl = m_il + m_kj for all 1 <= i < k <= n, 1 <= j < l <= n
/// (the additive shadow of the 2x2 minor relations).
RelationReport check_minor_relations(int n);

/// True iff no generator is a non-negative integer combination of the others.
/// Every generator has first coordinate 1, so only single-term combinations
/// can reproduce one; the check reduces to pairwise distinctness.
bool minimality_check(int n);

struct SaturationReport {
    std::int64_t cone_points = 0;          // lattice points of the box found inside the cone
    std::vector<LatticeVector> violations; // cone points not expressible in the semigroup

    bool ok() const { return violations.empty(); }
};

/// Saturation evidence on a box: every lattice point p with 0 <= p_1 <= bound,
/// |p_i| <= 2*bound that lies in the cone must be a non-negative integer
/// combination of the generators (necessarily with coefficient sum p_1).
/// Throws ResourceError when the box exceeds max_points.
SaturationReport saturation_check(int n, int bound, std::int64_t max_points = 2000000);

} // namespace symdet

#endif
