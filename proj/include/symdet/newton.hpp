#ifndef SYMDET_NEWTON_HPP
#define SYMDET_NEWTON_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "symdet/cone.hpp"
#include "symdet/lattice.hpp"
#include "symdet/semigroup.hpp"

namespace symdet {

/// Exponents of the pure monomials z_i^{d_i} on the ray variables z_1..z_n.
struct DegreeVector {
    int n = 0;
    std::vector<std::int64_t> d;

    DegreeVector() = default;
    DegreeVector(int n_, std::vector<std::int64_t> d_); // validates d_i >= 1, |d| == n

    std::int64_t at(int i) const { return d[i - 1]; } // 1-based
};

/// One term of a function on the variety: generator index (1..N, canonical
/// order of build_generators) raised to a positive exponent.
struct Monomial {
    int generator_index = 0;
    std::int64_t exponent = 0;
};

/// Support of a polynomial function, pulled back to semigroup data.
/// The constant term is excluded by construction (exponents are >= 1).
struct FunctionSupport {
    int n = 0;
    std::vector<Monomial> monomials;

    FunctionSupport() = default;
    FunctionSupport(int n_, std::vector<Monomial> monomials_); // validates indices/exponents
};

struct ValidationResult {
    bool ok = false;
    std::vector<int> missing_rays;        // rays with no pure monomial; empty iff ok
    std::optional<DegreeVector> degrees;  // minimal pure-monomial exponents, when ok
};

/// A function with isolated critical behaviour must carry a pure monomial on
/// every ray variable; reports the rays where that fails.
ValidationResult validate_support(const FunctionSupport& fs);

/// The lattice point of a monomial: exponent * generator.
LatticeVector monomial_point(const GeneratorSet& gs, const Monomial& m);

/// Exact membership of a cone point in the Newton polyhedron of
/// sum_i z_i^{d_i}, i.e. Conv of the shifted cones d_i g_i + K. Decided by
/// rational LP feasibility over the n apex points and n ray generators.
/// Throws DomainError if the point is outside the cone.
bool newton_membership(int n, const LatticeVector& point, const DegreeVector& d);
bool newton_membership(int n, const std::vector<Rat>& point, const DegreeVector& d);

struct CompactFaceData {
    Face face;
    std::vector<LatticeVector> vertices; // d_i * g_i for i in the face, in index order
};

/// The unique compact (k-1)-face of the Newton polyhedron inside a k-face of
/// the cone: the simplex on the scaled ray generators.
CompactFaceData compact_face(int n, const Face& face, const DegreeVector& d);

} // namespace symdet

#endif
