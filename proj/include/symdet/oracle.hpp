#ifndef SYMDET_ORACLE_HPP
#define SYMDET_ORACLE_HPP

#include <vector>

#include "symdet/cone.hpp"
#include "symdet/newton.hpp"

namespace symdet {

// Brute-force re-derivations for tests and the verify command. These share no
// computation path with the cone/volume/euler modules beyond the det/rank
// primitives: generators, rays, supporting forms, lattice bases and chi are
// all recomputed here from scratch.

/// True iff some rational linear form vanishes on the given rays and is
/// strictly positive on the remaining rays (and non-negative on the whole
/// generator set), i.e. the subset really spans a face.
bool brute_force_face_check(int n, const std::vector<int>& ray_indices);

/// Z-basis of the lattice generated by all semigroup generators lying in the
/// face, found by integer column reduction of the full in-face generator list.
std::vector<LatticeVector> brute_force_lattice_basis(int n, const Face& face);

/// The face-sum Euler characteristic with every intermediate recomputed on
/// the oracle path.
Int brute_force_chi(int n, const DegreeVector& d);

} // namespace symdet

#endif
