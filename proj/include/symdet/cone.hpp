#ifndef SYMDET_CONE_HPP
#define SYMDET_CONE_HPP

#include <vector>

#include "symdet/lattice.hpp"
#include "symdet/semigroup.hpp"

namespace symdet {

/// Ray generators of the cone: g_1 = e_1 and g_j = e_1 + 2 e_j for j >= 2.
struct Ray {
    int index = 0; // 1..n
    LatticeVector vector;
};

enum class FaceFamily {
    Type1, // contains the ray e_1
    Type2, // does not
};

/// A nonzero face of the (simplicial) cone, identified by its ray indices.
struct Face {
    std::vector<int> ray_indices; // sorted, 1-based, nonempty

    int k() const { return static_cast<int>(ray_indices.size()); }
    bool contains(int i) const;
    FaceFamily family() const { return contains(1) ? FaceFamily::Type1 : FaceFamily::Type2; }
};

LatticeVector ray_vector(int n, int i);
std::vector<Ray> rays(int n);

/// All k-dimensional faces, 1 <= k <= n: every k-subset of ray indices
/// (the cone is simplicial). C(n-1,k-1) of them contain ray 1.
std::vector<Face> faces(int n, int k);

/// Integer linear form vanishing on a face and positive on the rest of the cone.
struct SupportingForm {
    LatticeVector coefficients;

    Int eval(const LatticeVector& x) const;
};

/// Supporting form of a proper nonzero face (1 <= k <= n-1):
/// Type1 {1, i_2..i_k}: sum of x_i over i outside the face;
/// Type2 {j_1..j_k}:    2 x_1 - sum of x_j over j in the face.
SupportingForm supporting_form(int n, const Face& face);

/// Membership in the closed cone: the n facet forms are all non-negative
/// (x_j >= 0 for j >= 2 and 2 x_1 >= x_2 + ... + x_n).
bool cone_contains(int n, const LatticeVector& p);

/// Positions (into build_generators(n)) of the semigroup generators lying in
/// the face: exactly the m_ab with both matrix labels drawn from the face's
/// ray indices.
std::vector<int> generators_in_face(int n, const Face& face);

/// Z-basis of the lattice generated by the semigroup elements in the face.
/// Type1 {1, i_2..i_k}: {e_1, e_{i_2}, ..., e_{i_k}}.
/// Type2 {j_1..j_k}:    {e_1 + 2 e_{j_1}, e_1 + e_{j_1} + e_{j_2}, ...,
///                       e_1 + e_{j_1} + e_{j_k}} (anchored at the smallest index).
std::vector<LatticeVector> face_lattice_basis(int n, const Face& face);

/// The face's semigroup generators written in normalized face coordinates
/// (k >= 2). The result is the generator set of the same variety in
/// dimension k: it equals build_generators(k) entry for entry.
GeneratorSet face_normal_form(int n, const Face& face);

} // namespace symdet

#endif
