#ifndef SYMDET_VOLUME_HPP
#define SYMDET_VOLUME_HPP

#include <vector>

#include "symdet/cone.hpp"
#include "symdet/newton.hpp"

namespace symdet {

struct VolumeResult {
    Face face;
    Int value; // normalized k-volume w.r.t. the face lattice; always >= 1
};

/// Normalized volume of the pyramid over the compact face, by determinant:
/// the compact-face vertices are written in the face lattice basis and, with
/// the apex at the origin, the volume is |det| of the coordinate matrix.
VolumeResult normalized_volume(int n, const Face& face, const DegreeVector& d);

/// The same volume in closed form: d_i for a ray face {i};
/// 2^{k-1} d_1 d_{i_2}...d_{i_k} for faces containing ray 1;
/// 2^{k-1} d_{j_1}...d_{j_k} for faces avoiding it.
Int closed_form_volume(int n, const Face& face, const DegreeVector& d);

/// Per-n cache of faces, bases and ray coordinates for batch evaluation of
/// the determinant path. The per-(face, d) determinant is still computed on
/// each call; only the d-independent basis work is shared.
class VolumeEvaluator {
public:
    explicit VolumeEvaluator(int n);

    int n() const { return n_; }
    const std::vector<Face>& all_faces() const { return faces_; }

    /// Determinant-path volume of faces_[face_idx] at degrees d.
    Int normalized_volume(int face_idx, const DegreeVector& d) const;

private:
    int n_;
    std::vector<Face> faces_;                     // all 2^n - 1 nonzero faces
    std::vector<IntegerMatrix> ray_coords_;      // per face: k x k columns = basis coords of its rays
};

} // namespace symdet

#endif
