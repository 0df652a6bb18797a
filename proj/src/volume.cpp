#include "symdet/volume.hpp"

#include "symdet/errors.hpp"
#include "symdet/faultinj.hpp"

namespace symdet {

namespace {

Int apply_det_fault(const Face& face, Int value) {
    using faultinj::Fault;
    Fault f = faultinj::active();
    if (f == Fault::DetRay && face.k() == 1) return value + 1;
    if (f == Fault::DetType1 && face.k() >= 2 && face.family() == FaceFamily::Type1) return value + 1;
    if (f == Fault::DetType2 && face.k() >= 2 && face.family() == FaceFamily::Type2) return value + 1;
    return value;
}

IntegerMatrix ray_coordinate_matrix(int n, const Face& face) {
    const std::vector<LatticeVector> basis = face_lattice_basis(n, face);
    const int k = face.k();
    IntegerMatrix m(k, k);
    for (int t = 0; t < k; ++t) {
        ExpressResult res = express_in_basis(ray_vector(n, face.ray_indices[t]), basis);
        if (!res.ok())
            throw LatticeError("volume: ray generator not integral in the face lattice basis");
        for (int r = 0; r < k; ++r) m.at(r, t) = res.coords[r];
    }
    return m;
}

} // namespace

VolumeResult normalized_volume(int n, const Face& face, const DegreeVector& d) {
    if (face.k() < 1) throw DomainError("normalized_volume: empty face");
    if (d.n != n) throw DomainError("normalized_volume: dimension mismatch");

    const std::vector<LatticeVector> basis = face_lattice_basis(n, face);
    const CompactFaceData cf = compact_face(n, face, d);
    const int k = face.k();
    IntegerMatrix m(k, k);
    for (int t = 0; t < k; ++t) {
        ExpressResult res = express_in_basis(cf.vertices[t], basis);
        if (!res.ok())
            throw LatticeError("normalized_volume: vertex not integral in the face lattice basis");
        for (int r = 0; r < k; ++r) m.at(r, t) = res.coords[r];
    }
    Int v = det(m);
    if (v < 0) v = -v;
    if (v == 0) throw LatticeError("normalized_volume: degenerate simplex");
    return {face, apply_det_fault(face, v)};
}

Int closed_form_volume(int n, const Face& face, const DegreeVector& d) {
    if (face.k() < 1) throw DomainError("closed_form_volume: empty face");
    if (d.n != n) throw DomainError("closed_form_volume: dimension mismatch");
    const int k = face.k();
    Int v = pow2(k - 1);
    for (int i : face.ray_indices) v *= d.at(i);

    using faultinj::Fault;
    Fault f = faultinj::active();
    if (f == Fault::ClosedType1 && k >= 2 && face.family() == FaceFamily::Type1) v += 1;
    if (f == Fault::ClosedType2 && k >= 2 && face.family() == FaceFamily::Type2) v += 1;
    return v;
}

VolumeEvaluator::VolumeEvaluator(int n) : n_(n) {
    if (n < 2) throw DomainError("VolumeEvaluator: n must be >= 2");
    if (n > 22) throw ResourceError("VolumeEvaluator: 2^n faces is infeasible beyond n = 22");
    for (int k = 1; k <= n; ++k)
        for (Face& f : faces(n, k)) faces_.push_back(std::move(f));
    ray_coords_.reserve(faces_.size());
    for (const Face& f : faces_) ray_coords_.push_back(ray_coordinate_matrix(n, f));
}

Int VolumeEvaluator::normalized_volume(int face_idx, const DegreeVector& d) const {
    const Face& face = faces_[face_idx];
    const IntegerMatrix& rc = ray_coords_[face_idx];
    const int k = face.k();
    // Vertex t is d_i * g_i, so its basis coordinates are d_i times g_i's.
    IntegerMatrix m(k, k);
    for (int t = 0; t < k; ++t) {
        Int di = Int(d.at(face.ray_indices[t]));
        for (int r = 0; r < k; ++r) m.at(r, t) = rc.at(r, t) * di;
    }
    Int v = det(m);
    if (v < 0) v = -v;
    if (v == 0) throw LatticeError("VolumeEvaluator: degenerate simplex");
    return apply_det_fault(face, v);
}

} // namespace symdet
