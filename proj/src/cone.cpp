#include "symdet/cone.hpp"

#include <algorithm>
#include <map>

#include "symdet/errors.hpp"

namespace symdet {

bool Face::contains(int i) const {
    return std::binary_search(ray_indices.begin(), ray_indices.end(), i);
}

LatticeVector ray_vector(int n, int i) {
    if (n < 2) throw DomainError("ray_vector: n must be >= 2");
    if (i < 1 || i > n) throw DomainError("ray_vector: ray index out of range");
    LatticeVector v = unit_vector(n, 1);
    if (i >= 2) v[i - 1] = 2;
    return v;
}

std::vector<Ray> rays(int n) {
    if (n < 2) throw DomainError("rays: n must be >= 2");
    std::vector<Ray> r;
    r.reserve(n);
    for (int i = 1; i <= n; ++i) r.push_back({i, ray_vector(n, i)});
    return r;
}

std::vector<Face> faces(int n, int k) {
    if (n < 2) throw DomainError("faces: n must be >= 2");
    if (k < 1 || k > n) throw DomainError("faces: k must satisfy 1 <= k <= n");
    std::vector<Face> out;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    while (true) {
        out.push_back(Face{subset});
        int i = k - 1;
        while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
}

Int SupportingForm::eval(const LatticeVector& x) const {
    if (x.size() != coefficients.size()) throw DimensionError("SupportingForm::eval: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += coefficients[i] * x[i];
    return s;
}

SupportingForm supporting_form(int n, const Face& face) {
    const int k = face.k();
    if (k < 1 || k > n - 1)
        throw DomainError("supporting_form: face must be proper (1 <= k <= n-1)");
    SupportingForm form;
    form.coefficients.assign(n, 0);
    if (face.family() == FaceFamily::Type1) {
        for (int i = 2; i <= n; ++i)
            if (!face.contains(i)) form.coefficients[i - 1] = 1;
    } else {
        form.coefficients[0] = 2;
        for (int j : face.ray_indices) form.coefficients[j - 1] = -1;
    }
    // The form must vanish exactly on the face's rays and be positive on the rest.
    for (int i = 1; i <= n; ++i) {
        Int v = form.eval(ray_vector(n, i));
        bool in_face = face.contains(i);
        if ((in_face && v != 0) || (!in_face && v <= 0))
            throw InternalError("supporting_form: evaluation pattern violated on ray " + std::to_string(i));
    }
    return form;
}

bool cone_contains(int n, const LatticeVector& p) {
    if (static_cast<int>(p.size()) != n) throw DimensionError("cone_contains: dimension mismatch");
    Int tail = 0;
    for (int j = 2; j <= n; ++j) {
        if (p[j - 1] < 0) return false;
        tail += p[j - 1];
    }
    return 2 * p[0] >= tail;
}

std::vector<int> generators_in_face(int n, const Face& face) {
    const GeneratorSet gs = build_generators(n);
    std::vector<int> positions;
    for (int pos = 0; pos < gs.size(); ++pos) {
        auto [i, j] = gs.label(pos);
        if (face.contains(i) && face.contains(j)) positions.push_back(pos);
    }
    return positions;
}

std::vector<LatticeVector> face_lattice_basis(int n, const Face& face) {
    const int k = face.k();
    if (k < 1) throw DomainError("face_lattice_basis: empty face");
    if (face.ray_indices.front() < 1 || face.ray_indices.back() > n)
        throw DomainError("face_lattice_basis: ray index out of range");
    std::vector<LatticeVector> basis;
    basis.reserve(k);
    if (face.family() == FaceFamily::Type1) {
        basis.push_back(unit_vector(n, 1));
        for (int i : face.ray_indices)
            if (i != 1) basis.push_back(unit_vector(n, i));
    } else {
        const int anchor = face.ray_indices.front();
        basis.push_back(ray_vector(n, anchor));
        for (size_t t = 1; t < face.ray_indices.size(); ++t) {
            LatticeVector v = unit_vector(n, 1);
            v[anchor - 1] = 1;
            v[face.ray_indices[t] - 1] = 1;
            basis.push_back(std::move(v));
        }
    }
    return basis;
}

GeneratorSet face_normal_form(int n, const Face& face) {
    const int k = face.k();
    if (k < 2) throw DomainError("face_normal_form: face dimension must be >= 2");

    // Normalized coordinate basis. For Type2 faces the lattice basis
    // {b_1, b_2, ..., b_k} is adjusted to {b_1, b_2 - b_1, ..., b_k - b_1}
    // (unimodular change), in which the face generators take the same shape
    // as the ambient ones.
    std::vector<LatticeVector> basis = face_lattice_basis(n, face);
    if (face.family() == FaceFamily::Type2)
        for (size_t t = 1; t < basis.size(); ++t) basis[t] = sub(basis[t], basis[0]);

    // Local relabeling: the face's a-th smallest ray index becomes index a.
    std::map<int, int> local;
    for (int t = 0; t < k; ++t) local[face.ray_indices[t]] = t + 1;

    const GeneratorSet ambient = build_generators(n);
    GeneratorSet out;
    out.n = k;
    out.generators.resize(static_cast<size_t>(k) * (k + 1) / 2);
    for (int pos : generators_in_face(n, face)) {
        auto [i, j] = ambient.label(pos);
        ExpressResult coords = express_in_basis(ambient.generators[pos], basis);
        if (!coords.ok())
            throw LatticeError("face_normal_form: generator not integral in face basis");
        out.generators[out.position(local[i], local[j])] = std::move(coords.coords);
    }
    return out;
}

} // namespace symdet
