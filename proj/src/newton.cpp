#include "symdet/newton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "symdet/errors.hpp"
#include "symdet/ratlp.hpp"

namespace symdet {

DegreeVector::DegreeVector(int n_, std::vector<std::int64_t> d_) : n(n_), d(std::move(d_)) {
    if (n < 2) throw DomainError("DegreeVector: n must be >= 2");
    if (static_cast<int>(d.size()) != n) throw DomainError("DegreeVector: |d| != n");
    for (auto di : d)
        if (di < 1) throw DomainError("DegreeVector: all d_i must be >= 1");
}

FunctionSupport::FunctionSupport(int n_, std::vector<Monomial> monomials_)
    : n(n_), monomials(std::move(monomials_)) {
    if (n < 2) throw DomainError("FunctionSupport: n must be >= 2");
    const int N = n * (n + 1) / 2;
    for (const auto& m : monomials) {
        if (m.generator_index < 1 || m.generator_index > N)
            throw DomainError("FunctionSupport: generator index " + std::to_string(m.generator_index) +
                              " outside 1.." + std::to_string(N));
        if (m.exponent < 1) throw DomainError("FunctionSupport: exponents must be >= 1");
    }
}

ValidationResult validate_support(const FunctionSupport& fs) {
    std::map<int, std::int64_t> min_pure; // ray index -> minimal pure exponent
    for (const auto& m : fs.monomials) {
        if (m.generator_index > fs.n) continue; // not supported on a single ray
        auto it = min_pure.find(m.generator_index);
        if (it == min_pure.end() || m.exponent < it->second) min_pure[m.generator_index] = m.exponent;
    }
    ValidationResult res;
    for (int i = 1; i <= fs.n; ++i)
        if (!min_pure.count(i)) res.missing_rays.push_back(i);
    res.ok = res.missing_rays.empty();
    if (res.ok) {
        std::vector<std::int64_t> d(fs.n);
        for (int i = 1; i <= fs.n; ++i) d[i - 1] = min_pure[i];
        res.degrees = DegreeVector(fs.n, std::move(d));
    }
    return res;
}

LatticeVector monomial_point(const GeneratorSet& gs, const Monomial& m) {
    if (m.generator_index < 1 || m.generator_index > gs.size())
        throw DomainError("monomial_point: generator index out of range");
    return scaled(gs.generators[m.generator_index - 1], Int(m.exponent));
}

namespace {

bool cone_contains_rational(int n, const std::vector<Rat>& p) {
    Rat tail = 0;
    for (int j = 2; j <= n; ++j) {
        if (p[j - 1] < 0) return false;
        tail += p[j - 1];
    }
    return 2 * p[0] >= tail;
}

bool membership_lp(int n, const std::vector<Rat>& point, const DegreeVector& d) {
    // Feasibility of point = sum_i lambda_i (d_i g_i) + sum_j mu_j g_j with
    // lambda, mu >= 0 and sum lambda_i = 1.
    std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(2 * n));
    std::vector<Rat> b(n + 1);
    for (int i = 1; i <= n; ++i) {
        LatticeVector g = ray_vector(n, i);
        for (int r = 0; r < n; ++r) {
            A[r][i - 1] = Rat(g[r] * d.at(i));
            A[r][n + i - 1] = Rat(g[r]);
        }
        A[n][i - 1] = 1;
    }
    for (int r = 0; r < n; ++r) b[r] = point[r];
    b[n] = 1;
    return lp_feasible(A, b);
}

} // namespace

bool newton_membership(int n, const std::vector<Rat>& point, const DegreeVector& d) {
    if (n < 2 || d.n != n) throw DomainError("newton_membership: dimension mismatch");
    if (static_cast<int>(point.size()) != n) throw DimensionError("newton_membership: bad point dimension");
    if (!cone_contains_rational(n, point))
        throw DomainError("newton_membership: point lies outside the cone");
    return membership_lp(n, point, d);
}

bool newton_membership(int n, const LatticeVector& point, const DegreeVector& d) {
    std::vector<Rat> p(point.size());
    for (size_t i = 0; i < point.size(); ++i) p[i] = Rat(point[i]);
    return newton_membership(n, p, d);
}

CompactFaceData compact_face(int n, const Face& face, const DegreeVector& d) {
    if (face.k() < 1) throw DomainError("compact_face: empty face");
    if (d.n != n) throw DomainError("compact_face: dimension mismatch");
    CompactFaceData out;
    out.face = face;
    out.vertices.reserve(face.k());
    for (int i : face.ray_indices) out.vertices.push_back(scaled(ray_vector(n, i), Int(d.at(i))));
    return out;
}

} // namespace symdet
