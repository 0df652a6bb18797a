#include "symdet/oracle.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "symdet/errors.hpp"

namespace symdet {

namespace {

// Deliberately local reconstructions of the semigroup data; the oracle must
// not lean on the main path's constructors.

LatticeVector oracle_ray(int n, int i) {
    LatticeVector v(n, 0);
    v[0] = 1;
    if (i >= 2) v[i - 1] += 2;
    return v;
}

std::vector<LatticeVector> oracle_generators(int n) {
    std::vector<LatticeVector> gens;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            LatticeVector v(n, 0);
            v[0] = 1;
            if (i >= 2) v[i - 1] += 1;
            if (j >= 2) v[j - 1] += 1;
            gens.push_back(std::move(v));
        }
    }
    return gens;
}

Rat dot(const std::vector<Rat>& form, const LatticeVector& v) {
    Rat s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += form[i] * Rat(v[i]);
    return s;
}

// Solve sum_j x_j cols[j] = target over Q by elimination.
std::optional<std::vector<Rat>> solve_columns(const std::vector<LatticeVector>& cols,
                                              const LatticeVector& target) {
    const int rows = static_cast<int>(target.size());
    const int m = static_cast<int>(cols.size());
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(m + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = Rat(cols[j][i]);
        a[i][m] = Rat(target[i]);
    }
    std::vector<int> pivot_row(m, -1);
    int r = 0;
    for (int c = 0; c < m && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (int j = c; j <= m; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (a[i][m] != 0) return std::nullopt;
    std::vector<Rat> x(m, Rat(0));
    for (int c = 0; c < m; ++c)
        if (pivot_row[c] >= 0) x[c] = a[pivot_row[c]][m] / a[pivot_row[c]][c];
    return x;
}

// A rational form vanishing on the chosen rays and equal to 1 on the others.
std::optional<std::vector<Rat>> solve_face_form(int n, const std::vector<int>& in_face) {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (int i = 1; i <= n; ++i) {
        LatticeVector g = oracle_ray(n, i);
        for (int c = 0; c < n; ++c) a[i - 1][c] = Rat(g[c]);
        bool zero = std::find(in_face.begin(), in_face.end(), i) != in_face.end();
        a[i - 1][n] = zero ? 0 : 1;
    }
    // Square elimination; the rays are expected to be independent.
    std::vector<Rat> x(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) return std::nullopt;
        std::swap(a[p], a[c]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    for (int c = 0; c < n; ++c) x[c] = a[c][n] / a[c][c];
    return x;
}

// Column-style integer reduction: unimodular column operations bring the
// generator list to echelon form; the nonzero columns are a lattice basis.
std::vector<LatticeVector> column_reduce(std::vector<LatticeVector> cols) {
    if (cols.empty()) return cols;
    const int rows = static_cast<int>(cols[0].size());
    const int m = static_cast<int>(cols.size());
    int lead = 0;
    for (int row = 0; row < rows && lead < m; ++row) {
        int p = -1;
        for (int j = lead; j < m; ++j)
            if (cols[j][row] != 0) { p = j; break; }
        if (p < 0) continue;
        std::swap(cols[lead], cols[p]);
        for (int j = lead + 1; j < m; ++j) {
            while (cols[j][row] != 0) {
                Int q = cols[lead][row] / cols[j][row];
                if (q != 0)
                    for (int r = 0; r < rows; ++r) cols[lead][r] -= q * cols[j][r];
                std::swap(cols[lead], cols[j]);
            }
        }
        if (cols[lead][row] < 0)
            for (int r = 0; r < rows; ++r) cols[lead][r] = -cols[lead][r];
        ++lead;
    }
    cols.resize(lead);
    return cols;
}

std::vector<LatticeVector> in_face_generators(int n, const Face& face,
                                               const std::vector<LatticeVector>& gens) {
    if (face.k() == n) return gens;
    auto form = solve_face_form(n, face.ray_indices);
    if (!form) throw InternalError("oracle: ray system unexpectedly singular");
    std::vector<LatticeVector> in;
    for (const auto& g : gens)
        if (dot(*form, g) == 0) in.push_back(g);
    return in;
}

} // namespace

bool brute_force_face_check(int n, const std::vector<int>& ray_indices) {
    if (n < 2) throw DomainError("brute_force_face_check: n must be >= 2");
    if (ray_indices.empty()) throw DomainError("brute_force_face_check: empty subset");
    for (int i : ray_indices)
        if (i < 1 || i > n) throw DomainError("brute_force_face_check: ray index out of range");

    auto form = solve_face_form(n, ray_indices);
    if (!form) return false;
    for (int i = 1; i <= n; ++i) {
        Rat v = dot(*form, oracle_ray(n, i));
        bool in = std::find(ray_indices.begin(), ray_indices.end(), i) != ray_indices.end();
        if (in ? v != 0 : v <= 0) return false;
    }
    for (const auto& g : oracle_generators(n))
        if (dot(*form, g) < 0) return false; // supporting forms stay non-negative on the cone
    return true;
}

std::vector<LatticeVector> brute_force_lattice_basis(int n, const Face& face) {
    if (face.k() < 1) throw DomainError("brute_force_lattice_basis: empty face");
    return column_reduce(in_face_generators(n, face, oracle_generators(n)));
}

Int brute_force_chi(int n, const DegreeVector& d) {
    if (n < 2 || d.n != n) throw DomainError("brute_force_chi: dimension mismatch");
    if (n > 16) throw ResourceError("brute_force_chi: oracle path is infeasible beyond n = 16");
    const std::vector<LatticeVector> gens = oracle_generators(n);
    Int chi = 0;
    const unsigned full = 1u << n;
    for (unsigned mask = 1; mask < full; ++mask) {
        Face face;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) face.ray_indices.push_back(i);
        const int k = face.k();

        std::vector<LatticeVector> basis = column_reduce(in_face_generators(n, face, gens));
        if (static_cast<int>(basis.size()) != k)
            throw InternalError("brute_force_chi: face lattice rank mismatch");

        IntegerMatrix coords(k, k);
        for (int t = 0; t < k; ++t) {
            int i = face.ray_indices[t];
            LatticeVector vertex = oracle_ray(n, i);
            for (auto& c : vertex) c *= d.at(i);
            auto x = solve_columns(basis, vertex);
            if (!x) throw InternalError("brute_force_chi: vertex outside face lattice span");
            for (int r = 0; r < k; ++r) {
                const Rat& q = (*x)[r];
                if (boost::multiprecision::denominator(q) != 1)
                    throw InternalError("brute_force_chi: vertex not integral in oracle basis");
                coords.at(r, t) = Int(boost::multiprecision::numerator(q));
            }
        }
        Int vol = det(coords);
        if (vol < 0) vol = -vol;
        chi += (k % 2 == 1) ? vol : -vol;
    }
    return chi;
}

} // namespace symdet
