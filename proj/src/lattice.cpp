#include "symdet/lattice.hpp"

#include <utility>

#include "symdet/errors.hpp"

namespace symdet {

LatticeVector unit_vector(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw DimensionError("unit_vector: index out of range");
    LatticeVector v(n, 0);
    v[i - 1] = 1;
    return v;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw DimensionError("add: dimension mismatch");
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw DimensionError("sub: dimension mismatch");
    LatticeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVector scaled(const LatticeVector& v, const Int& c) {
    LatticeVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
    return r;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<LatticeVector>& cols) {
    if (cols.empty()) return IntegerMatrix(0, 0);
    const int n = static_cast<int>(cols[0].size());
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != n) throw DimensionError("from_columns: ragged input");
    IntegerMatrix m(n, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows) {
    if (rows.empty()) return IntegerMatrix(0, 0);
    const int n = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw DimensionError("from_rows: ragged input");
    IntegerMatrix m(static_cast<int>(rows.size()), n);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Int det(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
    const int n = m.rows();
    if (n == 0) return 1;

    IntegerMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        // Bareiss step: stays integral, divisions are exact.
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

int rank(IntegerMatrix a) {
    const int rows = a.rows();
    const int cols = a.cols();
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(r, c) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

int rank(const std::vector<LatticeVector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(IntegerMatrix::from_rows(vectors));
}

ExpressResult express_in_basis(const LatticeVector& v, const std::vector<LatticeVector>& basis) {
    if (basis.empty()) throw InvalidBasisError("express_in_basis: empty basis");
    const int n = static_cast<int>(v.size());
    const int k = static_cast<int>(basis.size());
    for (const auto& b : basis)
        if (static_cast<int>(b.size()) != n) throw DimensionError("express_in_basis: dimension mismatch");

    // Rational elimination on [B | v] with B's columns the basis vectors.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = Rat(basis[j][i]);
        a[i][k] = Rat(v[i]);
    }

    std::vector<int> pivot_row(k, -1);
    int row = 0;
    for (int col = 0; col < k; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) { p = i; break; }
        if (p < 0) throw InvalidBasisError("express_in_basis: basis vectors are linearly dependent");
        std::swap(a[p], a[row]);
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (int j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }

    for (int i = row; i < n; ++i)
        if (a[i][k] != 0) return {ExpressStatus::NotInSpan, {}};

    ExpressResult res;
    res.coords.resize(k);
    for (int col = 0; col < k; ++col) {
        Rat c = a[pivot_row[col]][k] / a[pivot_row[col]][col];
        if (boost::multiprecision::denominator(c) != 1) return {ExpressStatus::NotInLattice, {}};
        res.coords[col] = Int(boost::multiprecision::numerator(c));
    }
    res.status = ExpressStatus::Ok;
    return res;
}

} // namespace symdet
