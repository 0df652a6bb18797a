#ifndef SYMDET_LATTICE_HPP
#define SYMDET_LATTICE_HPP

#include <vector>

#include "symdet/numeric.hpp"

namespace symdet {

/// Integer vector in Z^n; coordinates are exact arbitrary-precision integers.
using LatticeVector = std::vector<Int>;

LatticeVector unit_vector(int n, int i); // e_i, 1-based
LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector scaled(const LatticeVector& v, const Int& c);

/// Dense rectangular matrix of exact integers, row-major.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntegerMatrix from_columns(const std::vector<LatticeVector>& cols);
    static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_;
    int cols_;
    std::vector<Int> data_;
};

/// Exact determinant of a square matrix by Bareiss fraction-free elimination.
/// Throws DimensionError if the matrix is not square.
Int det(const IntegerMatrix& m);

/// Rank of the Q-span of the given vectors, computed exactly.
/// All vectors must share the ambient dimension; an empty list has rank 0.
int rank(const std::vector<LatticeVector>& vectors);
int rank(IntegerMatrix m);

enum class ExpressStatus {
    Ok,            // v = sum c_i * basis_i with integer c
    NotInLattice,  // v lies in the Q-span but not the Z-span of the basis
    NotInSpan,     // v lies outside the Q-span
};

struct ExpressResult {
    ExpressStatus status = ExpressStatus::NotInSpan;
    std::vector<Int> coords; // populated only when status == Ok

    bool ok() const { return status == ExpressStatus::Ok; }
};

/// Express v as an integer combination of the basis vectors.
/// The basis must be linearly independent (InvalidBasisError otherwise).
ExpressResult express_in_basis(const LatticeVector& v, const std::vector<LatticeVector>& basis);

} // namespace symdet

#endif
