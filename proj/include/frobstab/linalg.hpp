#pragma once

#include <vector>

#include <Eigen/Dense>

#include "frobstab/fp.hpp"

namespace frobstab {

using FpMatrix = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using FpVector = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

FpMatrix fp_zeros(PrimeChar p, Index rows, Index cols);
FpMatrix fp_identity(PrimeChar p, Index n);

bool mat_equal(const FpMatrix& a, const FpMatrix& b);
bool is_zero_vec(const FpVector& v);

// Reduced row echelon form with zero rows dropped. Column order is the fixed
// ambient basis order, so equal row spans give literally equal matrices.
struct Rref {
    FpMatrix rows;
    std::vector<Index> pivots; // pivot column of each row, strictly increasing
};

Rref row_reduce(FpMatrix m, PrimeChar p);
Index rank_of(const FpMatrix& m, PrimeChar p);

// Columns span the right kernel of m, in ascending free-column order.
FpMatrix kernel_basis(const FpMatrix& m, PrimeChar p);

FpMatrix kron(const FpMatrix& a, const FpMatrix& b);

// A subspace of F_p^N held as a reduced row echelon basis. Two SubspaceBasis
// values are equal iff they describe the same subspace of the same ambient
// space.
class SubspaceBasis {
public:
    SubspaceBasis(PrimeChar p, Index ambient); // zero subspace
    static SubspaceBasis span_of_rows(const FpMatrix& rows, PrimeChar p);

    Index dim() const { return rref_.rows.rows(); }
    Index ambient() const { return ambient_; }
    PrimeChar characteristic() const { return p_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const FpMatrix& rows() const { return rref_.rows; }
    const std::vector<Index>& pivots() const { return rref_.pivots; }

    // Canonical coset representative: v minus the unique combination of basis
    // rows that clears v's pivot coordinates. Zero iff v lies in the span.
    FpVector reduce(FpVector v) const;
    bool contains(const FpVector& v) const;

    bool operator==(const SubspaceBasis& o) const;
    bool operator!=(const SubspaceBasis& o) const { return !(*this == o); }

private:
    PrimeChar p_;
    Index ambient_;
    Rref rref_;
};

} // namespace frobstab
