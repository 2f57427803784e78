#include "frobstab/linalg.hpp"

#include "frobstab/errors.hpp"

namespace frobstab {

FpMatrix fp_zeros(PrimeChar p, Index rows, Index cols) {
    FpMatrix m(rows, cols);
    m.fill(Fp(p, 0));
    return m;
}

FpMatrix fp_identity(PrimeChar p, Index n) {
    FpMatrix m = fp_zeros(p, n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = Fp(p, 1);
    return m;
}

bool mat_equal(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool is_zero_vec(const FpVector& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

Rref row_reduce(FpMatrix m, PrimeChar p) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pivot = -1;
        for (Index i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) m.row(pivot).swap(m.row(r));
        const Fp inv = m(r, c).inverse();
        for (Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Fp f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Rref out;
    out.rows = fp_zeros(p, r, cols);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < cols; ++j) out.rows(i, j) = Fp(p, m(i, j).value());
    out.pivots = std::move(pivots);
    return out;
}

Index rank_of(const FpMatrix& m, PrimeChar p) { return row_reduce(m, p).rows.rows(); }

FpMatrix kernel_basis(const FpMatrix& m, PrimeChar p) {
    const Index cols = m.cols();
    const Rref rr = row_reduce(m, p);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    FpMatrix basis = fp_zeros(p, cols, static_cast<Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const Index f = free_cols[k];
        basis(f, static_cast<Index>(k)) = Fp(p, 1);
        for (Index row = 0; row < rr.rows.rows(); ++row)
            basis(rr.pivots[static_cast<std::size_t>(row)], static_cast<Index>(k)) =
                -rr.rows(row, f);
    }
    return basis;
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
    FpMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

SubspaceBasis::SubspaceBasis(PrimeChar p, Index ambient) : p_(p), ambient_(ambient) {
    rref_.rows = fp_zeros(p, 0, ambient);
}

SubspaceBasis SubspaceBasis::span_of_rows(const FpMatrix& rows, PrimeChar p) {
    SubspaceBasis s(p, rows.cols());
    s.rref_ = row_reduce(rows, p);
    return s;
}

FpVector SubspaceBasis::reduce(FpVector v) const {
    if (v.size() != ambient_)
        throw usage_error("vector does not live in this ambient space");
    for (Index row = 0; row < rref_.rows.rows(); ++row) {
        const Fp c = v(rref_.pivots[static_cast<std::size_t>(row)]);
        if (c.is_zero()) continue;
        for (Index j = 0; j < ambient_; ++j) v(j) -= c * rref_.rows(row, j);
    }
    return v;
}

bool SubspaceBasis::contains(const FpVector& v) const { return is_zero_vec(reduce(v)); }

bool SubspaceBasis::operator==(const SubspaceBasis& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && mat_equal(rref_.rows, o.rref_.rows);
}

} // namespace frobstab
