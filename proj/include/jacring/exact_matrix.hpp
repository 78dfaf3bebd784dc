#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jacring/rational.hpp"

namespace jacring {

/// One sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseVec = std::vector<std::pair<std::int32_t, Rational>>;

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y);
void sort_and_compress(SparseVec& v);

/// Sparse matrix over the rationals, stored row-major. No zeros are stored.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(long rows, long cols);

    static ExactMatrix identity(long n);
    static ExactMatrix from_rows(std::vector<SparseVec> rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational at(long r, long c) const;
    void set(long r, long c, const Rational& v);
    void add_at(long r, long c, const Rational& v);

    const SparseVec& row(long r) const { return data_[static_cast<std::size_t>(r)]; }
    void set_row(long r, SparseVec v);
    void append_row(SparseVec v);

    long nonzero_count() const;
    bool is_zero() const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    /// Rows of `top` followed by rows of `bottom` (same column space).
    static ExactMatrix stacked(const ExactMatrix& top, const ExactMatrix& bottom);

    bool operator==(const ExactMatrix& rhs) const;

private:
    long rows_, cols_;
    std::vector<SparseVec> data_;
};

}  // namespace jacring
