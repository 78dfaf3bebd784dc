#include "jacring/exact_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jacring {

void sort_and_compress(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [c, val] : v) {
        if (!out.empty() && out.back().first == c)
            out.back().second += val;
        else
            out.emplace_back(c, val);
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    v = std::move(out);
}

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, a * y[j].second);
            ++j;
        } else {
            Rational v = x[i].second + a * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

ExactMatrix::ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows));
}

ExactMatrix ExactMatrix::identity(long n) {
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

ExactMatrix ExactMatrix::from_rows(std::vector<SparseVec> rows, long cols) {
    ExactMatrix m;
    m.rows_ = static_cast<long>(rows.size());
    m.cols_ = cols;
    m.data_ = std::move(rows);
    for (const auto& r : m.data_)
        for (const auto& [c, v] : r)
            if (c < 0 || c >= cols || v == 0)
                throw std::invalid_argument("bad sparse row entry");
    return m;
}

Rational ExactMatrix::at(long r, long c) const {
    const auto& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, long col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

void ExactMatrix::set(long r, long c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    auto& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, long col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.emplace(it, static_cast<std::int32_t>(c), v);
    }
}

void ExactMatrix::add_at(long r, long c, const Rational& v) {
    if (v == 0) return;
    set(r, c, at(r, c) + v);
}

void ExactMatrix::set_row(long r, SparseVec v) {
    data_[static_cast<std::size_t>(r)] = std::move(v);
}

void ExactMatrix::append_row(SparseVec v) {
    for (const auto& [c, val] : v)
        if (c < 0 || c >= cols_ || val == 0) throw std::invalid_argument("bad sparse row entry");
    data_.push_back(std::move(v));
    ++rows_;
}

long ExactMatrix::nonzero_count() const {
    long n = 0;
    for (const auto& r : data_) n += static_cast<long>(r.size());
    return n;
}

bool ExactMatrix::is_zero() const { return nonzero_count() == 0; }

ExactMatrix ExactMatrix::transpose() const {
    std::vector<SparseVec> cols(static_cast<std::size_t>(cols_));
    for (long r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row(r))
            cols[static_cast<std::size_t>(c)].emplace_back(static_cast<std::int32_t>(r), v);
    ExactMatrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_ = std::move(cols);
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix out(rows_, rhs.cols_);
    for (long r = 0; r < rows_; ++r) {
        std::map<std::int32_t, Rational> acc;
        for (const auto& [k, v] : row(r))
            for (const auto& [c, w] : rhs.row(k)) acc[c] += v * w;
        SparseVec rowvec;
        for (auto& [c, v] : acc)
            if (v != 0) rowvec.emplace_back(c, std::move(v));
        out.set_row(r, std::move(rowvec));
    }
    return out;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack column mismatch");
    ExactMatrix out(top.rows() + bottom.rows(), top.cols());
    for (long r = 0; r < top.rows(); ++r) out.set_row(r, top.row(r));
    for (long r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row(r));
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

}  // namespace jacring
