#include "jacring/elimination.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>

namespace jacring {

namespace {

void strip_content(IntRow& row) {
    if (row.e.empty()) return;
    Integer g(0);
    for (const auto& [c, v] : row.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : row.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row := a*row - b*other, merged by column, zeros dropped.
IntRow combine(const IntRow& row, const Integer& a, const Integer& b, const IntRow& other) {
    IntRow out;
    out.e.reserve(row.e.size() + other.e.size());
    std::size_t i = 0, j = 0;
    while (i < row.e.size() || j < other.e.size()) {
        if (j == other.e.size() ||
            (i < row.e.size() && row.e[i].first < other.e[j].first)) {
            out.e.emplace_back(row.e[i].first, a * row.e[i].second);
            ++i;
        } else if (i == row.e.size() || other.e[j].first < row.e[i].first) {
            out.e.emplace_back(other.e[j].first, -b * other.e[j].second);
            ++j;
        } else {
            Integer v = a * row.e[i].second - b * other.e[j].second;
            if (v != 0) out.e.emplace_back(row.e[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

void eliminate_lead(IntRow& row, const IntRow& pivot) {
    const Integer& p = pivot.e.front().second;
    const Integer& v = row.e.front().second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), v.get_mpz_t());
    Integer a, b;
    mpz_divexact(a.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    row = combine(row, a, b, pivot);
    strip_content(row);
}

// Clears the entry of `row` at `col` using `pivot` (whose lead is `col`).
void eliminate_at(IntRow& row, std::int32_t col, const IntRow& pivot) {
    auto it = std::lower_bound(row.e.begin(), row.e.end(), col,
                               [](const auto& e, std::int32_t c) { return e.first < c; });
    if (it == row.e.end() || it->first != col) return;
    const Integer& p = pivot.e.front().second;
    const Integer& v = it->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), v.get_mpz_t());
    Integer a, b;
    mpz_divexact(a.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    row = combine(row, a, b, pivot);
    strip_content(row);
}

struct Echelon {
    std::vector<IntRow> rows;              // pivot columns strictly increasing
    std::vector<std::int32_t> pivot_cols;
};

Echelon forward_echelon(std::vector<IntRow> rows, long cols) {
    for (auto& r : rows) strip_content(r);

    // rows bucketed by leading column
    std::vector<std::vector<std::size_t>> bucket(static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) bucket[static_cast<std::size_t>(rows[i].lead())].push_back(i);

    Echelon ech;
    for (long c = 0; c < cols; ++c) {
        auto& cand = bucket[static_cast<std::size_t>(c)];
        if (cand.empty()) continue;
        // sparsest candidate pivots; ties broken by insertion order
        std::size_t best = cand[0];
        for (std::size_t k = 1; k < cand.size(); ++k)
            if (rows[cand[k]].e.size() < rows[best].e.size()) best = cand[k];
        IntRow pivot = std::move(rows[best]);
        for (std::size_t idx : cand) {
            if (idx == best) continue;
            IntRow& r = rows[idx];
            eliminate_lead(r, pivot);
            if (!r.empty()) bucket[static_cast<std::size_t>(r.lead())].push_back(idx);
        }
        cand.clear();
        ech.pivot_cols.push_back(static_cast<std::int32_t>(c));
        ech.rows.push_back(std::move(pivot));
    }
    return ech;
}

void normalize_row(IntRow& row, std::size_t) {
    strip_content(row);
    if (!row.e.empty() && row.e.front().second < 0)
        for (auto& [c, v] : row.e) v = -v;
}

RrefForm back_substitute(Echelon ech, long cols) {
    // bottom-up: every row below the current one is already reduced, so each
    // row ends up as pivot + tail on free columns only
    for (std::size_t i = ech.rows.size(); i-- > 0;) {
        IntRow& row = ech.rows[i];
        for (std::size_t j = i + 1; j < ech.rows.size(); ++j)
            eliminate_at(row, ech.pivot_cols[j], ech.rows[j]);
        normalize_row(row, i);
    }
    RrefForm form;
    form.cols = cols;
    form.rows = std::move(ech.rows);
    form.pivot_cols = std::move(ech.pivot_cols);
    return form;
}

std::mt19937_64& elimination_rng() {
    static std::mt19937_64 rng(0x6a61637269ULL);
    return rng;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic witness set for 64-bit integers
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

using ModRow = std::vector<std::pair<std::int32_t, std::uint64_t>>;

long modular_echelon_rank(std::vector<ModRow> rows, long cols, std::uint64_t p) {
    std::vector<std::vector<std::size_t>> bucket(static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) bucket[static_cast<std::size_t>(rows[i].front().first)].push_back(i);

    long rank = 0;
    std::vector<ModRow> pivots;
    for (long c = 0; c < cols; ++c) {
        auto& cand = bucket[static_cast<std::size_t>(c)];
        if (cand.empty()) continue;
        std::size_t best = cand[0];
        for (std::size_t k = 1; k < cand.size(); ++k)
            if (rows[cand[k]].size() < rows[best].size()) best = cand[k];
        ModRow pivot = std::move(rows[best]);
        const std::uint64_t pinv = mod_inverse(pivot.front().second, p);
        for (std::size_t idx : cand) {
            if (idx == best) continue;
            ModRow& r = rows[idx];
            const std::uint64_t factor = mulmod(r.front().second, pinv, p);
            ModRow out;
            out.reserve(r.size() + pivot.size());
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
                    out.push_back(r[i++]);
                } else if (i == r.size() || pivot[j].first < r[i].first) {
                    const std::uint64_t v = p - mulmod(factor, pivot[j].second, p);
                    if (v != p && v != 0) out.emplace_back(pivot[j].first, v);
                    ++j;
                } else {
                    std::uint64_t v = r[i].second + p - mulmod(factor, pivot[j].second, p);
                    if (v >= p) v -= p;
                    if (v != 0) out.emplace_back(r[i].first, v);
                    ++i, ++j;
                }
            }
            r = std::move(out);
            if (!r.empty()) bucket[static_cast<std::size_t>(r.front().first)].push_back(idx);
        }
        cand.clear();
        pivots.push_back(std::move(pivot));
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<IntRow> to_int_rows(const ExactMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (long r = 0; r < m.rows(); ++r) {
        IntRow row;
        row.e.reserve(m.row(r).size());
        Integer den_lcm(1);
        for (const auto& [c, v] : m.row(r))
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        for (const auto& [c, v] : m.row(r)) {
            Integer scale;
            mpz_divexact(scale.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
            row.e.emplace_back(c, v.get_num() * scale);
        }
        strip_content(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::int32_t> RrefForm::free_cols() const {
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(cols - rank()));
    std::size_t k = 0;
    for (std::int32_t c = 0; c < cols; ++c) {
        if (k < pivot_cols.size() && pivot_cols[k] == c)
            ++k;
        else
            out.push_back(c);
    }
    return out;
}

ExactMatrix RrefForm::to_matrix() const {
    ExactMatrix m(rank(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVec v;
        v.reserve(rows[i].e.size());
        for (const auto& [c, val] : rows[i].e) v.emplace_back(c, Rational(val));
        m.set_row(static_cast<long>(i), std::move(v));
    }
    return m;
}

RrefForm rref_rows(std::vector<IntRow> rows, long cols) {
    return back_substitute(forward_echelon(std::move(rows), cols), cols);
}

RrefForm rref(const ExactMatrix& m) { return rref_rows(to_int_rows(m), m.cols()); }

long rank(const ExactMatrix& m, const ElimOptions& opts) {
    const long bound = std::min(m.rows(), m.cols());
    if (bound == 0) return 0;
    if (opts.modular_prepass) {
        const long modrank = modular_rank(m, random_prime_62());
        // modular rank never exceeds the exact rank, so full modular rank is exact
        if (modrank == bound) return bound;
    }
    const long exact =
        static_cast<long>(forward_echelon(to_int_rows(m), m.cols()).rows.size());
    return exact;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
    const RrefForm form = rref(m);
    const auto free = form.free_cols();
    ExactMatrix out(static_cast<long>(free.size()), m.cols());
    for (std::size_t k = 0; k < free.size(); ++k) {
        const std::int32_t f = free[k];
        // one kernel vector per free column: x_f = L, x_{pivot_i} = -a_i * L / p_i
        Integer scale(1);
        for (std::size_t i = 0; i < form.rows.size(); ++i) {
            const auto& row = form.rows[i].e;
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, std::int32_t c) { return e.first < c; });
            if (it != row.end() && it->first == f)
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                        row.front().second.get_mpz_t());
        }
        IntRow vec;
        for (std::size_t i = 0; i < form.rows.size(); ++i) {
            const auto& row = form.rows[i].e;
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, std::int32_t c) { return e.first < c; });
            if (it != row.end() && it->first == f) {
                Integer q;
                mpz_divexact(q.get_mpz_t(), scale.get_mpz_t(), row.front().second.get_mpz_t());
                vec.e.emplace_back(form.pivot_cols[i], -(it->second) * q);
            }
        }
        vec.e.emplace_back(f, scale);
        std::sort(vec.e.begin(), vec.e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        strip_content(vec);
        SparseVec sv;
        sv.reserve(vec.e.size());
        for (const auto& [c, v] : vec.e) sv.emplace_back(c, Rational(v));
        out.set_row(static_cast<long>(k), std::move(sv));
    }
    return out;
}

ExactMatrix image_basis(const ExactMatrix& m) { return rref(m).to_matrix(); }

void reseed_elimination_rng(std::uint64_t seed) { elimination_rng().seed(seed); }

std::uint64_t random_prime_62() {
    auto& rng = elimination_rng();
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 61, (1ULL << 62) - 1);
    for (;;) {
        std::uint64_t cand = dist(rng) | 1ULL;
        if (is_prime_u64(cand)) return cand;
    }
}

long modular_rank(const ExactMatrix& m, std::uint64_t p) {
    std::vector<ModRow> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (const auto& irow : to_int_rows(m)) {
        ModRow r;
        r.reserve(irow.e.size());
        for (const auto& [c, v] : irow.e) {
            const std::uint64_t res = mpz_fdiv_ui(v.get_mpz_t(), p);
            if (res != 0) r.emplace_back(c, res);
        }
        rows.push_back(std::move(r));
    }
    return modular_echelon_rank(std::move(rows), m.cols(), p);
}

}  // namespace jacring

// --- SubspaceReducer ---------------------------------------------------------

namespace jacring {

SubspaceReducer::SubspaceReducer(RrefForm form) : form_(std::move(form)) {}

SparseVec SubspaceReducer::reduce(const SparseVec& v, std::vector<Rational>* coeffs) const {
    if (coeffs) coeffs->assign(form_.rows.size(), Rational(0));
    std::map<std::int32_t, Rational> acc(v.begin(), v.end());
    for (std::size_t i = 0; i < form_.rows.size(); ++i) {
        auto it = acc.find(form_.pivot_cols[i]);
        if (it == acc.end() || it->second == 0) continue;
        const IntRow& row = form_.rows[i];
        const Rational coeff = it->second / Rational(row.e.front().second);
        if (coeffs) (*coeffs)[i] = coeff;
        for (const auto& [c, w] : row.e) {
            auto& slot = acc[c];
            slot -= coeff * Rational(w);
            if (slot == 0) acc.erase(c);
        }
    }
    SparseVec out;
    out.reserve(acc.size());
    for (auto& [c, val] : acc)
        if (val != 0) out.emplace_back(c, std::move(val));
    return out;
}

bool SubspaceReducer::contains(const SparseVec& v) const { return reduce(v).empty(); }

}  // namespace jacring
