#include "jacring/monomial.hpp"

#include <stdexcept>
#include <string>

namespace jacring {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

Monomial Monomial::unit(int vars) {
    return Monomial(std::vector<std::uint32_t>(static_cast<std::size_t>(vars), 0));
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exps_) d += static_cast<int>(e);
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    if (vars() != other.vars())
        throw std::invalid_argument("monomial product across different variable counts");
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& other) const {
    if (vars() != other.vars()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < other.exps_[i]) return false;
    return true;
}

bool listed_before(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps() > b.exps();  // lex on exponent vectors, x0 strongest
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after the division
    }
    return r;
}

long monomial_count(int vars, int degree) {
    if (degree < 0) return 0;
    return binomial(degree + vars - 1, vars - 1);
}

namespace {

void emit_basis(std::vector<std::uint32_t>& cur, int pos, int remaining,
                std::vector<Monomial>& out) {
    const int vars = static_cast<int>(cur.size());
    if (pos == vars - 1) {
        cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(remaining);
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
        emit_basis(cur, pos + 1, remaining - e, out);
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(int vars, int degree) {
    if (vars < 1) throw std::invalid_argument("monomial_basis needs vars >= 1");
    std::vector<Monomial> out;
    if (degree < 0) return out;
    out.reserve(static_cast<std::size_t>(monomial_count(vars, degree)));
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(vars), 0);
    emit_basis(cur, 0, degree, out);
    return out;
}

std::vector<Monomial> monomial_basis_upto(int vars, int max_degree) {
    std::vector<Monomial> out;
    for (int m = max_degree; m >= 0; --m) {
        auto layer = monomial_basis(vars, m);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (int i = 0; i < m.vars(); ++i) {
        const auto e = m.exp(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += names[static_cast<std::size_t>(i)];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

}  // namespace jacring
