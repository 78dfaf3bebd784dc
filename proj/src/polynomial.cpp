#include "jacring/polynomial.hpp"

#include <stdexcept>

namespace jacring {

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p(m.vars(), m.degree());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(int vars, int index) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return term(Monomial(std::move(e)), Rational(1));
}

Polynomial Polynomial::constant(int vars, Rational c) {
    Polynomial p(vars, 0);
    p.add_term(Monomial::unit(vars), c);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return declared_degree_;
    // Listing order puts the highest total degree first.
    return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

const Polynomial& Polynomial::require_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != degree)
            throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                        std::to_string(degree));
    return *this;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.vars() != vars_) throw std::invalid_argument("term variable count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out(*this);
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out(*this);
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    return truncated_product(rhs, -1);
}

Polynomial Polynomial::truncated_product(const Polynomial& rhs, int max_degree) const {
    if (vars_ != rhs.vars_) throw std::invalid_argument("product across variable counts");
    Polynomial out(vars_, declared_degree_ + rhs.declared_degree_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            if (max_degree >= 0 && ma.degree() + mb.degree() > max_degree) continue;
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial out(vars_, std::min(declared_degree_, max_degree));
    for (const auto& [m, c] : terms_)
        if (m.degree() <= max_degree) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(vars_, declared_degree_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

Polynomial Polynomial::partial(int var) const {
    Polynomial out(vars_, declared_degree_ > 0 ? declared_degree_ - 1 : 0);
    for (const auto& [m, c] : terms_) {
        const auto e = m.exp(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps(m.exps());
        exps[static_cast<std::size_t>(var)] = e - 1;
        out.add_term(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < vars_; ++i) {
            for (std::uint32_t k = 0; k < m.exp(i); ++k) v *= point[static_cast<std::size_t>(i)];
        }
        total += v;
    }
    return total;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += (c > 0 ? " + " : " - ");
        else if (c < 0) s += "-";
        const Rational a = abs(c);
        const bool unit_mono = m.degree() == 0;
        if (a != 1 || unit_mono) {
            s += jacring::to_string(a);
            if (!unit_mono) s += "*";
        }
        if (!unit_mono) s += monomial_to_string(m, names);
    }
    return s;
}

Polynomial euler_combination(const Polynomial& p) {
    Polynomial out(p.vars(), p.degree());
    for (int i = 0; i < p.vars(); ++i)
        out = out + Polynomial::variable(p.vars(), i) * p.partial(i);
    return out;
}

}  // namespace jacring
