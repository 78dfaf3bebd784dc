#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "jacring/monomial.hpp"
#include "jacring/rational.hpp"

namespace jacring {

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored. A zero polynomial remembers the degree of the context it was
/// built in so graded bookkeeping stays total.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialListedBefore>;

    Polynomial() : vars_(0), declared_degree_(0) {}
    Polynomial(int vars, int declared_degree) : vars_(vars), declared_degree_(declared_degree) {}

    static Polynomial zero(int vars, int degree = 0) { return Polynomial(vars, degree); }
    static Polynomial term(Monomial m, Rational c);
    static Polynomial variable(int vars, int index);
    static Polynomial constant(int vars, Rational c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Maximal total degree of a term, or the declared degree when zero.
    int degree() const;
    bool is_homogeneous() const;
    /// Throws unless every term has the given degree.
    const Polynomial& require_homogeneous(int degree) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(const Rational& c) const;

    Polynomial partial(int var) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Product with every term of total degree > max_degree dropped.
    Polynomial truncated_product(const Polynomial& rhs, int max_degree) const;
    /// Drop all terms of total degree > max_degree.
    Polynomial truncated(int max_degree) const;

    bool operator==(const Polynomial& rhs) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int vars_;
    int declared_degree_;
    TermMap terms_;
};

/// Euler pairing helper: sum_i x_i * d(p)/dx_i (equals deg(p) * p for
/// homogeneous p; used as a self-check in tests).
Polynomial euler_combination(const Polynomial& p);

}  // namespace jacring
