#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jacring {

/// A monomial in a fixed number of variables, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps);
    static Monomial unit(int vars);  // the constant monomial

    int vars() const { return static_cast<int>(exps_.size()); }
    std::uint32_t exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }
    int degree() const;

    Monomial times(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

// Global term order: graded lexicographic with x0 > x1 > ... .
// listed_before(a, b) is true when a precedes b in every basis listing:
// higher total degree first, then lexicographically larger exponent vector.
// Within one homogeneous piece this is plain descending lex, so
// monomial_basis(v, m) starts at x0^m and ends at x_{v-1}^m.
bool listed_before(const Monomial& a, const Monomial& b);

struct MonomialListedBefore {
    bool operator()(const Monomial& a, const Monomial& b) const { return listed_before(a, b); }
};

long binomial(long n, long k);

// Number of degree-m monomials in v variables: C(m+v-1, v-1); 0 for m < 0.
long monomial_count(int vars, int degree);

// All degree-m monomials in listing order; empty for m < 0.
std::vector<Monomial> monomial_basis(int vars, int degree);

// All monomials of degree <= max_degree in listing order (used for jet spaces).
std::vector<Monomial> monomial_basis_upto(int vars, int max_degree);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace jacring
