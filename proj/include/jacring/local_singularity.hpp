#pragma once

#include <string>
#include <vector>

#include "jacring/elimination.hpp"
#include "jacring/polynomial.hpp"

namespace jacring {

/// A point of projective space, dehomogenized at one coordinate. The chart is
/// chosen once (largest absolute coordinate, lowest index on ties) so local
/// computations are reproducible.
struct AffinePoint {
    int chart = 0;                 // ambient coordinate set to 1
    std::vector<Rational> coords;  // the other ambient coordinates, in order

    int ambient_vars() const { return static_cast<int>(coords.size()) + 1; }
    std::vector<Rational> projective() const;
    static AffinePoint from_projective(const std::vector<Rational>& coords);
    std::string to_string() const;
};

/// f(P) = 0 and all ambient partials vanish at P.
bool verify_singular(const Polynomial& f, const AffinePoint& p);

/// Taylor expansion of the dehomogenization of f at P, in local coordinates
/// centered at P, truncated to total degree <= order. The result lives in
/// ambient_vars - 1 variables (ambient order with the chart skipped).
Polynomial taylor_jet(const Polynomial& f, const AffinePoint& p, int order);

enum class LocalIdealMode { tjurina, milnor };

/// The order-N jet ring modulo the truncated ideal generated by the local
/// equation and/or its partials. Carries the reduction onto the monomial
/// basis of the quotient.
struct LocalAlgebra {
    int order = 0;
    int local_vars = 0;
    std::vector<Monomial> jet_monomials;  // columns, global listing order
    std::vector<Monomial> basis;          // quotient basis (free columns)
    SubspaceReducer ideal;
    long dimension() const { return static_cast<long>(basis.size()); }

    /// True when the monomial lies in the truncated ideal.
    bool ideal_contains(const Monomial& m) const;
    /// Coordinates of a local polynomial on the quotient basis.
    std::vector<Rational> reduce(const Polynomial& jet) const;
};

LocalAlgebra local_algebra(const Polynomial& f, const AffinePoint& p, LocalIdealMode mode,
                           int order);

struct StabilizedDimension {
    long dimension = 0;
    int order = 0;  // truncation order with the finite-determinacy witness
};

/// Quotient dimension iterated over N = 4, 6, ... until two consecutive
/// truncations agree and all monomials of degree N-1 lie in the truncated
/// ideal. Throws when no stabilization happens within order_max.
StabilizedDimension stabilized_local_dimension(const Polynomial& f, const AffinePoint& p,
                                               LocalIdealMode mode, int order_max);

StabilizedDimension tjurina_number(const Polynomial& f, const AffinePoint& p,
                                   int order_max = 16);

struct AdeType {
    char family = 'A';  // 'A', 'D' or 'E'
    int index = 0;      // tau = mu = index
    std::string str() const { return std::string(1, family) + std::to_string(index); }
    bool operator==(const AdeType& o) const { return family == o.family && index == o.index; }
};

struct SingularityRecord {
    AffinePoint point;
    AdeType type;
    long tjurina = 0;
    long milnor = 0;
    int jet_order = 0;  // certified truncation order for evaluation maps
    std::vector<Rational> weights;
    Rational alpha_tilde;
};

/// Quasi-homogeneous weights of the normal form, padded with 1/2 for the
/// suspended squares; alpha~ is their sum.
std::vector<Rational> ade_weights(const AdeType& type, int local_vars);

/// Classification by corank of the Hessian and, in corank 2, the root
/// multiplicities of the kernel cubic. Requires mu = tau (quasi-homogeneous).
SingularityRecord classify_ade(const Polynomial& f, const AffinePoint& p, int order_max = 16);

}  // namespace jacring
