#include "jacring/local_singularity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "jacring/errors.hpp"

namespace jacring {

std::vector<Rational> AffinePoint::projective() const {
    std::vector<Rational> out;
    out.reserve(coords.size() + 1);
    int j = 0;
    for (int i = 0; i < ambient_vars(); ++i) {
        if (i == chart)
            out.emplace_back(1);
        else
            out.push_back(coords[static_cast<std::size_t>(j++)]);
    }
    return out;
}

AffinePoint AffinePoint::from_projective(const std::vector<Rational>& coords) {
    int best = -1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        if (best < 0 || abs(coords[i]) > abs(coords[static_cast<std::size_t>(best)]))
            best = static_cast<int>(i);
    }
    if (best < 0) throw ParseError("projective point has all coordinates zero");
    AffinePoint p;
    p.chart = best;
    const Rational& scale = coords[static_cast<std::size_t>(best)];
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (static_cast<int>(i) != best) p.coords.push_back(coords[i] / scale);
    return p;
}

std::string AffinePoint::to_string() const {
    std::string s = "[";
    const auto proj = projective();
    for (std::size_t i = 0; i < proj.size(); ++i) {
        if (i) s += ":";
        s += jacring::to_string(proj[i]);
    }
    return s + "]";
}

bool verify_singular(const Polynomial& f, const AffinePoint& p) {
    const auto x = p.projective();
    if (f.evaluate(x) != 0) return false;
    for (int i = 0; i < f.vars(); ++i)
        if (f.partial(i).evaluate(x) != 0) return false;
    return true;
}

Polynomial taylor_jet(const Polynomial& f, const AffinePoint& p, int order) {
    if (order < 0) throw std::invalid_argument("negative jet order");
    if (f.vars() != p.ambient_vars())
        throw std::invalid_argument("point dimension does not match polynomial");
    const int local_vars = f.vars() - 1;

    // local index of each ambient variable (skipping the chart)
    std::vector<int> local_index(static_cast<std::size_t>(f.vars()), -1);
    int li = 0;
    for (int i = 0; i < f.vars(); ++i)
        if (i != p.chart) local_index[static_cast<std::size_t>(i)] = li++;

    Polynomial jet = Polynomial::zero(local_vars, order);
    for (const auto& [mono, coef] : f.terms()) {
        Polynomial term = Polynomial::constant(local_vars, coef);
        for (int i = 0; i < f.vars() && !term.is_zero(); ++i) {
            const auto e = mono.exp(i);
            if (e == 0 || i == p.chart) continue;  // chart coordinate is 1
            const int l = local_index[static_cast<std::size_t>(i)];
            Polynomial base = Polynomial::variable(local_vars, l);
            const Rational& a = p.coords[static_cast<std::size_t>(l)];
            if (a != 0) base = base + Polynomial::constant(local_vars, a);
            for (std::uint32_t k = 0; k < e; ++k)
                term = term.truncated_product(base, order);
        }
        jet = jet + term;
    }
    return jet;
}

namespace {

long col_of(const std::vector<Monomial>& cols, const Monomial& m) {
    auto it = std::lower_bound(cols.begin(), cols.end(), m, MonomialListedBefore{});
    if (it == cols.end() || !(*it == m)) return -1;
    return static_cast<long>(it - cols.begin());
}

SparseVec vectorize(const Polynomial& p, const std::vector<Monomial>& cols) {
    SparseVec v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        const long col = col_of(cols, m);
        if (col < 0) throw std::logic_error("monomial missing from column basis");
        v.emplace_back(static_cast<std::int32_t>(col), c);
    }
    sort_and_compress(v);
    return v;
}

}  // namespace

bool LocalAlgebra::ideal_contains(const Monomial& m) const {
    const long col = col_of(jet_monomials, m);
    if (col < 0) return false;
    return ideal.contains({{static_cast<std::int32_t>(col), Rational(1)}});
}

std::vector<Rational> LocalAlgebra::reduce(const Polynomial& jet) const {
    const SparseVec rem = ideal.reduce(vectorize(jet.truncated(order), jet_monomials));
    std::vector<Rational> out(basis.size(), Rational(0));
    const auto free = ideal.form().free_cols();
    for (const auto& [c, v] : rem) {
        const auto it = std::lower_bound(free.begin(), free.end(), c);
        out[static_cast<std::size_t>(it - free.begin())] = v;
    }
    return out;
}

LocalAlgebra local_algebra(const Polynomial& f, const AffinePoint& p, LocalIdealMode mode,
                           int order) {
    const int local_vars = f.vars() - 1;
    LocalAlgebra alg;
    alg.order = order;
    alg.local_vars = local_vars;
    alg.jet_monomials = monomial_basis_upto(local_vars, order);

    std::vector<Polynomial> gens;
    if (mode == LocalIdealMode::tjurina) gens.push_back(taylor_jet(f, p, order));
    for (int i = 0; i < f.vars(); ++i)
        if (i != p.chart) gens.push_back(taylor_jet(f.partial(i), p, order));

    std::vector<IntRow> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int ord = order + 1;
        for (const auto& [m, c] : g.terms()) ord = std::min(ord, m.degree());
        for (int b = 0; b + ord <= order; ++b) {
            for (const auto& mult : monomial_basis(local_vars, b)) {
                const Polynomial prod = Polynomial::term(mult, Rational(1))
                                            .truncated_product(g, order);
                if (prod.is_zero()) continue;
                const SparseVec sv = vectorize(prod, alg.jet_monomials);
                IntRow row;
                row.e.reserve(sv.size());
                Integer den_lcm(1);
                for (const auto& [c, v] : sv)
                    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
                for (const auto& [c, v] : sv) {
                    Integer scale;
                    mpz_divexact(scale.get_mpz_t(), den_lcm.get_mpz_t(),
                                 v.get_den().get_mpz_t());
                    row.e.emplace_back(c, v.get_num() * scale);
                }
                rows.push_back(std::move(row));
            }
        }
    }

    RrefForm form = rref_rows(std::move(rows), static_cast<long>(alg.jet_monomials.size()));
    for (const auto c : form.free_cols())
        alg.basis.push_back(alg.jet_monomials[static_cast<std::size_t>(c)]);
    alg.ideal = SubspaceReducer(std::move(form));
    return alg;
}

StabilizedDimension stabilized_local_dimension(const Polynomial& f, const AffinePoint& p,
                                               LocalIdealMode mode, int order_max) {
    long prev = -1;
    for (int order = 4; order <= order_max; order += 2) {
        const LocalAlgebra alg = local_algebra(f, p, mode, order);
        const long dim = alg.dimension();
        if (dim == prev) {
            bool witness = true;
            for (const auto& m : monomial_basis(alg.local_vars, order - 1))
                if (!alg.ideal_contains(m)) {
                    witness = false;
                    break;
                }
            if (witness) return {dim, order};
        }
        prev = dim;
    }
    throw HypothesesError("not an isolated simple singularity within jet bound " +
                          std::to_string(order_max) + " at " + p.to_string());
}

StabilizedDimension tjurina_number(const Polynomial& f, const AffinePoint& p, int order_max) {
    if (!verify_singular(f, p))
        throw std::invalid_argument("declared point is not singular: " + p.to_string());
    return stabilized_local_dimension(f, p, LocalIdealMode::tjurina, order_max);
}

std::vector<Rational> ade_weights(const AdeType& type, int local_vars) {
    std::vector<Rational> w;
    switch (type.family) {
        case 'A':
            w.push_back(make_rational(1, type.index + 1));
            break;
        case 'D':
            w.push_back(make_rational(type.index - 2, 2 * (type.index - 1)));
            w.push_back(make_rational(1, type.index - 1));
            break;
        case 'E':
            w.push_back(make_rational(1, 3));
            if (type.index == 6) w.push_back(make_rational(1, 4));
            if (type.index == 7) w.push_back(make_rational(2, 9));
            if (type.index == 8) w.push_back(make_rational(1, 5));
            break;
        default:
            throw std::logic_error("unknown singularity family");
    }
    while (static_cast<int>(w.size()) < local_vars) w.push_back(make_rational(1, 2));
    return w;
}

namespace {

// Degree and content-free representation of a univariate rational polynomial,
// lowest coefficient first; only needed up to degree 3.
using UniPoly = std::vector<Rational>;

int uni_degree(const UniPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
    const int db = uni_degree(b);
    for (int da = uni_degree(a); da >= db && da >= 0; da = uni_degree(a)) {
        const Rational q = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= q * b[static_cast<std::size_t>(i)];
    }
    return a;
}

int gcd_degree(UniPoly a, UniPoly b) {
    if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
    while (uni_degree(b) >= 0) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_degree(a);
}

// Largest root multiplicity of a nonzero binary cubic, computed over Q via
// the gcd with the derivative; no root extraction.
int cubic_max_multiplicity(const std::array<Rational, 4>& c) {
    // c[i] multiplies s^i t^(3-i);  p(T) = c(T,1)
    UniPoly p = {c[0], c[1], c[2], c[3]};
    const int deg = uni_degree(p);
    const int mult_infinity = 3 - deg;  // root [1:0]
    int finite = 0;
    if (deg >= 1) {
        UniPoly dp(static_cast<std::size_t>(deg), Rational(0));
        for (int i = 1; i <= deg; ++i)
            dp[static_cast<std::size_t>(i - 1)] = Rational(i) * p[static_cast<std::size_t>(i)];
        p.resize(static_cast<std::size_t>(deg) + 1);
        const int g = gcd_degree(p, dp);
        // for deg <= 3 the gcd degree determines the largest multiplicity
        finite = g + 1;
    }
    return std::max(finite, mult_infinity);
}

}  // namespace

SingularityRecord classify_ade(const Polynomial& f, const AffinePoint& p, int order_max) {
    const StabilizedDimension tj = tjurina_number(f, p, order_max);
    const StabilizedDimension mil =
        stabilized_local_dimension(f, p, LocalIdealMode::milnor, order_max);
    if (mil.dimension != tj.dimension)
        throw HypothesesError("not a simple singularity at " + p.to_string() +
                              ": Milnor " + std::to_string(mil.dimension) +
                              " != Tjurina " + std::to_string(tj.dimension));
    const long mu = mil.dimension;
    const int local_vars = f.vars() - 1;

    const Polynomial jet3 = taylor_jet(f, p, 3);
    ExactMatrix hessian(local_vars, local_vars);
    for (const auto& [m, c] : jet3.terms()) {
        if (m.degree() != 2) continue;
        int i = -1, j = -1;
        for (int k = 0; k < local_vars; ++k) {
            if (m.exp(k) == 2) i = j = k;
            if (m.exp(k) == 1) (i < 0 ? i : j) = k;
        }
        if (i == j) {
            hessian.set(i, i, c * 2);
        } else {
            hessian.set(i, j, c);
            hessian.set(j, i, c);
        }
    }
    const long corank = local_vars - rank(hessian, {.modular_prepass = false});

    AdeType type;
    if (corank == 0) {
        if (mu != 1)
            throw HypothesesError("nondegenerate Hessian with mu != 1 at " + p.to_string());
        type = {'A', 1};
    } else if (corank == 1) {
        if (mu < 2)
            throw HypothesesError("corank 1 with mu < 2 at " + p.to_string());
        type = {'A', static_cast<int>(mu)};
    } else if (corank == 2) {
        // binary cubic on the kernel of the Hessian
        const ExactMatrix ker = kernel_basis(hessian);
        if (ker.rows() != 2) throw std::logic_error("hessian kernel dimension mismatch");
        std::array<Rational, 4> cubic{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (const auto& [m, c] : jet3.terms()) {
            if (m.degree() != 3) continue;
            // expand  c * prod_i (s k1_i + t k2_i)^{e_i}  into s^a t^(3-a)
            Polynomial form = Polynomial::constant(2, c);
            for (int i = 0; i < local_vars; ++i) {
                for (std::uint32_t e = 0; e < m.exp(i); ++e) {
                    Polynomial lin = Polynomial::variable(2, 0).scaled(ker.at(0, i)) +
                                     Polynomial::variable(2, 1).scaled(ker.at(1, i));
                    form = form * lin;
                }
            }
            for (const auto& [bm, bc] : form.terms())
                cubic[bm.exp(0)] += bc;
        }
        const bool cubic_zero =
            cubic[0] == 0 && cubic[1] == 0 && cubic[2] == 0 && cubic[3] == 0;
        if (cubic_zero)
            throw HypothesesError("not a simple singularity at " + p.to_string() +
                                  ": corank 2 with vanishing kernel cubic");
        const int mult = cubic_max_multiplicity(cubic);
        if (mult == 1) {
            if (mu != 4)
                throw HypothesesError("squarefree kernel cubic with mu != 4 at " +
                                      p.to_string());
            type = {'D', 4};
        } else if (mult == 2) {
            if (mu < 5)
                throw HypothesesError("kernel cubic with a double root needs mu >= 5 at " +
                                      p.to_string());
            type = {'D', static_cast<int>(mu)};
        } else {
            if (mu < 6 || mu > 8)
                throw HypothesesError("not a simple singularity at " + p.to_string() +
                                      ": triple-root cubic with mu = " + std::to_string(mu));
            type = {'E', static_cast<int>(mu)};
        }
    } else {
        throw HypothesesError("not a simple singularity at " + p.to_string() +
                              ": Hessian corank " + std::to_string(corank));
    }

    SingularityRecord rec;
    rec.point = p;
    rec.type = type;
    rec.tjurina = tj.dimension;
    rec.milnor = mu;
    rec.jet_order = std::max(tj.order, mil.order);
    rec.weights = ade_weights(type, local_vars);
    rec.alpha_tilde = Rational(0);
    for (const auto& w : rec.weights) rec.alpha_tilde += w;
    if (!(rec.alpha_tilde > 1))
        throw std::logic_error("alpha~ <= 1 for a simple singularity");
    return rec;
}

}  // namespace jacring
