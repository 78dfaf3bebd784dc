#include "jacring/koszul.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jacring {

namespace {

std::vector<std::vector<int>> subsets_of_size(int v, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > v) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    // lexicographic enumeration
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == v - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (k == 0) out = {{}};
    return out;
}

}  // namespace

KoszulSetup KoszulSetup::partials_of(const Hypersurface& h, int m) {
    KoszulSetup setup;
    for (int i = 0; i < h.vars(); ++i) setup.generators.push_back(h.f().partial(i));
    setup.degree = m;
    return setup;
}

KoszulComplex build_koszul(const KoszulSetup& setup) {
    const int v = static_cast<int>(setup.generators.size());
    if (v < 1) throw std::invalid_argument("Koszul setup needs at least one generator");
    const int vars = setup.generators.front().vars();
    const int gen_degree = setup.generators.front().degree();
    for (const auto& g : setup.generators) {
        if (g.vars() != vars) throw std::invalid_argument("generator variable count mismatch");
        if (g.is_zero() || g.degree() != gen_degree || !g.is_homogeneous())
            throw std::invalid_argument(
                "generators must be nonzero homogeneous of one common degree");
    }

    KoszulComplex complex;
    complex.degree = setup.degree;
    complex.positions = v + 1;

    // term bases: position p = subsets of size v - p, tensor degree m - (v-p)*D
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(v + 1));
    std::vector<std::vector<Monomial>> monomials(static_cast<std::size_t>(v + 1));
    std::vector<std::map<std::vector<int>, long>> subset_index(static_cast<std::size_t>(v + 1));
    for (int p = 0; p <= v; ++p) {
        const int k = v - p;
        const int mono_degree = setup.degree - k * gen_degree;
        subsets[static_cast<std::size_t>(p)] = subsets_of_size(v, k);
        monomials[static_cast<std::size_t>(p)] =
            mono_degree < 0 ? std::vector<Monomial>{} : monomial_basis(vars, mono_degree);
        for (std::size_t s = 0; s < subsets[static_cast<std::size_t>(p)].size(); ++s)
            subset_index[static_cast<std::size_t>(p)]
                        [subsets[static_cast<std::size_t>(p)][s]] = static_cast<long>(s);
        complex.term_dims.push_back(
            static_cast<long>(subsets[static_cast<std::size_t>(p)].size()) *
            static_cast<long>(monomials[static_cast<std::size_t>(p)].size()));
    }

    for (int p = 0; p < v; ++p) {
        const auto& src_subsets = subsets[static_cast<std::size_t>(p)];
        const auto& src_monos = monomials[static_cast<std::size_t>(p)];
        const auto& dst_monos = monomials[static_cast<std::size_t>(p + 1)];
        const auto& dst_index = subset_index[static_cast<std::size_t>(p + 1)];
        const long dst_block = static_cast<long>(dst_monos.size());
        ExactMatrix delta(complex.term_dims[static_cast<std::size_t>(p + 1)],
                          complex.term_dims[static_cast<std::size_t>(p)]);
        if (!src_monos.empty() && !dst_monos.empty()) {
            for (std::size_t s = 0; s < src_subsets.size(); ++s) {
                const auto& subset = src_subsets[s];
                for (std::size_t mi = 0; mi < src_monos.size(); ++mi) {
                    const long col =
                        static_cast<long>(s) * static_cast<long>(src_monos.size()) +
                        static_cast<long>(mi);
                    const Polynomial mono = Polynomial::term(src_monos[mi], Rational(1));
                    for (std::size_t j = 0; j < subset.size(); ++j) {
                        std::vector<int> rest;
                        rest.reserve(subset.size() - 1);
                        for (std::size_t t = 0; t < subset.size(); ++t)
                            if (t != j) rest.push_back(subset[t]);
                        const long block = dst_index.at(rest);
                        const Rational sign((j % 2 == 0) ? 1 : -1);
                        const Polynomial image =
                            mono * setup.generators[static_cast<std::size_t>(subset[j])];
                        for (const auto& [im, ic] : image.terms()) {
                            auto it = std::lower_bound(dst_monos.begin(), dst_monos.end(), im,
                                                       MonomialListedBefore{});
                            const long r = block * dst_block +
                                           static_cast<long>(it - dst_monos.begin());
                            delta.add_at(r, col, sign * ic);
                        }
                    }
                }
            }
        }
        complex.differentials.push_back(std::move(delta));
    }
    return complex;
}

std::vector<long> koszul_cohomology(const KoszulComplex& complex, const ElimOptions& opts) {
    const int v = complex.positions - 1;
    std::vector<long> ranks(static_cast<std::size_t>(v), 0);
    for (int p = 0; p < v; ++p)
        ranks[static_cast<std::size_t>(p)] =
            rank(complex.differentials[static_cast<std::size_t>(p)], opts);
    std::vector<long> h(static_cast<std::size_t>(v + 1), 0);
    for (int p = 0; p <= v; ++p) {
        const long out_rank = p < v ? ranks[static_cast<std::size_t>(p)] : 0;
        const long in_rank = p > 0 ? ranks[static_cast<std::size_t>(p - 1)] : 0;
        h[static_cast<std::size_t>(p)] =
            complex.term_dims[static_cast<std::size_t>(p)] - out_rank - in_rank;
    }
    return h;
}

long koszul_euler_characteristic(const KoszulComplex& complex) {
    long chi = 0;
    long sign = 1;
    for (const long dim : complex.term_dims) {
        chi += sign * dim;
        sign = -sign;
    }
    return chi;
}

KoszulRow koszul_row(JacobianCalculator& calc, int m, const ElimOptions& opts) {
    const auto& h = calc.instance();
    const KoszulComplex complex = build_koszul(KoszulSetup::partials_of(h, m));
    KoszulRow row;
    row.m = m;
    row.h = koszul_cohomology(complex, opts);
    const int n = h.n();
    const int dual = calc.socle_degree() - m;
    row.ev_coker_at_dual = calc.h1_ideal(dual);
    row.ev_surjective_at_dual = row.ev_coker_at_dual == 0;
    row.below_top_vanishing = true;
    for (int p = 0; p <= n; ++p)
        row.below_top_vanishing =
            row.below_top_vanishing && row.h[static_cast<std::size_t>(p)] == 0;
    row.identity_holds = row.h[static_cast<std::size_t>(n + 1)] == row.ev_coker_at_dual;
    row.dim_aj = calc.dim_quotient(QuotientKind::a_mod_j, m);
    row.top_matches_quotient = row.h[static_cast<std::size_t>(n + 2)] == row.dim_aj;
    return row;
}

std::vector<KoszulRow> verify_le33(JacobianCalculator& calc, int m_low, int m_high) {
    std::vector<KoszulRow> rows;
    for (int m = m_low; m <= m_high; ++m) rows.push_back(koszul_row(calc, m));
    return rows;
}

}  // namespace jacring
