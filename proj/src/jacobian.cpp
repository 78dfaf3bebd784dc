#include "jacring/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

#include "jacring/errors.hpp"

namespace jacring {

std::string verdict_name(TorelliVerdict v) {
    switch (v) {
        case TorelliVerdict::injective: return "injective";
        case TorelliVerdict::kernel_equals_jd: return "kernel_equals_J_d";
        case TorelliVerdict::kernel_exceeds_jd: return "kernel_exceeds_J_d";
        case TorelliVerdict::hypotheses_not_satisfied: return "hypotheses_not_satisfied";
    }
    return "?";
}

// ---------------------------------------------------------------------------

namespace {

thread_local std::map<std::pair<int, int>, std::vector<Monomial>> g_basis_cache;

const std::vector<Monomial>& basis_for(int vars, int degree) {
    auto key = std::make_pair(vars, degree);
    auto it = g_basis_cache.find(key);
    if (it == g_basis_cache.end())
        it = g_basis_cache.emplace(key, monomial_basis(vars, degree)).first;
    return it->second;
}

Polynomial from_coords(const SparseVec& v, int vars, int degree) {
    const auto& basis = basis_for(vars, degree);
    Polynomial p(vars, degree);
    for (const auto& [c, val] : v) p.add_term(basis[static_cast<std::size_t>(c)], val);
    return p;
}

}  // namespace

SparseVec JacobianCalculator::vectorize(const Polynomial& p, int m) const {
    p.require_homogeneous(m);
    const auto& basis = basis_for(h_->vars(), m);
    SparseVec v;
    v.reserve(p.term_count());
    for (const auto& [mono, coef] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), mono, MonomialListedBefore{});
        if (it == basis.end() || !(*it == mono))
            throw std::logic_error("monomial missing from degree basis");
        v.emplace_back(static_cast<std::int32_t>(it - basis.begin()), coef);
    }
    sort_and_compress(v);
    return v;
}

JacobianCalculator::JacobianCalculator(const Hypersurface& h) : h_(&h) {
    if (!h.analyzed()) throw std::logic_error("analyze the instance first");
    elim_.modular_prepass = h.options().modular_prepass;
}

long JacobianCalculator::ambient_dim(int m) const {
    const long dim = monomial_count(h_->vars(), m);
    if (dim > h_->options().column_budget)
        throw BudgetError("monomial basis of degree " + std::to_string(m) + " has " +
                          std::to_string(dim) + " columns, over the budget of " +
                          std::to_string(h_->options().column_budget));
    return dim;
}

const GradedPiece& JacobianCalculator::jacobian_piece(int m) {
    auto it = j_cache_.find(m);
    if (it != j_cache_.end()) return it->second;

    GradedPiece piece;
    piece.degree = m;
    piece.ambient_dim = ambient_dim(m);
    const int gen_degree = m - (h_->d() - 1);
    if (gen_degree < 0) {
        piece.basis = ExactMatrix(0, piece.ambient_dim);
        return j_cache_.emplace(m, std::move(piece)).first->second;
    }

    std::vector<Polynomial> partials;
    for (int i = 0; i < h_->vars(); ++i) partials.push_back(h_->f().partial(i));

    std::vector<SparseVec> rows;
    for (const auto& g : basis_for(h_->vars(), gen_degree)) {
        const Polynomial gp = Polynomial::term(g, Rational(1));
        for (const auto& df : partials) {
            if (df.is_zero()) continue;
            rows.push_back(vectorize(gp * df, m));
        }
    }
    piece.basis = image_basis(ExactMatrix::from_rows(std::move(rows), piece.ambient_dim));
    return j_cache_.emplace(m, std::move(piece)).first->second;
}

const EvaluationMapPiece& JacobianCalculator::evaluation_map(int m) {
    auto it = ev_cache_.find(m);
    if (it != ev_cache_.end()) return it->second;

    const auto& records = h_->records();
    long total_tau = 0;
    for (const auto& r : records) total_tau += r.tjurina;

    EvaluationMapPiece piece;
    piece.degree = m;
    const long cols = ambient_dim(m);
    ExactMatrix matrix(total_tau, cols);

    if (m >= 0 && total_tau > 0) {
        long offset = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& rec = records[i];
            const LocalAlgebra alg =
                local_algebra(h_->f(), rec.point, LocalIdealMode::tjurina, rec.jet_order);
            if (alg.dimension() != rec.tjurina)
                throw std::logic_error("local algebra dimension drifted");
            const auto& basis = basis_for(h_->vars(), m);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Polynomial jet = taylor_jet(Polynomial::term(basis[j], Rational(1)),
                                                  rec.point, rec.jet_order);
                const auto coords = alg.reduce(jet);
                for (long b = 0; b < rec.tjurina; ++b)
                    if (coords[static_cast<std::size_t>(b)] != 0)
                        matrix.set(offset + b, static_cast<long>(j),
                                   coords[static_cast<std::size_t>(b)]);
            }
            offset += rec.tjurina;
        }
    }

    piece.matrix = std::move(matrix);
    piece.rank = rank(piece.matrix, elim_);
    piece.coker_dim = total_tau - piece.rank;
    return ev_cache_.emplace(m, std::move(piece)).first->second;
}

const GradedPiece& JacobianCalculator::ideal_piece(int m) {
    auto it = i_cache_.find(m);
    if (it != i_cache_.end()) return it->second;

    GradedPiece piece;
    piece.degree = m;
    piece.ambient_dim = ambient_dim(m);
    const auto& ev = evaluation_map(m);
    if (ev.matrix.rows() == 0)
        piece.basis = ExactMatrix::identity(piece.ambient_dim);
    else
        piece.basis = image_basis(kernel_basis(ev.matrix));
    return i_cache_.emplace(m, std::move(piece)).first->second;
}

long JacobianCalculator::dim_quotient(QuotientKind kind, int m) {
    if (m < 0) return 0;
    const auto& j = jacobian_piece(m);
    if (kind == QuotientKind::a_mod_j) return j.ambient_dim - j.dim();

    const auto& ev = evaluation_map(m);
    // J_m must land in the kernel of the evaluation: ev * J^T = 0
    if (!(ev.matrix * j.basis.transpose()).is_zero())
        throw ConsistencyError("J_" + std::to_string(m) +
                               " is not contained in I_" + std::to_string(m) +
                               "; the declared singular locus is wrong");
    const long dim_i = j.ambient_dim - ev.rank;
    return dim_i - j.dim();
}

std::pair<long, long> JacobianCalculator::quotient_dims(int m) {
    return {dim_quotient(QuotientKind::a_mod_j, m), dim_quotient(QuotientKind::i_mod_j, m)};
}

std::vector<HilbertRow> JacobianCalculator::hilbert_table(int m_low, int m_high) {
    std::vector<HilbertRow> table;
    for (int m = std::max(m_low, 0); m <= m_high; ++m) {
        HilbertRow row;
        row.m = m;
        row.ambient = ambient_dim(m);
        row.dim_j = jacobian_piece(m).dim();
        row.dim_aj = row.ambient - row.dim_j;
        row.dim_ij = dim_quotient(QuotientKind::i_mod_j, m);
        row.dim_i = row.dim_ij + row.dim_j;
        table.push_back(row);
    }
    return table;
}

CertificateResult JacobianCalculator::completeness_certificate() {
    if (certificate_) return *certificate_;
    CertificateResult cert;
    cert.tau = total_tjurina();
    const int s = socle_degree();
    cert.dim_next = dim_quotient(QuotientKind::a_mod_j, s + 1);
    cert.dim_next2 = dim_quotient(QuotientKind::a_mod_j, s + 2);
    cert.passed = cert.dim_next == cert.tau && cert.dim_next2 == cert.tau;
    certificate_ = cert;
    return cert;
}

void JacobianCalculator::require_certificate() {
    const auto cert = completeness_certificate();
    if (!cert.passed)
        throw ConsistencyError(
            "completeness certificate failed: dim (A/J) stabilizes at " +
            std::to_string(cert.dim_next2) + " but declared total Tjurina is " +
            std::to_string(cert.tau) + "; undeclared or non-isolated singularities suspected");
}

DualityReport JacobianCalculator::duality_report() {
    require_certificate();
    DualityReport report;
    const int s = socle_degree();
    report.symmetric = true;
    for (int m = 0; m <= s; ++m) {
        DualityRow row;
        row.m = m;
        row.dim = dim_quotient(QuotientKind::i_mod_j, m);
        row.dim_dual = dim_quotient(QuotientKind::i_mod_j, s - m);
        report.symmetric = report.symmetric && row.equal();
        report.rows.push_back(row);
    }
    report.beyond_socle_1 = dim_quotient(QuotientKind::i_mod_j, s + 1);
    report.beyond_socle_2 = dim_quotient(QuotientKind::i_mod_j, s + 2);
    report.vanishing_beyond = report.beyond_socle_1 == 0 && report.beyond_socle_2 == 0;
    return report;
}

long JacobianCalculator::h1_ideal(int m) {
    if (m < 0) return total_tjurina();
    return evaluation_map(m).coker_dim;
}

PValueReport JacobianCalculator::p_value() {
    PValueReport report;
    const int cap = socle_degree() + h_->n() + 4;
    long p = -1;
    for (int m = 0; m <= cap; ++m) {
        const long coker = h1_ideal(m);
        report.sweep.emplace_back(m, coker);
        if (coker == 0) {
            p = m;
            break;
        }
    }
    if (p < 0)
        throw ConsistencyError("evaluation never becomes surjective up to degree " +
                               std::to_string(cap) + "; the declared locus is suspect");
    report.p = p;
    // monotonicity witness just past p
    report.monotone = h1_ideal(static_cast<int>(p) + 1) == 0 &&
                      h1_ideal(static_cast<int>(p) + 2) == 0;
    report.length_two = total_tjurina() == 2;
    report.discrepancy = report.length_two && report.p != report.reference_s2;
    return report;
}

int JacobianCalculator::hodge_target_degree() const { return 2 * h_->d() - h_->n() - 2; }

QuotientKind JacobianCalculator::hodge_target_kind() const {
    return h_->n() == 2 ? QuotientKind::i_mod_j : QuotientKind::a_mod_j;
}

HodgeGraded JacobianCalculator::hodge_graded() {
    if (h_->n() % 2 != 0)
        throw HypothesesError("Hodge graded dimensions are unsupported for odd n");
    HodgeGraded g;
    g.top = dim_quotient(QuotientKind::a_mod_j, h_->d() - h_->n() - 2);
    g.next = dim_quotient(hodge_target_kind(), hodge_target_degree());
    return g;
}

GradedPiece JacobianCalculator::equisingular_tangent() {
    const int d = h_->d();
    if (!evaluation_map(d).surjective())
        throw HypothesesError(
            "evaluation is not surjective in degree d: non-versal family; "
            "codimension formula not guaranteed");
    const auto& ideal = ideal_piece(d);
    SubspaceReducer f_line(rref(
        ExactMatrix::from_rows({vectorize(h_->f(), d)}, ideal.ambient_dim)));
    std::vector<SparseVec> rows;
    for (long r = 0; r < ideal.basis.rows(); ++r) {
        SparseVec red = f_line.reduce(ideal.basis.row(r));
        if (!red.empty()) rows.push_back(std::move(red));
    }
    GradedPiece piece;
    piece.degree = d;
    piece.ambient_dim = ideal.ambient_dim;
    piece.basis = image_basis(ExactMatrix::from_rows(std::move(rows), ideal.ambient_dim));
    if (piece.dim() != ideal.dim() - 1)
        throw std::logic_error("f did not reduce the tangent dimension by one");
    return piece;
}

long JacobianCalculator::stratum_codim() {
    const int d = h_->d();
    if (!evaluation_map(d).surjective())
        throw HypothesesError(
            "evaluation is not surjective in degree d: non-versal family; "
            "codimension formula not guaranteed");
    return ambient_dim(d) - ideal_piece(d).dim();
}

QuotientSpace JacobianCalculator::make_quotient(QuotientKind kind, int m) {
    QuotientSpace q;
    q.degree_ = m;
    const auto& j = jacobian_piece(m);
    RrefForm jform = rref(j.basis);
    const auto free = jform.free_cols();
    q.modulus_ = SubspaceReducer(std::move(jform));

    if (kind == QuotientKind::a_mod_j) {
        std::vector<SparseVec> unit_rows;
        unit_rows.reserve(free.size());
        for (const auto c : free) unit_rows.push_back({{c, Rational(1)}});
        q.representatives_ = unit_rows;
        q.complement_ =
            SubspaceReducer(rref(ExactMatrix::from_rows(std::move(unit_rows), j.ambient_dim)));
        return q;
    }

    // I/J: reduce an echelon basis of I modulo J, re-echelonize the leftovers
    dim_quotient(QuotientKind::i_mod_j, m);  // containment check
    const auto& ideal = ideal_piece(m);
    std::vector<SparseVec> rows;
    for (long r = 0; r < ideal.basis.rows(); ++r) {
        SparseVec red = q.modulus_.reduce(ideal.basis.row(r));
        if (!red.empty()) rows.push_back(std::move(red));
    }
    RrefForm cform = rref(ExactMatrix::from_rows(std::move(rows), j.ambient_dim));
    const ExactMatrix cmat = cform.to_matrix();
    for (long r = 0; r < cmat.rows(); ++r) q.representatives_.push_back(cmat.row(r));
    q.complement_ = SubspaceReducer(std::move(cform));
    if (q.dim() != ideal.dim() - j.dim())
        throw std::logic_error("complement dimension mismatch in I/J");
    return q;
}

const QuotientSpace& JacobianCalculator::quotient_space(QuotientKind kind, int m) {
    const auto key = std::make_pair(static_cast<int>(kind), m);
    auto it = quotient_cache_.find(key);
    if (it == quotient_cache_.end())
        it = quotient_cache_.emplace(key, make_quotient(kind, m)).first;
    return it->second;
}

std::vector<Rational> QuotientSpace::coordinates(const SparseVec& v) const {
    const SparseVec reduced = modulus_.reduce(v);
    std::vector<Rational> coeffs;
    const SparseVec rem = complement_.reduce(reduced, &coeffs);
    if (!rem.empty())
        throw std::logic_error("vector does not lie in the quotient's span");
    return coeffs;
}

ExactMatrix JacobianCalculator::ivhs_differential(const Polynomial& xi) {
    return ivhs_differential(vectorize(xi, h_->d()));
}

ExactMatrix JacobianCalculator::ivhs_differential(const SparseVec& xi_coords) {
    if (h_->n() % 2 != 0)
        throw HypothesesError("IVHS differential is unsupported for odd n");
    const int d = h_->d(), n = h_->n();
    const auto& ideal = ideal_piece(d);
    if (!SubspaceReducer(rref(ideal.basis)).contains(xi_coords))
        throw std::domain_error("xi does not lie in I_d");

    const auto& source = quotient_space(QuotientKind::a_mod_j, d - n - 2);
    const auto& target = quotient_space(hodge_target_kind(), hodge_target_degree());
    const Polynomial xi = from_coords(xi_coords, h_->vars(), d);

    ExactMatrix matrix(target.dim(), source.dim());
    for (long a = 0; a < source.dim(); ++a) {
        const Polynomial g = from_coords(source.representative(a), h_->vars(), d - n - 2);
        const SparseVec image = vectorize(xi * g, hodge_target_degree());
        const auto coords = target.coordinates(image);
        for (long t = 0; t < target.dim(); ++t)
            if (coords[static_cast<std::size_t>(t)] != 0)
                matrix.set(t, a, -coords[static_cast<std::size_t>(t)]);
    }
    return matrix;
}

GenerationReport JacobianCalculator::generation_check(QuotientKind kind, int m0) {
    if (m0 < 0) throw std::invalid_argument("generation check needs m0 >= 0");
    GenerationReport report;
    report.m_low = m0;
    report.m_high = socle_degree() + 2;
    report.passed = true;
    for (int m = report.m_low; m <= report.m_high; ++m) {
        const auto& src = quotient_space(kind, m);
        const auto& dst = quotient_space(kind, m + 1);
        GenerationRow row;
        row.m = m;
        row.target_dim = dst.dim();
        std::vector<SparseVec> images;
        for (long k = 0; k < src.dim(); ++k) {
            const Polynomial rep = from_coords(src.representative(k), h_->vars(), m);
            for (int i = 0; i < h_->vars(); ++i) {
                const Polynomial prod = rep * Polynomial::variable(h_->vars(), i);
                SparseVec coords_vec;
                const auto coords = dst.coordinates(vectorize(prod, m + 1));
                for (std::size_t t = 0; t < coords.size(); ++t)
                    if (coords[t] != 0)
                        coords_vec.emplace_back(static_cast<std::int32_t>(t), coords[t]);
                images.push_back(std::move(coords_vec));
                ++row.source_pairs;
            }
        }
        row.image_rank = rank(ExactMatrix::from_rows(std::move(images), dst.dim()), elim_);
        report.passed = report.passed && row.surjective();
        report.rows.push_back(row);
    }
    return report;
}

const QuotientSpace& JacobianCalculator::torelli_source() {
    return quotient_space(QuotientKind::i_mod_j, h_->d());
}

TorelliReport JacobianCalculator::torelli_report() {
    if (h_->n() % 2 != 0)
        throw HypothesesError("the Torelli test requires even n");
    require_certificate();

    const int d = h_->d(), n = h_->n();
    TorelliReport report;
    report.checks.degree_margin = d - (n + 2) > 0;
    report.checks.ev_degree = d - (n + 3);
    report.checks.ev_surjective =
        report.checks.ev_degree >= 0 && evaluation_map(report.checks.ev_degree).surjective();
    const int m0 = std::max(d - n - 2, 0);
    report.checks.generation_aj = generation_check(QuotientKind::a_mod_j, m0).passed;
    report.checks.generation_ij = generation_check(QuotientKind::i_mod_j, m0).passed;

    const auto& source = torelli_source();
    report.source_dim = source.dim();
    const auto& aj = quotient_space(QuotientKind::a_mod_j, d - n - 2);
    const auto& target = quotient_space(hodge_target_kind(), hodge_target_degree());

    // one column per basis class of (I/J)_d, flattening Hom((A/J)_{d-n-2}, T)
    ExactMatrix big(aj.dim() * target.dim(), source.dim());
    for (long k = 0; k < source.dim(); ++k) {
        const ExactMatrix mk = ivhs_differential(source.representative(k));
        for (long t = 0; t < mk.rows(); ++t)
            for (const auto& [a, v] : mk.row(t))
                big.set(static_cast<long>(a) * target.dim() + t, k, v);
    }
    const ExactMatrix kernel = kernel_basis(big);
    report.kernel_dim = kernel.rows();

    const auto& j = jacobian_piece(d);
    report.j_d = j;
    std::vector<SparseVec> lift_rows;
    for (long r = 0; r < j.basis.rows(); ++r) lift_rows.push_back(j.basis.row(r));
    for (long r = 0; r < kernel.rows(); ++r) {
        SparseVec combo;
        for (const auto& [k, c] : kernel.row(r))
            combo = sparse_axpy(combo, c, source.representative(k));
        if (!combo.empty()) lift_rows.push_back(std::move(combo));
    }
    report.kernel_lift.degree = d;
    report.kernel_lift.ambient_dim = j.ambient_dim;
    report.kernel_lift.basis =
        image_basis(ExactMatrix::from_rows(std::move(lift_rows), j.ambient_dim));

    // double containment via the rank of the stacked matrices
    const long stacked = rank(ExactMatrix::stacked(j.basis, report.kernel_lift.basis), elim_);
    report.kernel_matches_orbit =
        stacked == j.dim() && stacked == report.kernel_lift.dim();

    if (!report.checks.all())
        report.verdict = TorelliVerdict::hypotheses_not_satisfied;
    else if (report.kernel_matches_orbit)
        report.verdict = TorelliVerdict::injective;
    else
        report.verdict = TorelliVerdict::kernel_exceeds_jd;
    return report;
}

}  // namespace jacring
