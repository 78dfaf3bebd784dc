#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jacring/elimination.hpp"
#include "jacring/instance.hpp"

namespace jacring {

/// A subspace of the degree-m forms, spanned by the rows of `basis`
/// (canonical reduced echelon over the monomial basis of degree m).
struct GradedPiece {
    int degree = 0;
    long ambient_dim = 0;
    ExactMatrix basis;
    long dim() const { return basis.rows(); }
};

/// The jet-evaluation map H^0(O(m)) -> sum of local Tjurina algebras.
struct EvaluationMapPiece {
    int degree = 0;
    ExactMatrix matrix;  // rows: local algebra coordinates over all points
    long rank = 0;
    long coker_dim = 0;
    bool surjective() const { return coker_dim == 0; }
};

struct HilbertRow {
    int m = 0;
    long ambient = 0, dim_j = 0, dim_i = 0, dim_aj = 0, dim_ij = 0;
};

struct CertificateResult {
    bool passed = false;
    long tau = 0;
    long dim_next = 0, dim_next2 = 0;  // dim (A/J) at socle+1, socle+2
};

struct DualityRow {
    int m = 0;
    long dim = 0, dim_dual = 0;
    bool equal() const { return dim == dim_dual; }
};

struct DualityReport {
    std::vector<DualityRow> rows;  // m = 0..socle
    long beyond_socle_1 = 0, beyond_socle_2 = 0;
    bool symmetric = false;
    bool vanishing_beyond = false;
    bool passed() const { return symmetric && vanishing_beyond; }
};

struct PValueReport {
    std::vector<std::pair<int, long>> sweep;  // (m, coker dim)
    long p = 0;
    bool monotone = false;
    // Reference value for configurations of length 2; the computed p is
    // reported next to it and never adjusted to match.
    bool length_two = false;
    long reference_s2 = 2;
    bool discrepancy = false;
};

struct HodgeGraded {
    long top = 0;   // dim Gr_F^{n+1}
    long next = 0;  // dim Gr_F^n
};

struct GenerationRow {
    int m = 0;
    long source_pairs = 0, target_dim = 0, image_rank = 0;
    bool surjective() const { return image_rank == target_dim; }
};

struct GenerationReport {
    int m_low = 0, m_high = 0;
    std::vector<GenerationRow> rows;
    bool passed = false;
};

enum class TorelliVerdict { injective, kernel_equals_jd, kernel_exceeds_jd,
                            hypotheses_not_satisfied };
std::string verdict_name(TorelliVerdict v);

struct TorelliChecks {
    bool degree_margin = false;  // d - (n+2) > 0
    int ev_degree = 0;           // d - (n+3)
    bool ev_surjective = false;  // at ev_degree; fails when ev_degree < 0
    bool generation_aj = false;
    bool generation_ij = false;
    bool all() const {
        return degree_margin && ev_surjective && generation_aj && generation_ij;
    }
};

struct TorelliReport {
    TorelliChecks checks;
    long source_dim = 0;  // dim (I/J)_d
    long kernel_dim = 0;  // kernel of the multiplication map on (I/J)_d
    GradedPiece kernel_lift;  // J_d + lifted kernel, inside I_d
    GradedPiece j_d;
    bool kernel_matches_orbit = false;  // lifted kernel equals J_d exactly
    TorelliVerdict verdict = TorelliVerdict::hypotheses_not_satisfied;
};

/// Coordinates on a graded quotient (A/J)_m or (I/J)_m: reduction modulo the
/// Jacobian piece, then coordinates on a fixed complement basis.
class QuotientSpace {
public:
    QuotientSpace() = default;

    int degree() const { return degree_; }
    long dim() const { return static_cast<long>(representatives_.size()); }
    /// Basis vector k, as a coefficient vector of degree-m forms.
    const SparseVec& representative(long k) const {
        return representatives_[static_cast<std::size_t>(k)];
    }
    /// Coordinates of a degree-m vector; the vector must lie in J + span(basis).
    std::vector<Rational> coordinates(const SparseVec& v) const;

private:
    friend class JacobianCalculator;
    int degree_ = 0;
    SubspaceReducer modulus_;     // RREF of J_m
    SubspaceReducer complement_;  // RREF of the complement basis
    std::vector<SparseVec> representatives_;
};

enum class QuotientKind { a_mod_j, i_mod_j };

/// All graded computations attached to one analyzed hypersurface; caches the
/// per-degree pieces it builds. Not safe for concurrent use; independent
/// degrees can always be computed on separate calculators.
class JacobianCalculator {
public:
    explicit JacobianCalculator(const Hypersurface& h);

    const Hypersurface& instance() const { return *h_; }
    int socle_degree() const { return h_->socle_degree(); }

    /// h^0(O(m)) with the column budget enforced; 0 for m < 0.
    long ambient_dim(int m) const;

    const GradedPiece& jacobian_piece(int m);
    const EvaluationMapPiece& evaluation_map(int m);
    const GradedPiece& ideal_piece(int m);

    long dim_quotient(QuotientKind kind, int m);
    std::pair<long, long> quotient_dims(int m);  // (A/J, I/J)
    std::vector<HilbertRow> hilbert_table(int m_low, int m_high);

    long total_tjurina() const { return h_->total_tjurina(); }
    CertificateResult completeness_certificate();
    /// Throws ConsistencyError unless the certificate has passed.
    void require_certificate();

    DualityReport duality_report();

    long h1_ideal(int m);
    PValueReport p_value();

    HodgeGraded hodge_graded();

    GradedPiece equisingular_tangent();
    long stratum_codim();

    const QuotientSpace& quotient_space(QuotientKind kind, int m);

    /// Matrix of g -> -xi*g from (A/J)_{d-n-2} to (A/J)_{2d-n-2} (n >= 4)
    /// or (I/J)_{2d-4} (n = 2). xi must lie in I_d.
    ExactMatrix ivhs_differential(const Polynomial& xi);
    ExactMatrix ivhs_differential(const SparseVec& xi_coords);

    GenerationReport generation_check(QuotientKind kind, int m0);

    TorelliReport torelli_report();

    /// Complement basis of J_d inside I_d (representatives of (I/J)_d).
    const QuotientSpace& torelli_source();

    SparseVec vectorize(const Polynomial& p, int m) const;

private:
    int hodge_target_degree() const;
    QuotientKind hodge_target_kind() const;
    QuotientSpace make_quotient(QuotientKind kind, int m);

    const Hypersurface* h_;
    ElimOptions elim_;
    std::map<int, GradedPiece> j_cache_, i_cache_;
    std::map<int, EvaluationMapPiece> ev_cache_;
    std::map<std::pair<int, int>, QuotientSpace> quotient_cache_;
    std::optional<CertificateResult> certificate_;
};

}  // namespace jacring
