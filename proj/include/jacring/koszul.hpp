#pragma once

#include <vector>

#include "jacring/jacobian.hpp"
#include "jacring/polynomial.hpp"

namespace jacring {

/// The degree-m strand of the Koszul complex of an ordered family of
/// homogeneous generators of one common degree D. With v generators the
/// complex has positions 0..v; position p carries
/// Lambda^{v-p} G tensor (degree m - (v-p) D forms), so the last position is
/// the full space of degree-m forms.
struct KoszulSetup {
    std::vector<Polynomial> generators;
    int degree = 0;  // m

    static KoszulSetup partials_of(const Hypersurface& h, int m);
};

struct KoszulComplex {
    int degree = 0;
    int positions = 0;           // v + 1 terms
    std::vector<long> term_dims;
    /// differentials[p] maps position p to p+1 (shape dim_{p+1} x dim_p);
    /// exterior contraction with the usual alternating signs.
    std::vector<ExactMatrix> differentials;
};

KoszulComplex build_koszul(const KoszulSetup& setup);

/// Exact cohomology dimensions h^0 .. h^v of the strand.
std::vector<long> koszul_cohomology(const KoszulComplex& complex,
                                    const ElimOptions& opts = {});

/// Alternating sum of the term dimensions (equals the alternating sum of the
/// cohomology dimensions).
long koszul_euler_characteristic(const KoszulComplex& complex);

/// One verified line of the duality between top-minus-one Koszul cohomology
/// and the evaluation cokernel at the mirrored degree.
struct KoszulRow {
    int m = 0;
    std::vector<long> h;
    long ev_coker_at_dual = 0;  // coker of ev at degree socle - m
    bool ev_surjective_at_dual = false;
    bool below_top_vanishing = false;  // h^p = 0 for p <= n
    bool identity_holds = false;       // h^{n+1} == coker(ev_{socle-m})
    long dim_aj = 0;                   // independent (A/J)_m for the top check
    bool top_matches_quotient = false; // h^{n+2} == dim (A/J)_m
};

KoszulRow koszul_row(JacobianCalculator& calc, int m, const ElimOptions& opts = {});

/// Rows for m in [m_low, m_high]; whenever ev_{socle-m} is surjective the
/// corresponding h^{n+1} must vanish.
std::vector<KoszulRow> verify_le33(JacobianCalculator& calc, int m_low, int m_high);

}  // namespace jacring
