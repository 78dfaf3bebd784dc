#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacring/exact_matrix.hpp"

namespace jacring {

struct ElimOptions {
    /// Rank queries may first run a single-prime modular elimination; a
    /// full-rank modular answer is already exact and short-circuits the
    /// fraction-free pass. Kernels and echelon bases are always exact.
    bool modular_prepass = true;
};

/// Integer sparse row: (column, value), sorted by column, values nonzero.
struct IntRow {
    std::vector<std::pair<std::int32_t, Integer>> e;
    bool empty() const { return e.empty(); }
    std::int32_t lead() const { return e.front().first; }
};

std::vector<IntRow> to_int_rows(const ExactMatrix& m);

/// Canonical reduced row echelon form over Q, stored with primitive integer
/// rows (content 1, positive pivot). Unique for a given row space.
struct RrefForm {
    long cols = 0;
    std::vector<IntRow> rows;             // sorted by pivot column
    std::vector<std::int32_t> pivot_cols; // ascending, parallel to rows
    long rank() const { return static_cast<long>(rows.size()); }
    std::vector<std::int32_t> free_cols() const;
    ExactMatrix to_matrix() const;
};

/// Exact fraction-free elimination (integer row combinations with content
/// stripping); pivot choice favours sparse rows, columns are processed in
/// the global monomial order so the result is reproducible.
RrefForm rref(const ExactMatrix& m);
RrefForm rref_rows(std::vector<IntRow> rows, long cols);

long rank(const ExactMatrix& m, const ElimOptions& opts = {});

/// Rows span the right kernel {x : Mx = 0}; one row per free column.
ExactMatrix kernel_basis(const ExactMatrix& m);

/// Canonical basis of the span of the rows of m (the image of the row span).
ExactMatrix image_basis(const ExactMatrix& m);

// --- modular pre-pass -------------------------------------------------------

std::uint64_t random_prime_62();
/// Rank of m reduced mod p; a lower bound for the exact rank.
long modular_rank(const ExactMatrix& m, std::uint64_t p);

/// Deterministic process-wide RNG used for prime selection; reseedable in tests.
void reseed_elimination_rng(std::uint64_t seed);

// --- reduction against a fixed subspace --------------------------------------

/// Reduction modulo a row space presented in RREF. Remainders are supported
/// on the free columns, so remainder == 0 iff the vector lies in the span.
class SubspaceReducer {
public:
    SubspaceReducer() = default;
    explicit SubspaceReducer(RrefForm form);

    /// v minus the unique combination of basis rows killing all pivot columns.
    /// When coeffs is non-null it receives that combination, one coefficient
    /// per basis row.
    SparseVec reduce(const SparseVec& v, std::vector<Rational>* coeffs = nullptr) const;
    bool contains(const SparseVec& v) const;

    const RrefForm& form() const { return form_; }
    long cols() const { return form_.cols; }

private:
    RrefForm form_;
};

}  // namespace jacring
