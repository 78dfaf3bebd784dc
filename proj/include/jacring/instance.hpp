#pragma once

#include <string>
#include <vector>

#include "jacring/local_singularity.hpp"
#include "jacring/polynomial.hpp"

namespace jacring {

struct InstanceOptions {
    int jet_order_max = 16;      // determinacy loop cutoff
    long column_budget = 200000; // largest allowed monomial basis
    bool modular_prepass = true;
};

/// A degree-d hypersurface in P^{n+1} together with its declared singular
/// points. Records are filled by analyze() and immutable afterwards.
class Hypersurface {
public:
    Hypersurface(int n, int d, Polynomial f, std::vector<AffinePoint> points,
                 std::vector<std::string> variable_names = {},
                 InstanceOptions options = {});

    int n() const { return n_; }
    int d() const { return d_; }
    int vars() const { return n_ + 2; }
    /// Socle degree of the Macaulay duality: (n+2)(d-2).
    int socle_degree() const { return (n_ + 2) * (d_ - 2); }
    const Polynomial& f() const { return f_; }
    const std::vector<AffinePoint>& points() const { return points_; }
    const std::vector<std::string>& variable_names() const { return names_; }
    const InstanceOptions& options() const { return options_; }

    bool analyzed() const { return analyzed_; }
    /// Classifies every declared point; throws on non-singular or non-ADE input.
    void analyze();
    const std::vector<SingularityRecord>& records() const;

    long total_tjurina() const;

private:
    int n_, d_;
    Polynomial f_;
    std::vector<AffinePoint> points_;
    std::vector<std::string> names_;
    InstanceOptions options_;
    std::vector<SingularityRecord> records_;
    bool analyzed_ = false;
};

}  // namespace jacring
