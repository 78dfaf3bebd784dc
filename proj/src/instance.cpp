#include "jacring/instance.hpp"

#include <stdexcept>

#include "jacring/errors.hpp"

namespace jacring {

Hypersurface::Hypersurface(int n, int d, Polynomial f, std::vector<AffinePoint> points,
                           std::vector<std::string> variable_names, InstanceOptions options)
    : n_(n), d_(d), f_(std::move(f)), points_(std::move(points)),
      names_(std::move(variable_names)), options_(options) {
    if (n_ < 2) throw ParseError("hypersurface dimension n must be >= 2");
    if (d_ < 2) throw ParseError("degree d must be >= 2");
    if (f_.vars() != n_ + 2)
        throw ParseError("f must have n+2 = " + std::to_string(n_ + 2) + " variables");
    if (f_.is_zero()) throw ParseError("f must be nonzero");
    f_.require_homogeneous(d_);
    if (names_.empty())
        for (int i = 0; i < vars(); ++i) names_.push_back("x" + std::to_string(i));
    if (static_cast<int>(names_.size()) != vars())
        throw ParseError("variable name count mismatch");
    for (const auto& p : points_)
        if (p.ambient_vars() != vars())
            throw ParseError("singular point dimension mismatch");
}

void Hypersurface::analyze() {
    if (analyzed_) return;
    records_.clear();
    records_.reserve(points_.size());
    for (const auto& p : points_) {
        if (!verify_singular(f_, p))
            throw ParseError("declared point is not singular: " + p.to_string());
        records_.push_back(classify_ade(f_, p, options_.jet_order_max));
    }
    analyzed_ = true;
}

const std::vector<SingularityRecord>& Hypersurface::records() const {
    if (!analyzed_) throw std::logic_error("instance not analyzed yet");
    return records_;
}

long Hypersurface::total_tjurina() const {
    long tau = 0;
    for (const auto& r : records()) tau += r.tjurina;
    return tau;
}

}  // namespace jacring
