#include "relstandby/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relstandby/errors.hpp"

namespace relstandby {

namespace {
void requireNonnegativeTime(double z) {
    if (std::isnan(z) || z < 0.0)
        throw std::domain_error("time must be nonnegative, got " + std::to_string(z));
}
}  // namespace

Marginal Marginal::exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential rate must be > 0");
    return Marginal(MarginalFamily::Exponential, rate, 1.0);
}

Marginal Marginal::lomax(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("lomax shape and scale must be > 0");
    return Marginal(MarginalFamily::Lomax, shape, scale);
}

Marginal Marginal::weibull(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("weibull shape and scale must be > 0");
    return Marginal(MarginalFamily::Weibull, shape, scale);
}

Marginal Marginal::tabulated(std::vector<std::pair<double, double>> grid) {
    return Marginal(std::move(grid));
}

Marginal::Marginal(std::vector<std::pair<double, double>> grid)
    : family_(MarginalFamily::Tabulated), grid_(std::move(grid)) {
    if (grid_.size() < 2) throw std::invalid_argument("tabulated grid needs >= 2 points");
    if (grid_.front().second != 0.0)
        throw std::invalid_argument("tabulated grid must start at F=0");
    if (grid_.back().second < 1.0 - 1e-12)
        throw std::invalid_argument("tabulated grid must reach F=1");
    for (std::size_t i = 1; i < grid_.size(); ++i) {
        if (grid_[i].first <= grid_[i - 1].first || grid_[i].second < grid_[i - 1].second)
            throw std::invalid_argument("tabulated grid must be monotone");
    }
}

double Marginal::cdf(double z) const {
    requireNonnegativeTime(z);
    switch (family_) {
        case MarginalFamily::Exponential:
            return -std::expm1(-shape_ * z);
        case MarginalFamily::Lomax:
            return 1.0 - std::pow(1.0 + z / scale_, -shape_);
        case MarginalFamily::Weibull:
            return -std::expm1(-std::pow(z / scale_, shape_));
        case MarginalFamily::Tabulated: {
            if (z <= grid_.front().first) return grid_.front().second;
            if (z >= grid_.back().first) return 1.0;
            auto it = std::upper_bound(
                grid_.begin(), grid_.end(), z,
                [](double v, const std::pair<double, double>& p) { return v < p.first; });
            auto lo = *(it - 1);
            auto hi = *it;
            double w = (z - lo.first) / (hi.first - lo.first);
            return lo.second + w * (hi.second - lo.second);
        }
    }
    return 0.0;
}

double Marginal::pdf(double z) const {
    requireNonnegativeTime(z);
    switch (family_) {
        case MarginalFamily::Exponential:
            return shape_ * std::exp(-shape_ * z);
        case MarginalFamily::Lomax:
            return (shape_ / scale_) * std::pow(1.0 + z / scale_, -shape_ - 1.0);
        case MarginalFamily::Weibull: {
            if (z == 0.0) return shape_ > 1.0 ? 0.0 : (shape_ == 1.0 ? 1.0 / scale_ : HUGE_VAL);
            double x = z / scale_;
            return (shape_ / scale_) * std::pow(x, shape_ - 1.0) * std::exp(-std::pow(x, shape_));
        }
        case MarginalFamily::Tabulated:
            throw UnsupportedOperation("tabulated marginal has no density");
    }
    return 0.0;
}

double Marginal::quantile(double p) const {
    if (std::isnan(p) || p < 0.0 || p >= 1.0)
        throw std::domain_error("quantile probability must lie in [0,1)");
    switch (family_) {
        case MarginalFamily::Exponential:
            return -std::log1p(-p) / shape_;
        case MarginalFamily::Lomax:
            return scale_ * (std::pow(1.0 - p, -1.0 / shape_) - 1.0);
        case MarginalFamily::Weibull:
            return scale_ * std::pow(-std::log1p(-p), 1.0 / shape_);
        case MarginalFamily::Tabulated: {
            if (p <= grid_.front().second) return grid_.front().first;
            auto it = std::lower_bound(
                grid_.begin(), grid_.end(), p,
                [](const std::pair<double, double>& g, double v) { return g.second < v; });
            auto hi = *it;
            auto lo = *(it - 1);
            if (hi.second == lo.second) return lo.first;
            double w = (p - lo.second) / (hi.second - lo.second);
            return lo.first + w * (hi.first - lo.first);
        }
    }
    return 0.0;
}

}  // namespace relstandby
