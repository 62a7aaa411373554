#pragma once

#include <utility>
#include <vector>

namespace relstandby {

enum class MarginalFamily { Exponential, Lomax, Weibull, Tabulated };

/// A univariate lifetime distribution on [0, inf).
///
/// Closed-form families carry exact cdf/pdf/survival/quantile. The tabulated
/// family interpolates a monotone piecewise-linear CDF and has no density.
class Marginal {
public:
    static Marginal exponential(double rate);
    static Marginal lomax(double shape, double scale);
    static Marginal weibull(double shape, double scale);
    /// Grid of (z, F(z)) pairs; must start at F=0 and be strictly increasing
    /// in both coordinates, with the last F value reaching 1.
    static Marginal tabulated(std::vector<std::pair<double, double>> grid);

    MarginalFamily family() const { return family_; }
    double shape() const { return shape_; }
    double scale() const { return scale_; }

    double cdf(double z) const;
    double pdf(double z) const;  // throws UnsupportedOperation for Tabulated
    double survival(double z) const { return 1.0 - cdf(z); }
    /// inf{z : F(z) >= p}, p in [0, 1).
    double quantile(double p) const;

private:
    Marginal(MarginalFamily fam, double shape, double scale)
        : family_(fam), shape_(shape), scale_(scale) {}
    explicit Marginal(std::vector<std::pair<double, double>> grid);

    MarginalFamily family_;
    double shape_ = 0.0;  // rate for Exponential, shape for Lomax/Weibull
    double scale_ = 1.0;
    std::vector<std::pair<double, double>> grid_;
};

}  // namespace relstandby
