#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace relstandby {

enum class CopulaFamily { Independence, Fgm4, FgmPairwise };

enum class FactorKind { One, OneMinus2U };

/// One product term of a multilinear copula density:
///   coefficient * prod_i factor_i(u_i) * factor(v)
/// where factor(x) is 1 or (1 - 2x). The last slot is the standby margin.
struct MultilinearTerm {
    double coefficient = 0.0;
    std::vector<FactorKind> componentFactors;  // d-1 entries
    FactorKind standbyFactor = FactorKind::One;
};

struct MultilinearDecomposition {
    std::size_t dimension = 0;
    std::vector<MultilinearTerm> terms;
};

struct ValidityReport {
    double minCornerDensity = 0.0;
    double maxCornerDensity = 0.0;
    bool isProperDensity = false;
};

/// A d-dimensional copula whose density is multilinear in the variables
/// (1 - 2u_i). Covers independence, the four-dimensional FGM family, and a
/// pairwise FGM construction for general dimension. The first d-1 margins
/// are the exchangeable components; the last is the standby.
class Copula {
public:
    static Copula independence(std::size_t d);
    static Copula fgm4(double theta11, double theta12, double theta21,
                       double theta22, double theta31);
    static Copula fgmPairwise(std::size_t d, double thetaCC, double thetaCS);

    CopulaFamily family() const { return family_; }
    std::size_t dimension() const { return decomp_.dimension; }
    std::span<const double> parameters() const { return params_; }

    double cdf(std::span<const double> u) const;
    double density(std::span<const double> u) const;

    /// CDF with lowCount leading component slots at uLow, the next highCount
    /// at uHigh, remaining components and the standby at 1. By exchangeability
    /// of the component block the slot placement does not matter.
    double diagonalCdf(int lowCount, double uLow, int highCount, double uHigh) const;

    /// Exact extrema of the density over the unit cube (corner enumeration;
    /// valid because the density is multilinear).
    ValidityReport validate() const;

    const MultilinearDecomposition& decomposition() const { return decomp_; }

private:
    Copula(CopulaFamily fam, MultilinearDecomposition decomp, std::vector<double> params)
        : family_(fam), decomp_(std::move(decomp)), params_(std::move(params)) {}

    CopulaFamily family_;
    MultilinearDecomposition decomp_;
    std::vector<double> params_;
};

}  // namespace relstandby
