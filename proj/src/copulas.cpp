#include "relstandby/copulas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "relstandby/errors.hpp"

namespace relstandby {

namespace {

constexpr std::size_t kMaxDimension = 20;  // bounds the 2^d corner sweep

void checkDimension(std::size_t d) {
    if (d < 2 || d > kMaxDimension)
        throw std::invalid_argument("copula dimension must lie in [2, 20], got " +
                                    std::to_string(d));
}

void checkTheta(double theta) {
    if (std::isnan(theta) || theta < -1.0 || theta > 1.0)
        throw std::invalid_argument("FGM parameter must lie in [-1, 1]");
}

void checkUnitCube(std::span<const double> u, std::size_t d) {
    if (u.size() != d)
        throw std::invalid_argument("copula argument has length " +
                                    std::to_string(u.size()) + ", expected " +
                                    std::to_string(d));
    for (double x : u) {
        if (std::isnan(x) || x < 0.0 || x > 1.0)
            throw std::domain_error("copula argument outside [0,1]: " + std::to_string(x));
    }
}

MultilinearTerm constantTerm(std::size_t d) {
    MultilinearTerm t;
    t.coefficient = 1.0;
    t.componentFactors.assign(d - 1, FactorKind::One);
    t.standbyFactor = FactorKind::One;
    return t;
}

// Antiderivative of the factor on [0, u]: One -> u, OneMinus2U -> u(1-u).
double factorCdf(FactorKind k, double u) {
    return k == FactorKind::One ? u : u * (1.0 - u);
}

double factorDensity(FactorKind k, double u) {
    return k == FactorKind::One ? 1.0 : 1.0 - 2.0 * u;
}

}  // namespace

Copula Copula::independence(std::size_t d) {
    checkDimension(d);
    MultilinearDecomposition dec{d, {constantTerm(d)}};
    return Copula(CopulaFamily::Independence, std::move(dec), {});
}

Copula Copula::fgm4(double theta11, double theta12, double theta21,
                    double theta22, double theta31) {
    for (double th : {theta11, theta12, theta21, theta22, theta31}) checkTheta(th);
    MultilinearDecomposition dec;
    dec.dimension = 4;
    dec.terms.push_back(constantTerm(4));
    auto add = [&dec](double coeff, std::initializer_list<int> comps, bool standby) {
        if (coeff == 0.0) return;
        MultilinearTerm t;
        t.coefficient = coeff;
        t.componentFactors.assign(3, FactorKind::One);
        for (int i : comps) t.componentFactors[static_cast<std::size_t>(i)] = FactorKind::OneMinus2U;
        t.standbyFactor = standby ? FactorKind::OneMinus2U : FactorKind::One;
        dec.terms.push_back(std::move(t));
    };
    add(theta11, {0, 1}, false);
    add(theta11, {0, 2}, false);
    add(theta11, {1, 2}, false);
    add(theta12, {0}, true);
    add(theta12, {1}, true);
    add(theta12, {2}, true);
    add(theta21, {0, 1, 2}, false);
    add(theta22, {0, 1}, true);
    add(theta22, {0, 2}, true);
    add(theta22, {1, 2}, true);
    add(theta31, {0, 1, 2}, true);
    return Copula(CopulaFamily::Fgm4, std::move(dec),
                  {theta11, theta12, theta21, theta22, theta31});
}

Copula Copula::fgmPairwise(std::size_t d, double thetaCC, double thetaCS) {
    checkDimension(d);
    checkTheta(thetaCC);
    checkTheta(thetaCS);
    MultilinearDecomposition dec;
    dec.dimension = d;
    dec.terms.push_back(constantTerm(d));
    std::size_t nc = d - 1;
    if (thetaCC != 0.0) {
        for (std::size_t i = 0; i < nc; ++i) {
            for (std::size_t j = i + 1; j < nc; ++j) {
                MultilinearTerm t;
                t.coefficient = thetaCC;
                t.componentFactors.assign(nc, FactorKind::One);
                t.componentFactors[i] = FactorKind::OneMinus2U;
                t.componentFactors[j] = FactorKind::OneMinus2U;
                dec.terms.push_back(std::move(t));
            }
        }
    }
    if (thetaCS != 0.0) {
        for (std::size_t i = 0; i < nc; ++i) {
            MultilinearTerm t;
            t.coefficient = thetaCS;
            t.componentFactors.assign(nc, FactorKind::One);
            t.componentFactors[i] = FactorKind::OneMinus2U;
            t.standbyFactor = FactorKind::OneMinus2U;
            dec.terms.push_back(std::move(t));
        }
    }
    return Copula(CopulaFamily::FgmPairwise, std::move(dec), {thetaCC, thetaCS});
}

double Copula::cdf(std::span<const double> u) const {
    checkUnitCube(u, dimension());
    double total = 0.0;
    std::size_t nc = dimension() - 1;
    for (const auto& term : decomp_.terms) {
        double p = term.coefficient;
        for (std::size_t i = 0; i < nc; ++i) p *= factorCdf(term.componentFactors[i], u[i]);
        p *= factorCdf(term.standbyFactor, u[nc]);
        total += p;
    }
    return total;
}

double Copula::density(std::span<const double> u) const {
    checkUnitCube(u, dimension());
    double total = 0.0;
    std::size_t nc = dimension() - 1;
    for (const auto& term : decomp_.terms) {
        double p = term.coefficient;
        for (std::size_t i = 0; i < nc; ++i) p *= factorDensity(term.componentFactors[i], u[i]);
        p *= factorDensity(term.standbyFactor, u[nc]);
        total += p;
    }
    return total;
}

double Copula::diagonalCdf(int lowCount, double uLow, int highCount, double uHigh) const {
    std::size_t nc = dimension() - 1;
    if (lowCount < 0 || highCount < 0 ||
        static_cast<std::size_t>(lowCount) + static_cast<std::size_t>(highCount) > nc)
        throw std::invalid_argument("diagonalCdf block sizes exceed component count");
    std::vector<double> u(dimension(), 1.0);
    for (int i = 0; i < lowCount; ++i) u[static_cast<std::size_t>(i)] = uLow;
    for (int i = 0; i < highCount; ++i) u[static_cast<std::size_t>(lowCount + i)] = uHigh;
    return cdf(u);
}

ValidityReport Copula::validate() const {
    std::size_t d = dimension();
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
        double val = 0.0;
        for (const auto& term : decomp_.terms) {
            double p = term.coefficient;
            for (std::size_t i = 0; i < d - 1; ++i) {
                if (term.componentFactors[i] == FactorKind::OneMinus2U &&
                    (corner >> i) & 1u)
                    p = -p;
            }
            if (term.standbyFactor == FactorKind::OneMinus2U && (corner >> (d - 1)) & 1u)
                p = -p;
            val += p;
        }
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    return ValidityReport{lo, hi, lo >= 0.0};
}

}  // namespace relstandby
