#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "relstandby/system.hpp"

using namespace relstandby;

namespace {

SystemSpec baseSpec() {
    return SystemSpec{3, 2, Marginal::exponential(2.0), Marginal::exponential(2.0),
                      Copula::fgm4(0.1, 0.1, 0.1, 0.1, 0.1)};
}

}  // namespace

TEST_CASE("reference configuration validates") {
    auto report = validate_system(baseSpec());
    CHECK(report.valid);
    CHECK(report.copulaReport.isProperDensity);
}

TEST_CASE("k out of range is rejected") {
    auto spec = baseSpec();
    spec.k = 4;
    auto report = validate_system(spec);
    CHECK(!report.valid);
    CHECK_THROWS_AS(require_valid(spec), std::invalid_argument);
}

TEST_CASE("copula dimension mismatch is rejected") {
    auto spec = baseSpec();
    spec.n = 4;
    auto report = validate_system(spec);
    CHECK(!report.valid);
}

TEST_CASE("lifetime rule for k >= 2") {
    auto spec = baseSpec();
    std::vector<double> z{1.0, 2.0, 3.0};

    auto draw = lifetime_from_draws(spec, z, 0.5);
    CHECK(draw.systemLifetime == 2.5);
    CHECK(draw.kOutOfNFailure == 2.0);
    CHECK(draw.firstFailure == 1.0);

    draw = lifetime_from_draws(spec, z, 5.0);
    CHECK(draw.systemLifetime == 3.0);
}

TEST_CASE("lifetime rule for k = 1 adds the standby to the last failure") {
    auto spec = baseSpec();
    spec.k = 1;
    auto draw = lifetime_from_draws(spec, std::vector<double>{1.0, 2.0, 3.0}, 0.5);
    CHECK(draw.systemLifetime == 3.5);
    CHECK(draw.kOutOfNFailure == 3.0);
}

TEST_CASE("negative lifetimes are rejected") {
    auto spec = baseSpec();
    CHECK_THROWS_AS(lifetime_from_draws(spec, std::vector<double>{-1.0, 2.0, 3.0}, 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(lifetime_from_draws(spec, std::vector<double>{1.0, 2.0, 3.0}, -0.5),
                    std::domain_error);
}

TEST_CASE("lifetime bounds and permutation invariance") {
    auto spec = baseSpec();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> z{unif(rng), unif(rng), unif(rng)};
        double standby = unif(rng);
        auto draw = lifetime_from_draws(spec, z, standby);
        CHECK(draw.systemLifetime >= draw.kOutOfNFailure);
        CHECK(draw.systemLifetime <= draw.kOutOfNFailure + standby);
        auto perm = z;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto draw2 = lifetime_from_draws(spec, perm, standby);
        CHECK(draw.systemLifetime == draw2.systemLifetime);
        CHECK(draw.kOutOfNFailure == draw2.kOutOfNFailure);
        CHECK(draw.firstFailure == draw2.firstFailure);
    }
}
