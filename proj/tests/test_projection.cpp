#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "vsrq/projection.hpp"

using namespace vsrq::projection;

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Independent re-derivation of the projection index: spread times the
/// windowed local-density sum over all ordered pairs (diagonal included).
double objectiveOracle(const SampleMatrix& data, const std::vector<double>& l,
                       double windowFactor) {
    std::size_t x = data.samples();
    std::vector<double> phi(x, 0.0);
    for (std::size_t i = 0; i < x; ++i)
        for (std::size_t j = 0; j < data.features(); ++j)
            phi[i] += l[j] * data.at(i, j);

    double mean = 0.0;
    for (double p : phi) mean += p;
    mean /= static_cast<double>(x);
    double var = 0.0;
    for (double p : phi) var += (p - mean) * (p - mean);
    double a = std::sqrt(var / (static_cast<double>(x) - 1.0));

    double b = windowFactor * a;
    double density = 0.0;
    for (std::size_t i = 0; i < x; ++i)
        for (std::size_t k = 0; k < x; ++k) {
            double gap = b - std::abs(phi[i] - phi[k]);
            if (gap >= 0.0) density += gap;
        }
    return a * density;
}

SampleMatrix cornersSquare() {
    SampleMatrix data(4, 2);
    data.at(0, 0) = 0.0; data.at(0, 1) = 0.0;
    data.at(1, 0) = 1.0; data.at(1, 1) = 0.0;
    data.at(2, 0) = 0.0; data.at(2, 1) = 1.0;
    data.at(3, 0) = 1.0; data.at(3, 1) = 1.0;
    return data;
}

SampleMatrix randomData(std::size_t samples, std::size_t features,
                        std::uint64_t seed) {
    SampleMatrix data(samples, features);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (std::size_t i = 0; i < samples; ++i)
        for (std::size_t j = 0; j < features; ++j) data.at(i, j) = uni(rng);
    return data;
}

}  // namespace

TEST_CASE("unit step is closed at zero") {
    CHECK(unitStep(0.0) == 1.0);
    CHECK(unitStep(5.0) == 1.0);
    CHECK(unitStep(1e-300) == 1.0);
    CHECK(unitStep(-1.0) == 0.0);
    CHECK(unitStep(-1e-300) == 0.0);
}

TEST_CASE("direction vectors live on the non-negative unit sphere") {
    CHECK_NOTHROW(DirectionVector({1.0}));
    CHECK_NOTHROW(DirectionVector({0.0, 1.0}));
    CHECK_NOTHROW(DirectionVector({0.6, 0.8}));

    CHECK_THROWS_AS(DirectionVector(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(DirectionVector({-0.6, 0.8}), std::invalid_argument);
    CHECK_THROWS_AS(DirectionVector({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(DirectionVector({std::nan(""), 1.0}), std::invalid_argument);
}

TEST_CASE("normalization clips negatives and rescales") {
    DirectionVector d = DirectionVector::normalized({3.0, 4.0});
    CHECK(d.at(0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(d.at(1) == doctest::Approx(0.8).epsilon(1e-12));

    DirectionVector clipped = DirectionVector::normalized({-2.0, 3.0, -1.0, 4.0});
    CHECK(clipped.at(0) == 0.0);
    CHECK(clipped.at(1) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(clipped.at(2) == 0.0);
    CHECK(clipped.at(3) == doctest::Approx(0.8).epsilon(1e-12));

    CHECK_THROWS_AS(DirectionVector::normalized({-1.0, -2.0}), std::invalid_argument);
    CHECK_THROWS_AS(DirectionVector::normalized({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(DirectionVector::normalized(std::vector<double>{}),
                    std::invalid_argument);
}

TEST_CASE("projection is the direction-weighted feature sum") {
    SampleMatrix data = cornersSquare();

    SUBCASE("an axis direction selects that feature column") {
        std::vector<double> phi = project(data, DirectionVector({0.0, 1.0}));
        REQUIRE(phi.size() == 4);
        CHECK(phi[0] == 0.0);
        CHECK(phi[1] == 0.0);
        CHECK(phi[2] == 1.0);
        CHECK(phi[3] == 1.0);
    }
    SUBCASE("zero samples project to zero") {
        SampleMatrix zeros(3, 2);
        std::vector<double> phi = project(zeros, DirectionVector({0.6, 0.8}));
        for (double p : phi) CHECK(p == 0.0);
    }
    SUBCASE("general data matches a direct dot product") {
        SampleMatrix r = randomData(5, 3, 11);
        DirectionVector d = DirectionVector::normalized({1.0, 2.0, 2.0});
        std::vector<double> phi = project(r, d);
        for (std::size_t i = 0; i < 5; ++i) {
            double expected = 0.0;
            for (std::size_t j = 0; j < 3; ++j) expected += d.at(j) * r.at(i, j);
            CHECK(phi[i] == doctest::Approx(expected).epsilon(1e-15));
        }
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(project(data, DirectionVector({1.0})), std::invalid_argument);
    }
}

TEST_CASE("projection index combines spread and local density") {
    SUBCASE("identical samples have no spread and zero index") {
        SampleMatrix flat(4, 2);
        for (std::size_t i = 0; i < 4; ++i) {
            flat.at(i, 0) = 0.3;
            flat.at(i, 1) = 0.7;
        }
        CHECK(ppObjective(flat, DirectionVector({0.6, 0.8}), 0.1) == 0.0);
    }
    SUBCASE("fewer than two samples is undefined") {
        SampleMatrix one(1, 2);
        CHECK_THROWS_AS(ppObjective(one, DirectionVector({0.6, 0.8}), 0.1),
                        std::invalid_argument);
    }
    SUBCASE("negative window factor is rejected") {
        CHECK_THROWS_AS(ppObjective(cornersSquare(), DirectionVector({0.6, 0.8}), -0.1),
                        std::invalid_argument);
    }
    SUBCASE("hand-computed value on the unit square corners") {
        // phi = (0, 0.6, 0.8, 1.4): variance 1/3, so A = sqrt(1/3) and
        // b = A/10. All off-diagonal gaps exceed b, leaving the four diagonal
        // terms: B = 4b, objective = 0.4 * A^2 = 0.4/3.
        double v = ppObjective(cornersSquare(), DirectionVector({0.6, 0.8}), 0.1);
        CHECK(v == doctest::Approx(0.4 / 3.0).epsilon(1e-12));
    }
    SUBCASE("matches the pairwise oracle on random data") {
        SampleMatrix data = randomData(12, 2, 77);
        DirectionVector d({0.6, 0.8});
        CHECK(ppObjective(data, d, 0.1) ==
              doctest::Approx(objectiveOracle(data, d.components(), 0.1))
                  .epsilon(1e-12));
    }
    SUBCASE("sample order does not matter") {
        SampleMatrix data = randomData(8, 2, 5);
        SampleMatrix reversed(8, 2);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                reversed.at(i, j) = data.at(7 - i, j);
        DirectionVector d({0.6, 0.8});
        CHECK(ppObjective(data, d, 0.1) ==
              doctest::Approx(ppObjective(reversed, d, 0.1)).epsilon(1e-12));
    }
}

TEST_CASE("direction search finds near-optimal directions") {
    SUBCASE("one feature returns the only feasible direction") {
        SampleMatrix data(5, 1);
        for (std::size_t i = 0; i < 5; ++i) data.at(i, 0) = 0.2 * static_cast<double>(i);
        PpResult r = optimizeDirection(data, PpParams{});
        REQUIRE(r.direction.size() == 1);
        CHECK(r.direction.at(0) == 1.0);
        REQUIRE(r.weights.size() == 1);
        CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.objective ==
              doctest::Approx(ppObjective(data, r.direction, 0.1)).epsilon(1e-12));
    }

    SUBCASE("a constant feature gets almost no weight") {
        SampleMatrix data(20, 2);
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (std::size_t i = 0; i < 20; ++i) {
            data.at(i, 0) = uni(rng);
            data.at(i, 1) = 0.5;
        }
        PpResult r = optimizeDirection(data, PpParams{});
        CHECK(r.weights[0] > 0.9);
    }

    SUBCASE("search is within 1% of a fine angular grid in two dimensions") {
        SampleMatrix data = randomData(30, 2, 20240612);
        PpParams params;
        PpResult r = optimizeDirection(data, params);

        double best = 0.0;
        for (int deg = 0; deg <= 90; ++deg) {
            double theta = static_cast<double>(deg) * kPi / 180.0;
            DirectionVector d = DirectionVector::normalized(
                {std::cos(theta), std::sin(theta)});
            best = std::max(best, ppObjective(data, d, params.windowFactor));
        }
        CHECK(r.objective >= 0.99 * best);
    }

    SUBCASE("weights are squared components, non-negative, summing to one") {
        SampleMatrix data = randomData(15, 4, 9);
        PpResult r = optimizeDirection(data, PpParams{});
        REQUIRE(r.weights.size() == 4);
        double sum = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(r.weights[j] >= 0.0);
            CHECK(r.weights[j] ==
                  doctest::Approx(r.direction.at(j) * r.direction.at(j)).epsilon(1e-12));
            sum += r.weights[j];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.projections.size() == 15);
        CHECK(r.objective ==
              doctest::Approx(ppObjective(data, r.direction, 0.1)).epsilon(1e-12));
    }

    SUBCASE("identical seeds give identical results") {
        SampleMatrix data = randomData(25, 3, 31);
        PpParams params;
        params.seed = 777;
        PpResult a = optimizeDirection(data, params);
        PpResult b = optimizeDirection(data, params);
        CHECK(a.objective == b.objective);
        REQUIRE(a.direction.size() == b.direction.size());
        for (std::size_t j = 0; j < a.direction.size(); ++j)
            CHECK(a.direction.at(j) == b.direction.at(j));
        REQUIRE(a.projections.size() == b.projections.size());
        for (std::size_t i = 0; i < a.projections.size(); ++i)
            CHECK(a.projections[i] == b.projections[i]);
    }
}
