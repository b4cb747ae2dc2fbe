#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "vsrq/core.hpp"

using namespace vsrq::core;

namespace {

/// The five overall score bands with clean seams, matching the shipped
/// classification thresholds.
BandTable overallBands() {
    return BandTable::fromBands({{BandLabel::Normal, 0.0, 0.264},
                                 {BandLabel::Slight, 0.264, 0.506},
                                 {BandLabel::SlightlySerious, 0.506, 0.758},
                                 {BandLabel::Serious, 0.758, 0.903},
                                 {BandLabel::ExtremelySerious, 0.903, 1.0}});
}

/// The first-index band table from the shipped defaults.
BandTable ecrBands() {
    return BandTable::fromBands({{BandLabel::Normal, 0.0, 0.2258343},
                                 {BandLabel::Slight, 0.2258343, 0.3484771},
                                 {BandLabel::SlightlySerious, 0.3484771, 0.4962365},
                                 {BandLabel::Serious, 0.4962365, 0.6103646},
                                 {BandLabel::ExtremelySerious, 0.6103646, 1.0}});
}

}  // namespace

TEST_CASE("interval construction and accessors") {
    Interval zero;
    CHECK(zero.lo() == 0.0);
    CHECK(zero.hi() == 0.0);

    Interval v(0.25, 0.75);
    CHECK(v.lo() == 0.25);
    CHECK(v.hi() == 0.75);
    CHECK(v.midpoint() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v.width() == doctest::Approx(0.5).epsilon(1e-15));

    Interval point(0.3, 0.3);
    CHECK(point.width() == 0.0);

    CHECK_THROWS_AS(Interval(0.8, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(Interval(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.0, std::nan("")), std::invalid_argument);
}

TEST_CASE("interval membership, containment, and overlap") {
    Interval v(0.2, 0.6);
    CHECK(v.contains(0.2));
    CHECK(v.contains(0.6));
    CHECK(v.contains(0.4));
    CHECK_FALSE(v.contains(0.1999));
    CHECK_FALSE(v.contains(0.6001));

    CHECK(v.contains(Interval(0.3, 0.5)));
    CHECK(v.contains(Interval(0.2, 0.6)));
    CHECK_FALSE(v.contains(Interval(0.1, 0.5)));
    CHECK_FALSE(v.contains(Interval(0.3, 0.7)));

    CHECK(v.overlaps(Interval(0.5, 0.9)));
    CHECK(v.overlaps(Interval(0.6, 0.9)));  // shared endpoint
    CHECK_FALSE(v.overlaps(Interval(0.61, 0.9)));
}

TEST_CASE("interval addition adds endpoints") {
    Interval sum = intervalAdd(Interval(0.1, 0.2), Interval(0.3, 0.4));
    CHECK(sum.lo() == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(sum.hi() == doctest::Approx(0.6).epsilon(1e-15));

    // Adding the zero interval changes nothing.
    Interval v(0.25, 0.8);
    CHECK(intervalAdd(v, Interval()) == v);
}

TEST_CASE("interval scaling scales endpoints and rejects negative factors") {
    Interval scaled = intervalScale(Interval(0.2948, 0.3702), 0.5);
    CHECK(scaled.lo() == doctest::Approx(0.1474).epsilon(1e-12));
    CHECK(scaled.hi() == doctest::Approx(0.1851).epsilon(1e-12));

    CHECK(intervalScale(Interval(0.3, 0.9), 0.0) == Interval(0.0, 0.0));
    CHECK(intervalScale(Interval(0.3, 0.9), 1.0) == Interval(0.3, 0.9));
    CHECK_THROWS_AS(intervalScale(Interval(0.1, 0.2), -0.5), std::invalid_argument);
}

TEST_CASE("non-negative interval product multiplies endpoints") {
    CHECK(intervalMulNonNegative(Interval(1.0, 2.0), Interval(3.0, 4.0)) ==
          Interval(3.0, 8.0));
    CHECK(intervalMulNonNegative(Interval(0.0, 0.5), Interval(0.2, 0.4)) ==
          Interval(0.0, 0.2));
    CHECK_THROWS_AS(intervalMulNonNegative(Interval(-0.5, 1.0), Interval(0.0, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(intervalMulNonNegative(Interval(0.0, 1.0), Interval(-2.0, -1.0)),
                    std::invalid_argument);
}

TEST_CASE("interval clamp pulls endpoints into the bound") {
    Interval unit(0.0, 1.0);
    CHECK(intervalClamp(Interval(-0.5, 1.5), unit) == Interval(0.0, 1.0));
    CHECK(intervalClamp(Interval(0.2, 0.4), unit) == Interval(0.2, 0.4));
    CHECK(intervalClamp(Interval(1.2, 1.4), unit) == Interval(1.0, 1.0));
    CHECK(intervalClamp(Interval(-3.0, -2.0), unit) == Interval(0.0, 0.0));
}

TEST_CASE("interval add and scale match the endpoint-enumeration oracle") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    std::uniform_real_distribution<double> factor(0.0, 5.0);

    for (int i = 0; i < 1000; ++i) {
        double a1 = value(rng), a2 = value(rng);
        double b1 = value(rng), b2 = value(rng);
        Interval a(std::min(a1, a2), std::max(a1, a2));
        Interval b(std::min(b1, b2), std::max(b1, b2));

        // Oracle: evaluate the operation on every endpoint pair and take
        // the min/max of the results.
        Interval sum = intervalAdd(a, b);
        double sums[] = {a.lo() + b.lo(), a.lo() + b.hi(), a.hi() + b.lo(),
                         a.hi() + b.hi()};
        CHECK(sum.lo() == *std::min_element(sums, sums + 4));
        CHECK(sum.hi() == *std::max_element(sums, sums + 4));

        double s = factor(rng);
        Interval scaled = intervalScale(a, s);
        double prods[] = {s * a.lo(), s * a.hi()};
        CHECK(scaled.lo() == std::min(prods[0], prods[1]));
        CHECK(scaled.hi() == std::max(prods[0], prods[1]));
    }
}

TEST_CASE("interval operations preserve containment") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        // Build an outer interval and a nested inner one.
        double lo = unit(rng), hi = lo + unit(rng);
        Interval outer(lo, hi);
        double ilo = lo + (hi - lo) * 0.25 * unit(rng);
        double ihi = hi - (hi - lo) * 0.25 * unit(rng);
        Interval inner(std::min(ilo, ihi), std::max(ilo, ihi));
        REQUIRE(outer.contains(inner));

        Interval shift(0.1, 0.3);
        CHECK(intervalAdd(outer, shift).contains(intervalAdd(inner, shift)));
        double s = 2.0 * unit(rng);
        CHECK(intervalScale(outer, s).contains(intervalScale(inner, s)));
    }
}

TEST_CASE("indicator taxonomy: groups, sizes, and canonical order") {
    CHECK(allIndices().size() == kIndexCount);
    CHECK(allSubs().size() == kSubCount);
    CHECK(subsOf(Index::ECR).size() == 8);
    CHECK(subsOf(Index::VCR).size() == 4);
    CHECK(subsOf(Index::VCCR).size() == 3);
    CHECK(subsOf(Index::VHIR).size() == 3);

    // Every sub belongs to exactly the group that lists it.
    for (Index index : allIndices())
        for (Sub sub : subsOf(index)) CHECK(indexOf(sub) == index);

    // The flat enumeration is the groups in order.
    std::vector<Sub> collected;
    for (Index index : allIndices())
        for (Sub sub : subsOf(index)) collected.push_back(sub);
    std::vector<Sub> flat(allSubs().begin(), allSubs().end());
    CHECK(collected == flat);

    CHECK(indexOf(Sub::EMCR) == Index::ECR);
    CHECK(indexOf(Sub::IVCR) == Index::VCR);
    CHECK(indexOf(Sub::CCM) == Index::VCCR);
    CHECK(indexOf(Sub::HPIS) == Index::VHIR);
}

TEST_CASE("names round-trip through the lookup functions") {
    for (Index index : allIndices()) {
        auto back = indexFromName(name(index));
        REQUIRE(back.has_value());
        CHECK(*back == index);
    }
    for (Sub sub : allSubs()) {
        auto back = subFromName(name(sub));
        REQUIRE(back.has_value());
        CHECK(*back == sub);
    }
    CHECK_FALSE(indexFromName("NOPE").has_value());
    CHECK_FALSE(subFromName("NOPE").has_value());
    CHECK(name(Index::ECR) == "ECR");
    CHECK(name(Sub::HPSF) == "HPSF");
}

TEST_CASE("indicator ids derive their group and print as paths") {
    IndicatorId index(Index::VCR);
    CHECK_FALSE(index.sub.has_value());
    CHECK(index.toString() == "VCR");

    IndicatorId sub(Sub::IVCR);
    CHECK(sub.index == Index::VCR);
    CHECK(sub.toString() == "VCR/IVCR");

    CHECK(IndicatorId(Index::VCR, Sub::IVCR) == sub);
    CHECK_THROWS_AS(IndicatorId(Index::ECR, Sub::IVCR), std::invalid_argument);
}

TEST_CASE("band label and state names round-trip") {
    CHECK(name(BandLabel::Normal) == "Normal");
    CHECK(name(BandLabel::ExtremelySerious) == "ExtremelySerious");
    for (auto label : {BandLabel::Normal, BandLabel::Slight, BandLabel::SlightlySerious,
                       BandLabel::Serious, BandLabel::ExtremelySerious}) {
        auto back = bandLabelFromName(name(label));
        REQUIRE(back.has_value());
        CHECK(*back == label);
    }
    CHECK_FALSE(bandLabelFromName("Sorta").has_value());

    CHECK(name(VehicleState::Steady) == "Steady");
    CHECK(name(VehicleState::Critical) == "Critical");
    CHECK(name(VehicleState::Dangerous) == "Dangerous");

    CHECK(name(Orientation::Cost) == "cost");
    CHECK(name(Orientation::Benefit) == "benefit");
    CHECK(orientationFromName("cost") == Orientation::Cost);
    CHECK(orientationFromName("benefit") == Orientation::Benefit);
    CHECK_FALSE(orientationFromName("speed").has_value());
}

TEST_CASE("strict band table construction validates the partition") {
    CHECK_NOTHROW(overallBands());

    // Too few bands.
    CHECK_THROWS_AS(BandTable::fromBands({{BandLabel::Normal, 0.0, 0.5},
                                          {BandLabel::Slight, 0.5, 1.0}}),
                    ConfigError);
    // First band must start at zero.
    CHECK_THROWS_AS(BandTable::fromBands({{BandLabel::Normal, 0.1, 0.264},
                                          {BandLabel::Slight, 0.264, 0.506},
                                          {BandLabel::SlightlySerious, 0.506, 0.758},
                                          {BandLabel::Serious, 0.758, 0.903},
                                          {BandLabel::ExtremelySerious, 0.903, 1.0}}),
                    ConfigError);
    // Last band must end at one.
    CHECK_THROWS_AS(BandTable::fromBands({{BandLabel::Normal, 0.0, 0.264},
                                          {BandLabel::Slight, 0.264, 0.506},
                                          {BandLabel::SlightlySerious, 0.506, 0.758},
                                          {BandLabel::Serious, 0.758, 0.903},
                                          {BandLabel::ExtremelySerious, 0.903, 0.99}}),
                    ConfigError);
    // Seam gap is an error under strict construction.
    CHECK_THROWS_AS(BandTable::fromBands({{BandLabel::Normal, 0.0, 0.264},
                                          {BandLabel::Slight, 0.264, 0.504},
                                          {BandLabel::SlightlySerious, 0.506, 0.758},
                                          {BandLabel::Serious, 0.758, 0.903},
                                          {BandLabel::ExtremelySerious, 0.903, 1.0}}),
                    ConfigError);
    // Labels out of order.
    CHECK_THROWS_AS(BandTable::fromBands({{BandLabel::Slight, 0.0, 0.264},
                                          {BandLabel::Normal, 0.264, 0.506},
                                          {BandLabel::SlightlySerious, 0.506, 0.758},
                                          {BandLabel::Serious, 0.758, 0.903},
                                          {BandLabel::ExtremelySerious, 0.903, 1.0}}),
                    ConfigError);
}

TEST_CASE("repairing construction snaps small seam defects and warns") {
    std::vector<std::string> warnings;
    BandTable repaired =
        BandTable::fromBandsRepaired({{BandLabel::Normal, 0.0, 0.264},
                                      {BandLabel::Slight, 0.264, 0.504},
                                      {BandLabel::SlightlySerious, 0.506, 0.758},
                                      {BandLabel::Serious, 0.758, 0.903},
                                      {BandLabel::ExtremelySerious, 0.903, 1.0}},
                                     warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("seam repaired") != std::string::npos);
    CHECK(repaired.band(BandLabel::Slight).hi == 0.506);
    CHECK(repaired.band(BandLabel::SlightlySerious).lo == 0.506);

    // A clean table repairs to itself without warnings.
    warnings.clear();
    BandTable clean = BandTable::fromBandsRepaired(overallBands().bands(), warnings);
    CHECK(warnings.empty());
    CHECK(clean.band(BandLabel::Slight).hi == 0.506);
}

TEST_CASE("band lookup follows the half-open convention") {
    BandTable table = overallBands();

    CHECK(bandOf(0.0, table).label == BandLabel::Normal);
    CHECK(bandOf(0.1, table).label == BandLabel::Normal);
    // A shared edge belongs to the upper band.
    CHECK(bandOf(0.264, table).label == BandLabel::Slight);
    CHECK(bandOf(0.506, table).label == BandLabel::SlightlySerious);
    CHECK(bandOf(0.758, table).label == BandLabel::Serious);
    CHECK(bandOf(0.903, table).label == BandLabel::ExtremelySerious);
    // The top band is closed at 1.
    CHECK(bandOf(1.0, table).label == BandLabel::ExtremelySerious);

    CHECK_THROWS_AS(bandOf(-0.001, table), std::domain_error);
    CHECK_THROWS_AS(bandOf(1.001, table), std::domain_error);
}

TEST_CASE("band lookup against the first-index banding") {
    BandTable table = ecrBands();
    // 0.61 sits below the 0.6103646 edge, so it is still in the fourth band.
    CHECK(bandOf(0.61, table).label == BandLabel::Serious);
    CHECK(bandOf(0.6103646, table).label == BandLabel::ExtremelySerious);
    CHECK(bandOf(0.2258343, table).label == BandLabel::Slight);
    CHECK(bandOf(0.22, table).label == BandLabel::Normal);
}

TEST_CASE("every value belongs to exactly one band") {
    BandTable table = ecrBands();
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        double v = unit(rng);
        const RiskBand& band = bandOf(v, table);
        // Membership matches the half-open definition; the top band also
        // owns its closed upper edge.
        bool isTop = band.label == BandLabel::ExtremelySerious;
        CHECK(v >= band.lo);
        if (isTop)
            CHECK(v <= band.hi);
        else
            CHECK(v < band.hi);
        // No other band also claims v.
        int holders = 0;
        for (const RiskBand& other : table.bands()) {
            bool otherTop = other.label == BandLabel::ExtremelySerious;
            bool inside = v >= other.lo && (otherTop ? v <= other.hi : v < other.hi);
            if (inside) ++holders;
        }
        CHECK(holders == 1);
    }
}

TEST_CASE("band access by label and lower edges") {
    BandTable table = overallBands();
    CHECK(table.band(BandLabel::Serious).lo == 0.758);
    CHECK(table.band(BandLabel::Serious).hi == 0.903);
    CHECK(table.lowerEdge(BandLabel::SlightlySerious) == 0.506);
    CHECK(table.lowerEdge(BandLabel::Normal) == 0.0);
    CHECK_THROWS_AS(BandTable().band(BandLabel::Normal), std::logic_error);
}

namespace {

IndicatorTree uniformTree() {
    IndicatorTree tree;
    BandTable bands = overallBands();
    for (Index index : allIndices()) {
        IndicatorSpec& spec = tree.at(index);
        spec.displayName = std::string(name(index));
        spec.bands = bands;
        spec.crispWeight = 0.25;
        spec.intervalWeight = Interval(0.2, 0.3);
    }
    for (Index index : allIndices()) {
        auto subs = subsOf(index);
        double w = 1.0 / static_cast<double>(subs.size());
        for (Sub sub : subs) {
            IndicatorSpec& spec = tree.at(sub);
            spec.displayName = std::string(name(sub));
            spec.bands = bands;
            spec.crispWeight = w;
            spec.intervalWeight = Interval(w - 0.01, w + 0.01);
        }
    }
    return tree;
}

}  // namespace

TEST_CASE("indicator tree validation accepts a consistent tree") {
    CHECK(uniformTree().validate().empty());
}

TEST_CASE("indicator tree validation reports broken invariants") {
    SUBCASE("index weights no longer sum to one") {
        IndicatorTree tree = uniformTree();
        tree.at(Index::ECR).crispWeight = 0.5;
        auto problems = tree.validate();
        CHECK_FALSE(problems.empty());
    }
    SUBCASE("a sub group no longer sums to one") {
        IndicatorTree tree = uniformTree();
        tree.at(Sub::LOCM).crispWeight = 0.9;
        CHECK_FALSE(tree.validate().empty());
    }
    SUBCASE("an interval weight loses its crisp weight") {
        IndicatorTree tree = uniformTree();
        tree.at(Sub::HPSF).intervalWeight = Interval(0.9, 0.95);
        auto problems = tree.validate();
        REQUIRE_FALSE(problems.empty());
        bool mentioned = false;
        for (const auto& p : problems)
            if (p.find("HPSF") != std::string::npos) mentioned = true;
        CHECK(mentioned);
    }
    SUBCASE("a band table is missing") {
        IndicatorTree tree = uniformTree();
        tree.at(Sub::CCM).bands = BandTable();
        CHECK_FALSE(tree.validate().empty());
    }
}
