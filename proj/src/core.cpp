#include "vsrq/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vsrq::core {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi))
        throw std::invalid_argument("interval endpoint is NaN");
    if (lo > hi)
        throw std::invalid_argument("interval lower bound " + fmt(lo) +
                                    " exceeds upper bound " + fmt(hi));
}

Interval intervalAdd(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval intervalScale(const Interval& a, double s) {
    if (std::isnan(s) || s < 0.0)
        throw std::invalid_argument("interval scale factor must be non-negative, got " + fmt(s));
    return Interval(s * a.lo(), s * a.hi());
}

Interval intervalMulNonNegative(const Interval& a, const Interval& b) {
    if (a.lo() < 0.0 || b.lo() < 0.0)
        throw std::invalid_argument("interval product requires non-negative intervals");
    return Interval(a.lo() * b.lo(), a.hi() * b.hi());
}

Interval intervalClamp(const Interval& a, const Interval& bound) {
    auto clip = [&](double v) { return std::min(std::max(v, bound.lo()), bound.hi()); };
    return Interval(clip(a.lo()), clip(a.hi()));
}

namespace {

constexpr std::array<Index, kIndexCount> kIndices = {Index::ECR, Index::VCR,
                                                     Index::VCCR, Index::VHIR};

constexpr std::array<Sub, kSubCount> kSubs = {
    Sub::EMCR, Sub::TCCR, Sub::EPCR, Sub::ESCR, Sub::MRCR, Sub::ACCR,
    Sub::LKCR, Sub::AECR, Sub::IVCR, Sub::U2VCR, Sub::V2VCR, Sub::V2ICR,
    Sub::LOCM, Sub::HCM, Sub::CCM, Sub::HPSF, Sub::HPESF, Sub::HPIS};

constexpr std::array<const char*, kIndexCount> kIndexNames = {"ECR", "VCR",
                                                              "VCCR", "VHIR"};

constexpr std::array<const char*, kSubCount> kSubNames = {
    "EMCR", "TCCR", "EPCR", "ESCR", "MRCR", "ACCR", "LKCR", "AECR", "IVCR",
    "U2VCR", "V2VCR", "V2ICR", "LOCM", "HCM", "CCM", "HPSF", "HPESF", "HPIS"};

constexpr std::array<const char*, kBandCount> kBandNames = {
    "Normal", "Slight", "SlightlySerious", "Serious", "ExtremelySerious"};

constexpr std::array<const char*, 3> kStateNames = {"Steady", "Critical",
                                                    "Dangerous"};

}  // namespace

Index indexOf(Sub sub) {
    auto i = static_cast<std::size_t>(sub);
    if (i < 8) return Index::ECR;
    if (i < 12) return Index::VCR;
    if (i < 15) return Index::VCCR;
    return Index::VHIR;
}

std::span<const Sub> subsOf(Index index) {
    switch (index) {
        case Index::ECR:  return {kSubs.data() + 0, 8};
        case Index::VCR:  return {kSubs.data() + 8, 4};
        case Index::VCCR: return {kSubs.data() + 12, 3};
        case Index::VHIR: return {kSubs.data() + 15, 3};
    }
    throw std::invalid_argument("unknown index");
}

std::span<const Sub> allSubs() { return {kSubs.data(), kSubs.size()}; }
std::span<const Index> allIndices() { return {kIndices.data(), kIndices.size()}; }

std::string_view name(Index index) {
    return kIndexNames[static_cast<std::size_t>(index)];
}

std::string_view name(Sub sub) {
    return kSubNames[static_cast<std::size_t>(sub)];
}

std::optional<Index> indexFromName(std::string_view s) {
    for (std::size_t i = 0; i < kIndexNames.size(); ++i)
        if (s == kIndexNames[i]) return kIndices[i];
    return std::nullopt;
}

std::optional<Sub> subFromName(std::string_view s) {
    for (std::size_t i = 0; i < kSubNames.size(); ++i)
        if (s == kSubNames[i]) return kSubs[i];
    return std::nullopt;
}

IndicatorId::IndicatorId(Index i, std::optional<Sub> s) : index(i), sub(s) {
    if (sub && indexOf(*sub) != index)
        throw std::invalid_argument("sub-indicator " + std::string(name(*sub)) +
                                    " does not belong to index " +
                                    std::string(name(index)));
}

std::string IndicatorId::toString() const {
    std::string out{name(index)};
    if (sub) {
        out += '/';
        out += name(*sub);
    }
    return out;
}

std::string_view name(BandLabel label) {
    return kBandNames[static_cast<std::size_t>(label)];
}

std::optional<BandLabel> bandLabelFromName(std::string_view s) {
    for (std::size_t i = 0; i < kBandNames.size(); ++i)
        if (s == kBandNames[i]) return static_cast<BandLabel>(i);
    return std::nullopt;
}

std::string_view name(VehicleState state) {
    return kStateNames[static_cast<std::size_t>(state)];
}

std::string_view name(Orientation o) {
    return o == Orientation::Cost ? "cost" : "benefit";
}

std::optional<Orientation> orientationFromName(std::string_view s) {
    if (s == "cost") return Orientation::Cost;
    if (s == "benefit") return Orientation::Benefit;
    return std::nullopt;
}

namespace {

void checkBandShape(const std::vector<RiskBand>& bands) {
    if (bands.size() != kBandCount)
        throw ConfigError("band table needs exactly " + std::to_string(kBandCount) +
                          " bands, got " + std::to_string(bands.size()));
    for (std::size_t i = 0; i < bands.size(); ++i) {
        if (bands[i].label != static_cast<BandLabel>(i))
            throw ConfigError("band " + std::to_string(i) + " must be labeled " +
                              std::string(name(static_cast<BandLabel>(i))) + ", got " +
                              std::string(name(bands[i].label)));
        if (!(bands[i].lo < bands[i].hi))
            throw ConfigError("band " + std::string(name(bands[i].label)) +
                              " is empty or inverted: [" + fmt(bands[i].lo) + ", " +
                              fmt(bands[i].hi) + "]");
    }
    if (bands.front().lo != 0.0)
        throw ConfigError("first band must start at 0, got " + fmt(bands.front().lo));
    if (bands.back().hi != 1.0)
        throw ConfigError("last band must end at 1, got " + fmt(bands.back().hi));
}

}  // namespace

BandTable BandTable::fromBands(std::vector<RiskBand> bands) {
    checkBandShape(bands);
    for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
        if (bands[i].hi != bands[i + 1].lo)
            throw ConfigError("bands " + std::string(name(bands[i].label)) + " and " +
                              std::string(name(bands[i + 1].label)) +
                              " do not share an edge: " + fmt(bands[i].hi) + " vs " +
                              fmt(bands[i + 1].lo));
    }
    BandTable table;
    table.bands_ = std::move(bands);
    return table;
}

BandTable BandTable::fromBandsRepaired(std::vector<RiskBand> bands,
                                       std::vector<std::string>& warnings) {
    checkBandShape(bands);
    for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
        if (bands[i].hi != bands[i + 1].lo) {
            warnings.push_back("band seam repaired: " + std::string(name(bands[i].label)) +
                               " upper edge " + fmt(bands[i].hi) + " snapped to " +
                               std::string(name(bands[i + 1].label)) + " lower edge " +
                               fmt(bands[i + 1].lo));
            bands[i].hi = bands[i + 1].lo;
            if (!(bands[i].lo < bands[i].hi))
                throw ConfigError("band seam repair would empty band " +
                                  std::string(name(bands[i].label)));
        }
    }
    BandTable table;
    table.bands_ = std::move(bands);
    return table;
}

const RiskBand& BandTable::band(BandLabel label) const {
    if (bands_.empty()) throw std::logic_error("band table is empty");
    return bands_[static_cast<std::size_t>(label)];
}

const RiskBand& bandOf(double value, const BandTable& table) {
    if (std::isnan(value) || value < 0.0 || value > 1.0)
        throw std::domain_error("band lookup requires a value in [0,1], got " + fmt(value));
    const auto& bands = table.bands();
    if (bands.empty()) throw std::logic_error("band table is empty");
    for (std::size_t i = 0; i + 1 < bands.size(); ++i)
        if (value < bands[i].hi) return bands[i];
    return bands.back();
}

std::vector<std::string> IndicatorTree::validate() const {
    std::vector<std::string> problems;
    constexpr double kTol = 1e-6;

    double indexSum = 0.0;
    for (Index index : allIndices()) indexSum += at(index).crispWeight;
    if (std::abs(indexSum - 1.0) > kTol)
        problems.push_back("index crisp weights sum to " + fmt(indexSum) + ", expected 1");

    for (Index index : allIndices()) {
        double subSum = 0.0;
        for (Sub sub : subsOf(index)) subSum += at(sub).crispWeight;
        if (std::abs(subSum - 1.0) > kTol)
            problems.push_back(std::string(name(index)) + " sub crisp weights sum to " +
                               fmt(subSum) + ", expected 1");
    }

    // Zero-width interval weights (from a degenerate spread) match the crisp
    // weights only up to rounding, so containment allows a hair of slack.
    constexpr double kContainmentSlack = 1e-9;
    auto checkNode = [&](const IndicatorSpec& spec, const std::string& id) {
        if (spec.crispWeight < spec.intervalWeight.lo() - kContainmentSlack ||
            spec.crispWeight > spec.intervalWeight.hi() + kContainmentSlack)
            problems.push_back(id + " interval weight [" + fmt(spec.intervalWeight.lo()) +
                               ", " + fmt(spec.intervalWeight.hi()) +
                               "] does not contain crisp weight " + fmt(spec.crispWeight));
        if (spec.bands.bands().size() != kBandCount)
            problems.push_back(id + " band table missing or incomplete");
    };
    for (Index index : allIndices()) checkNode(at(index), std::string(name(index)));
    for (Sub sub : allSubs()) checkNode(at(sub), std::string(name(sub)));

    return problems;
}

}  // namespace vsrq::core
