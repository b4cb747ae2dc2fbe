#include "vsrq/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace vsrq::assessment {

using core::ConfigError;
using core::InputError;
using core::Interval;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

double normalize(double raw, double lo, double hi, core::Orientation orientation) {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi))
        throw ConfigError("normalization bounds must satisfy lo < hi, got [" + fmt(lo) +
                          ", " + fmt(hi) + "]");
    if (std::isnan(raw) || raw < lo || raw > hi)
        throw InputError("raw value " + fmt(raw) + " outside normalization bounds [" +
                         fmt(lo) + ", " + fmt(hi) + "]");
    double span = hi - lo;
    return orientation == core::Orientation::Cost ? (raw - lo) / span : (hi - raw) / span;
}

std::vector<Interval> fuseWeights(std::span<const Interval> subjective,
                                  std::span<const double> objective, double rho) {
    if (subjective.size() != objective.size())
        throw std::invalid_argument("weight vectors have different sizes: " +
                                    std::to_string(subjective.size()) + " vs " +
                                    std::to_string(objective.size()));
    if (std::isnan(rho) || rho < 0.0 || rho > 1.0)
        throw std::invalid_argument("blend coefficient must lie in [0,1], got " + fmt(rho));

    std::vector<Interval> fused;
    fused.reserve(subjective.size());
    for (std::size_t i = 0; i < subjective.size(); ++i) {
        double o = objective[i];
        if (std::isnan(o) || o < 0.0)
            throw std::invalid_argument("objective weights must be non-negative");
        fused.emplace_back(rho * subjective[i].lo() + (1.0 - rho) * o,
                           rho * subjective[i].hi() + (1.0 - rho) * o);
    }
    return fused;
}

std::vector<Interval> renormalizeByMidpoints(std::span<const Interval> weights) {
    double midSum = 0.0;
    for (const Interval& w : weights) midSum += w.midpoint();
    if (!(midSum > 0.0))
        throw std::invalid_argument("weight midpoints sum to " + fmt(midSum) +
                                    ", cannot renormalize");
    std::vector<Interval> out;
    out.reserve(weights.size());
    for (const Interval& w : weights) out.push_back(core::intervalScale(w, 1.0 / midSum));
    return out;
}

void NormalizedIndicators::set(core::Sub sub, double value) {
    if (std::isnan(value) || value < 0.0 || value > 1.0)
        throw InputError("normalized value for " + std::string(core::name(sub)) +
                         " must lie in [0,1], got " + fmt(value));
    values_[static_cast<std::size_t>(sub)] = value;
}

std::vector<core::Sub> NormalizedIndicators::missing() const {
    std::vector<core::Sub> gaps;
    for (core::Sub sub : core::allSubs())
        if (!values_[static_cast<std::size_t>(sub)]) gaps.push_back(sub);
    return gaps;
}

VsrBreakdown computeVsr(const NormalizedIndicators& values, const WeightSet& weights) {
    auto gaps = values.missing();
    if (!gaps.empty()) {
        std::string list;
        for (core::Sub sub : gaps) {
            if (!list.empty()) list += ", ";
            list += core::IndicatorId(sub).toString();
        }
        throw InputError("assessment input incomplete; missing indicators: " + list);
    }

    std::array<Interval, core::kIndexCount> aggregates;
    for (core::Index index : core::allIndices()) {
        Interval aggregate(0.0, 0.0);
        for (core::Sub sub : core::subsOf(index)) {
            double v = *values.get(sub);
            const Interval& w = weights.subWeights[static_cast<std::size_t>(sub)];
            aggregate = core::intervalAdd(aggregate, core::intervalScale(w, v));
        }
        aggregates[static_cast<std::size_t>(index)] = aggregate;
    }
    return computeVsrFromAggregates(aggregates, weights.indexWeights);
}

VsrBreakdown computeVsrFromAggregates(
    const std::array<Interval, core::kIndexCount>& aggregates,
    const std::array<Interval, core::kIndexCount>& indexWeights) {
    VsrBreakdown out;
    Interval total(0.0, 0.0);
    for (std::size_t i = 0; i < core::kIndexCount; ++i) {
        out.index[i].weight = indexWeights[i];
        out.index[i].aggregate = aggregates[i];
        total = core::intervalAdd(total,
                                  core::intervalMulNonNegative(indexWeights[i], aggregates[i]));
    }
    out.vsr = core::intervalClamp(total, Interval(0.0, 1.0));
    return out;
}

Interval riskMatrixCell(const std::array<Interval, core::kIndexCount>& bands,
                        const std::array<Interval, core::kIndexCount>& indexWeights) {
    return computeVsrFromAggregates(bands, indexWeights).vsr;
}

std::string_view name(ClassificationRule rule) {
    switch (rule) {
        case ClassificationRule::Conservative: return "conservative";
        case ClassificationRule::Midpoint: return "midpoint";
        case ClassificationRule::Optimistic: return "optimistic";
    }
    throw std::invalid_argument("unknown classification rule");
}

std::optional<ClassificationRule> ruleFromName(std::string_view s) {
    if (s == "conservative") return ClassificationRule::Conservative;
    if (s == "midpoint") return ClassificationRule::Midpoint;
    if (s == "optimistic") return ClassificationRule::Optimistic;
    return std::nullopt;
}

Classification classify(const Interval& vsr, const core::BandTable& overallBands,
                        ClassificationRule rule) {
    Classification out;
    out.bandAtLower = core::bandOf(vsr.lo(), overallBands).label;
    out.bandAtMidpoint = core::bandOf(vsr.midpoint(), overallBands).label;
    out.bandAtUpper = core::bandOf(vsr.hi(), overallBands).label;
    switch (rule) {
        case ClassificationRule::Conservative: out.decisionValue = vsr.hi(); break;
        case ClassificationRule::Midpoint: out.decisionValue = vsr.midpoint(); break;
        case ClassificationRule::Optimistic: out.decisionValue = vsr.lo(); break;
    }
    double dangerous = overallBands.lowerEdge(core::BandLabel::Serious);
    double critical = overallBands.lowerEdge(core::BandLabel::SlightlySerious);
    if (out.decisionValue >= dangerous)
        out.state = core::VehicleState::Dangerous;
    else if (out.decisionValue >= critical)
        out.state = core::VehicleState::Critical;
    else
        out.state = core::VehicleState::Steady;
    return out;
}

std::vector<RankedComponent> rankComponents(const NormalizedIndicators& values,
                                            const WeightSet& weights) {
    auto gaps = values.missing();
    if (!gaps.empty())
        throw InputError("component ranking needs every indicator filled in");

    std::vector<RankedComponent> ranking;
    ranking.reserve(core::kSubCount);
    for (core::Sub sub : core::allSubs()) {
        double indexMid =
            weights.indexWeights[static_cast<std::size_t>(core::indexOf(sub))].midpoint();
        double subMid = weights.subWeights[static_cast<std::size_t>(sub)].midpoint();
        ranking.push_back({sub, indexMid * subMid * *values.get(sub)});
    }
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const RankedComponent& a, const RankedComponent& b) {
                         return a.contribution > b.contribution;
                     });
    return ranking;
}

namespace {

ordered_json intervalJson(const Interval& v) {
    return ordered_json::array({v.lo(), v.hi()});
}

}  // namespace

std::string AssessmentReport::toJsonText() const {
    ordered_json j;
    j["schemaVersion"] = 1;
    j["system"] = systemName;
    j["seed"] = seed;
    j["rule"] = std::string(name(rule));
    j["weightSource"] = weightSource;
    if (rho)
        j["rho"] = *rho;
    else
        j["rho"] = nullptr;
    j["mode"] = aggregateMode ? "aggregates" : "full";
    if (damageSeverity)
        j["damageSeverity"] = *damageSeverity;
    else
        j["damageSeverity"] = nullptr;

    ordered_json indicatorObj = ordered_json::object();
    for (core::Sub sub : core::allSubs()) {
        auto i = static_cast<std::size_t>(sub);
        if (!rawValues[i] && !normalizedValues[i]) continue;
        ordered_json entry;
        if (rawValues[i]) entry["raw"] = *rawValues[i];
        if (normalizedValues[i]) entry["normalized"] = *normalizedValues[i];
        indicatorObj[std::string(core::name(sub))] = std::move(entry);
    }
    j["indicators"] = std::move(indicatorObj);

    ordered_json indexObj = ordered_json::object();
    for (core::Index index : core::allIndices()) {
        auto i = static_cast<std::size_t>(index);
        ordered_json entry;
        entry["weight"] = intervalJson(breakdown.index[i].weight);
        entry["aggregate"] = intervalJson(breakdown.index[i].aggregate);
        if (indexBands[i])
            entry["band"] = std::string(core::name(*indexBands[i]));
        else
            entry["band"] = nullptr;
        indexObj[std::string(core::name(index))] = std::move(entry);
    }
    j["indices"] = std::move(indexObj);

    j["vsr"] = ordered_json{{"interval", intervalJson(breakdown.vsr)},
                            {"midpoint", breakdown.vsr.midpoint()},
                            {"bandAtLower", std::string(core::name(classification.bandAtLower))},
                            {"bandAtMidpoint", std::string(core::name(classification.bandAtMidpoint))},
                            {"bandAtUpper", std::string(core::name(classification.bandAtUpper))},
                            {"decisionValue", classification.decisionValue}};
    j["state"] = std::string(core::name(classification.state));

    ordered_json rankArray = ordered_json::array();
    for (const auto& r : ranking)
        rankArray.push_back(ordered_json{{"component", std::string(core::name(r.sub))},
                                         {"contribution", r.contribution}});
    j["ranking"] = std::move(rankArray);
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

std::string AssessmentReport::toText() const {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    os << "security risk assessment: " << systemName << "\n";
    os << "mode " << (aggregateMode ? "aggregates" : "full") << ", rule " << name(rule)
       << ", seed " << seed << ", weights " << weightSource;
    if (rho) os << " (rho " << *rho << ")";
    os << "\n\n";

    os << std::left << std::setw(6) << "index" << std::right << std::setw(12) << "w.lo"
       << std::setw(12) << "w.hi" << std::setw(12) << "agg.lo" << std::setw(12)
       << "agg.hi" << "  band\n";
    for (core::Index index : core::allIndices()) {
        auto i = static_cast<std::size_t>(index);
        const auto& row = breakdown.index[i];
        os << std::left << std::setw(6) << core::name(index) << std::right << std::setw(12)
           << row.weight.lo() << std::setw(12) << row.weight.hi() << std::setw(12)
           << row.aggregate.lo() << std::setw(12) << row.aggregate.hi() << "  "
           << (indexBands[i] ? core::name(*indexBands[i]) : "-") << "\n";
    }

    os << "\nVSR [" << breakdown.vsr.lo() << ", " << breakdown.vsr.hi() << "] midpoint "
       << breakdown.vsr.midpoint() << "\n";
    os << "bands: lower " << core::name(classification.bandAtLower) << ", midpoint "
       << core::name(classification.bandAtMidpoint) << ", upper "
       << core::name(classification.bandAtUpper) << "\n";
    os << "vehicle state: " << core::name(classification.state) << " (decision value "
       << classification.decisionValue << ")\n";
    if (damageSeverity) {
        os << "damage severity grade: " << std::setprecision(0) << *damageSeverity
           << std::setprecision(6) << "\n";
    }

    if (!ranking.empty()) {
        os << "\nmost vulnerable components\n";
        std::size_t rank = 1;
        for (const auto& r : ranking) {
            os << std::setw(4) << rank++ << ". " << std::left << std::setw(6)
               << core::name(r.sub) << std::right << "  contribution " << r.contribution
               << "\n";
        }
    }
    if (!warnings.empty()) {
        os << "\nwarnings\n";
        for (const auto& w : warnings) os << "  - " << w << "\n";
    }
    return os.str();
}

}  // namespace vsrq::assessment
