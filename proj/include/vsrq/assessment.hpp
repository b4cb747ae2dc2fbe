#ifndef VSRQ_ASSESSMENT_HPP
#define VSRQ_ASSESSMENT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vsrq/core.hpp"

namespace vsrq::assessment {

/// Range normalization into [0,1]. Cost indicators grow with risk:
/// (raw - lo) / (hi - lo); benefit indicators shrink with risk:
/// (hi - raw) / (hi - lo). Rejects lo >= hi (config error) and raw outside
/// [lo, hi] (input error).
double normalize(double raw, double lo, double hi, core::Orientation orientation);

/// Per-component blend of subjective interval weights with objective crisp
/// weights: [rho*s.lo + (1-rho)*o, rho*s.hi + (1-rho)*o]. Sizes must match;
/// rho must lie in [0,1]. No renormalization here.
std::vector<core::Interval> fuseWeights(std::span<const core::Interval> subjective,
                                        std::span<const double> objective, double rho);

/// Scales every interval by 1 / (sum of midpoints) so the midpoints sum to
/// 1. Rejects a non-positive midpoint sum.
std::vector<core::Interval> renormalizeByMidpoints(std::span<const core::Interval> weights);

/// Normalized sub-indicator values; every slot must be filled before the
/// score can be computed.
class NormalizedIndicators {
public:
    void set(core::Sub sub, double value);
    std::optional<double> get(core::Sub sub) const {
        return values_[static_cast<std::size_t>(sub)];
    }
    /// Sub-indicators still missing, in canonical order.
    std::vector<core::Sub> missing() const;

private:
    std::array<std::optional<double>, core::kSubCount> values_;
};

/// Interval weights for both layers of the hierarchy.
struct WeightSet {
    std::array<core::Interval, core::kIndexCount> indexWeights;
    std::array<core::Interval, core::kSubCount> subWeights;
};

struct IndexBreakdown {
    core::Interval weight;
    core::Interval aggregate;  // weighted sum of this index's sub values
};

struct VsrBreakdown {
    std::array<IndexBreakdown, core::kIndexCount> index;
    core::Interval vsr;  // clamped into [0,1]
};

/// Full two-layer composition: per index, aggregate = sum over its subs of
/// subWeight * value; VSR = clamp(sum over indices of
/// [w.lo * agg.lo, w.hi * agg.hi]). Throws an input error naming every
/// missing sub-indicator if the inputs are incomplete.
VsrBreakdown computeVsr(const NormalizedIndicators& values, const WeightSet& weights);

/// Composition from explicit per-index aggregates (weights used as given).
VsrBreakdown computeVsrFromAggregates(
    const std::array<core::Interval, core::kIndexCount>& aggregates,
    const std::array<core::Interval, core::kIndexCount>& indexWeights);

/// One cell of the overlay table: indices pinned to band intervals,
/// composed with the index weights and clamped into [0,1].
core::Interval riskMatrixCell(const std::array<core::Interval, core::kIndexCount>& bands,
                              const std::array<core::Interval, core::kIndexCount>& indexWeights);

enum class ClassificationRule { Conservative, Midpoint, Optimistic };
std::string_view name(ClassificationRule rule);
std::optional<ClassificationRule> ruleFromName(std::string_view s);

struct Classification {
    core::BandLabel bandAtLower;
    core::BandLabel bandAtMidpoint;
    core::BandLabel bandAtUpper;
    double decisionValue;  // the endpoint the rule examined
    core::VehicleState state;
};

/// Bands the score at both endpoints and the midpoint, then grades the
/// vehicle state from the rule's endpoint against the band edges:
/// Dangerous at or above the Serious lower edge, Critical at or above the
/// SlightlySerious lower edge, Steady below.
Classification classify(const core::Interval& vsr, const core::BandTable& overallBands,
                        ClassificationRule rule);

struct RankedComponent {
    core::Sub sub;
    double contribution;  // midpoint index weight * midpoint sub weight * value
};

/// All sub-indicators ordered by contribution, descending; ties keep
/// canonical indicator order.
std::vector<RankedComponent> rankComponents(const NormalizedIndicators& values,
                                            const WeightSet& weights);

/// Everything one assessment run produced, serializable as JSON and as an
/// aligned text table.
struct AssessmentReport {
    std::string systemName;
    std::uint64_t seed = 0;
    ClassificationRule rule = ClassificationRule::Conservative;
    std::string weightSource;  // "fused" or "subjective"
    std::optional<double> rho;
    bool aggregateMode = false;
    /// Worst damage-severity grade across the four dimensions, when the
    /// description supplied grades.
    std::optional<double> damageSeverity;

    std::array<std::optional<double>, core::kSubCount> rawValues;
    std::array<std::optional<double>, core::kSubCount> normalizedValues;
    std::array<std::optional<core::BandLabel>, core::kIndexCount> indexBands;

    VsrBreakdown breakdown;
    Classification classification{};
    std::vector<RankedComponent> ranking;
    std::vector<std::string> warnings;

    std::string toJsonText() const;
    std::string toText() const;
};

}  // namespace vsrq::assessment

#endif
