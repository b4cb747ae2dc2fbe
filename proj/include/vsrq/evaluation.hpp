#ifndef VSRQ_EVALUATION_HPP
#define VSRQ_EVALUATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsrq/core.hpp"

namespace vsrq::evaluation {

struct LabeledComponent {
    std::string componentId;
    bool predictedRisky = false;
    bool actuallyBuggy = false;
    std::int64_t reportedBugCount = 0;
};

/// Ground-truth corpus. Component ids are unique; the file format is
/// delimiter-separated lines "id,predicted,actual,bugCount" with an optional
/// header, '#' comments, and 0/1 or true/false flags.
class LabeledCorpus {
public:
    static LabeledCorpus fromComponents(std::vector<LabeledComponent> components);
    static LabeledCorpus fromDsvText(const std::string& text);

    const std::vector<LabeledComponent>& components() const { return components_; }

private:
    std::vector<LabeledComponent> components_;
};

struct ConfusionCounts {
    std::int64_t truePositives = 0;
    std::int64_t falsePositives = 0;
    std::int64_t trueNegatives = 0;
    std::int64_t falseNegatives = 0;

    std::int64_t total() const {
        return truePositives + falsePositives + trueNegatives + falseNegatives;
    }
};

ConfusionCounts confusion(const LabeledCorpus& corpus);

/// Accuracy, precision, recall as fractions in [0,1]; a metric whose
/// denominator is zero is absent rather than zero.
struct ClassifierMetrics {
    std::optional<double> accuracy;
    std::optional<double> precision;
    std::optional<double> recall;
};

ClassifierMetrics metrics(const ConfusionCounts& counts);

/// Percentage with two decimals, round half up ("94.36"); "undefined" when
/// the metric is absent.
std::string formatPercent(const std::optional<double>& fraction);

/// Component scores keyed by component id.
using ScoreMap = std::map<std::string, double>;

/// Re-derives the predicted flags by banding each component's score and
/// marking it risky when the band is `threshold` or above. Every component
/// needs a score.
LabeledCorpus predictFromScores(const LabeledCorpus& corpus, const ScoreMap& scores,
                                const core::BandTable& bands,
                                core::BandLabel threshold = core::BandLabel::Serious);

struct CurvePoint {
    std::int64_t bugCount;
    double meanIndicatorRatio;
    std::int64_t components;
};

/// Groups components by reported bug count (ascending) and averages the
/// band-quantized indicator ratio: upper edge of the band holding the
/// component's score divided by the top band's upper edge, so a top-band
/// component contributes exactly 1. Every component needs a score.
std::vector<CurvePoint> riskRatioCurve(const LabeledCorpus& corpus, const ScoreMap& scores,
                                       const core::BandTable& bands);

/// Scores file: delimiter-separated lines "id,score" with optional header
/// and '#' comments.
ScoreMap scoresFromDsvText(const std::string& text);

}  // namespace vsrq::evaluation

#endif
