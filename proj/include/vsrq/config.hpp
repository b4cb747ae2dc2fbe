#ifndef VSRQ_CONFIG_HPP
#define VSRQ_CONFIG_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vsrq/assessment.hpp"
#include "vsrq/clustering.hpp"
#include "vsrq/core.hpp"
#include "vsrq/projection.hpp"
#include "vsrq/weighting.hpp"

namespace vsrq::config {

/// Weight-derivation artifacts for one judgment matrix: the index layer or
/// one sub-indicator group.
struct MatrixAnalysis {
    std::string key;                       // "index", "ECR", "VCR", "VCCR", "VHIR"
    weighting::AhpResult ahp;
    std::vector<core::Interval> interval;  // interval weight per component
    bool containsCrisp = true;             // every crisp weight inside its interval
    bool gateExceeded = false;             // consistency ratio at or above the gate
};

struct ClusteringConfig {
    bool enabled = true;
    clustering::FcmParams params;
};

struct FusionConfig {
    /// Literal sensitivity coefficient; set, it wins over clustering.
    std::optional<double> rhoOverride;
    ClusteringConfig clustering;
    projection::PpParams projection;
};

struct SeverityWeights {
    /// In-vehicle buses: LIN, low-speed CAN, high-speed CAN, FlexRay, MOST.
    std::array<double, 5> bus = {1.0, 1.0, 2.0, 2.0, 1.0};
    /// Infrastructure channels: VANET, WiFi, cellular.
    std::array<double, 3> infrastructure = {1.0, 1.0, 1.0};
    /// Attack surfaces: vehicle, terminal, network, cloud.
    std::array<double, 4> attack = {1.0, 1.0, 1.0, 1.0};
};

/// One row of the damage-severity grading rubric. Reference data for whoever
/// grades the severity inputs; the scoring pipeline never interprets it.
struct RubricRow {
    std::string grades;  // e.g. "4-6"
    std::string safety;
    std::string privacy;
    std::string financial;
    std::string operational;
};

/// A parsed, validated configuration with all derived weights in place.
struct LoadedConfig {
    int schemaVersion = 1;
    double spread = 0.15;  // symmetric fuzzification applied to crisp matrices
    core::IndicatorTree tree;
    core::BandTable overallBands;
    /// Index-layer analysis first, then one per index in enum order.
    std::array<MatrixAnalysis, 1 + core::kIndexCount> matrices;
    FusionConfig fusion;
    SeverityWeights severity;
    double halfLifeYears = 3.0;
    assessment::ClassificationRule defaultRule =
        assessment::ClassificationRule::Conservative;
    std::vector<RubricRow> rubric;
    /// Repairs applied while loading (matrix reciprocality, band seams) and,
    /// outside strict mode, consistency-gate trips.
    std::vector<std::string> warnings;

    /// Analysis for the index layer (pass nothing) or one sub group.
    const MatrixAnalysis& analysisFor(std::optional<core::Index> group = {}) const;
};

/// Parses and validates a configuration document, deriving crisp and
/// interval weights for every judgment matrix. All detected problems are
/// reported together, each prefixed with its JSON path. With
/// strictConsistency (the default) a consistency ratio at or above the 0.1
/// gate is an error; otherwise it is downgraded to a warning.
LoadedConfig loadConfigText(const std::string& jsonText, bool strictConsistency = true);
LoadedConfig loadConfigFile(const std::filesystem::path& path,
                            bool strictConsistency = true);

/// The configuration text compiled into the binary; byte-identical to the
/// shipped defaults/config.json.
const char* embeddedDefaultConfig();

}  // namespace vsrq::config

#endif
