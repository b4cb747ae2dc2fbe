#ifndef VSRQ_CLI_HPP
#define VSRQ_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "vsrq/assessment.hpp"
#include "vsrq/clustering.hpp"
#include "vsrq/config.hpp"
#include "vsrq/core.hpp"

namespace vsrq::cli {

/// Options shared by every subcommand that needs a configuration.
struct CommonOptions {
    /// Explicit configuration file; wins over the environment and defaults.
    std::optional<std::filesystem::path> configPath;
    /// With strict consistency (the default) a judgment matrix at or above
    /// the consistency-ratio gate aborts the run; otherwise it only warns.
    bool strictConsistency = true;
    /// Overrides every stage seed when set.
    std::optional<std::uint64_t> seed;
    /// Draws the run seed from the system entropy source instead of the
    /// reproducible default.
    bool entropySeed = false;
};

/// What one subcommand produced: a JSON document (the machine-readable
/// report) and an aligned plain-text rendering. The caller decides where
/// each stream goes.
struct RunOutput {
    std::string json;
    std::string text;
};

/// Directory environment variable consulted when no explicit configuration
/// path is given; the file inside it must be named config.json.
inline constexpr const char* kConfigDirEnv = "VSRQ_CONFIG_DIR";

/// Seed used when neither --seed nor the entropy option is given.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Resolution order: explicit path, then $VSRQ_CONFIG_DIR/config.json, then
/// the configuration compiled into the binary.
config::LoadedConfig resolveConfig(const CommonOptions& common);

/// The run-level seed: the explicit override, else an entropy draw, else
/// the fixed default. Stage seeds from the configuration still apply when
/// neither override is present.
std::uint64_t chooseSeed(const CommonOptions& common);

/// Parses a sample-matrix document: {schemaVersion, columns, rows}. Columns
/// must name each of the 18 sub-indicators exactly once (any order); rows
/// hold one value in [0,1] per column. Returns samples in canonical
/// indicator column order.
clustering::SampleMatrix loadSamplesText(const std::string& jsonText);
clustering::SampleMatrix loadSamplesFile(const std::filesystem::path& path);

/// Audit trail of one subjective/objective weight fusion.
struct FusionReport {
    double rho = 0.0;
    std::string rhoSource;  // "override", "clustering", or "default"
    std::uint64_t clusteringSeed = 0;
    std::uint64_t projectionSeed = 0;
    /// Data-driven weights, crisp: the index layer and, per index group,
    /// each group summing to 1.
    std::array<double, core::kIndexCount> objectiveIndex{};
    std::array<double, core::kSubCount> objectiveSub{};
};

/// Interval weights ready for scoring, with their provenance.
struct DerivedWeights {
    assessment::WeightSet weights;
    std::string source;  // "subjective" or "fused"
    std::optional<FusionReport> fusion;
};

/// Without samples the configured interval weights pass through unchanged
/// ("subjective"). With samples, clustering sensitivity (or the configured
/// override) sets the blend, projection pursuit supplies data-driven
/// weights per layer, and the blended intervals are midpoint-renormalized
/// within each group ("fused").
DerivedWeights deriveWeights(const config::LoadedConfig& cfg,
                             const clustering::SampleMatrix* samples,
                             const CommonOptions& common);

/// Source-tree scan: per-file and per-module counting with an optional
/// language profile and module map.
struct ScanOptions {
    std::filesystem::path root;
    std::optional<std::filesystem::path> profilePath;
    std::optional<std::filesystem::path> moduleMapPath;
};
RunOutput runScan(const ScanOptions& options);

/// Weight derivation report: consistency diagnostics, crisp and interval
/// weights per judgment matrix, and, given samples, the full fusion audit.
RunOutput runWeights(const CommonOptions& common,
                     const std::optional<std::filesystem::path>& samplesPath);

/// Full assessment: system description to scored, classified report.
struct AssessOptions {
    std::filesystem::path descriptionPath;
    std::optional<std::filesystem::path> samplesPath;
    /// Classification rule override; the configuration's rule otherwise.
    std::optional<assessment::ClassificationRule> rule;
};
RunOutput runAssess(const CommonOptions& common, const AssessOptions& options);

/// Classifier evaluation: confusion metrics over a labeled corpus, plus the
/// bug-count risk-ratio curve when scores are supplied.
struct EvalOptions {
    std::filesystem::path corpusPath;
    std::optional<std::filesystem::path> scoresPath;
    /// Re-derive predictions from scores: risky at or above this band.
    std::optional<core::BandLabel> predictBand;
};
RunOutput runEval(const CommonOptions& common, const EvalOptions& options);

}  // namespace vsrq::cli

#endif
