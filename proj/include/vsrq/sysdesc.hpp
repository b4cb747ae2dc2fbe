#ifndef VSRQ_SYSDESC_HPP
#define VSRQ_SYSDESC_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsrq/core.hpp"
#include "vsrq/indicators.hpp"

namespace vsrq::sysdesc {

/// Call topology of one ECU subsystem.
struct CouplingInput {
    std::size_t ecus = 0;
    std::vector<std::pair<std::size_t, std::size_t>> calls;
};

/// Everything a vehicle system under assessment brings to the pipeline.
/// Sections are optional: an absent section leaves its indicators unset, and
/// the assessment rejects incomplete inputs listing exactly what is missing.
struct SystemDescription {
    std::string name;

    /// Keyed by ECU-coupling sub-indicator (the ECR family).
    std::map<core::Sub, CouplingInput> couplingGraphs;
    /// Communication module counts; severity weights are filled in from the
    /// configuration, not the description.
    std::optional<indicators::CommInventory> communication;
    /// Per-module code measurements, inline or loaded from a scan report.
    std::optional<std::vector<indicators::ModuleMetrics>> modules;
    /// Recall / accident / attack records; the forgetting half-life and the
    /// attack severity weights come from the configuration.
    std::optional<indicators::HistoryRecords> history;
    /// Damage severity grades; reported, not scored.
    std::optional<indicators::SeverityVector> severity;

    /// Normalization bounds (lo, hi) per sub-indicator.
    std::map<core::Sub, std::pair<double, double>> bounds;

    /// Pre-aggregated index intervals; when present the assessment skips the
    /// sub-indicator layer entirely.
    std::optional<std::array<core::Interval, core::kIndexCount>> indexAggregates;
};

/// Parses and validates a description document. All problems are reported
/// together, each prefixed with its JSON path. `baseDir` anchors relative
/// paths referenced by the document (e.g. a scan report).
SystemDescription loadDescriptionText(const std::string& jsonText,
                                      const std::filesystem::path& baseDir);
SystemDescription loadDescriptionFile(const std::filesystem::path& path);

}  // namespace vsrq::sysdesc

#endif
