#include "vsrq/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace vsrq::config {

using core::ConfigError;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

const char* typeName(const ordered_json& j) {
    switch (j.type()) {
        case ordered_json::value_t::object: return "an object";
        case ordered_json::value_t::array: return "an array";
        case ordered_json::value_t::string: return "a string";
        case ordered_json::value_t::boolean: return "a boolean";
        case ordered_json::value_t::null: return "null";
        case ordered_json::value_t::discarded: return "nothing";
        default: return "a number";
    }
}

struct Collector {
    std::vector<std::string> errors;

    void add(const std::string& path, const std::string& message) {
        errors.push_back(path + ": " + message);
    }
};

/// Member lookup that records one error for a missing required key.
const ordered_json* member(const ordered_json& obj, const std::string& path,
                           const char* key, bool required, Collector& c) {
    if (!obj.is_object()) {
        if (required) c.add(path, std::string("expected an object with a '") + key +
                                      "' member, got " + typeName(obj));
        return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) c.add(path + "." + key, "missing");
        return nullptr;
    }
    return &*it;
}

/// Like member, but the value must itself be an object; a present
/// non-object is reported even when the member is optional.
const ordered_json* sectionMember(const ordered_json& obj, const std::string& path,
                                  const char* key, bool required, Collector& c) {
    const ordered_json* v = member(obj, path, key, required, c);
    if (v && !v->is_object()) {
        std::string full = path == "$" ? std::string(key) : path + "." + key;
        c.add(full, std::string("expected an object, got ") + typeName(*v));
        return nullptr;
    }
    return v;
}

std::optional<double> asNumber(const ordered_json& j, const std::string& path,
                               Collector& c) {
    if (!j.is_number()) {
        c.add(path, std::string("expected a number, got ") + typeName(j));
        return std::nullopt;
    }
    return j.get<double>();
}

std::optional<std::uint64_t> asUint(const ordered_json& j, const std::string& path,
                                    Collector& c) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    c.add(path, std::string("expected a non-negative integer, got ") + typeName(j));
    return std::nullopt;
}

std::optional<std::string> asString(const ordered_json& j, const std::string& path,
                                    Collector& c) {
    if (!j.is_string()) {
        c.add(path, std::string("expected a string, got ") + typeName(j));
        return std::nullopt;
    }
    return j.get<std::string>();
}

/// Square numeric grid of the expected order.
std::optional<std::vector<std::vector<double>>> parseGrid(const ordered_json& j,
                                                          const std::string& path,
                                                          std::size_t order,
                                                          Collector& c) {
    if (!j.is_array()) {
        c.add(path, std::string("expected an array of rows, got ") + typeName(j));
        return std::nullopt;
    }
    if (j.size() != order) {
        c.add(path, "expected " + std::to_string(order) + " rows, got " +
                        std::to_string(j.size()));
        return std::nullopt;
    }
    std::vector<std::vector<double>> grid(order);
    bool ok = true;
    for (std::size_t i = 0; i < order; ++i) {
        const ordered_json& row = j[i];
        std::string rowPath = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != order) {
            c.add(rowPath, "expected a row of " + std::to_string(order) + " numbers");
            ok = false;
            continue;
        }
        grid[i].resize(order);
        for (std::size_t k = 0; k < order; ++k) {
            auto v = asNumber(row[k], rowPath + "[" + std::to_string(k) + "]", c);
            if (!v) {
                ok = false;
                continue;
            }
            grid[i][k] = *v;
        }
    }
    if (!ok) return std::nullopt;
    return grid;
}

constexpr std::array<core::BandLabel, core::kBandCount> kLabels = {
    core::BandLabel::Normal, core::BandLabel::Slight,
    core::BandLabel::SlightlySerious, core::BandLabel::Serious,
    core::BandLabel::ExtremelySerious};

/// Band table from either 6 ascending edges (strict, seamless by
/// construction) or 5 labeled {label, lo, hi} objects (seam defects repaired
/// with a warning).
std::optional<core::BandTable> parseBands(const ordered_json& j, const std::string& path,
                                          Collector& c,
                                          std::vector<std::string>& warnings) {
    if (!j.is_array()) {
        c.add(path, std::string("expected a band array, got ") + typeName(j));
        return std::nullopt;
    }
    std::vector<core::RiskBand> bands;
    if (j.size() == core::kBandCount + 1) {
        std::vector<double> edges;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto v = asNumber(j[i], path + "[" + std::to_string(i) + "]", c);
            if (!v) return std::nullopt;
            edges.push_back(*v);
        }
        for (std::size_t i = 0; i < core::kBandCount; ++i)
            bands.push_back({kLabels[i], edges[i], edges[i + 1]});
        try {
            return core::BandTable::fromBands(std::move(bands));
        } catch (const ConfigError& e) {
            c.add(path, e.what());
            return std::nullopt;
        }
    }
    if (j.size() == core::kBandCount) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            const ordered_json& row = j[i];
            std::string rowPath = path + "[" + std::to_string(i) + "]";
            const ordered_json* label = member(row, rowPath, "label", true, c);
            const ordered_json* lo = member(row, rowPath, "lo", true, c);
            const ordered_json* hi = member(row, rowPath, "hi", true, c);
            if (!label || !lo || !hi) return std::nullopt;
            auto labelText = asString(*label, rowPath + ".label", c);
            auto loV = asNumber(*lo, rowPath + ".lo", c);
            auto hiV = asNumber(*hi, rowPath + ".hi", c);
            if (!labelText || !loV || !hiV) return std::nullopt;
            auto parsed = core::bandLabelFromName(*labelText);
            if (!parsed) {
                c.add(rowPath + ".label", "unknown band label '" + *labelText + "'");
                return std::nullopt;
            }
            if (*parsed != kLabels[i]) {
                c.add(rowPath + ".label",
                      std::string("expected '") + std::string(core::name(kLabels[i])) +
                          "' at this position, got '" + *labelText + "'");
                return std::nullopt;
            }
            bands.push_back({*parsed, *loV, *hiV});
        }
        std::vector<std::string> repairs;
        try {
            core::BandTable table =
                core::BandTable::fromBandsRepaired(std::move(bands), repairs);
            for (const std::string& r : repairs) warnings.push_back(path + ": " + r);
            return table;
        } catch (const ConfigError& e) {
            c.add(path, e.what());
            return std::nullopt;
        }
    }
    c.add(path, "expected 6 numeric edges or 5 labeled band objects, got " +
                    std::to_string(j.size()) + " elements");
    return std::nullopt;
}

/// Component names covered by matrix slot s: the four indices for slot 0,
/// one index's sub-indicators for slots 1..4.
std::vector<std::string> componentNames(std::size_t slot) {
    std::vector<std::string> names;
    if (slot == 0) {
        for (core::Index index : core::allIndices())
            names.emplace_back(core::name(index));
    } else {
        for (core::Sub sub : core::subsOf(core::allIndices()[slot - 1]))
            names.emplace_back(core::name(sub));
    }
    return names;
}

void parseSeverityGroup(const ordered_json& obj, const std::string& path,
                        const std::vector<const char*>& keys, double* out,
                        Collector& c) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const ordered_json* v = member(obj, path, keys[i], true, c);
        if (!v) continue;
        auto num = asNumber(*v, path + "." + keys[i], c);
        if (!num) continue;
        if (*num < 0.0) {
            c.add(path + "." + keys[i], "severity weight must be non-negative");
            continue;
        }
        out[i] = *num;
    }
}

}  // namespace

const MatrixAnalysis& LoadedConfig::analysisFor(std::optional<core::Index> group) const {
    if (!group) return matrices[0];
    return matrices[1 + static_cast<std::size_t>(*group)];
}

LoadedConfig loadConfigText(const std::string& jsonText, bool strictConsistency) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(jsonText);
    } catch (const ordered_json::parse_error& e) {
        throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
    }

    Collector c;
    LoadedConfig out;

    if (!doc.is_object()) {
        throw ConfigError(std::string("configuration root must be an object, got ") +
                          typeName(doc));
    }

    if (const ordered_json* v = member(doc, "$", "schemaVersion", true, c)) {
        auto version = asUint(*v, "schemaVersion", c);
        if (version && *version != 1)
            c.add("schemaVersion", "unsupported version " + std::to_string(*version) +
                                       " (this build reads version 1)");
        if (version) out.schemaVersion = static_cast<int>(*version);
    }

    // ---- weighting: fuzzification spread + judgment matrices ----
    const ordered_json* weighting = sectionMember(doc, "$", "weighting", true, c);
    const ordered_json* matricesObj = nullptr;
    const ordered_json* intervalObj = nullptr;
    if (weighting) {
        if (const ordered_json* v = member(*weighting, "weighting", "spread", false, c)) {
            auto num = asNumber(*v, "weighting.spread", c);
            if (num) {
                if (*num < 0.0)
                    c.add("weighting.spread", "fuzzification spread must be non-negative");
                else
                    out.spread = *num;
            }
        }
        matricesObj = sectionMember(*weighting, "weighting", "matrices", true, c);
        intervalObj = sectionMember(*weighting, "weighting", "intervalMatrices", false, c);
    }

    constexpr std::array<const char*, 1 + core::kIndexCount> kMatrixKeys = {
        "index", "ECR", "VCR", "VCCR", "VHIR"};

    for (std::size_t slot = 0; slot < kMatrixKeys.size(); ++slot) {
        MatrixAnalysis& analysis = out.matrices[slot];
        analysis.key = kMatrixKeys[slot];
        std::vector<std::string> names = componentNames(slot);
        std::string path = std::string("weighting.matrices.") + kMatrixKeys[slot];

        if (!matricesObj) continue;
        const ordered_json* entry = member(*matricesObj, "weighting.matrices",
                                           kMatrixKeys[slot], true, c);
        if (!entry) continue;
        auto grid = parseGrid(*entry, path, names.size(), c);
        if (!grid) continue;

        std::vector<std::string> repairs;
        std::optional<weighting::JudgmentMatrix> crisp;
        try {
            crisp = weighting::JudgmentMatrix::fromEntriesRepaired(std::move(*grid),
                                                                   repairs);
        } catch (const ConfigError& e) {
            c.add(path, e.what());
            continue;
        }
        for (const std::string& r : repairs) out.warnings.push_back(path + ": " + r);

        analysis.ahp = weighting::ahpWeights(*crisp);
        if (analysis.ahp.consistencyRatio >= weighting::kConsistencyGate) {
            analysis.gateExceeded = true;
            std::string msg = "consistency ratio " + fmt(analysis.ahp.consistencyRatio) +
                              " is at or above the " + fmt(weighting::kConsistencyGate) +
                              " acceptance gate";
            if (strictConsistency)
                c.add(path, msg);
            else
                out.warnings.push_back(path + ": " + msg + " (accepted leniently)");
        }

        std::optional<weighting::IntervalJudgmentMatrix> interval;
        std::string intervalPath =
            std::string("weighting.intervalMatrices.") + kMatrixKeys[slot];
        const ordered_json* explicitInterval =
            intervalObj ? sectionMember(*intervalObj, "weighting.intervalMatrices",
                                        kMatrixKeys[slot], false, c)
                        : nullptr;
        if (explicitInterval) {
            const ordered_json* lower =
                member(*explicitInterval, intervalPath, "lower", true, c);
            const ordered_json* upper =
                member(*explicitInterval, intervalPath, "upper", true, c);
            auto lowerGrid = lower ? parseGrid(*lower, intervalPath + ".lower",
                                               names.size(), c)
                                   : std::nullopt;
            auto upperGrid = upper ? parseGrid(*upper, intervalPath + ".upper",
                                               names.size(), c)
                                   : std::nullopt;
            if (lowerGrid && upperGrid) {
                try {
                    interval = weighting::IntervalJudgmentMatrix::fromEntries(
                        std::move(*lowerGrid), std::move(*upperGrid));
                } catch (const ConfigError& e) {
                    c.add(intervalPath, e.what());
                }
            }
        } else {
            interval = weighting::fuzzify(*crisp, out.spread);
        }
        if (!interval) continue;

        analysis.interval = weighting::ifahpWeights(*interval);
        analysis.containsCrisp = true;
        // Zero-width interval weights (a degenerate spread on a consistent
        // matrix) equal the crisp weights only up to rounding, so containment
        // is checked with a slack far below any meaningful violation.
        constexpr double kContainmentSlack = 1e-9;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (analysis.ahp.weights[i] < analysis.interval[i].lo() - kContainmentSlack ||
                analysis.ahp.weights[i] > analysis.interval[i].hi() + kContainmentSlack) {
                analysis.containsCrisp = false;
                c.add(path, "interval weight for " + names[i] + " [" +
                                fmt(analysis.interval[i].lo()) + ", " +
                                fmt(analysis.interval[i].hi()) +
                                "] does not contain its crisp weight " +
                                fmt(analysis.ahp.weights[i]));
            }
        }

        // Install the derived weights into the tree.
        if (slot == 0) {
            for (std::size_t i = 0; i < core::kIndexCount; ++i) {
                core::IndicatorSpec& spec = out.tree.at(core::allIndices()[i]);
                spec.crispWeight = analysis.ahp.weights[i];
                spec.intervalWeight = analysis.interval[i];
            }
        } else {
            std::span<const core::Sub> subs = core::subsOf(core::allIndices()[slot - 1]);
            for (std::size_t i = 0; i < subs.size(); ++i) {
                core::IndicatorSpec& spec = out.tree.at(subs[i]);
                spec.crispWeight = analysis.ahp.weights[i];
                spec.intervalWeight = analysis.interval[i];
            }
        }
    }

    // ---- indicator display metadata and bands ----
    if (const ordered_json* indices = sectionMember(doc, "$", "indices", true, c)) {
        for (core::Index index : core::allIndices()) {
            std::string path = std::string("indices.") + std::string(core::name(index));
            const ordered_json* entry =
                member(*indices, "indices", std::string(core::name(index)).c_str(),
                       true, c);
            if (!entry) continue;
            core::IndicatorSpec& spec = out.tree.at(index);
            if (const ordered_json* v = member(*entry, path, "displayName", true, c)) {
                auto s = asString(*v, path + ".displayName", c);
                if (s && s->empty()) c.add(path + ".displayName", "must not be empty");
                if (s) spec.displayName = *s;
            }
            if (const ordered_json* v = member(*entry, path, "bands", true, c)) {
                auto bands = parseBands(*v, path + ".bands", c, out.warnings);
                if (bands) spec.bands = std::move(*bands);
            }
        }
    }

    if (const ordered_json* indicators = sectionMember(doc, "$", "indicators", true, c)) {
        for (core::Sub sub : core::allSubs()) {
            std::string path = std::string("indicators.") + std::string(core::name(sub));
            const ordered_json* entry =
                member(*indicators, "indicators", std::string(core::name(sub)).c_str(),
                       true, c);
            if (!entry) continue;
            core::IndicatorSpec& spec = out.tree.at(sub);
            if (const ordered_json* v = member(*entry, path, "displayName", true, c)) {
                auto s = asString(*v, path + ".displayName", c);
                if (s && s->empty()) c.add(path + ".displayName", "must not be empty");
                if (s) spec.displayName = *s;
            }
            if (const ordered_json* v = member(*entry, path, "orientation", false, c)) {
                auto s = asString(*v, path + ".orientation", c);
                if (s) {
                    auto orientation = core::orientationFromName(*s);
                    if (!orientation)
                        c.add(path + ".orientation",
                              "expected 'cost' or 'benefit', got '" + *s + "'");
                    else
                        spec.orientation = *orientation;
                }
            }
            if (const ordered_json* v = member(*entry, path, "bands", true, c)) {
                auto bands = parseBands(*v, path + ".bands", c, out.warnings);
                if (bands) spec.bands = std::move(*bands);
            }
        }
    }

    if (const ordered_json* v = member(doc, "$", "overallBands", true, c)) {
        auto bands = parseBands(*v, "overallBands", c, out.warnings);
        if (bands) out.overallBands = std::move(*bands);
    }

    // ---- fusion parameters ----
    if (const ordered_json* fusion = sectionMember(doc, "$", "fusion", false, c)) {
        if (const ordered_json* v = member(*fusion, "fusion", "rho", false, c)) {
            if (!v->is_null()) {
                auto num = asNumber(*v, "fusion.rho", c);
                if (num) {
                    if (*num < 0.0 || *num > 1.0)
                        c.add("fusion.rho", "blend coefficient must lie in [0,1]");
                    else
                        out.fusion.rhoOverride = *num;
                }
            }
        }
        if (const ordered_json* cl = sectionMember(*fusion, "fusion", "clustering", false, c)) {
            ClusteringConfig& cc = out.fusion.clustering;
            if (const ordered_json* v = member(*cl, "fusion.clustering", "enabled",
                                               false, c)) {
                if (!v->is_boolean())
                    c.add("fusion.clustering.enabled", "expected a boolean");
                else
                    cc.enabled = v->get<bool>();
            }
            if (const ordered_json* v = member(*cl, "fusion.clustering", "clusters",
                                               false, c)) {
                auto num = asUint(*v, "fusion.clustering.clusters", c);
                if (num) {
                    if (*num < 2)
                        c.add("fusion.clustering.clusters", "need at least 2 clusters");
                    else
                        cc.params.clusters = static_cast<std::size_t>(*num);
                }
            }
            if (const ordered_json* v = member(*cl, "fusion.clustering", "fuzzifier",
                                               false, c)) {
                auto num = asNumber(*v, "fusion.clustering.fuzzifier", c);
                if (num) {
                    if (!(*num > 1.0))
                        c.add("fusion.clustering.fuzzifier", "must exceed 1");
                    else
                        cc.params.fuzzifier = *num;
                }
            }
            if (const ordered_json* v = member(*cl, "fusion.clustering", "tolerance",
                                               false, c)) {
                auto num = asNumber(*v, "fusion.clustering.tolerance", c);
                if (num) {
                    if (!(*num > 0.0))
                        c.add("fusion.clustering.tolerance", "must be positive");
                    else
                        cc.params.tolerance = *num;
                }
            }
            if (const ordered_json* v = member(*cl, "fusion.clustering",
                                               "maxIterations", false, c)) {
                auto num = asUint(*v, "fusion.clustering.maxIterations", c);
                if (num) {
                    if (*num == 0)
                        c.add("fusion.clustering.maxIterations", "must be positive");
                    else
                        cc.params.maxIterations = static_cast<std::size_t>(*num);
                }
            }
            if (const ordered_json* v = member(*cl, "fusion.clustering", "seed",
                                               false, c)) {
                auto num = asUint(*v, "fusion.clustering.seed", c);
                if (num) cc.params.seed = *num;
            }
        }
        if (const ordered_json* pp = sectionMember(*fusion, "fusion", "projection", false, c)) {
            projection::PpParams& params = out.fusion.projection;
            if (const ordered_json* v = member(*pp, "fusion.projection",
                                               "populationSize", false, c)) {
                auto num = asUint(*v, "fusion.projection.populationSize", c);
                if (num) {
                    if (*num < 2)
                        c.add("fusion.projection.populationSize",
                              "need at least 2 candidates");
                    else
                        params.populationSize = static_cast<std::size_t>(*num);
                }
            }
            if (const ordered_json* v = member(*pp, "fusion.projection", "generations",
                                               false, c)) {
                auto num = asUint(*v, "fusion.projection.generations", c);
                if (num) {
                    if (*num == 0)
                        c.add("fusion.projection.generations", "must be positive");
                    else
                        params.generations = static_cast<std::size_t>(*num);
                }
            }
            if (const ordered_json* v = member(*pp, "fusion.projection", "windowFactor",
                                               false, c)) {
                auto num = asNumber(*v, "fusion.projection.windowFactor", c);
                if (num) {
                    if (*num < 0.0)
                        c.add("fusion.projection.windowFactor", "must be non-negative");
                    else
                        params.windowFactor = *num;
                }
            }
            if (const ordered_json* v = member(*pp, "fusion.projection", "seed",
                                               false, c)) {
                auto num = asUint(*v, "fusion.projection.seed", c);
                if (num) params.seed = *num;
            }
        }
    }

    // ---- severity weights, history decay, rubric, classification ----
    if (const ordered_json* sw = sectionMember(doc, "$", "severityWeights", false, c)) {
        if (const ordered_json* bus = sectionMember(*sw, "severityWeights", "bus", false, c))
            parseSeverityGroup(*bus, "severityWeights.bus",
                               {"LIN", "CANL", "CANH", "FL", "MOST"},
                               out.severity.bus.data(), c);
        if (const ordered_json* infra =
                sectionMember(*sw, "severityWeights", "infrastructure", false, c))
            parseSeverityGroup(*infra, "severityWeights.infrastructure",
                               {"VANET", "WIFI", "CELLULAR"},
                               out.severity.infrastructure.data(), c);
        if (const ordered_json* attack =
                sectionMember(*sw, "severityWeights", "attack", false, c))
            parseSeverityGroup(*attack, "severityWeights.attack",
                               {"vehicle", "terminal", "network", "cloud"},
                               out.severity.attack.data(), c);
    }

    if (const ordered_json* history = sectionMember(doc, "$", "history", false, c)) {
        if (const ordered_json* v = member(*history, "history", "halfLifeYears",
                                           false, c)) {
            auto num = asNumber(*v, "history.halfLifeYears", c);
            if (num) {
                if (!(*num > 0.0))
                    c.add("history.halfLifeYears", "must be positive");
                else
                    out.halfLifeYears = *num;
            }
        }
    }

    if (const ordered_json* rubric = member(doc, "$", "severityRubric", false, c)) {
        if (!rubric->is_array()) {
            c.add("severityRubric", std::string("expected an array, got ") +
                                        typeName(*rubric));
        } else {
            for (std::size_t i = 0; i < rubric->size(); ++i) {
                std::string path = "severityRubric[" + std::to_string(i) + "]";
                const ordered_json& row = (*rubric)[i];
                RubricRow parsed;
                bool ok = true;
                const std::pair<const char*, std::string RubricRow::*> fields[] = {
                    {"grades", &RubricRow::grades},
                    {"safety", &RubricRow::safety},
                    {"privacy", &RubricRow::privacy},
                    {"financial", &RubricRow::financial},
                    {"operational", &RubricRow::operational}};
                for (const auto& [key, field] : fields) {
                    const ordered_json* v = member(row, path, key, true, c);
                    if (!v) {
                        ok = false;
                        continue;
                    }
                    auto s = asString(*v, path + "." + key, c);
                    if (!s) {
                        ok = false;
                        continue;
                    }
                    parsed.*field = *s;
                }
                if (ok) out.rubric.push_back(std::move(parsed));
            }
        }
    }

    if (const ordered_json* cls = sectionMember(doc, "$", "classification", false, c)) {
        if (const ordered_json* v = member(*cls, "classification", "rule", false, c)) {
            auto s = asString(*v, "classification.rule", c);
            if (s) {
                auto rule = assessment::ruleFromName(*s);
                if (!rule)
                    c.add("classification.rule",
                          "expected 'conservative', 'midpoint' or 'optimistic', got '" +
                              *s + "'");
                else
                    out.defaultRule = *rule;
            }
        }
    }

    if (!c.errors.empty()) {
        std::ostringstream msg;
        msg << "configuration invalid (" << c.errors.size()
            << (c.errors.size() == 1 ? " problem" : " problems") << "):";
        for (const std::string& e : c.errors) msg << "\n  - " << e;
        throw ConfigError(msg.str());
    }

    std::vector<std::string> problems = out.tree.validate();
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "configuration produced an inconsistent indicator tree:";
        for (const std::string& p : problems) msg << "\n  - " << p;
        throw ConfigError(msg.str());
    }
    return out;
}

LoadedConfig loadConfigFile(const std::filesystem::path& path, bool strictConsistency) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read configuration file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return loadConfigText(text.str(), strictConsistency);
}

}  // namespace vsrq::config
