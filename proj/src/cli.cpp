#include "vsrq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "vsrq/codemetrics.hpp"
#include "vsrq/evaluation.hpp"
#include "vsrq/indicators.hpp"
#include "vsrq/projection.hpp"
#include "vsrq/sysdesc.hpp"

namespace vsrq::cli {

using core::InputError;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string dumped(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json intervalJson(const core::Interval& v) {
    return ordered_json::array({v.lo(), v.hi()});
}

/// Component names covered by one judgment-matrix analysis.
std::vector<std::string> componentNames(const config::MatrixAnalysis& analysis) {
    std::vector<std::string> names;
    if (analysis.key == "index") {
        for (core::Index index : core::allIndices()) names.emplace_back(core::name(index));
        return names;
    }
    auto index = core::indexFromName(analysis.key);
    for (core::Sub sub : core::subsOf(*index)) names.emplace_back(core::name(sub));
    return names;
}

}  // namespace

std::uint64_t chooseSeed(const CommonOptions& common) {
    if (common.seed) return *common.seed;
    if (common.entropySeed) {
        std::random_device device;
        return (static_cast<std::uint64_t>(device()) << 32) ^ device();
    }
    return kDefaultSeed;
}

config::LoadedConfig resolveConfig(const CommonOptions& common) {
    if (common.configPath)
        return config::loadConfigFile(*common.configPath, common.strictConsistency);
    if (const char* dir = std::getenv(kConfigDirEnv)) {
        std::filesystem::path path = std::filesystem::path(dir) / "config.json";
        return config::loadConfigText(readFile(path), common.strictConsistency);
    }
    return config::loadConfigText(config::embeddedDefaultConfig(), common.strictConsistency);
}

clustering::SampleMatrix loadSamplesText(const std::string& jsonText) {
    ordered_json doc = ordered_json::parse(jsonText, nullptr, false);
    if (doc.is_discarded()) throw InputError("samples: document is not valid JSON");
    if (!doc.is_object()) throw InputError("samples: expected a JSON object");

    auto version = doc.find("schemaVersion");
    if (version == doc.end() || !version->is_number_integer() || version->get<int>() != 1)
        throw InputError("samples.schemaVersion: expected 1");

    auto columns = doc.find("columns");
    if (columns == doc.end() || !columns->is_array())
        throw InputError("samples.columns: expected an array of indicator names");
    std::vector<std::size_t> slotOfColumn;
    std::array<bool, core::kSubCount> seen{};
    for (const auto& entry : *columns) {
        if (!entry.is_string())
            throw InputError("samples.columns: entries must be indicator names");
        std::string name = entry.get<std::string>();
        auto sub = core::subFromName(name);
        if (!sub) throw InputError("samples.columns: unknown indicator '" + name + "'");
        auto slot = static_cast<std::size_t>(*sub);
        if (seen[slot]) throw InputError("samples.columns: duplicate indicator '" + name + "'");
        seen[slot] = true;
        slotOfColumn.push_back(slot);
    }
    if (slotOfColumn.size() != core::kSubCount) {
        std::string missing;
        for (core::Sub sub : core::allSubs()) {
            if (seen[static_cast<std::size_t>(sub)]) continue;
            if (!missing.empty()) missing += ", ";
            missing += core::name(sub);
        }
        throw InputError("samples.columns: missing indicators: " + missing);
    }

    auto rows = doc.find("rows");
    if (rows == doc.end() || !rows->is_array() || rows->empty())
        throw InputError("samples.rows: expected a non-empty array of sample rows");
    clustering::SampleMatrix data(rows->size(), core::kSubCount);
    std::size_t r = 0;
    for (const auto& row : *rows) {
        const std::string where = "samples.rows[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != core::kSubCount)
            throw InputError(where + ": expected " + std::to_string(core::kSubCount) +
                             " values, one per column");
        for (std::size_t c = 0; c < core::kSubCount; ++c) {
            if (!row[c].is_number())
                throw InputError(where + ": entries must be numbers in [0, 1]");
            double v = row[c].get<double>();
            if (!(v >= 0.0 && v <= 1.0))
                throw InputError(where + ": value " + fmt(v) + " outside [0, 1]");
            data.at(r, slotOfColumn[c]) = v;
        }
        ++r;
    }
    return data;
}

clustering::SampleMatrix loadSamplesFile(const std::filesystem::path& path) {
    return loadSamplesText(readFile(path));
}

DerivedWeights deriveWeights(const config::LoadedConfig& cfg,
                             const clustering::SampleMatrix* samples,
                             const CommonOptions& common) {
    DerivedWeights out;
    for (core::Index index : core::allIndices())
        out.weights.indexWeights[static_cast<std::size_t>(index)] =
            cfg.tree.at(index).intervalWeight;
    for (core::Sub sub : core::allSubs())
        out.weights.subWeights[static_cast<std::size_t>(sub)] = cfg.tree.at(sub).intervalWeight;
    if (samples == nullptr) {
        out.source = "subjective";
        return out;
    }

    FusionReport fusion;
    auto fcmParams = cfg.fusion.clustering.params;
    auto ppParams = cfg.fusion.projection;
    if (common.seed || common.entropySeed) {
        std::uint64_t seed = chooseSeed(common);
        fcmParams.seed = seed;
        ppParams.seed = seed;
    }
    fusion.clusteringSeed = fcmParams.seed;
    fusion.projectionSeed = ppParams.seed;

    if (cfg.fusion.rhoOverride) {
        fusion.rho = *cfg.fusion.rhoOverride;
        fusion.rhoSource = "override";
    } else if (cfg.fusion.clustering.enabled) {
        auto clustered = clustering::fuzzyCluster(*samples, fcmParams);
        fusion.rho = clustering::sensitivityCoefficient(clustered.memberships);
        fusion.rhoSource = "clustering";
    } else {
        fusion.rho = clustering::kDefaultSensitivity;
        fusion.rhoSource = "default";
    }

    // Data-driven weights per index group, each over the group's columns.
    for (core::Index index : core::allIndices()) {
        auto subs = core::subsOf(index);
        clustering::SampleMatrix group(samples->samples(), subs.size());
        for (std::size_t r = 0; r < samples->samples(); ++r)
            for (std::size_t c = 0; c < subs.size(); ++c)
                group.at(r, c) = samples->at(r, static_cast<std::size_t>(subs[c]));
        auto best = projection::optimizeDirection(group, ppParams);
        for (std::size_t c = 0; c < subs.size(); ++c)
            fusion.objectiveSub[static_cast<std::size_t>(subs[c])] = best.weights[c];
    }

    // Index layer: each index contributes the mean of its group's values.
    clustering::SampleMatrix byIndex(samples->samples(), core::kIndexCount);
    for (std::size_t r = 0; r < samples->samples(); ++r) {
        for (core::Index index : core::allIndices()) {
            auto subs = core::subsOf(index);
            double sum = 0.0;
            for (core::Sub sub : subs) sum += samples->at(r, static_cast<std::size_t>(sub));
            byIndex.at(r, static_cast<std::size_t>(index)) =
                sum / static_cast<double>(subs.size());
        }
    }
    auto bestIndex = projection::optimizeDirection(byIndex, ppParams);
    for (std::size_t i = 0; i < core::kIndexCount; ++i)
        fusion.objectiveIndex[i] = bestIndex.weights[i];

    // Blend subjective intervals with the data-driven weights, then rescale
    // each layer/group so its midpoints sum to 1 again.
    {
        std::vector<core::Interval> subjective(out.weights.indexWeights.begin(),
                                               out.weights.indexWeights.end());
        std::vector<double> objective(fusion.objectiveIndex.begin(),
                                      fusion.objectiveIndex.end());
        auto fused = assessment::renormalizeByMidpoints(
            assessment::fuseWeights(subjective, objective, fusion.rho));
        for (std::size_t i = 0; i < core::kIndexCount; ++i)
            out.weights.indexWeights[i] = fused[i];
    }
    for (core::Index index : core::allIndices()) {
        auto subs = core::subsOf(index);
        std::vector<core::Interval> subjective;
        std::vector<double> objective;
        for (core::Sub sub : subs) {
            subjective.push_back(out.weights.subWeights[static_cast<std::size_t>(sub)]);
            objective.push_back(fusion.objectiveSub[static_cast<std::size_t>(sub)]);
        }
        auto fused = assessment::renormalizeByMidpoints(
            assessment::fuseWeights(subjective, objective, fusion.rho));
        for (std::size_t c = 0; c < subs.size(); ++c)
            out.weights.subWeights[static_cast<std::size_t>(subs[c])] = fused[c];
    }

    out.source = "fused";
    out.fusion = fusion;
    return out;
}

namespace {

std::string scanText(const codemetrics::ScanReport& report) {
    struct Totals {
        std::int64_t files = 0, physical = 0, code = 0, blank = 0, comment = 0,
                     decisions = 0;
    };
    std::map<std::string, Totals> modules;
    Totals all;
    for (const auto& f : report.files) {
        for (Totals* t : {&modules[f.moduleId], &all}) {
            t->files += 1;
            t->physical += f.physicalLines;
            t->code += f.codeLines;
            t->blank += f.blankLines;
            t->comment += f.commentLines;
            t->decisions += f.decisionPoints;
        }
    }

    std::ostringstream os;
    os << "scanned " << report.files.size() << " files (" << report.skipped.size()
       << " skipped, " << report.errors.size() << " unreadable)\n";
    os << "\n"
       << std::left << std::setw(24) << "module" << std::right << std::setw(7) << "files"
       << std::setw(10) << "physical" << std::setw(8) << "code" << std::setw(8) << "blank"
       << std::setw(9) << "comment" << std::setw(11) << "decisions" << "\n";
    auto row = [&os](const std::string& name, const Totals& t) {
        os << std::left << std::setw(24) << name << std::right << std::setw(7) << t.files
           << std::setw(10) << t.physical << std::setw(8) << t.code << std::setw(8)
           << t.blank << std::setw(9) << t.comment << std::setw(11) << t.decisions << "\n";
    };
    for (const auto& [name, totals] : modules) row(name, totals);
    row("total", all);

    if (!report.errors.empty()) {
        os << "\nunreadable\n";
        for (const auto& e : report.errors) os << "  - " << e.path << ": " << e.message << "\n";
    }
    return os.str();
}

}  // namespace

RunOutput runScan(const ScanOptions& options) {
    std::error_code ec;
    if (!std::filesystem::is_directory(options.root, ec))
        throw InputError("scan root is not a directory: " + options.root.string());

    auto profile = options.profilePath
                       ? codemetrics::LanguageProfile::fromJsonText(readFile(*options.profilePath))
                       : codemetrics::LanguageProfile::cFamily();
    codemetrics::ModuleMap modules;
    if (options.moduleMapPath)
        modules = codemetrics::ModuleMap::fromJsonText(readFile(*options.moduleMapPath));

    auto report = codemetrics::scanTree(options.root, profile, modules);
    return RunOutput{report.toJsonText(), scanText(report)};
}

namespace {

ordered_json matrixJson(const config::MatrixAnalysis& analysis) {
    auto names = componentNames(analysis);
    ordered_json j;
    j["components"] = names;
    j["lambdaMax"] = analysis.ahp.lambdaMax;
    j["consistencyIndex"] = analysis.ahp.consistencyIndex;
    j["consistencyRatio"] = analysis.ahp.consistencyRatio;
    j["gateExceeded"] = analysis.gateExceeded;
    j["containsCrisp"] = analysis.containsCrisp;
    ordered_json crisp = ordered_json::object();
    ordered_json interval = ordered_json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
        crisp[names[i]] = analysis.ahp.weights[i];
        interval[names[i]] = intervalJson(analysis.interval[i]);
    }
    j["crisp"] = crisp;
    j["interval"] = interval;
    return j;
}

/// Keyed layer view over per-component values: the index layer plus one
/// entry per index group, in report order.
template <typename PerIndex, typename PerSub>
ordered_json layeredJson(const PerIndex& perIndex, const PerSub& perSub) {
    ordered_json j;
    ordered_json indexObj = ordered_json::object();
    for (core::Index index : core::allIndices())
        indexObj[std::string(core::name(index))] = perIndex(index);
    j["index"] = indexObj;
    for (core::Index index : core::allIndices()) {
        ordered_json group = ordered_json::object();
        for (core::Sub sub : core::subsOf(index))
            group[std::string(core::name(sub))] = perSub(sub);
        j[std::string(core::name(index))] = group;
    }
    return j;
}

std::string weightsText(const config::LoadedConfig& cfg, const DerivedWeights& derived,
                        bool strictConsistency) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    os << "weight derivation report\n";
    os << "spread " << cfg.spread << ", consistency gate "
       << (strictConsistency ? "strict" : "lenient") << "\n";

    for (const auto& analysis : cfg.matrices) {
        os << "\nmatrix " << analysis.key << ": lambda_max " << analysis.ahp.lambdaMax
           << ", CI " << analysis.ahp.consistencyIndex << ", CR "
           << analysis.ahp.consistencyRatio;
        if (analysis.gateExceeded) os << " (gate exceeded)";
        os << "\n";
        os << "  " << std::left << std::setw(8) << "component" << std::right
           << std::setw(12) << "crisp" << std::setw(14) << "interval.lo" << std::setw(14)
           << "interval.hi" << "\n";
        auto names = componentNames(analysis);
        for (std::size_t i = 0; i < names.size(); ++i) {
            os << "  " << std::left << std::setw(8) << names[i] << std::right
               << std::setw(12) << analysis.ahp.weights[i] << std::setw(14)
               << analysis.interval[i].lo() << std::setw(14) << analysis.interval[i].hi()
               << "\n";
        }
    }

    if (derived.fusion) {
        const auto& fusion = *derived.fusion;
        os << "\nfusion: rho " << fusion.rho << " (" << fusion.rhoSource
           << "), seeds clustering " << fusion.clusteringSeed << " / projection "
           << fusion.projectionSeed << "\n";
        auto layer = [&os](const std::string& title, const std::vector<std::string>& names,
                           const std::vector<double>& objective,
                           const std::vector<core::Interval>& fused) {
            os << "  " << title << "\n";
            os << "    " << std::left << std::setw(8) << "component" << std::right
               << std::setw(12) << "objective" << std::setw(12) << "fused.lo"
               << std::setw(12) << "fused.hi" << "\n";
            for (std::size_t i = 0; i < names.size(); ++i) {
                os << "    " << std::left << std::setw(8) << names[i] << std::right
                   << std::setw(12) << objective[i] << std::setw(12) << fused[i].lo()
                   << std::setw(12) << fused[i].hi() << "\n";
            }
        };
        {
            std::vector<std::string> names;
            std::vector<double> objective;
            std::vector<core::Interval> fused;
            for (core::Index index : core::allIndices()) {
                auto i = static_cast<std::size_t>(index);
                names.emplace_back(core::name(index));
                objective.push_back(fusion.objectiveIndex[i]);
                fused.push_back(derived.weights.indexWeights[i]);
            }
            layer("layer index", names, objective, fused);
        }
        for (core::Index index : core::allIndices()) {
            std::vector<std::string> names;
            std::vector<double> objective;
            std::vector<core::Interval> fused;
            for (core::Sub sub : core::subsOf(index)) {
                auto s = static_cast<std::size_t>(sub);
                names.emplace_back(core::name(sub));
                objective.push_back(fusion.objectiveSub[s]);
                fused.push_back(derived.weights.subWeights[s]);
            }
            layer("group " + std::string(core::name(index)), names, objective, fused);
        }
    }

    if (!cfg.warnings.empty()) {
        os << "\nwarnings\n";
        for (const auto& w : cfg.warnings) os << "  - " << w << "\n";
    }
    return os.str();
}

}  // namespace

RunOutput runWeights(const CommonOptions& common,
                     const std::optional<std::filesystem::path>& samplesPath) {
    auto cfg = resolveConfig(common);
    std::optional<clustering::SampleMatrix> samples;
    if (samplesPath) samples = loadSamplesFile(*samplesPath);
    auto derived = deriveWeights(cfg, samples ? &*samples : nullptr, common);

    ordered_json j;
    j["schemaVersion"] = 1;
    j["strictConsistency"] = common.strictConsistency;
    j["spread"] = cfg.spread;
    ordered_json matrices = ordered_json::object();
    for (const auto& analysis : cfg.matrices) matrices[analysis.key] = matrixJson(analysis);
    j["matrices"] = matrices;
    if (derived.fusion) {
        const auto& fusion = *derived.fusion;
        ordered_json f;
        f["rho"] = fusion.rho;
        f["rhoSource"] = fusion.rhoSource;
        f["seeds"] = ordered_json{{"clustering", fusion.clusteringSeed},
                                  {"projection", fusion.projectionSeed}};
        f["objective"] = layeredJson(
            [&fusion](core::Index index) {
                return ordered_json(fusion.objectiveIndex[static_cast<std::size_t>(index)]);
            },
            [&fusion](core::Sub sub) {
                return ordered_json(fusion.objectiveSub[static_cast<std::size_t>(sub)]);
            });
        f["fused"] = layeredJson(
            [&derived](core::Index index) {
                return intervalJson(
                    derived.weights.indexWeights[static_cast<std::size_t>(index)]);
            },
            [&derived](core::Sub sub) {
                return intervalJson(derived.weights.subWeights[static_cast<std::size_t>(sub)]);
            });
        j["fusion"] = f;
    } else {
        j["fusion"] = nullptr;
    }
    j["warnings"] = cfg.warnings;

    return RunOutput{dumped(j), weightsText(cfg, derived, common.strictConsistency)};
}

namespace {

/// Second-order risk values computable from the description's sections.
std::map<core::Sub, double> rawIndicatorValues(const sysdesc::SystemDescription& description,
                                               const config::LoadedConfig& cfg) {
    std::map<core::Sub, double> raw;

    for (const auto& [sub, input] : description.couplingGraphs) {
        indicators::CouplingGraph graph(input.ecus);
        for (const auto& [from, to] : input.calls) graph.addCall(from, to);
        raw[sub] = indicators::ecuCoupling(graph);
    }

    if (description.communication) {
        auto inventory = *description.communication;
        inventory.busSeverity = cfg.severity.bus;
        inventory.infraSeverity = cfg.severity.infrastructure;
        raw[core::Sub::IVCR] = indicators::inVehicleCommRisk(inventory);
        raw[core::Sub::U2VCR] = indicators::userToVehicleCommRisk(inventory);
        raw[core::Sub::V2VCR] = indicators::vehicleToVehicleCommRisk(inventory);
        raw[core::Sub::V2ICR] = indicators::vehicleToInfraCommRisk(inventory);
    }

    if (description.modules) {
        auto risks = indicators::codeComplexityRisks(*description.modules);
        raw[core::Sub::LOCM] = risks.locRisk;
        raw[core::Sub::HCM] = risks.halsteadRisk;
        raw[core::Sub::CCM] = risks.cyclomaticRisk;
    }

    if (description.history) {
        auto records = *description.history;
        records.halfLifeYears = cfg.halfLifeYears;
        records.attacks.severity = cfg.severity.attack;
        auto risks = indicators::historyRisks(records);
        raw[core::Sub::HPSF] = risks.recallRisk;
        raw[core::Sub::HPESF] = risks.performanceRisk;
        raw[core::Sub::HPIS] = risks.attackRisk;
    }

    return raw;
}

}  // namespace

RunOutput runAssess(const CommonOptions& common, const AssessOptions& options) {
    auto cfg = resolveConfig(common);
    auto description = sysdesc::loadDescriptionFile(options.descriptionPath);

    assessment::AssessmentReport report;
    report.systemName = description.name;
    report.seed = chooseSeed(common);
    report.rule = options.rule ? *options.rule : cfg.defaultRule;
    report.warnings = cfg.warnings;
    if (description.severity)
        report.damageSeverity = indicators::damageSeverity(*description.severity);

    if (description.indexAggregates) {
        if (options.samplesPath)
            throw InputError(
                "samples cannot be combined with index aggregates: the "
                "sub-indicator layer those weights apply to is skipped");
        report.aggregateMode = true;
        report.weightSource = "subjective";
        auto derived = deriveWeights(cfg, nullptr, common);
        report.breakdown = assessment::computeVsrFromAggregates(*description.indexAggregates,
                                                                derived.weights.indexWeights);
    } else {
        report.aggregateMode = false;
        auto raw = rawIndicatorValues(description, cfg);

        std::string unbounded;
        for (const auto& [sub, value] : raw) {
            (void)value;
            if (description.bounds.find(sub) == description.bounds.end()) {
                if (!unbounded.empty()) unbounded += ", ";
                unbounded += core::IndicatorId(sub).toString();
            }
        }
        if (!unbounded.empty())
            throw InputError("missing normalization bounds for: " + unbounded);

        assessment::NormalizedIndicators values;
        for (const auto& [sub, value] : raw) {
            const auto& bound = description.bounds.at(sub);
            double normalized;
            try {
                normalized = assessment::normalize(value, bound.first, bound.second,
                                                   cfg.tree.at(sub).orientation);
            } catch (const InputError& e) {
                throw InputError(core::IndicatorId(sub).toString() + ": " + e.what());
            }
            values.set(sub, normalized);
            auto slot = static_cast<std::size_t>(sub);
            report.rawValues[slot] = value;
            report.normalizedValues[slot] = normalized;
        }

        std::optional<clustering::SampleMatrix> samples;
        if (options.samplesPath) samples = loadSamplesFile(*options.samplesPath);
        auto derived = deriveWeights(cfg, samples ? &*samples : nullptr, common);
        report.weightSource = derived.source;
        if (derived.fusion) report.rho = derived.fusion->rho;

        report.breakdown = assessment::computeVsr(values, derived.weights);
        report.ranking = assessment::rankComponents(values, derived.weights);
    }

    for (core::Index index : core::allIndices()) {
        auto i = static_cast<std::size_t>(index);
        double mid = report.breakdown.index[i].aggregate.midpoint();
        if (mid >= 0.0 && mid <= 1.0)
            report.indexBands[i] = core::bandOf(mid, cfg.tree.at(index).bands).label;
    }

    report.classification = assessment::classify(report.breakdown.vsr, cfg.overallBands,
                                                 report.rule);

    return RunOutput{report.toJsonText(), report.toText()};
}

namespace {

std::string evalText(const evaluation::ConfusionCounts& counts,
                     const evaluation::ClassifierMetrics& m,
                     const std::vector<evaluation::CurvePoint>* curve,
                     const std::string& predictionSource) {
    std::ostringstream os;
    os << "evaluation of " << counts.total() << " components (predictions from "
       << predictionSource << ")\n";
    os << "confusion: tp " << counts.truePositives << ", fp " << counts.falsePositives
       << ", tn " << counts.trueNegatives << ", fn " << counts.falseNegatives << "\n";
    os << "accuracy   " << evaluation::formatPercent(m.accuracy) << "\n";
    os << "precision  " << evaluation::formatPercent(m.precision) << "\n";
    os << "recall     " << evaluation::formatPercent(m.recall) << "\n";
    if (curve != nullptr) {
        os << "\nrisk ratio curve\n";
        os << "bugCount,meanIndicatorRatio,components\n";
        for (const auto& point : *curve)
            os << point.bugCount << "," << point.meanIndicatorRatio << ","
               << point.components << "\n";
    }
    return os.str();
}

}  // namespace

RunOutput runEval(const CommonOptions& common, const EvalOptions& options) {
    auto corpus = evaluation::LabeledCorpus::fromDsvText(readFile(options.corpusPath));
    if (options.predictBand && !options.scoresPath)
        throw InputError("a prediction band needs component scores to band");

    std::string predictionSource = "corpus labels";
    std::optional<std::vector<evaluation::CurvePoint>> curve;
    core::BandLabel threshold = options.predictBand.value_or(core::BandLabel::Serious);
    if (options.scoresPath) {
        auto cfg = resolveConfig(common);
        auto scores = evaluation::scoresFromDsvText(readFile(*options.scoresPath));
        for (const auto& [id, score] : scores) {
            if (!(score >= 0.0 && score <= 1.0))
                throw InputError("scores: component '" + id + "' has score " + fmt(score) +
                                 " outside [0, 1]");
        }
        corpus = evaluation::predictFromScores(corpus, scores, cfg.overallBands, threshold);
        curve = evaluation::riskRatioCurve(corpus, scores, cfg.overallBands);
        predictionSource = "scores (risky at band >= " + std::string(core::name(threshold)) + ")";
    }

    auto counts = evaluation::confusion(corpus);
    auto m = evaluation::metrics(counts);

    ordered_json j;
    j["schemaVersion"] = 1;
    j["components"] = counts.total();
    j["predictionSource"] = options.scoresPath ? "scores" : "corpus";
    if (options.scoresPath)
        j["threshold"] = std::string(core::name(threshold));
    else
        j["threshold"] = nullptr;
    j["counts"] = ordered_json{{"truePositives", counts.truePositives},
                               {"falsePositives", counts.falsePositives},
                               {"trueNegatives", counts.trueNegatives},
                               {"falseNegatives", counts.falseNegatives}};
    auto metricJson = [](const std::optional<double>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    j["metrics"] = ordered_json{{"accuracy", metricJson(m.accuracy)},
                                {"precision", metricJson(m.precision)},
                                {"recall", metricJson(m.recall)}};
    j["formatted"] = ordered_json{{"accuracy", evaluation::formatPercent(m.accuracy)},
                                  {"precision", evaluation::formatPercent(m.precision)},
                                  {"recall", evaluation::formatPercent(m.recall)}};
    if (curve) {
        ordered_json points = ordered_json::array();
        for (const auto& point : *curve)
            points.push_back(ordered_json{{"bugCount", point.bugCount},
                                          {"meanIndicatorRatio", point.meanIndicatorRatio},
                                          {"components", point.components}});
        j["curve"] = points;
    } else {
        j["curve"] = nullptr;
    }

    return RunOutput{dumped(j), evalText(counts, m, curve ? &*curve : nullptr,
                                         predictionSource)};
}

}  // namespace vsrq::cli
