#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vsrq/cli.hpp"

namespace {

struct CommonFlags {
    std::string config;
    bool strictConsistency = true;
    std::optional<std::uint64_t> seed;
    bool entropySeed = false;
};

void addConfigOptions(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config, "Configuration file (JSON)")
        ->type_name("PATH");
    cmd->add_flag("--strict-consistency,!--no-strict-consistency", flags.strictConsistency,
                  "Treat a judgment-matrix consistency ratio at or above 0.1 as an error "
                  "(default) instead of a warning");
}

void addSeedOptions(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Override every stage seed")->type_name("N");
    cmd->add_flag("--entropy-seed", flags.entropySeed,
                  "Draw the run seed from system entropy instead of the fixed default");
}

vsrq::cli::CommonOptions toCommon(const CommonFlags& flags) {
    vsrq::cli::CommonOptions common;
    if (!flags.config.empty()) common.configPath = flags.config;
    common.strictConsistency = flags.strictConsistency;
    common.seed = flags.seed;
    common.entropySeed = flags.entropySeed;
    return common;
}

std::optional<std::filesystem::path> pathOf(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return std::filesystem::path(s);
}

/// No --out: the JSON report goes to stdout. With --out: the JSON report is
/// written there and the text rendering goes to stdout.
void emit(const vsrq::cli::RunOutput& output, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << output.json;
        return;
    }
    std::ofstream file(outPath, std::ios::binary);
    file << output.json;
    file.flush();
    if (!file) throw vsrq::core::InputError("cannot write file: " + outPath);
    std::cout << output.text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vsrq: interval security-risk scoring for vehicle intelligent connected systems"};
    app.set_version_flag("--version", "vsrq 1.0.0");
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "Scan a source tree into per-file code metrics");
    std::string scanRoot;
    std::string scanProfile;
    std::string scanModuleMap;
    std::string scanOut;
    scan->add_option("root", scanRoot, "Source tree to scan")->required()->type_name("DIR");
    scan->add_option("--profile", scanProfile, "Language profile (JSON)")->type_name("PATH");
    scan->add_option("--module-map", scanModuleMap, "Path-prefix to module-id rules (JSON)")
        ->type_name("PATH");
    scan->add_option("--out", scanOut, "Write the JSON report here; print text instead")
        ->type_name("PATH");

    // weights
    auto* weights = app.add_subcommand(
        "weights", "Derive crisp and interval indicator weights from the configuration");
    CommonFlags weightsFlags;
    std::string weightsSamples;
    std::string weightsOut;
    addConfigOptions(weights, weightsFlags);
    addSeedOptions(weights, weightsFlags);
    weights->add_option("--samples", weightsSamples,
                        "Sample matrix (JSON) enabling clustering and projection calibration")
        ->type_name("PATH");
    weights->add_option("--out", weightsOut, "Write the JSON report here; print text instead")
        ->type_name("PATH");

    // assess
    auto* assess =
        app.add_subcommand("assess", "Score a system description into a risk report");
    CommonFlags assessFlags;
    std::string assessDescription;
    std::string assessSamples;
    std::string assessRule;
    std::string assessOut;
    assess->add_option("description", assessDescription, "System description (JSON)")
        ->required()
        ->type_name("PATH");
    addConfigOptions(assess, assessFlags);
    addSeedOptions(assess, assessFlags);
    assess->add_option("--samples", assessSamples,
                       "Sample matrix (JSON) enabling clustering and projection calibration")
        ->type_name("PATH");
    assess
        ->add_option("--rule", assessRule,
                     "Classification rule: conservative, midpoint, or optimistic")
        ->type_name("RULE");
    assess->add_option("--out", assessOut, "Write the JSON report here; print text instead")
        ->type_name("PATH");

    // eval
    auto* eval = app.add_subcommand(
        "eval", "Evaluate risky-component predictions against a labeled corpus");
    CommonFlags evalFlags;
    std::string evalCorpus;
    std::string evalScores;
    std::string evalBand;
    std::string evalOut;
    eval->add_option("corpus", evalCorpus, "Labeled components (DSV)")
        ->required()
        ->type_name("PATH");
    eval->add_option("--scores", evalScores,
                     "Component scores (DSV); re-derives predictions by banding")
        ->type_name("PATH");
    eval->add_option("--predict-band", evalBand,
                     "Band at or above which a scored component counts as risky")
        ->type_name("BAND");
    addConfigOptions(eval, evalFlags);
    eval->add_option("--out", evalOut, "Write the JSON report here; print text instead")
        ->type_name("PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (scan->parsed()) {
            vsrq::cli::ScanOptions options;
            options.root = scanRoot;
            options.profilePath = pathOf(scanProfile);
            options.moduleMapPath = pathOf(scanModuleMap);
            emit(vsrq::cli::runScan(options), scanOut);
        } else if (weights->parsed()) {
            emit(vsrq::cli::runWeights(toCommon(weightsFlags), pathOf(weightsSamples)),
                 weightsOut);
        } else if (assess->parsed()) {
            vsrq::cli::AssessOptions options;
            options.descriptionPath = assessDescription;
            options.samplesPath = pathOf(assessSamples);
            if (!assessRule.empty()) {
                auto rule = vsrq::assessment::ruleFromName(assessRule);
                if (!rule)
                    throw vsrq::core::InputError(
                        "unknown rule '" + assessRule +
                        "'; expected conservative, midpoint, or optimistic");
                options.rule = *rule;
            }
            emit(vsrq::cli::runAssess(toCommon(assessFlags), options), assessOut);
        } else if (eval->parsed()) {
            vsrq::cli::EvalOptions options;
            options.corpusPath = evalCorpus;
            options.scoresPath = pathOf(evalScores);
            if (!evalBand.empty()) {
                auto band = vsrq::core::bandLabelFromName(evalBand);
                if (!band)
                    throw vsrq::core::InputError(
                        "unknown band '" + evalBand +
                        "'; expected Normal, Slight, SlightlySerious, Serious, or "
                        "ExtremelySerious");
                options.predictBand = *band;
            }
            emit(vsrq::cli::runEval(toCommon(evalFlags), options), evalOut);
        }
        return 0;
    } catch (const vsrq::core::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vsrq::core::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
