#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int exitCode = -1;
    std::string out;
    std::string err;
};

std::string fixture(const std::string& name) {
    return std::string(VSRQ_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

const fs::path& tempRoot() {
    static const fs::path root = [] {
        fs::path p = fs::temp_directory_path() /
                     ("vsrq_cli_tests_" + std::to_string(::getpid()));
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return root;
}

fs::path tempFile(const std::string& stem) {
    static int counter = 0;
    return tempRoot() / (stem + "_" + std::to_string(counter++));
}

/// Runs the tool through the shell with VSRQ_CONFIG_DIR scrubbed (pass an
/// `env` prefix of your own to override).
CliResult runCli(const std::string& args,
                 const std::string& envPrefix = "env -u VSRQ_CONFIG_DIR") {
    fs::path outPath = tempFile("stdout");
    fs::path errPath = tempFile("stderr");
    std::string cmd = envPrefix + " '" + VSRQ_CLI_PATH + "' " + args + " > '" +
                      outPath.string() + "' 2> '" + errPath.string() + "'";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outPath);
    r.err = slurp(errPath);
    return r;
}

json parsed(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("version flag") {
    CliResult r = runCli("--version");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "vsrq 1.0.0\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(runCli("frobnicate").exitCode == 2);
    CHECK(runCli("").exitCode == 2);
    CHECK(runCli("assess").exitCode == 2);  // missing required description
}

TEST_CASE("scan reproduces the committed golden report") {
    std::string args = "scan '" + fixture("scantree") + "' --module-map '" +
                       fixture("modmap.json") + "'";

    SUBCASE("JSON on stdout, byte for byte") {
        CliResult r = runCli(args);
        CHECK(r.exitCode == 0);
        CHECK(r.out == slurp(fixture("golden_scan.json")));
    }
    SUBCASE("--out writes the JSON and prints a text summary") {
        fs::path out = tempFile("scan_report");
        CliResult r = runCli(args + " --out '" + out.string() + "'");
        CHECK(r.exitCode == 0);
        CHECK(slurp(out) == slurp(fixture("golden_scan.json")));
        CHECK(r.out.find("scanned 2 files (1 skipped, 0 unreadable)") !=
              std::string::npos);
        CHECK(r.out.find("decisions") != std::string::npos);
    }
    SUBCASE("rescans are deterministic") {
        CHECK(runCli(args).out == runCli(args).out);
    }
}

TEST_CASE("scan diagnoses a missing root") {
    CliResult r = runCli("scan /nonexistent_dir_xyz");
    CHECK(r.exitCode == 2);
    CHECK(r.err.find("scan root is not a directory: /nonexistent_dir_xyz") !=
          std::string::npos);
}

TEST_CASE("scan honors a custom language profile") {
    CliResult r = runCli("scan '" + fixture("footree") + "' --profile '" +
                         fixture("profile_foo.json") + "'");
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    REQUIRE(d["files"].size() == 1);
    const json& f = d["files"][0];
    CHECK(f["path"] == "m.foo");
    CHECK(f["lines"]["total"] == 3);
    CHECK(f["lines"]["code"] == 2);
    CHECK(f["lines"]["comment"] == 1);
    CHECK(f["halstead"]["distinctOperators"] == 9);
    CHECK(f["halstead"]["distinctOperands"] == 3);
    CHECK(f["halstead"]["totalOperators"] == 12);
    CHECK(f["halstead"]["totalOperands"] == 5);
    CHECK(f["decisionPoints"] == 2);
}

TEST_CASE("weights reports the derived weight tables") {
    CliResult r = runCli("weights");
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    CHECK(d["schemaVersion"] == 1);
    CHECK(d["strictConsistency"] == true);
    CHECK(d["spread"] == 0.15);
    CHECK(d["fusion"].is_null());
    CHECK_FALSE(d["warnings"].empty());

    REQUIRE(d["matrices"].size() == 5);
    const json& index = d["matrices"]["index"];
    CHECK(index["components"] ==
          json::array({"ECR", "VCR", "VCCR", "VHIR"}));
    CHECK(index["gateExceeded"] == false);
    CHECK(index["containsCrisp"] == true);
    CHECK(index["crisp"]["ECR"].get<double>() ==
          doctest::Approx(0.36365938511044005).epsilon(1e-9));
    CHECK(index["interval"]["ECR"][0].get<double>() ==
          doctest::Approx(0.31550738183206467).epsilon(1e-9));
    CHECK(index["interval"]["ECR"][1].get<double>() ==
          doctest::Approx(0.416497470447594).epsilon(1e-9));
    CHECK(index["consistencyRatio"].get<double>() < 0.1);
    CHECK(d["matrices"]["ECR"]["components"].size() == 8);
}

TEST_CASE("weights with samples calibrates the blend") {
    std::string args = "weights --samples '" + fixture("samples.json") + "'";
    CliResult r = runCli(args);
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    const json& fusion = d["fusion"];
    REQUIRE_FALSE(fusion.is_null());
    CHECK(fusion["rhoSource"] == "clustering");
    CHECK(fusion["rho"].get<double>() ==
          doctest::Approx(0.9842750493582489).epsilon(1e-12));
    CHECK(fusion["seeds"]["clustering"] == 42);
    CHECK(fusion["seeds"]["projection"] == 42);

    double midpointSum = 0.0;
    for (const auto& [key, bounds] : fusion["fused"]["index"].items()) {
        (void)key;
        midpointSum += (bounds[0].get<double>() + bounds[1].get<double>()) / 2.0;
    }
    CHECK(midpointSum == doctest::Approx(1.0).epsilon(1e-9));

    double objectiveSum = 0.0;
    for (const auto& [key, value] : fusion["objective"]["index"].items()) {
        (void)key;
        CHECK(value.get<double>() > 0.0);
        objectiveSum += value.get<double>();
    }
    CHECK(objectiveSum == doctest::Approx(1.0).epsilon(1e-9));

    SUBCASE("same seed, same bytes") {
        CHECK(runCli(args).out == r.out);
    }
    SUBCASE("--seed overrides both stage seeds") {
        json d7 = parsed(runCli(args + " --seed 7").out);
        CHECK(d7["fusion"]["seeds"]["clustering"] == 7);
        CHECK(d7["fusion"]["seeds"]["projection"] == 7);
        CHECK(d7["fusion"]["rho"].get<double>() ==
              doctest::Approx(0.9842750493613198).epsilon(1e-12));
    }
    SUBCASE("--entropy-seed still produces a well-formed report") {
        json de = parsed(runCli(args + " --entropy-seed").out);
        CHECK(de["fusion"]["seeds"]["clustering"] ==
              de["fusion"]["seeds"]["projection"]);
    }
}

TEST_CASE("assess scores per-index aggregates") {
    std::string args = "assess '" + fixture("openpilot_aggregates.json") + "'";
    CliResult r = runCli(args);
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    CHECK(d["system"] == "openpilot-style driving assistant");
    CHECK(d["mode"] == "aggregates");
    CHECK(d["weightSource"] == "subjective");
    CHECK(d["rule"] == "conservative");
    CHECK(d["rho"].is_null());
    CHECK(d["damageSeverity"].is_null());
    CHECK(d["ranking"].empty());
    CHECK(d["vsr"]["interval"][0].get<double>() ==
          doctest::Approx(0.5220070279553439).epsilon(1e-12));
    CHECK(d["vsr"]["interval"][1].get<double>() ==
          doctest::Approx(0.9557877430239726).epsilon(1e-12));
    CHECK(d["vsr"]["midpoint"].get<double>() ==
          doctest::Approx(0.7388973854896583).epsilon(1e-12));
    CHECK(d["state"] == "Dangerous");
    CHECK(d["indices"]["ECR"]["band"] == "ExtremelySerious");
    CHECK(d["indices"]["VCR"]["band"] == "Serious");
    CHECK(d["indices"]["VCCR"]["band"] == "ExtremelySerious");
    CHECK(d["indices"]["VHIR"]["band"] == "SlightlySerious");

    SUBCASE("the midpoint rule reads the same interval as critical") {
        json dm = parsed(runCli(args + " --rule midpoint").out);
        CHECK(dm["rule"] == "midpoint");
        CHECK(dm["state"] == "Critical");
        CHECK(dm["vsr"]["decisionValue"].get<double>() ==
              doctest::Approx(0.7388973854896583).epsilon(1e-12));
    }
    SUBCASE("repeated runs are byte-identical") {
        CHECK(runCli(args).out == r.out);
    }
}

TEST_CASE("assess scores a full system description") {
    CliResult r = runCli("assess '" + fixture("system_full.json") + "'");
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    CHECK(d["system"] == "demo connected sedan");
    CHECK(d["seed"] == 42);
    CHECK(d["mode"] == "full");
    CHECK(d["weightSource"] == "subjective");
    CHECK(d["damageSeverity"] == 6.0);

    CHECK(d["indicators"]["EMCR"]["raw"] == 3.0);
    CHECK(d["indicators"]["EMCR"]["normalized"].get<double>() ==
          doctest::Approx(0.3).epsilon(1e-12));
    CHECK(d["indicators"]["IVCR"]["raw"] == 12.0);
    CHECK(d["indicators"]["IVCR"]["normalized"].get<double>() ==
          doctest::Approx(0.6).epsilon(1e-12));
    CHECK(d["indicators"]["HCM"]["raw"].get<double>() ==
          doctest::Approx(9.25116555473718).epsilon(1e-12));
    CHECK(d["indicators"]["CCM"]["raw"] == 202.0);
    CHECK(d["indicators"]["CCM"]["normalized"].get<double>() ==
          doctest::Approx(0.505).epsilon(1e-12));
    CHECK(d["indicators"]["HPSF"]["raw"] == 7.0);

    CHECK(d["vsr"]["interval"][0].get<double>() ==
          doctest::Approx(0.3003829574954642).epsilon(1e-12));
    CHECK(d["vsr"]["interval"][1].get<double>() ==
          doctest::Approx(0.5453580926607358).epsilon(1e-12));
    CHECK(d["state"] == "Critical");

    REQUIRE_FALSE(d["ranking"].empty());
    const json& last = d["ranking"].back();
    CHECK(last["component"] == "LKCR");
    CHECK(last["contribution"].get<double>() ==
          doctest::Approx(0.0035090065673904765).epsilon(1e-12));

    bool seamWarned = false;
    for (const auto& w : d["warnings"])
        if (w.get<std::string>().find("band seam repaired") != std::string::npos)
            seamWarned = true;
    CHECK(seamWarned);
}

TEST_CASE("assess scores an all-quiet description as steady") {
    json d = parsed(runCli("assess '" + fixture("system_zero.json") + "'").out);
    CHECK(d["vsr"]["interval"][0] == 0.0);
    CHECK(d["vsr"]["interval"][1] == 0.0);
    CHECK(d["state"] == "Steady");
    CHECK(d["damageSeverity"].is_null());
}

TEST_CASE("assess fuses weights when samples are supplied") {
    std::string args = "assess '" + fixture("system_full.json") + "' --samples '" +
                       fixture("samples.json") + "'";
    CliResult r = runCli(args);
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    CHECK(d["weightSource"] == "fused");
    CHECK(d["rho"].get<double>() ==
          doctest::Approx(0.9842750493582489).epsilon(1e-12));
    CHECK(d["vsr"]["interval"][0].get<double>() ==
          doctest::Approx(0.2967571956541301).epsilon(1e-12));
    CHECK(d["vsr"]["interval"][1].get<double>() ==
          doctest::Approx(0.5336852631364537).epsilon(1e-12));
    CHECK(d["state"] == "Critical");

    SUBCASE("two seeded runs emit identical bytes") {
        CHECK(runCli(args).out == r.out);
    }
}

TEST_CASE("assess rejects inconsistent input combinations") {
    SUBCASE("a description missing a whole section lists the gaps") {
        json doc = parsed(slurp(fixture("system_full.json")));
        doc.erase("communication");
        fs::path path = tempFile("no_comm");
        spit(path, doc.dump(2));
        CliResult r = runCli("assess '" + path.string() + "'");
        CHECK(r.exitCode == 2);
        CHECK(r.err.find("missing indicators: VCR/IVCR, VCR/U2VCR, VCR/V2VCR, "
                         "VCR/V2ICR") != std::string::npos);
    }
    SUBCASE("samples make no sense for aggregate-level input") {
        CliResult r = runCli("assess '" + fixture("openpilot_aggregates.json") +
                             "' --samples '" + fixture("samples.json") + "'");
        CHECK(r.exitCode == 2);
        CHECK(r.err.find("samples cannot be combined with index aggregates") !=
              std::string::npos);
    }
    SUBCASE("an unknown rule is rejected with the valid choices") {
        CliResult r =
            runCli("assess '" + fixture("system_full.json") + "' --rule pessimistic");
        CHECK(r.exitCode == 2);
        CHECK(r.err.find("unknown rule 'pessimistic'") != std::string::npos);
    }
}

TEST_CASE("assess --out writes the JSON and prints the text rendering") {
    fs::path out = tempFile("assess_report");
    CliResult r = runCli("assess '" + fixture("system_full.json") + "' --out '" +
                         out.string() + "'");
    CHECK(r.exitCode == 0);
    json d = parsed(slurp(out));
    CHECK(d["state"] == "Critical");
    CHECK(r.out.find("security risk assessment: demo connected sedan") !=
          std::string::npos);
    CHECK(r.out.find("vehicle state: Critical (decision value") != std::string::npos);
    CHECK(r.out.find("damage severity grade: 6") != std::string::npos);
}

TEST_CASE("configuration is discovered from the environment directory") {
    fs::path dir = tempRoot() / "configdir";
    fs::create_directories(dir);
    json cfg = parsed(slurp(std::string(VSRQ_DEFAULTS_DIR) + "/config.json"));
    cfg["classification"]["rule"] = "midpoint";
    spit(dir / "config.json", cfg.dump(2));

    std::string assessArgs = "assess '" + fixture("openpilot_aggregates.json") + "'";
    json viaEnv = parsed(
        runCli(assessArgs, "env VSRQ_CONFIG_DIR='" + dir.string() + "'").out);
    CHECK(viaEnv["rule"] == "midpoint");
    CHECK(viaEnv["state"] == "Critical");

    // An explicit --config outranks the environment directory.
    json viaFlag = parsed(runCli(assessArgs + " --config '" +
                                     std::string(VSRQ_DEFAULTS_DIR) + "/config.json'",
                                 "env VSRQ_CONFIG_DIR='" + dir.string() + "'")
                              .out);
    CHECK(viaFlag["rule"] == "conservative");
    CHECK(viaFlag["state"] == "Dangerous");
}

TEST_CASE("consistency gate strictness is a CLI switch") {
    json cfg = parsed(slurp(std::string(VSRQ_DEFAULTS_DIR) + "/config.json"));
    cfg["weighting"]["spread"] = 0.5;
    cfg["weighting"]["matrices"]["VCCR"] = json::array(
        {{1.0, 2.0, 6.0}, {0.5, 1.0, 1.0}, {1.0 / 6.0, 1.0, 1.0}});
    fs::path path = tempFile("gate_cfg");
    spit(path, cfg.dump(2));

    std::string args =
        "assess '" + fixture("system_full.json") + "' --config '" + path.string() + "'";
    CliResult strict = runCli(args);
    CHECK(strict.exitCode == 2);
    CHECK(strict.err.find("consistency ratio") != std::string::npos);
    CHECK(strict.err.find("0.1 acceptance gate") != std::string::npos);

    CliResult lenient = runCli(args + " --no-strict-consistency");
    CHECK(lenient.exitCode == 0);
    json d = parsed(lenient.out);
    bool warned = false;
    for (const auto& w : d["warnings"])
        if (w.get<std::string>().find("accepted leniently") != std::string::npos)
            warned = true;
    CHECK(warned);
}

TEST_CASE("eval grades corpus-recorded predictions") {
    CliResult r = runCli("eval '" + fixture("corpus_small.dsv") + "'");
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    CHECK(d["components"] == 6);
    CHECK(d["predictionSource"] == "corpus");
    CHECK(d["threshold"].is_null());
    CHECK(d["counts"]["truePositives"] == 0);
    CHECK(d["counts"]["falseNegatives"] == 4);
    CHECK(d["formatted"]["accuracy"] == "33.33");
    CHECK(d["formatted"]["precision"] == "undefined");
    CHECK(d["formatted"]["recall"] == "0.00");
    CHECK(d["metrics"]["precision"].is_null());
    CHECK(d["curve"].is_null());
}

TEST_CASE("eval re-predicts from scores and draws the bug curve") {
    std::string args = "eval '" + fixture("corpus_small.dsv") + "' --scores '" +
                       fixture("scores_small.dsv") + "'";
    CliResult r = runCli(args);
    CHECK(r.exitCode == 0);
    json d = parsed(r.out);
    CHECK(d["predictionSource"] == "scores");
    CHECK(d["threshold"] == "Serious");
    CHECK(d["counts"]["truePositives"] == 3);
    CHECK(d["counts"]["falsePositives"] == 0);
    CHECK(d["counts"]["trueNegatives"] == 2);
    CHECK(d["counts"]["falseNegatives"] == 1);
    CHECK(d["formatted"]["accuracy"] == "83.33");
    CHECK(d["formatted"]["precision"] == "100.00");
    CHECK(d["formatted"]["recall"] == "75.00");

    REQUIRE(d["curve"].size() == 4);
    CHECK(d["curve"][0]["bugCount"] == 0);
    CHECK(d["curve"][0]["meanIndicatorRatio"].get<double>() ==
          doctest::Approx(0.385).epsilon(1e-12));
    CHECK(d["curve"][0]["components"] == 2);
    CHECK(d["curve"][2]["meanIndicatorRatio"].get<double>() ==
          doctest::Approx(0.9515).epsilon(1e-12));
    CHECK(d["curve"][3]["bugCount"] == 5);
    CHECK(d["curve"][3]["meanIndicatorRatio"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("a stricter prediction band shifts the confusion") {
        json ds = parsed(runCli(args + " --predict-band ExtremelySerious").out);
        CHECK(ds["threshold"] == "ExtremelySerious");
        CHECK(ds["counts"]["truePositives"] == 2);
        CHECK(ds["counts"]["falseNegatives"] == 2);
    }
    SUBCASE("--out prints the text table with the curve") {
        fs::path out = tempFile("eval_report");
        CliResult rt = runCli(args + " --out '" + out.string() + "'");
        CHECK(rt.exitCode == 0);
        CHECK(parsed(slurp(out))["counts"]["truePositives"] == 3);
        CHECK(rt.out.find("predictions from scores (risky at band >= Serious)") !=
              std::string::npos);
        CHECK(rt.out.find("bugCount,meanIndicatorRatio,components") !=
              std::string::npos);
        CHECK(rt.out.find("0,0.385,2") != std::string::npos);
    }
}

TEST_CASE("eval needs scores before it can band a threshold") {
    CliResult r =
        runCli("eval '" + fixture("corpus_small.dsv") + "' --predict-band Serious");
    CHECK(r.exitCode == 2);
    CHECK(r.err.find("a prediction band needs component scores to band") !=
          std::string::npos);
}

TEST_CASE("eval reproduces the reference corpus rates") {
    json d = parsed(runCli("eval '" + fixture("corpus_tablexvi.dsv") + "'").out);
    CHECK(d["counts"]["truePositives"] == 47);
    CHECK(d["counts"]["falsePositives"] == 78);
    CHECK(d["counts"]["trueNegatives"] == 1542);
    CHECK(d["counts"]["falseNegatives"] == 17);
    CHECK(d["formatted"]["accuracy"] == "94.36");
    CHECK(d["formatted"]["precision"] == "37.60");
    CHECK(d["formatted"]["recall"] == "73.44");
    CHECK(d["metrics"]["recall"].get<double>() ==
          doctest::Approx(0.734375).epsilon(1e-15));
}
