#include "vsrq/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace vsrq::evaluation {

using core::InputError;

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> splitFields(const std::string& line) {
    // Commas, semicolons, and tabs all work as field separators.
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',' || c == ';' || c == '\t') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(trim(current));
    return fields;
}

bool parseFlag(const std::string& field, std::size_t lineNo, const char* what) {
    if (field == "0" || field == "false" || field == "no") return false;
    if (field == "1" || field == "true" || field == "yes") return true;
    throw InputError("line " + std::to_string(lineNo) + ": " + what + " flag \"" + field +
                     "\" is not 0/1/true/false");
}

bool numberLike(const std::string& field) {
    try {
        std::size_t used = 0;
        std::stod(field, &used);
        return used == field.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool flagLike(const std::string& field) {
    return field == "0" || field == "1" || field == "true" || field == "false" ||
           field == "yes" || field == "no";
}

bool looksLikeHeader(const std::vector<std::string>& fields) {
    // A header row has no parsable numeric in its numeric columns.
    return fields.size() >= 2 && !numberLike(fields[1]);
}

bool looksLikeCorpusHeader(const std::vector<std::string>& fields) {
    // Flag spellings ("true", "no", ...) are valid data, so a row counts as a
    // header only when none of its typed columns parses; a row where some do
    // is malformed data and must reach the field parsers for a diagnosis.
    if (fields.size() < 2) return false;
    bool anyParses = flagLike(fields[1]);
    if (fields.size() >= 3) anyParses = anyParses || flagLike(fields[2]);
    if (fields.size() >= 4) anyParses = anyParses || numberLike(fields[3]);
    return !anyParses;
}

}  // namespace

LabeledCorpus LabeledCorpus::fromComponents(std::vector<LabeledComponent> components) {
    std::set<std::string> seen;
    for (const auto& c : components) {
        if (c.componentId.empty()) throw InputError("corpus component id must be non-empty");
        if (c.reportedBugCount < 0)
            throw InputError("corpus component " + c.componentId + " has negative bug count");
        if (!seen.insert(c.componentId).second)
            throw InputError("corpus component id repeated: " + c.componentId);
    }
    LabeledCorpus corpus;
    corpus.components_ = std::move(components);
    return corpus;
}

LabeledCorpus LabeledCorpus::fromDsvText(const std::string& text) {
    std::vector<LabeledComponent> components;
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto fields = splitFields(stripped);
        if (first && looksLikeCorpusHeader(fields)) {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() != 4)
            throw InputError("line " + std::to_string(lineNo) + ": expected 4 fields "
                             "(id, predicted, actual, bugCount), got " +
                             std::to_string(fields.size()));
        LabeledComponent c;
        c.componentId = fields[0];
        c.predictedRisky = parseFlag(fields[1], lineNo, "predicted");
        c.actuallyBuggy = parseFlag(fields[2], lineNo, "actual");
        try {
            std::size_t used = 0;
            c.reportedBugCount = std::stoll(fields[3], &used);
            if (used != fields[3].size()) throw std::invalid_argument(fields[3]);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineNo) + ": bug count \"" + fields[3] +
                             "\" is not an integer");
        }
        components.push_back(std::move(c));
    }
    return fromComponents(std::move(components));
}

ConfusionCounts confusion(const LabeledCorpus& corpus) {
    ConfusionCounts counts;
    for (const auto& c : corpus.components()) {
        if (c.predictedRisky && c.actuallyBuggy)
            ++counts.truePositives;
        else if (c.predictedRisky && !c.actuallyBuggy)
            ++counts.falsePositives;
        else if (!c.predictedRisky && c.actuallyBuggy)
            ++counts.falseNegatives;
        else
            ++counts.trueNegatives;
    }
    return counts;
}

ClassifierMetrics metrics(const ConfusionCounts& counts) {
    ClassifierMetrics out;
    auto ratio = [](std::int64_t num, std::int64_t den) -> std::optional<double> {
        if (den == 0) return std::nullopt;
        return static_cast<double>(num) / static_cast<double>(den);
    };
    out.accuracy = ratio(counts.truePositives + counts.trueNegatives, counts.total());
    out.precision = ratio(counts.truePositives, counts.truePositives + counts.falsePositives);
    out.recall = ratio(counts.truePositives, counts.truePositives + counts.falseNegatives);
    return out;
}

std::string formatPercent(const std::optional<double>& fraction) {
    if (!fraction) return "undefined";
    // Round half up at the second decimal of the percentage.
    double scaled = std::floor(*fraction * 10000.0 + 0.5) / 100.0;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << scaled;
    return os.str();
}

namespace {

double requireScore(const ScoreMap& scores, const std::string& id,
                    std::vector<std::string>& missing) {
    auto it = scores.find(id);
    if (it == scores.end()) {
        missing.push_back(id);
        return 0.0;
    }
    return it->second;
}

void throwIfMissing(const std::vector<std::string>& missing) {
    if (missing.empty()) return;
    std::string list;
    for (const auto& id : missing) {
        if (!list.empty()) list += ", ";
        list += id;
    }
    throw InputError("no score for components: " + list);
}

}  // namespace

LabeledCorpus predictFromScores(const LabeledCorpus& corpus, const ScoreMap& scores,
                                const core::BandTable& bands, core::BandLabel threshold) {
    std::vector<std::string> missing;
    std::vector<LabeledComponent> components = corpus.components();
    for (auto& c : components) {
        double score = requireScore(scores, c.componentId, missing);
        if (!missing.empty()) continue;
        c.predictedRisky = core::bandOf(score, bands).label >= threshold;
    }
    throwIfMissing(missing);
    return LabeledCorpus::fromComponents(std::move(components));
}

std::vector<CurvePoint> riskRatioCurve(const LabeledCorpus& corpus, const ScoreMap& scores,
                                       const core::BandTable& bands) {
    double topEdge = bands.bands().back().hi;
    std::vector<std::string> missing;
    std::map<std::int64_t, std::pair<double, std::int64_t>> groups;  // sum, count
    for (const auto& c : corpus.components()) {
        double score = requireScore(scores, c.componentId, missing);
        if (!missing.empty()) continue;
        double ratio = core::bandOf(score, bands).hi / topEdge;
        auto& [sum, count] = groups[c.reportedBugCount];
        sum += ratio;
        ++count;
    }
    throwIfMissing(missing);

    std::vector<CurvePoint> curve;
    curve.reserve(groups.size());
    for (const auto& [bugCount, acc] : groups)
        curve.push_back({bugCount, acc.first / static_cast<double>(acc.second), acc.second});
    return curve;
}

ScoreMap scoresFromDsvText(const std::string& text) {
    ScoreMap scores;
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto fields = splitFields(stripped);
        if (first && looksLikeHeader(fields)) {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() != 2)
            throw InputError("line " + std::to_string(lineNo) +
                             ": expected 2 fields (id, score), got " +
                             std::to_string(fields.size()));
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(fields[1], &used);
            if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineNo) + ": score \"" + fields[1] +
                             "\" is not a number");
        }
        if (!scores.emplace(fields[0], value).second)
            throw InputError("line " + std::to_string(lineNo) + ": component id repeated: " +
                             fields[0]);
    }
    return scores;
}

}  // namespace vsrq::evaluation
