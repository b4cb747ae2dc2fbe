#include "vsrq/sysdesc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vsrq/codemetrics.hpp"

namespace vsrq::sysdesc {

using core::InputError;
using ordered_json = nlohmann::ordered_json;

namespace {

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

    void finishOrThrow() const {
        if (errors.empty()) return;
        std::ostringstream msg;
        msg << "system description invalid (" << errors.size()
            << (errors.size() == 1 ? " problem" : " problems") << "):";
        for (const std::string& e : errors) msg << "\n  - " << e;
        throw InputError(msg.str());
    }
};

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

std::optional<double> asCount(const ordered_json& j, const std::string& path,
                              Collector& c) {
    auto v = asNumber(j, path, c);
    if (v && *v < 0.0) {
        c.add(path, "must be non-negative");
        return std::nullopt;
    }
    return v;
}

std::optional<std::size_t> asUint(const ordered_json& j, const std::string& path,
                                  Collector& c) {
    if (j.is_number_unsigned())
        return static_cast<std::size_t>(j.get<std::uint64_t>());
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<std::size_t>(j.get<std::int64_t>());
    c.add(path, std::string("expected a non-negative integer, got ") + typeName(j));
    return std::nullopt;
}

/// Reads one optional numeric count member into `out`.
void readCount(const ordered_json& obj, const std::string& path, const char* key,
               double& out, Collector& c) {
    if (const ordered_json* v = member(obj, path, key, false, c)) {
        auto num = asCount(*v, path + "." + key, c);
        if (num) out = *num;
    }
}

void parseCouplingGraphs(const ordered_json& section, Collector& c,
                         SystemDescription& out) {
    for (core::Sub sub : core::subsOf(core::Index::ECR)) {
        std::string path =
            std::string("couplingGraphs.") + std::string(core::name(sub));
        const ordered_json* entry = sectionMember(
            section, "couplingGraphs", std::string(core::name(sub)).c_str(), false, c);
        if (!entry) continue;
        CouplingInput input;
        if (const ordered_json* v = member(*entry, path, "ecus", true, c)) {
            auto n = asUint(*v, path + ".ecus", c);
            if (!n) continue;
            input.ecus = *n;
        }
        bool ok = true;
        if (const ordered_json* calls = member(*entry, path, "calls", false, c)) {
            if (!calls->is_array()) {
                c.add(path + ".calls",
                      std::string("expected an array of [i, j] pairs, got ") +
                          typeName(*calls));
                continue;
            }
            for (std::size_t k = 0; k < calls->size(); ++k) {
                std::string callPath = path + ".calls[" + std::to_string(k) + "]";
                const ordered_json& pair = (*calls)[k];
                if (!pair.is_array() || pair.size() != 2) {
                    c.add(callPath, "expected a pair [i, j]");
                    ok = false;
                    continue;
                }
                auto i = asUint(pair[0], callPath + "[0]", c);
                auto j = asUint(pair[1], callPath + "[1]", c);
                if (!i || !j) {
                    ok = false;
                    continue;
                }
                if (*i >= input.ecus || *j >= input.ecus) {
                    c.add(callPath, "ECU id out of range for " +
                                        std::to_string(input.ecus) + " ECUs");
                    ok = false;
                    continue;
                }
                if (*i == *j) {
                    c.add(callPath, "an ECU cannot call itself");
                    ok = false;
                    continue;
                }
                input.calls.emplace_back(*i, *j);
            }
        }
        if (ok) out.couplingGraphs[sub] = std::move(input);
    }
}

void parseCommunication(const ordered_json& section, Collector& c,
                        SystemDescription& out) {
    indicators::CommInventory inv;
    readCount(section, "communication", "LIN", inv.lin, c);
    readCount(section, "communication", "CANL", inv.canLow, c);
    readCount(section, "communication", "CANH", inv.canHigh, c);
    readCount(section, "communication", "FL", inv.flexray, c);
    readCount(section, "communication", "MOST", inv.most, c);
    readCount(section, "communication", "DSRC", inv.dsrc, c);
    readCount(section, "communication", "VANET_V2V", inv.vanetsV2v, c);
    readCount(section, "communication", "VANET_INFRA", inv.vanetsInfra, c);
    readCount(section, "communication", "WIFI", inv.wifi, c);
    readCount(section, "communication", "CELLULAR", inv.cellular, c);
    out.communication = inv;
}

std::optional<std::vector<indicators::ModuleMetrics>> parseInlineModules(
    const ordered_json& arr, const std::string& path, Collector& c) {
    if (!arr.is_array()) {
        c.add(path, std::string("expected an array of modules, got ") + typeName(arr));
        return std::nullopt;
    }
    std::vector<indicators::ModuleMetrics> modules;
    bool ok = true;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string modPath = path + "[" + std::to_string(i) + "]";
        const ordered_json& entry = arr[i];
        if (!entry.is_object()) {
            c.add(modPath, "expected a module object");
            ok = false;
            continue;
        }
        indicators::ModuleMetrics m;
        if (const ordered_json* v = member(entry, modPath, "id", true, c)) {
            if (v->is_string()) m.id = v->get<std::string>();
            else { c.add(modPath + ".id", "expected a string"); ok = false; }
        } else {
            ok = false;
        }
        m.cfgNodes = 1.0;  // a module always has an entry node
        readCount(entry, modPath, "loc", m.loc, c);
        readCount(entry, modPath, "distinctOperators", m.distinctOperators, c);
        readCount(entry, modPath, "distinctOperands", m.distinctOperands, c);
        readCount(entry, modPath, "totalOperators", m.totalOperators, c);
        readCount(entry, modPath, "totalOperands", m.totalOperands, c);
        readCount(entry, modPath, "cfgEdges", m.cfgEdges, c);
        readCount(entry, modPath, "cfgNodes", m.cfgNodes, c);
        modules.push_back(std::move(m));
    }
    if (!ok) return std::nullopt;
    return modules;
}

void parseCodeMetrics(const ordered_json& section, const std::filesystem::path& baseDir,
                      Collector& c, SystemDescription& out) {
    const ordered_json* inline_ = member(section, "codeMetrics", "modules", false, c);
    const ordered_json* reportPath =
        member(section, "codeMetrics", "scanReportPath", false, c);
    if (inline_ && reportPath) {
        c.add("codeMetrics", "give either 'modules' or 'scanReportPath', not both");
        return;
    }
    if (inline_) {
        auto modules = parseInlineModules(*inline_, "codeMetrics.modules", c);
        if (modules) out.modules = std::move(*modules);
        return;
    }
    if (reportPath) {
        if (!reportPath->is_string()) {
            c.add("codeMetrics.scanReportPath", "expected a string path");
            return;
        }
        std::filesystem::path p(reportPath->get<std::string>());
        if (p.is_relative()) p = baseDir / p;
        std::ifstream in(p, std::ios::binary);
        if (!in) {
            c.add("codeMetrics.scanReportPath", "cannot read scan report " + p.string());
            return;
        }
        std::ostringstream text;
        text << in.rdbuf();
        try {
            codemetrics::ScanReport report =
                codemetrics::ScanReport::fromJsonText(text.str());
            out.modules = codemetrics::toMetricInputs(report);
        } catch (const std::exception& e) {
            c.add("codeMetrics.scanReportPath", e.what());
        }
        return;
    }
    c.add("codeMetrics", "needs 'modules' or 'scanReportPath'");
}

void parseHistory(const ordered_json& section, Collector& c, SystemDescription& out) {
    indicators::HistoryRecords records;
    if (const ordered_json* recalls = member(section, "history", "recalls", false, c)) {
        if (!recalls->is_array()) {
            c.add("history.recalls", std::string("expected an array, got ") +
                                         typeName(*recalls));
        } else {
            for (std::size_t i = 0; i < recalls->size(); ++i) {
                std::string path = "history.recalls[" + std::to_string(i) + "]";
                const ordered_json& entry = (*recalls)[i];
                if (!entry.is_object()) {
                    c.add(path, "expected a recall object");
                    continue;
                }
                indicators::RecallRecord r;
                readCount(entry, path, "recallCount", r.recallCount, c);
                readCount(entry, path, "repairCount", r.repairCount, c);
                readCount(entry, path, "ageYears", r.ageYears, c);
                records.recalls.push_back(r);
            }
        }
    }
    readCount(section, "history", "performanceLimitationAccidents",
              records.performanceLimitationAccidents, c);
    if (const ordered_json* attacks =
            sectionMember(section, "history", "attacks", false, c)) {
        readCount(*attacks, "history.attacks", "vehicle", records.attacks.vehicle, c);
        readCount(*attacks, "history.attacks", "terminal", records.attacks.terminal, c);
        readCount(*attacks, "history.attacks", "network", records.attacks.network, c);
        readCount(*attacks, "history.attacks", "cloud", records.attacks.cloud, c);
    }
    out.history = std::move(records);
}

void parseSeverity(const ordered_json& section, Collector& c, SystemDescription& out) {
    indicators::SeverityVector severity;
    bool ok = true;
    const std::pair<const char*, double indicators::SeverityVector::*> fields[] = {
        {"safety", &indicators::SeverityVector::safety},
        {"privacy", &indicators::SeverityVector::privacy},
        {"financial", &indicators::SeverityVector::financial},
        {"operational", &indicators::SeverityVector::operational}};
    for (const auto& [key, field] : fields) {
        const ordered_json* v = member(section, "severity", key, true, c);
        if (!v) {
            ok = false;
            continue;
        }
        auto num = asNumber(*v, std::string("severity.") + key, c);
        if (!num) {
            ok = false;
            continue;
        }
        severity.*field = *num;
    }
    if (ok) out.severity = severity;
}

void parseBounds(const ordered_json& section, Collector& c, SystemDescription& out) {
    for (const auto& [key, value] : section.items()) {
        std::string path = "bounds." + key;
        auto sub = core::subFromName(key);
        if (!sub) {
            c.add(path, "unknown sub-indicator");
            continue;
        }
        if (!value.is_array() || value.size() != 2) {
            c.add(path, "expected [lo, hi]");
            continue;
        }
        auto lo = asNumber(value[0], path + "[0]", c);
        auto hi = asNumber(value[1], path + "[1]", c);
        if (!lo || !hi) continue;
        if (!(*lo < *hi)) {
            c.add(path, "lower bound must be below the upper bound");
            continue;
        }
        out.bounds[*sub] = {*lo, *hi};
    }
}

void parseIndexAggregates(const ordered_json& section, Collector& c,
                          SystemDescription& out) {
    std::array<core::Interval, core::kIndexCount> aggregates;
    bool ok = true;
    for (core::Index index : core::allIndices()) {
        std::string path =
            std::string("indexAggregates.") + std::string(core::name(index));
        const ordered_json* v = member(section, "indexAggregates",
                                       std::string(core::name(index)).c_str(), true, c);
        if (!v) {
            ok = false;
            continue;
        }
        if (!v->is_array() || v->size() != 2) {
            c.add(path, "expected [lo, hi]");
            ok = false;
            continue;
        }
        auto lo = asNumber((*v)[0], path + "[0]", c);
        auto hi = asNumber((*v)[1], path + "[1]", c);
        if (!lo || !hi) {
            ok = false;
            continue;
        }
        if (!(*lo <= *hi) || *lo < 0.0 || *hi > 1.0) {
            c.add(path, "expected 0 <= lo <= hi <= 1");
            ok = false;
            continue;
        }
        aggregates[static_cast<std::size_t>(index)] = core::Interval(*lo, *hi);
    }
    if (ok) out.indexAggregates = aggregates;
}

}  // namespace

SystemDescription loadDescriptionText(const std::string& jsonText,
                                      const std::filesystem::path& baseDir) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(jsonText);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(std::string("system description is not valid JSON: ") +
                         e.what());
    }
    if (!doc.is_object()) {
        throw InputError(std::string("system description root must be an object, got ") +
                         typeName(doc));
    }

    Collector c;
    SystemDescription out;

    if (const ordered_json* v = member(doc, "$", "schemaVersion", true, c)) {
        if (!v->is_number_integer() || v->get<std::int64_t>() != 1)
            c.add("schemaVersion", "unsupported version (this build reads version 1)");
    }
    if (const ordered_json* v = member(doc, "$", "name", true, c)) {
        if (!v->is_string() || v->get<std::string>().empty())
            c.add("name", "expected a non-empty string");
        else
            out.name = v->get<std::string>();
    }

    if (const ordered_json* v = sectionMember(doc, "$", "couplingGraphs", false, c))
        parseCouplingGraphs(*v, c, out);
    if (const ordered_json* v = sectionMember(doc, "$", "communication", false, c))
        parseCommunication(*v, c, out);
    if (const ordered_json* v = sectionMember(doc, "$", "codeMetrics", false, c))
        parseCodeMetrics(*v, baseDir, c, out);
    if (const ordered_json* v = sectionMember(doc, "$", "history", false, c))
        parseHistory(*v, c, out);
    if (const ordered_json* v = sectionMember(doc, "$", "severity", false, c))
        parseSeverity(*v, c, out);
    if (const ordered_json* v = sectionMember(doc, "$", "bounds", false, c))
        parseBounds(*v, c, out);
    if (const ordered_json* v = sectionMember(doc, "$", "indexAggregates", false, c))
        parseIndexAggregates(*v, c, out);

    c.finishOrThrow();
    return out;
}

SystemDescription loadDescriptionFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read system description " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return loadDescriptionText(text.str(), path.parent_path());
}

}  // namespace vsrq::sysdesc
