#include "vsrq/codemetrics.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vsrq/core.hpp"

namespace vsrq::codemetrics {

using core::InputError;
using ordered_json = nlohmann::ordered_json;

LanguageProfile LanguageProfile::cFamily() {
    LanguageProfile p;
    p.keywords = {
        "alignas", "alignof", "auto", "bool", "break", "case", "catch", "char",
        "class", "const", "constexpr", "continue", "default", "delete", "do",
        "double", "else", "enum", "extern", "false", "float", "for", "goto",
        "if", "inline", "int", "long", "namespace", "new", "nullptr",
        "operator", "private", "protected", "public", "register", "return",
        "short", "signed", "sizeof", "static", "struct", "switch", "template",
        "this", "throw", "true", "try", "typedef", "typename", "union",
        "unsigned", "using", "virtual", "void", "volatile", "while"};
    p.operatorTokens = {
        "<<=", ">>=", "...", "->*", "::", "->", "++", "--", "<<", ">>", "<=",
        ">=", "==", "!=", "&&", "||", "+=", "-=", "*=", "/=", "%=", "&=",
        "|=", "^=", ".*", "+", "-", "*", "/", "%", "=", "<", ">", "!", "&",
        "|", "^", "~", "?", ":", ";", ",", ".", "(", ")", "[", "]", "{", "}",
        "#"};
    return p;
}

namespace {

ordered_json profileToJson(const LanguageProfile& p) {
    ordered_json j;
    j["schemaVersion"] = 1;
    j["name"] = p.name;
    j["extensions"] = p.extensions;
    j["lineCommentPrefixes"] = p.lineCommentPrefixes;
    ordered_json blocks = ordered_json::array();
    for (const auto& [open, close] : p.blockComments)
        blocks.push_back(ordered_json{{"open", open}, {"close", close}});
    j["blockComments"] = blocks;
    j["stringDelimiters"] = p.stringDelimiters;
    j["escapeCharacter"] = std::string(1, p.escapeCharacter);
    j["keywords"] = p.keywords;
    j["operatorTokens"] = p.operatorTokens;
    j["decisionTokens"] = p.decisionTokens;
    return j;
}

}  // namespace

std::string LanguageProfile::toJsonText() const {
    return profileToJson(*this).dump(2) + "\n";
}

LanguageProfile LanguageProfile::fromJsonText(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("language profile is not valid JSON: ") + e.what());
    }
    LanguageProfile p;
    try {
        p.name = j.at("name").get<std::string>();
        p.extensions = j.at("extensions").get<std::vector<std::string>>();
        p.lineCommentPrefixes = j.at("lineCommentPrefixes").get<std::vector<std::string>>();
        p.blockComments.clear();
        for (const auto& entry : j.at("blockComments"))
            p.blockComments.emplace_back(entry.at("open").get<std::string>(),
                                         entry.at("close").get<std::string>());
        p.stringDelimiters = j.at("stringDelimiters").get<std::string>();
        std::string esc = j.at("escapeCharacter").get<std::string>();
        if (esc.size() != 1)
            throw InputError("language profile escapeCharacter must be a single character");
        p.escapeCharacter = esc[0];
        p.keywords = j.at("keywords").get<std::vector<std::string>>();
        p.operatorTokens = j.at("operatorTokens").get<std::vector<std::string>>();
        p.decisionTokens = j.at("decisionTokens").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("language profile incomplete: ") + e.what());
    }
    for (const auto& [open, close] : p.blockComments)
        if (open.empty() || close.empty())
            throw InputError("language profile block comment markers must be non-empty");
    return p;
}

void ModuleMap::addRule(std::string pathPrefix, std::string moduleId) {
    rules_.emplace_back(std::move(pathPrefix), std::move(moduleId));
    std::stable_sort(rules_.begin(), rules_.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

ModuleMap ModuleMap::fromJsonText(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("module map is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("module map must be a JSON object");
    ModuleMap map;
    for (const auto& [prefix, value] : j.items()) {
        if (!value.is_string())
            throw InputError("module map value for \"" + prefix + "\" must be a string");
        map.addRule(prefix, value.get<std::string>());
    }
    return map;
}

std::string ModuleMap::moduleFor(const std::string& relativePath) const {
    for (const auto& [prefix, moduleId] : rules_)
        if (relativePath.rfind(prefix, 0) == 0) return moduleId;
    std::filesystem::path p(relativePath);
    std::string dir = p.parent_path().generic_string();
    return dir.empty() ? "." : dir;
}

namespace {

bool isIdentStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool isIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

struct Lexer {
    const LanguageProfile& profile;
    std::vector<std::string> operatorsByLength;  // longest first
    std::map<std::string, std::int64_t> operatorCounts;
    std::map<std::string, std::int64_t> operandCounts;
    std::int64_t decisionPoints = 0;

    explicit Lexer(const LanguageProfile& p) : profile(p) {
        operatorsByLength = p.operatorTokens;
        std::stable_sort(operatorsByLength.begin(), operatorsByLength.end(),
                         [](const std::string& a, const std::string& b) {
                             return a.size() > b.size();
                         });
    }

    bool isKeyword(const std::string& word) const {
        return std::find(profile.keywords.begin(), profile.keywords.end(), word) !=
               profile.keywords.end();
    }

    bool isDecision(const std::string& token) const {
        return std::find(profile.decisionTokens.begin(), profile.decisionTokens.end(),
                         token) != profile.decisionTokens.end();
    }

    void countOperator(const std::string& token) {
        ++operatorCounts[token];
        if (isDecision(token)) ++decisionPoints;
    }

    void countOperand(const std::string& token) { ++operandCounts[token]; }
};

// Consumes a pp-number starting at text[i] (a digit). Accepts hex/exponent
// forms: letters, digits, dots, and a sign directly after e/E/p/P.
std::size_t numberEnd(std::string_view text, std::size_t i) {
    std::size_t j = i + 1;
    while (j < text.size()) {
        char c = text[j];
        if (isIdentChar(c) || c == '.') {
            ++j;
        } else if ((c == '+' || c == '-') && j > i) {
            char prev = text[j - 1];
            if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P')
                ++j;
            else
                break;
        } else {
            break;
        }
    }
    return j;
}

}  // namespace

FileMetrics analyzeSource(std::string_view text, const LanguageProfile& profile) {
    FileMetrics metrics;
    Lexer lex(profile);

    bool inBlockComment = false;
    std::size_t blockKind = 0;  // which blockComments pair is open

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;

        ++metrics.physicalLines;
        bool sawCode = false;
        bool sawComment = inBlockComment && !line.empty();

        std::size_t i = 0;
        bool lineDone = false;
        while (i < line.size() && !lineDone) {
            if (inBlockComment) {
                sawComment = true;
                const std::string& close = profile.blockComments[blockKind].second;
                std::size_t end = line.find(close, i);
                if (end == std::string_view::npos) {
                    i = line.size();
                } else {
                    i = end + close.size();
                    inBlockComment = false;
                }
                continue;
            }

            char c = line[i];
            if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
                ++i;
                continue;
            }

            // Comment openers take precedence over operator tokens.
            bool opened = false;
            for (const auto& prefix : profile.lineCommentPrefixes) {
                if (line.compare(i, prefix.size(), prefix) == 0) {
                    sawComment = true;
                    lineDone = true;
                    opened = true;
                    break;
                }
            }
            if (opened) continue;
            for (std::size_t k = 0; k < profile.blockComments.size(); ++k) {
                const auto& open = profile.blockComments[k].first;
                if (line.compare(i, open.size(), open) == 0) {
                    sawComment = true;
                    inBlockComment = true;
                    blockKind = k;
                    i += open.size();
                    opened = true;
                    break;
                }
            }
            if (opened) continue;

            if (profile.stringDelimiters.find(c) != std::string::npos) {
                sawCode = true;
                std::string literal(1, c);
                ++i;
                while (i < line.size()) {
                    char s = line[i];
                    literal += s;
                    ++i;
                    if (s == profile.escapeCharacter && i < line.size()) {
                        literal += line[i];
                        ++i;
                    } else if (s == c) {
                        break;
                    }
                }
                lex.countOperand(literal);
                continue;
            }

            if (isIdentStart(c)) {
                std::size_t j = i + 1;
                while (j < line.size() && isIdentChar(line[j])) ++j;
                std::string word(line.substr(i, j - i));
                sawCode = true;
                if (lex.isKeyword(word))
                    lex.countOperator(word);
                else
                    lex.countOperand(word);
                i = j;
                continue;
            }

            if (isDigit(c)) {
                std::size_t j = numberEnd(line, i);
                lex.countOperand(std::string(line.substr(i, j - i)));
                sawCode = true;
                i = j;
                continue;
            }

            bool matched = false;
            for (const auto& token : lex.operatorsByLength) {
                if (line.compare(i, token.size(), token) == 0) {
                    lex.countOperator(token);
                    sawCode = true;
                    i += token.size();
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                // Unknown punctuation still counts as a one-character operator
                // so totals stay honest on unusual input.
                lex.countOperator(std::string(1, c));
                sawCode = true;
                ++i;
            }
        }

        if (sawCode)
            ++metrics.codeLines;
        else if (sawComment)
            ++metrics.commentLines;
        else
            ++metrics.blankLines;
    }

    metrics.halstead.distinctOperators = static_cast<std::int64_t>(lex.operatorCounts.size());
    metrics.halstead.distinctOperands = static_cast<std::int64_t>(lex.operandCounts.size());
    for (const auto& [token, count] : lex.operatorCounts)
        metrics.halstead.totalOperators += count;
    for (const auto& [token, count] : lex.operandCounts)
        metrics.halstead.totalOperands += count;
    metrics.decisionPoints = lex.decisionPoints;
    return metrics;
}

ScanReport scanTree(const std::filesystem::path& root, const LanguageProfile& profile,
                    const ModuleMap& modules) {
    namespace fs = std::filesystem;
    if (!fs::exists(root) || !fs::is_directory(root))
        throw InputError("scan root is not a directory: " + root.string());

    ScanReport report;
    std::error_code ec;
    for (fs::recursive_directory_iterator it(root, ec), end; it != end; it.increment(ec)) {
        if (ec) throw InputError("walking " + root.string() + " failed: " + ec.message());
        if (!it->is_regular_file()) continue;
        fs::path rel = fs::relative(it->path(), root);
        std::string relName = rel.generic_string();

        std::string ext = it->path().extension().string();
        bool known = std::find(profile.extensions.begin(), profile.extensions.end(), ext) !=
                     profile.extensions.end();
        if (!known) {
            report.skipped.push_back(relName);
            continue;
        }

        std::ifstream in(it->path(), std::ios::binary);
        if (!in) {
            report.errors.push_back({relName, "cannot open file"});
            continue;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (in.bad()) {
            report.errors.push_back({relName, "read failed"});
            continue;
        }

        FileMetrics metrics = analyzeSource(buffer.str(), profile);
        metrics.path = relName;
        metrics.moduleId = modules.moduleFor(relName);
        report.files.push_back(std::move(metrics));
    }

    std::sort(report.files.begin(), report.files.end(),
              [](const FileMetrics& a, const FileMetrics& b) { return a.path < b.path; });
    std::sort(report.skipped.begin(), report.skipped.end());
    std::sort(report.errors.begin(), report.errors.end(),
              [](const ScanError& a, const ScanError& b) { return a.path < b.path; });
    return report;
}

std::string ScanReport::toJsonText() const {
    ordered_json j;
    j["schemaVersion"] = 1;
    ordered_json fileArray = ordered_json::array();
    for (const auto& f : files) {
        ordered_json entry;
        entry["path"] = f.path;
        entry["module"] = f.moduleId;
        entry["lines"] = ordered_json{{"total", f.physicalLines},
                                      {"code", f.codeLines},
                                      {"blank", f.blankLines},
                                      {"comment", f.commentLines}};
        entry["halstead"] = ordered_json{{"distinctOperators", f.halstead.distinctOperators},
                                         {"distinctOperands", f.halstead.distinctOperands},
                                         {"totalOperators", f.halstead.totalOperators},
                                         {"totalOperands", f.halstead.totalOperands}};
        entry["decisionPoints"] = f.decisionPoints;
        fileArray.push_back(std::move(entry));
    }
    j["files"] = std::move(fileArray);
    j["skipped"] = skipped;
    ordered_json errorArray = ordered_json::array();
    for (const auto& e : errors)
        errorArray.push_back(ordered_json{{"path", e.path}, {"message", e.message}});
    j["errors"] = std::move(errorArray);
    return j.dump(2) + "\n";
}

ScanReport ScanReport::fromJsonText(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("scan report is not valid JSON: ") + e.what());
    }
    ScanReport report;
    try {
        for (const auto& entry : j.at("files")) {
            FileMetrics f;
            f.path = entry.at("path").get<std::string>();
            f.moduleId = entry.at("module").get<std::string>();
            const auto& lines = entry.at("lines");
            f.physicalLines = lines.at("total").get<std::int64_t>();
            f.codeLines = lines.at("code").get<std::int64_t>();
            f.blankLines = lines.at("blank").get<std::int64_t>();
            f.commentLines = lines.at("comment").get<std::int64_t>();
            const auto& h = entry.at("halstead");
            f.halstead.distinctOperators = h.at("distinctOperators").get<std::int64_t>();
            f.halstead.distinctOperands = h.at("distinctOperands").get<std::int64_t>();
            f.halstead.totalOperators = h.at("totalOperators").get<std::int64_t>();
            f.halstead.totalOperands = h.at("totalOperands").get<std::int64_t>();
            f.decisionPoints = entry.at("decisionPoints").get<std::int64_t>();
            report.files.push_back(std::move(f));
        }
        report.skipped = j.at("skipped").get<std::vector<std::string>>();
        for (const auto& entry : j.at("errors"))
            report.errors.push_back({entry.at("path").get<std::string>(),
                                     entry.at("message").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("scan report incomplete: ") + e.what());
    }
    return report;
}

std::vector<indicators::ModuleMetrics> toMetricInputs(const ScanReport& report) {
    std::map<std::string, indicators::ModuleMetrics> byModule;
    for (const auto& f : report.files) {
        auto& m = byModule[f.moduleId];
        m.id = f.moduleId;
        m.loc += static_cast<double>(f.codeLines);
        m.distinctOperators += static_cast<double>(f.halstead.distinctOperators);
        m.distinctOperands += static_cast<double>(f.halstead.distinctOperands);
        m.totalOperators += static_cast<double>(f.halstead.totalOperators);
        m.totalOperands += static_cast<double>(f.halstead.totalOperands);
        m.cfgEdges += static_cast<double>(f.decisionPoints);
    }
    std::vector<indicators::ModuleMetrics> out;
    out.reserve(byModule.size());
    for (auto& [id, m] : byModule) {
        m.cfgNodes = 1.0;  // yields cyclomatic = decisionPoints + 1
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace vsrq::codemetrics
