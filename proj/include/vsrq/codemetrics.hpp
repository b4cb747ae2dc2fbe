#ifndef VSRQ_CODEMETRICS_HPP
#define VSRQ_CODEMETRICS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsrq/indicators.hpp"

namespace vsrq::codemetrics {

/// Table-driven description of how to lex one language family.
/// The scanner has no language-specific code paths; everything it needs to
/// know is in this profile, which round-trips through JSON.
struct LanguageProfile {
    std::string name = "c-family";
    std::vector<std::string> extensions = {".c", ".h", ".cc", ".cpp", ".hpp", ".cxx", ".hxx"};
    std::vector<std::string> lineCommentPrefixes = {"//"};
    std::vector<std::pair<std::string, std::string>> blockComments = {{"/*", "*/"}};
    std::string stringDelimiters = "\"'";
    char escapeCharacter = '\\';
    /// Keywords count as operators; identifiers not listed here are operands.
    std::vector<std::string> keywords;
    /// Punctuation operators, matched longest-first.
    std::vector<std::string> operatorTokens;
    /// Tokens (keywords or operators) that open a branch in the control flow.
    std::vector<std::string> decisionTokens = {"if", "while", "for",
                                               "case", "catch", "&&", "||", "?"};

    static LanguageProfile cFamily();
    static LanguageProfile fromJsonText(const std::string& text);
    std::string toJsonText() const;
};

struct HalsteadCounts {
    std::int64_t distinctOperators = 0;  // n1
    std::int64_t distinctOperands = 0;   // n2
    std::int64_t totalOperators = 0;     // N1
    std::int64_t totalOperands = 0;      // N2
};

struct FileMetrics {
    std::string path;      // relative to the scan root, generic separators
    std::string moduleId;
    std::int64_t physicalLines = 0;
    std::int64_t codeLines = 0;
    std::int64_t blankLines = 0;
    std::int64_t commentLines = 0;
    HalsteadCounts halstead;
    std::int64_t decisionPoints = 0;
};

struct ScanError {
    std::string path;
    std::string message;
};

struct ScanReport {
    std::vector<FileMetrics> files;    // sorted by path
    std::vector<std::string> skipped;  // unknown extensions, sorted
    std::vector<ScanError> errors;     // unreadable files, sorted

    std::string toJsonText() const;
    static ScanReport fromJsonText(const std::string& text);
};

/// Longest-prefix rules mapping relative paths to module ids; without a
/// match the file's directory is its module.
class ModuleMap {
public:
    ModuleMap() = default;
    void addRule(std::string pathPrefix, std::string moduleId);
    static ModuleMap fromJsonText(const std::string& text);

    std::string moduleFor(const std::string& relativePath) const;

private:
    std::vector<std::pair<std::string, std::string>> rules_;
};

/// Lex one source text. Line classification: a line with any code token is
/// code; otherwise a line touching a comment is comment; otherwise blank.
/// The three counts always sum to physicalLines.
FileMetrics analyzeSource(std::string_view text, const LanguageProfile& profile);

/// Walks `root` recursively, scanning every file whose extension the profile
/// claims. Unknown extensions land in `skipped`; unreadable files land in
/// `errors`. All listings are sorted by relative path for determinism.
ScanReport scanTree(const std::filesystem::path& root, const LanguageProfile& profile,
                    const ModuleMap& modules = ModuleMap());

/// Collapses per-file metrics into per-module inputs for the complexity
/// risks: loc and Halstead counts are summed; the control-flow graph is
/// synthesized as (edges, nodes) = (decisionPoints, 1) so that
/// edges - nodes + 2 = decisionPoints + 1.
std::vector<indicators::ModuleMetrics> toMetricInputs(const ScanReport& report);

}  // namespace vsrq::codemetrics

#endif
