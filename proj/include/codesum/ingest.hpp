#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "codesum/tokens.hpp"

namespace codesum {

enum class Language { Java, Python };

std::string to_string(Language lang);
Language language_from_string(const std::string& name);  // throws UnknownLanguage

// One code/docstring pair with repository provenance. Immutable value in
// practice: nothing mutates a sample after construction except provenance
// filling creation_ts.
struct FunctionSample {
    std::string repo_slug;   // "owner/name"
    std::string file_path;   // repository-relative
    std::string commit_sha;  // 40-hex
    int line_start = 1;      // 1-based, inclusive
    int line_end = 1;
    Language language = Language::Java;
    Tokens code_tokens;
    Tokens docstring_tokens;
    std::string raw_code;       // "code" key when present, else joined tokens
    std::string raw_docstring;  // "docstring" key when present, else joined tokens
    std::string source_url;
    std::optional<std::int64_t> creation_ts;  // UTC epoch seconds; set by provenance

    // Unknown input keys, preserved verbatim so re-emission is lossless.
    nlohmann::ordered_json extras = nlohmann::ordered_json::object();

    // Stable across runs: repo_slug + "#" + file_path + "#" + line_start.
    std::string id() const;

    bool operator==(const FunctionSample&) const = default;
};

// All pipeline constants in one place; every subcommand echoes the effective
// config into its run manifest.
struct PipelineConfig {
    double train_ratio = 0.8;
    int category_lo = 100;
    int category_hi = 150;
    double corruption_rate = 0.15;
    double poisson_lambda = 3.0;
    int noise_modes_per_sample = 2;
    int cross_epochs = 10;
    int same_epochs = 30;
    double bleu_noticeable_threshold = 2.0;
    std::uint64_t rng_seed = 0;

    void validate() const;  // throws BadConfig

    nlohmann::json to_json() const;
    static PipelineConfig from_json(const nlohmann::json& j);  // partial objects allowed
};

struct SourceLocation {
    std::string repo_slug;
    std::string commit_sha;
    std::string file_path;
    int line_start = 0;
    int line_end = 0;
};

namespace ingest {

// Decomposes a GitHub blob URL:
//   [scheme://]host/owner/name/blob/<40-hex>/<path>#Lstart[-Lend]
// The single-line form "#L7" yields line_start == line_end.
SourceLocation parse_source_url(const std::string& url);  // throws BadUrl

struct ParseOptions {
    bool strict = true;  // lenient mode skips bad lines and counts them
};

struct ParseReport {
    std::vector<FunctionSample> samples;  // input order
    std::size_t skipped = 0;              // lenient mode only
    std::vector<std::string> errors;      // one message per skipped line
};

// One JSON object per line; required keys: repo, path, sha, url, language,
// code_tokens, docstring_tokens. Extra keys are preserved in extras.
ParseReport parse_jsonl(std::istream& in, const ParseOptions& opts = {});

// Throws MalformedLine when a TYPE invariant does not hold.
void validate(const FunctionSample& sample);

FunctionSample sample_from_json(const nlohmann::ordered_json& record);
nlohmann::ordered_json to_json(const FunctionSample& sample);

void write_jsonl(std::ostream& out, const std::vector<FunctionSample>& samples);

}  // namespace ingest
}  // namespace codesum
