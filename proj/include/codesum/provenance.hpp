#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "codesum/ingest.hpp"

namespace codesum::provenance {

// One blamed source line. authored_ts is the committer time git attributes
// to the line (see README for the author-vs-committer choice).
struct LineBlame {
    std::string file_path;
    int line_no = 0;  // 1-based final line number
    std::string commit_sha;
    std::int64_t authored_ts = 0;

    bool operator==(const LineBlame&) const = default;
};

struct BlameOptions {
    std::string git_binary;        // empty: $CODESUM_GIT, then "git" on PATH
    std::string ignore_revs_file;  // forwarded as --ignore-revs-file when set
};

std::string resolve_git_binary(const BlameOptions& opts);

// Blames whole files via `git blame --line-porcelain` and answers span
// queries from a per-(repo, sha, file) cache, since many functions share a
// file. Safe for concurrent use: the cache takes a shared/exclusive lock and
// git invocations are serialized per repository.
class GitBlamer {
public:
    explicit GitBlamer(BlameOptions opts = {});

    // Exactly (line_end - line_start + 1) records, one per line.
    // Throws GitUnavailable, RepoMissing, CommitMissing, RangeOutOfFile.
    std::vector<LineBlame> blame_span(const std::filesystem::path& repo_dir,
                                      const std::string& file_path,
                                      const std::string& commit_sha,
                                      int line_start, int line_end);

private:
    using FileBlame = std::vector<LineBlame>;  // index 0 = line 1

    std::shared_ptr<const FileBlame> file_blame(const std::filesystem::path& repo_dir,
                                                const std::string& file_path,
                                                const std::string& commit_sha);
    std::mutex& repo_mutex(const std::string& repo_key);

    BlameOptions opts_;
    std::shared_mutex cache_mutex_;
    std::map<std::string, std::shared_ptr<const FileBlame>> cache_;
    std::mutex repo_mutexes_mutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> repo_mutexes_;
};

// Earliest authored_ts over the span: the function's creation date.
std::int64_t creation_date(const std::vector<LineBlame>& blames);  // throws EmptyInput

struct AnnotateFailure {
    std::string sample_id;
    std::string error;
};

struct AnnotateOptions {
    BlameOptions blame;
    int jobs = 1;  // distinct repositories may be blamed concurrently
};

struct AnnotateReport {
    std::vector<FunctionSample> samples;  // input order, creation_ts filled
    std::vector<AnnotateFailure> failures;
};

// Expects each sample's repository checked out under repos_root/<owner>/<name>.
// Failures are reported per sample, never fatal; failed samples are returned
// unchanged. Idempotent: timestamps depend only on git history.
AnnotateReport annotate_corpus(std::vector<FunctionSample> samples,
                               const std::filesystem::path& repos_root,
                               const AnnotateOptions& opts = {});

std::string git_version(const BlameOptions& opts = {});
std::int64_t head_commit_ts(const std::filesystem::path& repo_dir,
                            const BlameOptions& opts = {});

}  // namespace codesum::provenance
