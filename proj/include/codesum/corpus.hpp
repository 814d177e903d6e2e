#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "codesum/ingest.hpp"

namespace codesum {

enum class Split { Train, Valid, Test };
enum class Category { I, II, III };

std::string to_string(Split s);
std::string to_string(Category c);
Category category_from_string(const std::string& name);

// A project's samples sorted ascending by (creation_ts, id) plus the
// time-series split assignment. Training timestamps are strictly earlier
// than every holdout timestamp.
struct ProjectCorpus {
    std::string repo_slug;
    std::vector<FunctionSample> samples;
    std::map<std::string, Split> split;  // sample id -> assignment
    Category category = Category::III;

    Language language() const;  // language of the samples
    std::size_t count(Split s) const;
    std::vector<const FunctionSample*> members(Split s) const;  // time order
};

namespace corpus {

// Partition by repo_slug; each group sorted ascending by (creation_ts, id).
// Throws MissingTimestamp when a sample has no creation_ts.
std::map<std::string, std::vector<FunctionSample>> segment(
    const std::vector<FunctionSample>& samples);

// Time-series split with the conservative timestamp rule: the cut starts at
// floor(train_ratio * n) and moves earlier while the boundary timestamp is
// shared, so a tie group never straddles train and holdout. The holdout is
// divided into valid/test by a seeded shuffle, test taking the larger half.
// Throws TooFewSamples (< 5) and DegenerateSplit (rule empties training).
ProjectCorpus time_split(std::vector<FunctionSample> sorted_samples,
                         const PipelineConfig& cfg);

// I: count > category_hi; II: category_lo <= count <= category_hi;
// III: count < category_lo.
Category categorize(std::size_t train_count, const PipelineConfig& cfg);

// k samples uniformly without replacement, deterministic per seed,
// preserving the input's time order. Throws KTooLarge.
std::vector<FunctionSample> subsample_training(
    const std::vector<FunctionSample>& train, std::size_t k, std::uint64_t seed);

struct CategoryTable {
    std::map<std::pair<Language, Category>, std::size_t> counts;

    std::size_t count(Language lang, Category cat) const;
    std::size_t total(Language lang) const;
};

CategoryTable tabulate_categories(const std::vector<ProjectCorpus>& corpora);

}  // namespace corpus
}  // namespace codesum
