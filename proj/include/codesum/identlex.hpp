#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "codesum/corpus.hpp"

namespace codesum::identlex {

// Case-insensitive identifier set of a source snippet: comments, string and
// character literals, numeric literals, and language keywords are removed;
// everything left that lexes as a name is lowercased. Token-level only; no
// parsing, no symbol resolution.
std::set<std::string> extract_identifiers(std::string_view raw_code, Language lang);

// |a ∩ b| / |a ∪ b|. Throws BothEmpty.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

enum class GroupIndex { I, II };  // first vs second group_size samples

struct IdentifierGroup {
    std::string repo_slug;
    GroupIndex group_index = GroupIndex::I;
    std::set<std::string> identifiers;
};

// Union of identifier sets over one group of a time-sorted project.
IdentifierGroup identifier_group(const ProjectCorpus& project, GroupIndex which,
                                 std::size_t group_size);

struct OverlapMatrix {
    std::vector<std::string> row_labels;  // group I owners
    std::vector<std::string> col_labels;  // group II owners
    std::vector<std::vector<double>> values;
};

// Entry (A, B) = jaccard(group-I identifiers of A, group-II identifiers of B).
// Every project needs at least 2 * group_size time-sorted samples.
OverlapMatrix overlap_matrix(const std::vector<ProjectCorpus>& projects,
                             std::size_t group_size = 100);

std::string to_csv(const OverlapMatrix& m);        // 2-decimal display
nlohmann::json to_json(const OverlapMatrix& m);    // full-precision sidecar

}  // namespace codesum::identlex
