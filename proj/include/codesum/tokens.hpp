#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace codesum {

using Tokens = std::vector<std::string>;

// Fallback tokenizer for raw text inputs: split on ASCII whitespace,
// optionally case-folding. Pre-tokenized files bypass this.
Tokens whitespace_tokens(std::string_view line, bool lowercase = false);

std::string join_tokens(const Tokens& tokens, std::string_view sep = " ");

std::string to_lower(std::string_view s);

}  // namespace codesum
