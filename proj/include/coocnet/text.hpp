#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coocnet {

/// Canonical form used for every dictionary lookup and text scan:
/// lowercase, the punctuation set .,;:()[]{}!?'" turned into spaces,
/// whitespace runs (including Unicode spaces) collapsed to one ASCII space,
/// no leading or trailing space. Hyphens of any kind are kept.
std::string normalize(std::string_view text);

/// Splits an already-normalized string on single spaces.
std::vector<std::string_view> split_tokens(std::string_view normalized);

/// Decodes UTF-8 into code points. Invalid bytes decode to themselves
/// (as U+0080..U+00FF) so no input is rejected.
std::u32string decode_utf8(std::string_view text);

/// Number of code points in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

}  // namespace coocnet
