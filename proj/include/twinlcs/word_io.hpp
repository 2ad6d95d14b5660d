#pragma once

#include <string>
#include <string_view>

#include "twinlcs/word.hpp"

namespace twinlcs {

struct WordParseOptions {
    /// Input letters are 0-based (the 0/1 convention for binary words) and
    /// are shifted up by one.
    bool zero_based = false;
};

/// Accepts `k=<int>;w=<comma-separated letters>`, `k=<int>;w=<digits>` when
/// k <= 9, and a bare digit string (alphabet inferred from the largest
/// letter, or 2 for zero-based binary input). Throws `std::invalid_argument`.
Word parse_word(std::string_view text, const WordParseOptions& options = {});

struct WordFormatOptions {
    /// Render binary words as 0/1 instead of 1/2.
    bool zero_based = false;
};

/// `k=<int>;w=<comma-separated letters>`.
std::string format_word(const Word& w, const WordFormatOptions& options = {});

/// Digit string; requires k <= 9 (or k <= 10 when zero-based).
std::string format_compact(const Word& w, const WordFormatOptions& options = {});

} // namespace twinlcs
