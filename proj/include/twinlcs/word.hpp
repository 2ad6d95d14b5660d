#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "twinlcs/types.hpp"

namespace twinlcs {

/// A finite sequence of letters over the alphabet [k] = {1, ..., k}.
///
/// The empty word is legal for every k >= 1. Construction throws
/// `std::invalid_argument` if k == 0 or a letter falls outside 1..k.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> letters, std::size_t alphabet_size);

    /// Word over the smallest alphabet containing every letter (k >= 1).
    static Word over_minimal_alphabet(std::vector<Letter> letters);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }

    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Word reversed() const;
    /// Consecutive letters [pos, pos + len).
    Word subword(std::size_t pos, std::size_t len) const;
    /// Letters at the given (increasing) positions.
    Word subsequence(std::span<const std::size_t> positions) const;
    Word concatenated(const Word& other) const;

    /// Same letter sequence, alphabet size ignored.
    bool same_letters(const Word& other) const noexcept { return letters_ == other.letters_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
    std::size_t alphabet_size_ = 1;
};

/// Letter multiplicities s_1..s_k.
class MultiSignature {
public:
    MultiSignature() = default;
    explicit MultiSignature(std::vector<std::size_t> counts);

    std::size_t alphabet_size() const noexcept { return counts_.size(); }
    std::size_t total() const noexcept { return total_; }
    std::size_t count(Letter letter) const;
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    /// True iff letter l occurs exactly s_l times in w (and w uses no other letters).
    bool conforms(const Word& w) const;

    /// Componentwise maximum, padded to the longer alphabet.
    static MultiSignature componentwise_max(const MultiSignature& a, const MultiSignature& b);

    friend bool operator==(const MultiSignature&, const MultiSignature&) = default;

private:
    std::vector<std::size_t> counts_;
    std::size_t total_ = 0;
};

MultiSignature signature(const Word& w);

/// Sliding-window frequency f_w(u): occurrences of u as a subword of w divided
/// by the number of windows len(w) - len(u) + 1. Requires 1 <= len(u) <= len(w).
Rational frequency(const Word& w, const Word& u);

/// Frequencies of every pattern of length 1..L that occurs in w. Absent
/// patterns have frequency 0 and are not stored.
struct FrequencyTable {
    std::size_t alphabet_size = 1;
    std::size_t max_length = 0;
    std::map<std::vector<Letter>, Rational> freqs;

    Rational at(const std::vector<Letter>& pattern) const;
};

FrequencyTable frequency_table(const Word& w, std::size_t max_length);

struct RegularityWitness {
    std::size_t begin = 0; ///< subword start (0-based)
    std::size_t length = 0;
    Word pattern;
    Rational whole_frequency;
    Rational subword_frequency;
};

struct RegularityReport {
    bool regular = true;
    std::optional<RegularityWitness> witness;
};

/// (eps, L)-regularity: for every subword w' with len(w') >= eps * len(w) and
/// every pattern u with len(u) <= L, |f_w(u) - f_{w'}(u)| < eps. Patterns
/// longer than w' are skipped. The first violation in the order (start,
/// length, pattern length, pattern) is reported.
RegularityReport is_regular(const Word& w, const Rational& eps, std::size_t max_pattern_length);

/// Replaces the j-th occurrence of letter l by a fresh letter. The enlarged
/// alphabet lists pairs (l, j) l-major, j-minor: (l, j) -> s_1 + ... + s_{l-1} + j,
/// where s is the capacity signature (default: the signature of w). Words
/// distinguished against a common capacity share one encoding.
Word distinguish(const Word& w);
Word distinguish(const Word& w, const MultiSignature& capacity);

/// Inverse of the distinguish encoding: (letter, copy) with copy 1-based.
std::pair<Letter, std::size_t> distinguished_origin(const MultiSignature& capacity, Letter enlarged);

/// Subsequence of first occurrences of the letters in `letter_set`, or the
/// empty word if some letter of the set is missing from w.
Word first_occurrence_permutation(const Word& w, std::span<const Letter> letter_set);

/// Concatenation family[w[1]-1] family[w[2]-1] ... The result's alphabet is
/// the largest alphabet among the family members.
Word substitute(const Word& w, std::span<const Word> family);

} // namespace twinlcs
