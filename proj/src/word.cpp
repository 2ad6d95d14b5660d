#include "twinlcs/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace twinlcs {

std::string to_string(const Rational& value)
{
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Word::Word(std::vector<Letter> letters, std::size_t alphabet_size)
  : letters_(std::move(letters)), alphabet_size_(alphabet_size)
{
    if (alphabet_size_ == 0)
        throw std::invalid_argument("alphabet size must be positive");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] < 1 || letters_[i] > alphabet_size_)
            throw std::invalid_argument("letter " + std::to_string(letters_[i]) + " at position " +
                                        std::to_string(i + 1) + " outside alphabet [" +
                                        std::to_string(alphabet_size_) + "]");
    }
}

Word Word::over_minimal_alphabet(std::vector<Letter> letters)
{
    Letter k = 1;
    for (Letter l : letters)
        k = std::max(k, l);
    return Word(std::move(letters), k);
}

Word Word::reversed() const
{
    return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()), alphabet_size_);
}

Word Word::subword(std::size_t pos, std::size_t len) const
{
    if (pos > letters_.size() || len > letters_.size() - pos)
        throw std::out_of_range("subword range outside word");
    auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
    return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)), alphabet_size_);
}

Word Word::subsequence(std::span<const std::size_t> positions) const
{
    std::vector<Letter> out;
    out.reserve(positions.size());
    for (std::size_t p : positions)
        out.push_back(letters_.at(p));
    return Word(std::move(out), alphabet_size_);
}

Word Word::concatenated(const Word& other) const
{
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out), std::max(alphabet_size_, other.alphabet_size_));
}

MultiSignature::MultiSignature(std::vector<std::size_t> counts)
  : counts_(std::move(counts)), total_(std::accumulate(counts_.begin(), counts_.end(), std::size_t{0}))
{
}

std::size_t MultiSignature::count(Letter letter) const
{
    if (letter < 1 || letter > counts_.size())
        return 0;
    return counts_[letter - 1];
}

bool MultiSignature::conforms(const Word& w) const
{
    if (w.size() != total_)
        return false;
    std::vector<std::size_t> seen(counts_.size(), 0);
    for (Letter l : w) {
        if (l > counts_.size())
            return false;
        ++seen[l - 1];
    }
    return seen == counts_;
}

MultiSignature MultiSignature::componentwise_max(const MultiSignature& a, const MultiSignature& b)
{
    std::vector<std::size_t> out(std::max(a.alphabet_size(), b.alphabet_size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::max(a.count(static_cast<Letter>(i + 1)), b.count(static_cast<Letter>(i + 1)));
    return MultiSignature(std::move(out));
}

MultiSignature signature(const Word& w)
{
    std::vector<std::size_t> counts(w.alphabet_size(), 0);
    for (Letter l : w)
        ++counts[l - 1];
    return MultiSignature(std::move(counts));
}

namespace {

std::size_t count_occurrences(std::span<const Letter> text, std::span<const Letter> pattern)
{
    std::size_t hits = 0;
    for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i)
        if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i)))
            ++hits;
    return hits;
}

} // namespace

Rational frequency(const Word& w, const Word& u)
{
    if (u.empty())
        throw std::invalid_argument("frequency: pattern must be non-empty");
    if (u.size() > w.size())
        throw std::invalid_argument("frequency: pattern longer than word");
    const std::size_t windows = w.size() - u.size() + 1;
    return Rational(count_occurrences(w.letters(), u.letters()), windows);
}

Rational FrequencyTable::at(const std::vector<Letter>& pattern) const
{
    auto it = freqs.find(pattern);
    return it == freqs.end() ? Rational(0) : it->second;
}

FrequencyTable frequency_table(const Word& w, std::size_t max_length)
{
    if (max_length == 0 || max_length > w.size())
        throw std::invalid_argument("frequency_table: need 1 <= L <= len(w)");
    FrequencyTable table;
    table.alphabet_size = w.alphabet_size();
    table.max_length = max_length;
    std::map<std::vector<Letter>, std::size_t> counts;
    const auto letters = w.letters();
    for (std::size_t len = 1; len <= max_length; ++len)
        for (std::size_t i = 0; i + len <= letters.size(); ++i)
            ++counts[std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(i),
                                         letters.begin() + static_cast<std::ptrdiff_t>(i + len))];
    for (auto& [pattern, c] : counts)
        table.freqs.emplace(pattern, Rational(c, w.size() - pattern.size() + 1));
    return table;
}

RegularityReport is_regular(const Word& w, const Rational& eps, std::size_t max_pattern_length)
{
    if (eps <= 0 || eps > 1)
        throw std::invalid_argument("is_regular: eps must lie in (0, 1]");
    if (max_pattern_length == 0)
        throw std::invalid_argument("is_regular: L must be positive");
    if (max_pattern_length > w.size())
        throw std::invalid_argument("is_regular: L exceeds word length");

    const std::size_t n = w.size();
    const auto letters = w.letters();

    // Distinct patterns of w per length, each with a dense id, plus the id of
    // the window starting at every position.
    struct LengthIndex {
        std::vector<std::vector<Letter>> patterns;
        std::vector<std::size_t> whole_counts;
        std::vector<std::size_t> window_id;
    };
    std::vector<LengthIndex> index(max_pattern_length + 1);
    for (std::size_t len = 1; len <= max_pattern_length; ++len) {
        std::map<std::vector<Letter>, std::size_t> ids;
        auto& li = index[len];
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::vector<Letter> pat(letters.begin() + static_cast<std::ptrdiff_t>(i),
                                    letters.begin() + static_cast<std::ptrdiff_t>(i + len));
            ids.emplace(std::move(pat), 0);
        }
        std::size_t next = 0;
        for (auto& [pat, id] : ids) {
            id = next++;
            li.patterns.push_back(pat);
        }
        li.whole_counts.assign(li.patterns.size(), 0);
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::vector<Letter> pat(letters.begin() + static_cast<std::ptrdiff_t>(i),
                                    letters.begin() + static_cast<std::ptrdiff_t>(i + len));
            const std::size_t id = ids.at(pat);
            li.window_id.push_back(id);
            ++li.whole_counts[id];
        }
    }

    // len(w') >= eps * n  <=>  len * den >= num * n
    const BigInt eps_num = boost::multiprecision::numerator(eps);
    const BigInt eps_den = boost::multiprecision::denominator(eps);
    std::size_t min_len = n;
    for (std::size_t len = 0; len <= n; ++len) {
        if (BigInt(len) * eps_den >= eps_num * BigInt(n)) {
            min_len = len;
            break;
        }
    }
    min_len = std::max<std::size_t>(min_len, 1);

    RegularityReport report;
    std::vector<std::vector<std::size_t>> sub_counts(max_pattern_length + 1);
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; len <= max_pattern_length; ++len)
            sub_counts[len].assign(index[len].patterns.size(), 0);
        for (std::size_t end = start + 1; end <= n; ++end) {
            const std::size_t sub_len = end - start;
            // Windows of each pattern length that end exactly at `end`.
            for (std::size_t len = 1; len <= max_pattern_length && len <= sub_len; ++len)
                ++sub_counts[len][index[len].window_id[end - len]];
            if (sub_len < min_len)
                continue;
            for (std::size_t len = 1; len <= max_pattern_length && len <= sub_len; ++len) {
                const auto& li = index[len];
                const std::size_t whole_windows = n - len + 1;
                const std::size_t sub_windows = sub_len - len + 1;
                for (std::size_t id = 0; id < li.patterns.size(); ++id) {
                    const Rational fw(li.whole_counts[id], whole_windows);
                    const Rational fs(sub_counts[len][id], sub_windows);
                    if (abs(fw - fs) >= eps) {
                        report.regular = false;
                        report.witness = RegularityWitness{start, sub_len, Word(li.patterns[id], w.alphabet_size()), fw, fs};
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

Word distinguish(const Word& w)
{
    return distinguish(w, signature(w));
}

Word distinguish(const Word& w, const MultiSignature& capacity)
{
    std::vector<std::size_t> offset(capacity.alphabet_size() + 1, 0);
    for (std::size_t l = 0; l < capacity.alphabet_size(); ++l)
        offset[l + 1] = offset[l] + capacity.counts()[l];
    std::vector<std::size_t> seen(capacity.alphabet_size(), 0);
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (l > capacity.alphabet_size() || seen[l - 1] >= capacity.counts()[l - 1])
            throw std::invalid_argument("distinguish: capacity signature does not cover the word");
        ++seen[l - 1];
        out.push_back(static_cast<Letter>(offset[l - 1] + seen[l - 1]));
    }
    return Word(std::move(out), std::max<std::size_t>(capacity.total(), 1));
}

std::pair<Letter, std::size_t> distinguished_origin(const MultiSignature& capacity, Letter enlarged)
{
    std::size_t rest = enlarged;
    for (std::size_t l = 0; l < capacity.alphabet_size(); ++l) {
        if (rest >= 1 && rest <= capacity.counts()[l])
            return {static_cast<Letter>(l + 1), rest};
        rest -= capacity.counts()[l];
    }
    throw std::invalid_argument("distinguished_origin: letter outside enlarged alphabet");
}

Word first_occurrence_permutation(const Word& w, std::span<const Letter> letter_set)
{
    std::vector<Letter> wanted(letter_set.begin(), letter_set.end());
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::vector<Letter> out;
    std::vector<bool> taken(wanted.size(), false);
    for (Letter l : w) {
        auto it = std::lower_bound(wanted.begin(), wanted.end(), l);
        if (it == wanted.end() || *it != l)
            continue;
        const auto idx = static_cast<std::size_t>(it - wanted.begin());
        if (!taken[idx]) {
            taken[idx] = true;
            out.push_back(l);
        }
    }
    if (out.size() != wanted.size())
        return Word({}, w.alphabet_size());
    return Word(std::move(out), w.alphabet_size());
}

Word substitute(const Word& w, std::span<const Word> family)
{
    std::size_t k = 1;
    for (const Word& f : family)
        k = std::max(k, f.alphabet_size());
    std::vector<Letter> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter l = w[i];
        if (l > family.size())
            throw std::invalid_argument("substitute: letter " + std::to_string(l) + " has no family entry");
        const Word& block = family[l - 1];
        out.insert(out.end(), block.begin(), block.end());
    }
    return Word(std::move(out), k);
}

} // namespace twinlcs
