#include "twinlcs/word_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace twinlcs {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what)
{
    s = trim(s);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return value;
}

std::vector<std::uint64_t> parse_letters(std::string_view body, bool digits_allowed)
{
    std::vector<std::uint64_t> raw;
    body = trim(body);
    if (body.empty())
        return raw;
    if (body.find(',') == std::string_view::npos && digits_allowed) {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed digit word: '" + std::string(body) + "'");
            raw.push_back(static_cast<std::uint64_t>(c - '0'));
        }
        return raw;
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = body.find(',', pos);
        raw.push_back(parse_uint(body.substr(pos, comma - pos), "letter"));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return raw;
}

Word build(const std::vector<std::uint64_t>& raw, std::size_t k, bool zero_based)
{
    std::vector<Letter> letters;
    letters.reserve(raw.size());
    for (std::uint64_t v : raw) {
        const std::uint64_t shifted = zero_based ? v + 1 : v;
        if (shifted > 0xffffffffULL)
            throw std::invalid_argument("letter too large");
        letters.push_back(static_cast<Letter>(shifted));
    }
    return Word(std::move(letters), k);
}

} // namespace

Word parse_word(std::string_view text, const WordParseOptions& options)
{
    text = trim(text);
    if (text.rfind("k=", 0) == 0) {
        const std::size_t semi = text.find(';');
        if (semi == std::string_view::npos)
            throw std::invalid_argument("word format is 'k=<int>;w=<letters>'");
        const auto k = parse_uint(text.substr(2, semi - 2), "alphabet size");
        std::string_view rest = trim(text.substr(semi + 1));
        if (rest.rfind("w=", 0) != 0)
            throw std::invalid_argument("word format is 'k=<int>;w=<letters>'");
        const bool digits_allowed = k <= 9 || (options.zero_based && k <= 10);
        return build(parse_letters(rest.substr(2), digits_allowed), k, options.zero_based);
    }
    const auto raw = parse_letters(text, true);
    std::uint64_t top = 0;
    for (auto v : raw)
        top = std::max(top, options.zero_based ? v + 1 : v);
    std::size_t k = static_cast<std::size_t>(std::max<std::uint64_t>(top, 1));
    if (options.zero_based)
        k = std::max<std::size_t>(k, 2);
    return build(raw, k, options.zero_based);
}

std::string format_word(const Word& w, const WordFormatOptions& options)
{
    const bool shift = options.zero_based && w.alphabet_size() == 2;
    std::string out = "k=" + std::to_string(w.alphabet_size()) + ";w=";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(shift ? w[i] - 1 : w[i]);
    }
    return out;
}

std::string format_compact(const Word& w, const WordFormatOptions& options)
{
    const bool shift = options.zero_based && w.alphabet_size() == 2;
    if (w.alphabet_size() > 9)
        throw std::invalid_argument("compact form needs k <= 9");
    std::string out;
    out.reserve(w.size());
    for (Letter l : w)
        out += static_cast<char>('0' + (shift ? l - 1 : l));
    return out;
}

} // namespace twinlcs
