#include "twinlcs/json.hpp"

#include <stdexcept>
#include <string>

#include "twinlcs/word_io.hpp"

namespace twinlcs {

using nlohmann::json;

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)));
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
}

void to_json(json& j, const Word& w)
{
    j = json{{"k", w.alphabet_size()}, {"letters", json(std::vector<Letter>(w.begin(), w.end()))}};
}

void from_json(const json& j, Word& w)
{
    w = Word(j.at("letters").get<std::vector<Letter>>(), j.at("k").get<std::size_t>());
}

void to_json(json& j, const MultiSignature& s)
{
    j = json{{"counts", s.counts()}};
}

void from_json(const json& j, MultiSignature& s)
{
    s = MultiSignature(j.at("counts").get<std::vector<std::size_t>>());
}

void to_json(json& j, const FrequencyTable& t)
{
    json freqs = json::array();
    for (const auto& [pattern, value] : t.freqs)
        freqs.push_back({{"pattern", pattern}, {"value", to_string(value)}});
    j = json{{"k", t.alphabet_size}, {"L", t.max_length}, {"freqs", std::move(freqs)}};
}

void from_json(const json& j, FrequencyTable& t)
{
    t = FrequencyTable{};
    t.alphabet_size = j.at("k").get<std::size_t>();
    t.max_length = j.at("L").get<std::size_t>();
    for (const auto& e : j.at("freqs"))
        t.freqs[e.at("pattern").get<std::vector<Letter>>()] = parse_rational(e.at("value").get<std::string>());
}

void to_json(json& j, const TwinCertificate& c)
{
    j = json{{"word", format_word(c.word)}, {"roles", c.roles.str()}, {"length", c.length()}};
}

void from_json(const json& j, TwinCertificate& c)
{
    const Word w = parse_word(j.at("word").get<std::string>());
    auto parsed = extract(w, RoleWord::parse(j.at("roles").get<std::string>()));
    if (!parsed)
        throw std::invalid_argument("certificate roles do not describe twins of the word");
    c = std::move(*parsed);
}

void to_json(json& j, const Ceiling& c)
{
    j = json{{"members", c.members},
             {"statistic", to_string(c.statistic)},
             {"value", to_string(c.value)},
             {"exact", c.exact},
             {"provenance", c.provenance}};
}

void to_json(json& j, const FamilyOutput& f)
{
    json words = json::array();
    for (const Word& w : f.words)
        words.push_back(format_word(w));
    j = json{{"family", f.family}, {"params", f.params}, {"words", std::move(words)}, {"ceilings", f.ceilings}};
}

void to_json(json& j, const FamilyCheck& c)
{
    json checks = json::array();
    for (const auto& k : c.checks) {
        json e = k.ceiling;
        e["measured"] = k.measured;
        e["holds"] = k.holds;
        checks.push_back(std::move(e));
    }
    j = json{{"all_hold", c.all_hold()}, {"checks", std::move(checks)}};
}

} // namespace twinlcs
