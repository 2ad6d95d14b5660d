#include "twinlcs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "twinlcs/bounds.hpp"
#include "twinlcs/constructions.hpp"
#include "twinlcs/experiments.hpp"
#include "twinlcs/twins.hpp"
#include "twinlcs/word_io.hpp"

namespace twinlcs {

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"constructions", "roles", "twins-oracle", "bounds", "lemmas"};
    return names;
}

namespace {

// Collects cases; the first failure keeps its description.
class Tally {
public:
    explicit Tally(std::string name) { check_.name = std::move(name); check_.passed = true; }

    void operator()(bool ok, const std::function<std::string()>& describe)
    {
        ++check_.cases;
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.detail = describe();
        }
    }

    SuiteCheck done(std::string summary = {})
    {
        if (check_.passed)
            check_.detail = summary.empty() ? std::to_string(check_.cases) + " cases" : std::move(summary);
        return check_;
    }

private:
    SuiteCheck check_;
};

void for_each_word(std::size_t k, std::size_t n, const std::function<void(const Word&)>& f)
{
    std::vector<Letter> v(n, 1);
    for (;;) {
        f(Word(v, k));
        std::size_t i = n;
        while (i > 0 && v[i - 1] == k)
            v[--i] = 1;
        if (i == 0)
            return;
        ++v[i - 1];
    }
}

void for_each_role_word(std::size_t n, const std::function<void(const std::vector<std::uint8_t>&)>& f)
{
    std::vector<std::uint8_t> v(n, 0);
    for (;;) {
        f(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == 2)
            v[--i] = 0;
        if (i == 0)
            return;
        ++v[i - 1];
    }
}

SuiteCheck family_check(const std::string& name, const std::vector<FamilyOutput>& families)
{
    Tally t(name);
    for (const auto& f : families) {
        const auto report = verify_family(f);
        for (const auto& c : report.checks)
            t(c.holds, [&] {
                std::ostringstream s;
                s << f.family << " " << f.params.dump() << " " << to_string(c.ceiling.statistic) << " measured "
                  << c.measured << " vs " << to_string(c.ceiling.value);
                return s.str();
            });
    }
    return t.done();
}

SuiteReport constructions_suite()
{
    SuiteReport r{"constructions", {}};
    std::vector<FamilyOutput> fams;
    for (std::uint64_t p : {2, 3, 5})
        fams.push_back(quadratic_family(p));
    r.checks.push_back(family_check("quadratic", fams));
    fams.clear();
    for (std::size_t n = 1; n <= 3; ++n)
        fams.push_back(bhn_quadruple(n));
    r.checks.push_back(family_check("bhn", fams));
    fams.clear();
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t k : {4, 9, 16})
            fams.push_back(es_pair_auto(k, s));
    r.checks.push_back(family_check("es-pair", fams));
    fams.clear();
    for (std::size_t s = 1; s <= 2; ++s)
        for (std::size_t k1 = 1; k1 <= 2; ++k1)
            for (std::size_t k2 = 1; k2 <= 2; ++k2)
                for (std::size_t k3 = 1; k3 <= 2; ++k3)
                    fams.push_back(multiperm_quadruple(s, k1, k2, k3));
    r.checks.push_back(family_check("multiperm", fams));
    fams.clear();
    for (std::size_t kappa : {2, 3})
        fams.push_back(tuplet_family(2, kappa));
    r.checks.push_back(family_check("tuplet", fams));
    fams.clear();
    for (std::size_t k : {2, 3})
        fams.push_back(stratified_family(k, 12 * k, {1, 2, 3, 4, 6}));
    r.checks.push_back(family_check("stratified", fams));
    return r;
}

SuiteReport roles_suite()
{
    SuiteReport r{"roles", {}};
    Tally count("role_count vs enumeration, n <= 10");
    for (std::size_t n = 0; n <= 10; ++n) {
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> exact;
        for_each_role_word(n, [&](const std::vector<std::uint8_t>& v) {
            RoleWord rw(v);
            if (rw.balanced()) {
                auto s = role_stats(rw);
                ++exact[{s.m, s.p, s.z}];
            }
        });
        for (std::size_t m = 0; 2 * m <= n; ++m)
            for (std::size_t p = 0; p <= m; ++p)
                for (std::size_t z = 0; z <= n; ++z) {
                    auto it = exact.find({m, p, z});
                    std::uint64_t want = it == exact.end() ? 0 : it->second;
                    count(role_count_exact(n, m, p, z) == want, [&] {
                        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p) +
                               " z=" + std::to_string(z) + " enumerated " + std::to_string(want);
                    });
                }
    }
    r.checks.push_back(count.done());

    Tally prob("role_prob over [2]^12 for 012112021200");
    const RoleWord R = RoleWord::parse("012112021200");
    std::uint64_t hits = 0;
    for_each_word(2, 12, [&](const Word& w) {
        auto c = extract(w, R);
        hits += c && is_regular_pair(*c);
    });
    prob(Rational(hits, 4096) == role_prob(2, 12, 4, 2, 1), [&] { return std::to_string(hits) + "/4096"; });
    r.checks.push_back(prob.done(std::to_string(hits) + "/4096 = " + to_string(role_prob(2, 12, 4, 2, 1))));
    return r;
}

SuiteReport twins_oracle_suite(std::uint64_t seed)
{
    SuiteReport r{"twins-oracle", {}};
    Tally bin("lt_exact = lt_oracle, binary n <= 10");
    for (std::size_t n = 0; n <= 10; ++n)
        for_each_word(2, n, [&](const Word& w) {
            const auto a = lt_exact(w).length();
            const auto b = lt_oracle(w);
            bin(a == b, [&] { return format_word(w) + ": exact " + std::to_string(a) + ", oracle " + std::to_string(b); });
        });
    r.checks.push_back(bin.done());

    Tally tern("lt_exact = lt_oracle, 200 random ternary words n <= 10");
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Word w = sample_word(3, 1 + i % 10, seed, i);
        const auto a = lt_exact(w).length();
        const auto b = lt_oracle(w);
        tern(a == b, [&] { return format_word(w) + ": exact " + std::to_string(a) + ", oracle " + std::to_string(b); });
    }
    r.checks.push_back(tern.done());

    Tally ex("LT(0110010010101101) = 7");
    const Word example = parse_word("0110010010101101", {.zero_based = true});
    const auto lt = lt_exact(example).length();
    ex(lt == 7 && lt_oracle(example, {.max_assignments = 43'046'721}) == 7, [&] { return "got " + std::to_string(lt); });
    r.checks.push_back(ex.done());
    return r;
}

SuiteReport bounds_suite()
{
    SuiteReport r{"bounds", {}};
    Tally th("threshold k=4 <= 0.4932, k=5 <= 0.48");
    for (auto [k, cap] : {std::pair{4, 0.4932}, std::pair{5, 0.48}}) {
        auto a = alpha_threshold(k);
        th(a && *a <= cap && theta_expression(*a, k).total < 0,
           [&] { return "k=" + std::to_string(k) + " threshold " + (a ? std::to_string(*a) : "none"); });
    }
    r.checks.push_back(th.done());

    Tally mm("min-max constant");
    auto v = lower_bound_values(3);
    mm(std::abs(v.minmax_numeric - v.minmax_closed) < 1e-9 && v.minmax_beats_improved,
       [&] { return std::to_string(v.minmax_numeric); });
    r.checks.push_back(mm.done());

    Tally ub("union bound >= exact tail, k=2, n <= 10");
    for (std::size_t n = 1; n <= 10; ++n) {
        std::vector<std::uint64_t> at(n + 1, 0);
        for_each_word(2, n, [&](const Word& w) { ++at[lt_exact(w).length()]; });
        std::uint64_t tail = 0;
        for (std::size_t m = n + 1; m-- > 0;) {
            tail += at[m];
            if (2 * m <= n)
                ub(union_bound(2, n, m) >= Rational(tail, std::uint64_t{1} << n),
                   [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
        }
    }
    r.checks.push_back(ub.done());
    return r;
}

SuiteReport lemmas_suite(std::uint64_t seed)
{
    SuiteReport r{"lemmas", {}};
    CounterRng rng(seed, 0x1e);

    Tally reg("regularize on 1000 random monotone certificates");
    for (int t = 0; t < 1000; ++t) {
        const auto c = random_monotone_certificate(2 + t % 3, 4 + t % 13, rng);
        const auto out = regularize(c);
        reg(is_regular_pair(out) && out.monotone() && out.length() == c.length() && out.roles <= c.roles &&
                extract(out.word, out.roles).has_value(),
            [&] { return format_word(c.word) + " roles " + c.roles.str() + " -> " + out.roles.str(); });
    }
    r.checks.push_back(reg.done());

    Tally runs("runs: LT >= (n - #runs)/2");
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Word w = sample_word(2 + i % 4, 1 + i % 30, seed, 1000 + i);
        std::size_t nruns = w.empty() ? 0 : 1;
        for (std::size_t j = 1; j < w.size(); ++j)
            nruns += w[j] != w[j - 1];
        const auto c = twins_via_runs(w);
        runs(2 * c.length() >= w.size() - nruns && extract(w, c.roles).has_value(),
             [&] { return format_word(w); });
    }
    r.checks.push_back(runs.done());

    Tally img("monotone image >= ceil(s^2/6), s <= 6");
    for (std::size_t s = 1; s <= 6; ++s)
        for (int t = 0; t < 200; ++t) {
            auto f1 = random_strongly_monotone(s, rng, t % 3);
            auto f2 = random_strongly_monotone(s, rng, 1);
            auto f3 = random_strongly_monotone(s, rng, (t / 3) % 3);
            const auto size = monotone_image(f1, f2, f3);
            img(size * 6 >= s * s, [&] { return "s=" + std::to_string(s) + " image " + std::to_string(size); });
        }
    r.checks.push_back(img.done());
    return r;
}

} // namespace

SuiteReport verify_suite(std::string_view name, std::uint64_t seed)
{
    if (name == "constructions")
        return constructions_suite();
    if (name == "roles")
        return roles_suite();
    if (name == "twins-oracle")
        return twins_oracle_suite(seed);
    if (name == "bounds")
        return bounds_suite();
    if (name == "lemmas")
        return lemmas_suite(seed);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace twinlcs
