#include <doctest.h>

#include <cmath>
#include <random>

#include "twinlcs/constructions.hpp"
#include "twinlcs/word_io.hpp"

using namespace twinlcs;

namespace {

std::vector<bool> sieve(std::size_t limit)
{
    std::vector<bool> prime(limit + 1, true);
    prime[0] = false;
    if (limit >= 1)
        prime[1] = false;
    for (std::size_t i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (std::size_t j = i * i; j <= limit; j += i)
                prime[j] = false;
    return prime;
}

void check_family(const FamilyOutput& f)
{
    const auto report = verify_family(f);
    for (const auto& c : report.checks) {
        INFO(f.family << " members " << c.ceiling.members[0] << "," << c.ceiling.members[1] << " "
                      << to_string(c.ceiling.statistic) << " measured " << c.measured << " ceiling "
                      << to_string(c.ceiling.value) << (c.ceiling.exact ? " (exact)" : ""));
        CHECK(c.holds);
    }
}

void check_common_signature(const FamilyOutput& f)
{
    REQUIRE_FALSE(f.words.empty());
    const auto sig = signature(f.words[0]);
    for (const Word& w : f.words) {
        CHECK(w.alphabet_size() == f.words[0].alphabet_size());
        CHECK(signature(w) == sig);
    }
}

} // namespace

TEST_CASE("lex_build examples")
{
    const auto id = make_lex_spec({2, 2}, 1, [](const std::vector<std::int64_t>& c, std::int64_t) {
        return std::vector<std::int64_t>{c[0], c[1]};
    });
    CHECK(lex_build(id) == Word({1, 2, 3, 4}, 4));
    const auto neg = make_lex_spec({2, 2}, 1, [](const std::vector<std::int64_t>& c, std::int64_t) {
        return std::vector<std::int64_t>{-c[0], -c[1]};
    });
    CHECK(lex_build(neg) == Word({4, 3, 2, 1}, 4));
    const auto copies = make_lex_spec({2}, 2, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{c[0], r};
    });
    CHECK(lex_build(copies) == Word({1, 1, 2, 2}, 2));
    const auto clash = make_lex_spec({2, 2}, 1, [](const std::vector<std::int64_t>& c, std::int64_t) {
        return std::vector<std::int64_t>{c[0]};
    });
    CHECK_THROWS_AS(lex_build(clash), std::invalid_argument);

    CHECK(lex_letter({3, 4, 5}, {2, 1, 3}) == 2 * 20 + 1 * 5 + 3 + 1);
    CHECK(lex_coords({3, 4, 5}, 49) == std::vector<std::int64_t>{2, 1, 3});
}

TEST_CASE("negating every key reverses the word")
{
    std::mt19937_64 rng(31);
    for (std::size_t trial = 0; trial < 50; ++trial) {
        const std::vector<std::size_t> dims{2 + trial % 3, 1 + trial % 4, 3};
        const std::size_t copies = 1 + trial % 3;
        std::vector<std::int64_t> w(4);
        for (auto& x : w)
            x = static_cast<std::int64_t>(rng() % 7) - 3;
        // A random injective key: a random linear part plus the exact point.
        const LexKey key = [&](const std::vector<std::int64_t>& c, std::int64_t r) {
            return std::vector<std::int64_t>{w[0] * c[0] + w[1] * c[1] + w[2] * c[2] + w[3] * r, c[1], r, c[0], c[2]};
        };
        const LexKey negated = [&](const std::vector<std::int64_t>& c, std::int64_t r) {
            auto k = key(c, r);
            for (auto& x : k)
                x = -x;
            return k;
        };
        const Word a = lex_build(make_lex_spec(dims, copies, key));
        CHECK(lex_build(make_lex_spec(dims, copies, negated)) == a.reversed());
        CHECK(signature(a).counts() == std::vector<std::size_t>(a.alphabet_size(), copies));
    }
}

TEST_CASE("next_prime against a sieve")
{
    CHECK(next_prime(4) == 5);
    CHECK(next_prime(2) == 2);
    CHECK(next_prime(1) == 2);
    const auto prime = sieve(200000);
    CHECK(prime[1361]);
    for (std::size_t c = 1332; c < 1361; ++c)
        CHECK_FALSE(prime[c]);
    CHECK(next_prime(1332) == 1361);
    std::size_t expected = 199999;
    while (!prime[expected])
        --expected;
    for (std::size_t x = 199000; x-- > 1;) {
        if (prime[x])
            expected = x;
        if (x % 97 == 0 || x < 3000)
            CHECK(next_prime(x) == expected);
    }
    for (std::size_t x = 0; x <= 200000; ++x)
        CHECK(is_prime(x) == prime[x]);
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(18446744073709551557ull - 2));
    CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("quadratic family")
{
    const auto f2 = quadratic_family(2);
    CHECK(f2.words.size() == 2);
    CHECK(f2.words[0].size() == 8);
    check_common_signature(f2);
    check_family(f2);

    const auto f3 = quadratic_family(3);
    CHECK(f3.words.size() == 3);
    CHECK(f3.words[0].alphabet_size() == 27);
    CHECK(f3.ceilings[0].value == 10);
    check_family(f3);
    CHECK(set_lcs_stats(f3.words, 2).lcs_tuple <= 10);

    const auto f5 = quadratic_family(5, 100);
    CHECK(f5.words.size() == 5);
    CHECK(f5.words[0].size() == 100);
    CHECK(f5.ceilings[0].value == 18);
    check_common_signature(f5);
    check_family(f5);

    // Deleting letters never increases the pairwise values.
    const auto full = quadratic_family(5);
    const auto full_stats = set_lcs_stats(full.words, 2);
    const auto part_stats = set_lcs_stats(f5.words, 2);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b)
            if (a != b)
                CHECK(part_stats.pairs[a][b] <= full_stats.pairs[a][b]);

    CHECK_THROWS_AS(quadratic_family(4), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_family(2, 9), std::invalid_argument);
    const auto auto_k = quadratic_family_for(100);
    CHECK(auto_k.params["p"] == 5);
    CHECK(quadratic_family_for(8).params["p"] == 3);
    CHECK(quadratic_family_for(7).params["p"] == 2);
}

TEST_CASE("bhn quadruple")
{
    const auto f1 = bhn_quadruple(1);
    for (const Word& w : f1.words)
        CHECK(w == Word({1}, 1));
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto f = bhn_quadruple(n);
        check_common_signature(f);
        check_family(f);
        CHECK(lcs_length(f.words[0], f.words[1]) == n);
    }
    // (x, y, 1), (x, y, 2), (x, y, 3) in both of the first two words.
    const auto f3 = bhn_quadruple(3);
    const Word witness({lex_letter({3, 3, 3}, {1, 1, 0}), lex_letter({3, 3, 3}, {1, 1, 1}), lex_letter({3, 3, 3}, {1, 1, 2})}, 27);
    CHECK(lcs_length(witness, f3.words[0]) == 3);
    CHECK(lcs_length(witness, f3.words[1]) == 3);
}

TEST_CASE("es pair")
{
    auto f = es_pair(1, 2, 2);
    CHECK(f.words[0].size() == 4);
    CHECK(f.ceilings[0].value == 2);
    CHECK(f.ceilings[1].value == 2);
    check_family(f);

    f = es_pair(2, 2, 2);
    CHECK(f.words[0].size() + f.words[1].size() == 16);
    check_common_signature(f);
    CHECK(f.ceilings[0].value == 4);
    CHECK(f.ceilings[1].value == 3);
    check_family(f);

    f = es_pair(1, 1, 1);
    CHECK(f.words[0] == Word({1}, 1));
    CHECK(lcs_reversible(f.words[0], f.words[1]).max == 1);
    check_family(f);

    for (std::size_t s = 1; s <= 4; ++s)
        for (std::size_t k1 = 1; k1 <= 5; ++k1)
            for (std::size_t k2 = 1; k2 <= 5; ++k2)
                check_family(es_pair(s, k1, k2));
}

TEST_CASE("es pair auto mode")
{
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t k : {4, 9, 16, 25, 37, 50}) {
            const auto f = es_pair_auto(k, s);
            const std::size_t k1 = f.params["k1"], k2 = f.params["k2"];
            const double n = static_cast<double>(k * s);
            CHECK(f.words[0].size() == k * s);
            check_common_signature(f);
            check_family(f);
            const auto r = lcs_reversible(f.words[0], f.words[1]);
            CHECK(static_cast<double>(r.max) <= std::sqrt(n) + static_cast<double>(s));
            CHECK(static_cast<double>(r.max) >= std::sqrt(n) - 1e-9);
            // Arithmetic behind the auto choice.
            const double ks = std::sqrt(static_cast<double>(k * s));
            CHECK(static_cast<double>(k1 * s) <= ks + static_cast<double>(s) + 1e-9);
            CHECK(static_cast<double>(k2 + s) <= std::ceil(ks - 1e-12) + static_cast<double>(s) + 1e-9);
        }
    CHECK(closest_integer(2.5) == 3);
    CHECK(closest_integer(2.49) == 2);
}

TEST_CASE("multipermutation quadruple closed forms")
{
    auto f = multiperm_quadruple(1, 1, 1, 1);
    for (const Word& w : f.words)
        CHECK(w == Word({1}, 1));
    check_family(f);

    f = multiperm_quadruple(2, 2, 1, 2);
    CHECK(f.ceilings[0].value == 3); // (1,2)
    CHECK(f.ceilings[2].value == 4); // (1,4)
    CHECK(f.ceilings[4].value == 2); // (1,3)
    CHECK(f.ceilings[5].value == 3); // (2,4)
    check_family(f);

    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t k1 = 1; k1 <= 3; ++k1)
            for (std::size_t k2 = 1; k2 <= 3; ++k2)
                for (std::size_t k3 = 1; k3 <= 3; ++k3) {
                    const auto g = multiperm_quadruple(s, k1, k2, k3);
                    check_common_signature(g);
                    check_family(g);
                }
    // A single z value: the second and fourth words share the copy order.
    const auto g = multiperm_quadruple(3, 2, 2, 1);
    CHECK(lcs_length(g.words[1], g.words[3]) == 2 * 3);
}

TEST_CASE("multipermutation quadruple auto mode")
{
    const auto f = multiperm_quadruple_auto(36, 3);
    CHECK(f.params["k2"] == 2);
    CHECK(f.params["k1"] == 4);
    CHECK(f.params["k3"] == 5);
    CHECK(f.words[0].size() == 36 * 3);
    check_common_signature(f);
    check_family(f);
    Rational top = 0;
    for (const auto& c : f.ceilings)
        top = std::max(top, c.value);
    CHECK(static_cast<double>(top) <= multiperm_quadruple_target(36, 3));
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t k = 10; k <= 120; k += 11)
            check_family(multiperm_quadruple_auto(k, s));
}

TEST_CASE("tuplet family")
{
    auto f = tuplet_family(2, 1);
    CHECK(f.words.size() == 4);
    for (const Word& w : f.words)
        CHECK(w == Word({1}, 1));
    for (std::size_t kappa : {2, 3}) {
        f = tuplet_family(2, kappa);
        CHECK(f.words.size() == 4);
        CHECK(f.words[0].size() == kappa * kappa * kappa);
        check_common_signature(f);
        check_family(f);
        CHECK(set_lcs_stats(f.words, 2).lcs_tuple == kappa);
    }
    f = tuplet_family(3, 2);
    CHECK(f.words.size() == 6);
    CHECK(f.words[0].size() == 1024);
    CHECK(f.ceilings.size() == 20);
    check_family(f);
    CHECK_THROWS_AS(tuplet_family(4, 2), ResourceLimitError);
}

TEST_CASE("stratified family")
{
    auto f = stratified_family(2, 8, {1, 4});
    CHECK(f.words[0].same_letters(parse_word("12121212")));
    CHECK(f.words[1].same_letters(parse_word("11112222")));
    CHECK(f.ceilings[0].value == 6);
    check_family(f);
    CHECK(lcs_length(f.words[2], f.words[3]) == 0);

    f = stratified_family(1, 6, {1, 2, 3});
    for (const Word& w : f.words)
        CHECK(w.same_letters(parse_word("111111")));
    check_family(f);

    for (std::size_t k : {2, 3})
        for (std::size_t n = k; n <= 48; n += k) {
            std::vector<std::size_t> ms;
            for (std::size_t m = 1; m <= n / k; ++m)
                if ((n / k) % m == 0)
                    ms.push_back(m);
            check_family(stratified_family(k, n, ms));
        }
    CHECK_THROWS_AS(stratified_family(2, 8, {3}), std::invalid_argument);
    CHECK_THROWS_AS(stratified_family(3, 8, {1}), std::invalid_argument);
}
