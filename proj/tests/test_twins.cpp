#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "twinlcs/twins.hpp"
#include "twinlcs/word_io.hpp"

using namespace twinlcs;

namespace {

Word w(std::string_view digits)
{
    return parse_word(digits);
}

Word bin(std::string_view digits)
{
    return parse_word(digits, {.zero_based = true});
}

TwinCertificate cert(const Word& v, std::string_view roles)
{
    auto c = extract(v, RoleWord::parse(roles));
    REQUIRE(c);
    return *c;
}

/// Random monotone certificate from a random FIFO assignment of roles.
TwinCertificate random_monotone(std::mt19937_64& rng, std::size_t k, std::size_t n)
{
    const Word v = oracle::random_word(rng, k, n);
    // Greedy random FIFO assignment.
    std::vector<std::uint8_t> roles(n, 0);
    std::vector<Letter> queue;
    std::size_t head = 0;
    std::uniform_int_distribution<int> coin(0, 2);
    for (std::size_t i = 0; i < n; ++i) {
        const int c = coin(rng);
        if (c == 2 && head < queue.size() && queue[head] == v[i]) {
            roles[i] = 2;
            ++head;
        } else if (c >= 1) {
            roles[i] = 1;
            queue.push_back(v[i]);
        }
    }
    // Drop unmatched openings from the back.
    std::size_t unmatched = queue.size() - head;
    for (std::size_t i = n; i-- > 0 && unmatched > 0;) {
        if (roles[i] == 1) {
            roles[i] = 0;
            --unmatched;
        }
    }
    auto c = extract(v, RoleWord(roles));
    REQUIRE(c);
    return *c;
}

} // namespace

TEST_CASE("role words")
{
    CHECK_THROWS_AS(RoleWord::parse("013"), std::invalid_argument);
    CHECK(RoleWord::parse("1122").monotone());
    CHECK_FALSE(RoleWord::parse("2112").monotone());
    CHECK(RoleWord::parse("2112").balanced());
    CHECK(RoleWord::parse("0120") < RoleWord::parse("0210"));
}

TEST_CASE("extract and round trip")
{
    const Word v = bin("100111011101");
    const auto c = extract(v, RoleWord::parse("012112021200"));
    REQUIRE(c);
    CHECK(c->length() == 4);
    CHECK(c->twin() == v.subsequence(c->second));
    CHECK(role_word(*c).str() == "012112021200");
    CHECK(certificate_from_positions(v, c->first, c->second).roles == c->roles);

    const auto empty = extract(v, RoleWord(std::vector<std::uint8_t>(12, 0)));
    REQUIRE(empty);
    CHECK(empty->length() == 0);

    CHECK_FALSE(extract(w("12"), RoleWord::parse("11")));
    CHECK_FALSE(extract(w("12"), RoleWord::parse("12")));
    CHECK_THROWS_AS(extract(w("12"), RoleWord::parse("1")), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_positions(w("11"), {0}, {0}), std::invalid_argument);
}

TEST_CASE("role statistics")
{
    auto s = role_stats(RoleWord::parse("012112021200"));
    CHECK((s.m == 4 && s.p == 2 && s.z == 1));
    s = role_stats(RoleWord::parse("000"));
    CHECK((s.m == 0 && s.p == 0 && s.z == 3));
    s = role_stats(RoleWord::parse("1122"));
    CHECK((s.m == 2 && s.p == 0 && s.z == 0));
    CHECK_THROWS_AS(role_stats(RoleWord::parse("112")), std::invalid_argument);
}

TEST_CASE("monotonize")
{
    CHECK(monotonize(cert(w("11"), "21")).roles.str() == "12");
    const auto c = monotonize(certificate_from_positions(w("1212"), {2, 3}, {0, 1}));
    CHECK(c.first == std::vector<std::size_t>{0, 1});
    CHECK(c.second == std::vector<std::size_t>{2, 3});
    CHECK(c.twin() == Word({1, 2}, 2));
    const auto m = cert(bin("100111011101"), "012112021200");
    CHECK(monotonize(m).roles == m.roles);

    // Every valid role word of every binary word of length 8.
    for (const Word& v : oracle::all_words(2, 8)) {
        oracle::for_each_role_word(8, 3, [&](const std::vector<std::uint8_t>& r) {
            auto c0 = extract(v, RoleWord(r));
            if (!c0)
                return false;
            const auto mono = monotonize(*c0);
            CHECK(mono.monotone());
            CHECK(mono.length() == c0->length());
            return false;
        });
    }
}

TEST_CASE("regularize examples")
{
    // 0210 is not monotone, so the precondition rejects it; monotonizing it
    // first gives 0120, which is already regular.
    const Word v = w("2112");
    CHECK_THROWS_AS(regularize(cert(v, "0210")), std::invalid_argument);
    const auto mono = monotonize(cert(v, "0210"));
    CHECK(mono.roles.str() == "0120");
    CHECK(regularize(mono).roles.str() == "0120");

    CHECK(regularize(cert(w("111"), "120")).roles.str() == "012");
    CHECK(regularize_local(cert(w("111"), "120")).roles.str() == "012");

    const auto reg = cert(bin("100111011101"), "012112021200");
    CHECK(is_regular_pair(reg) == !regularity_violation(reg).has_value());

    // A swap-loop fixed point that is not the lexicographic minimum.
    const auto local = regularize_local(cert(w("1221"), "1002"));
    CHECK(local.roles.str() == "1002");
    CHECK(regularize(cert(w("1221"), "1002")).roles.str() == "0120");
}

TEST_CASE("regularize output is regular, monotone and not larger")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto c = random_monotone(rng, 2 + trial % 3, 4 + trial % 13);
        for (const auto& r : {regularize_local(c), regularize(c)}) {
            CHECK(r.monotone());
            CHECK(is_regular_pair(r));
            CHECK(r.length() == c.length());
            CHECK(r.roles <= c.roles);
        }
    }
}

TEST_CASE("regularize equals the exhaustive lexicographic minimum")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 400; ++trial) {
        const auto c = random_monotone(rng, 2 + trial % 2, 1 + trial % 8);
        const auto expected = oracle::lexmin_monotone(c.word, c.length());
        REQUIRE(expected);
        CHECK(regularize(c).roles.roles() == *expected);
    }
}

TEST_CASE("lt_exact small examples")
{
    CHECK(lt_exact(w("11")).length() == 1);
    CHECK(lt_exact(Word({1, 2, 3, 4, 5}, 5)).length() == 0);
    CHECK(lt_exact(Word({}, 2)).length() == 0);
    CHECK(lt_exact(w("1212")).length() == 2);
    CHECK(lt_exact(w("1212")).roles.str() == "1122");
    CHECK(lt_exact(w("112")).length() == 1);
}

TEST_CASE("oracle examples")
{
    CHECK(lt_oracle(w("1212")) == 2);
    CHECK(lt_oracle(w("112")) == 1);
    CHECK(lt_oracle(Word({}, 1)) == 0);
    CHECK_THROWS_AS(lt_oracle(Word(std::vector<Letter>(15, 1), 1)), ResourceLimitError);
    CHECK(lt_oracle(Word(std::vector<Letter>(16, 1), 1), {.max_assignments = 43'046'721}) == 8);
}

TEST_CASE("oracle agrees with plain enumeration")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Word v = oracle::random_word(rng, 1 + trial % 3, trial % 9);
        CHECK(lt_oracle(v) == oracle::lt_tuplets_plain(v, 2));
        CHECK(lt_tuplets(v, 2) == oracle::lt_tuplets_plain(v, 2));
        if (v.size() <= 7)
            CHECK(lt_tuplets(v, 3) == oracle::lt_tuplets_plain(v, 3));
    }
}

TEST_CASE("lt_exact agrees with the oracle and is lexicographically minimal")
{
    for (std::size_t n = 0; n <= 8; ++n)
        for (const Word& v : oracle::all_words(2, n)) {
            const auto c = lt_exact(v);
            CHECK(c.length() == lt_oracle(v));
            CHECK(c.monotone());
            CHECK(is_regular_pair(c));
            const auto expected = oracle::lexmin_monotone(v, c.length());
            REQUIRE(expected);
            CHECK(c.roles.roles() == *expected);
        }
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        const Word v = oracle::random_word(rng, 3, 10);
        CHECK(lt_exact(v).length() == lt_oracle(v));
    }
}

TEST_CASE("lt_exact invariances and lower bounds")
{
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + trial % 3;
        const Word v = oracle::random_word(rng, k, 6 + trial % 15);
        const std::size_t lt = lt_exact(v).length();
        CHECK(lt_exact(v.reversed()).length() == lt);
        std::vector<Letter> perm(k);
        for (std::size_t i = 0; i < k; ++i)
            perm[i] = static_cast<Letter>(i + 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Letter> relabeled;
        for (Letter x : v)
            relabeled.push_back(perm[x - 1]);
        CHECK(lt_exact(Word(relabeled, k)).length() == lt);
        CHECK(lt >= twins_via_runs(v).length());
        CHECK(lt >= twins_via_blocks(v).cert.length());
    }
}

TEST_CASE("search limits")
{
    CHECK_THROWS_AS(lt_exact(Word(std::vector<Letter>(41, 1), 1)), ResourceLimitError);
    std::mt19937_64 rng(26);
    const Word v = oracle::random_word(rng, 3, 40);
    CHECK_THROWS_AS(lt_exact(v, {.max_length = 40, .max_nodes = 10}), ResourceLimitError);
}

TEST_CASE("tuplets")
{
    CHECK(lt_tuplets(w("111"), 3) == 1);
    // 12 at positions (1,2), (3,4), (5,6).
    CHECK(lt_tuplets(w("121212"), 3) == 2);
    CHECK(oracle::lt_tuplets_plain(w("121212"), 3) == 2);
    CHECK(lt_tuplets(w("211212"), 3) == 1);
    CHECK(oracle::lt_tuplets_plain(w("211212"), 3) == 1);
    CHECK(lt_tuplets(w("3121"), 1) == 4);
    CHECK(lt_tuplets(w("111111"), 3) == 2);
}

TEST_CASE("runs")
{
    CHECK(twins_via_runs(w("112233")).length() == 3);
    CHECK(twins_via_runs(w("1212")).length() == 0);
    CHECK(twins_via_runs(w("1111")).length() == 2);
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 500; ++trial) {
        const Word v = oracle::random_word(rng, 1 + trial % 4, trial % 40);
        const auto c = twins_via_runs(v);
        std::size_t runs = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            runs += i == 0 || v[i] != v[i - 1];
        CHECK(2 * c.length() >= v.size() - runs);
        CHECK(extract(v, c.roles));
    }
}

TEST_CASE("blocks")
{
    const auto one = twins_via_blocks(w("111"));
    CHECK(one.full_blocks == 1);
    CHECK(one.cert.length() == 1);
    CHECK(one.block_lcs == std::vector<std::size_t>{1});

    // 121212: copies of 1 at positions 0,2,4 go to parts 0,1,2; same for 2.
    // Every part is 12, so the pair (0, 1) wins with twins 12.
    const auto two = twins_via_blocks(w("121212"));
    CHECK(two.full_blocks == 1);
    CHECK(two.cert.roles.str() == "112200");

    std::mt19937_64 rng(28);
    std::size_t meets = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Word v = oracle::random_word(rng, 3, 27);
        const auto b = twins_via_blocks(v);
        CHECK(b.full_blocks == 3);
        CHECK(extract(v, b.cert.roles));
        CHECK(b.per_block_floor == doctest::Approx(1.0));
        meets += b.meets_floor();
    }
    CHECK(meets == 300);
}
