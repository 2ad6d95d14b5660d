#include "twinlcs/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twinlcs {

std::size_t LexSpec::alphabet_size() const
{
    std::size_t k = 1;
    for (std::size_t d : dims)
        k *= d;
    return k;
}

Letter lex_letter(const std::vector<std::size_t>& dims, const std::vector<std::int64_t>& coords)
{
    std::size_t code = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        code = code * dims[i] + static_cast<std::size_t>(coords[i]);
    return static_cast<Letter>(code + 1);
}

std::vector<std::int64_t> lex_coords(const std::vector<std::size_t>& dims, Letter letter)
{
    std::vector<std::int64_t> coords(dims.size());
    std::size_t code = letter - 1;
    for (std::size_t i = dims.size(); i-- > 0;) {
        coords[i] = static_cast<std::int64_t>(code % dims[i]);
        code /= dims[i];
    }
    return coords;
}

LexSpec make_lex_spec(std::vector<std::size_t> dims, std::size_t copies, const LexKey& key)
{
    LexSpec spec;
    spec.dims = std::move(dims);
    spec.copies = copies;
    for (std::size_t d : spec.dims)
        if (d == 0)
            throw std::invalid_argument("lexicographic construction: empty coordinate set");
    const std::size_t k = spec.alphabet_size();
    spec.rows.reserve(k * copies);
    for (std::size_t code = 0; code < k; ++code) {
        const Letter l = static_cast<Letter>(code + 1);
        const auto coords = lex_coords(spec.dims, l);
        for (std::size_t r = 0; r < copies; ++r)
            spec.rows.push_back(LexRow{l, r, key(coords, static_cast<std::int64_t>(r))});
    }
    return spec;
}

Word lex_build(const LexSpec& spec)
{
    std::vector<const LexRow*> order;
    order.reserve(spec.rows.size());
    for (const LexRow& row : spec.rows)
        order.push_back(&row);
    std::sort(order.begin(), order.end(), [](const LexRow* a, const LexRow* b) { return a->key < b->key; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (order[i - 1]->key == order[i]->key)
            throw std::invalid_argument("lexicographic construction: letters " + std::to_string(order[i - 1]->letter) +
                                        " and " + std::to_string(order[i]->letter) + " share a key");
    std::vector<Letter> letters;
    letters.reserve(order.size());
    for (const LexRow* row : order)
        letters.push_back(row->letter);
    return Word(std::move(letters), spec.alphabet_size());
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1)
            r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t x)
{
    if (x < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (x % p == 0)
            return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases decide primality for every 64-bit integer.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t y = pow_mod(a, d, x);
        if (y == 1 || y == x - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mul_mod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t x)
{
    if (x <= 2)
        return 2;
    for (std::uint64_t c = x;; ++c) {
        if (c == std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("next_prime: no prime below 2^64 at or above the argument");
        if (is_prime(c))
            return c;
    }
}

std::string to_string(Statistic s)
{
    switch (s) {
    case Statistic::lcs:
        return "lcs";
    case Statistic::lcs_reversed:
        return "lcs_reversed";
    case Statistic::lcs_reversible:
        return "lcs_reversible";
    case Statistic::lcs_tuple:
        return "lcs_tuple";
    }
    return "unknown";
}

std::int64_t closest_integer(double x)
{
    return static_cast<std::int64_t>(std::floor(x + 0.5));
}

namespace {

Word keep_letters_up_to(const Word& w, std::size_t k)
{
    std::vector<Letter> out;
    for (Letter l : w)
        if (l <= k)
            out.push_back(l);
    return Word(std::move(out), k);
}

void add_pair(FamilyOutput& f, std::size_t a, std::size_t b, Statistic stat, Rational value, bool exact,
              std::string provenance)
{
    f.ceilings.push_back(Ceiling{{a, b}, stat, std::move(value), exact, std::move(provenance)});
}

std::int64_t mod(std::int64_t a, std::int64_t p)
{
    const std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

} // namespace

FamilyOutput quadratic_family(std::uint64_t p, std::size_t k)
{
    if (!is_prime(p))
        throw std::invalid_argument("quadratic_family: p = " + std::to_string(p) + " is not prime");
    const std::size_t cube = p * p * p;
    if (k > cube)
        throw std::invalid_argument("quadratic_family: k exceeds p^3");
    const auto P = static_cast<std::int64_t>(p);
    FamilyOutput f;
    f.family = "quadratic";
    for (std::int64_t i = 0; i < P; ++i) {
        const LexKey key = [&](const std::vector<std::int64_t>& c, std::int64_t) {
            const std::int64_t x = c[0], y = c[1], z = c[2];
            return std::vector<std::int64_t>{mod(i * i % P * x + i * y + z, P), mod(2 * i * x + y, P), x};
        };
        Word w = lex_build(make_lex_spec({p, p, p}, 1, key));
        f.words.push_back(k > 0 ? keep_letters_up_to(w, k) : std::move(w));
    }
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b)
            add_pair(f, a, b, Statistic::lcs, Rational(4 * P - 2), false, "4p-2");
    f.params = {{"p", p}, {"k", k > 0 ? k : cube}};
    return f;
}

FamilyOutput quadratic_family_for(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("quadratic_family: k must be positive");
    std::uint64_t p = 2;
    while (p * p * p <= k)
        p = next_prime(p + 1);
    return quadratic_family(p, k);
}

FamilyOutput bhn_quadruple(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("bhn_quadruple: n must be positive");
    const int signs[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
    FamilyOutput f;
    f.family = "bhn";
    for (const auto& s : signs) {
        const LexKey key = [&](const std::vector<std::int64_t>& c, std::int64_t) {
            return std::vector<std::int64_t>{s[0] * c[0], s[1] * c[1], s[2] * c[2]};
        };
        f.words.push_back(lex_build(make_lex_spec({n, n, n}, 1, key)));
    }
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            add_pair(f, a, b, Statistic::lcs, Rational(n), false, "n");
    f.params = {{"n", n}};
    return f;
}

namespace {

FamilyOutput es_pair_words(std::size_t s, std::size_t k1, std::size_t k2)
{
    if (s == 0 || k1 == 0 || k2 == 0)
        throw std::invalid_argument("es_pair: parameters must be positive");
    FamilyOutput f;
    f.family = "es";
    f.words.push_back(lex_build(make_lex_spec({k1, k2}, s, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{c[0], c[1], r};
    })));
    f.words.push_back(lex_build(make_lex_spec({k1, k2}, s, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{c[0], r, -c[1]};
    })));
    return f;
}

} // namespace

FamilyOutput es_pair(std::size_t s, std::size_t k1, std::size_t k2)
{
    FamilyOutput f = es_pair_words(s, k1, k2);
    add_pair(f, 0, 1, Statistic::lcs, Rational(k1 * s), false, "k1*s");
    add_pair(f, 0, 1, Statistic::lcs_reversed, Rational(k2 + s - 1), false, "k2+s-1");
    f.params = {{"s", s}, {"k1", k1}, {"k2", k2}, {"k", k1 * k2}, {"n", k1 * k2 * s}};
    return f;
}

FamilyOutput es_pair_auto(std::size_t k, std::size_t s)
{
    if (k == 0 || s == 0)
        throw std::invalid_argument("es_pair: k and s must be positive");
    const double root = std::sqrt(static_cast<double>(k) / static_cast<double>(s));
    const auto k1 = static_cast<std::size_t>(std::max<std::int64_t>(1, closest_integer(root + 0.5)));
    const std::size_t k2 = (k + k1 - 1) / k1;
    FamilyOutput f = es_pair(s, k1, k2);
    for (Word& w : f.words)
        w = keep_letters_up_to(w, k);
    // An integer is <= sqrt(n) + s iff it is <= isqrt(n) + s.
    const std::size_t n = k * s;
    std::size_t root_n = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (root_n * root_n > n)
        --root_n;
    while ((root_n + 1) * (root_n + 1) <= n)
        ++root_n;
    add_pair(f, 0, 1, Statistic::lcs_reversible, Rational(root_n + s), false, "floor(sqrt(n))+s");
    f.params["k"] = k;
    f.params["n"] = k * s;
    f.params["auto"] = true;
    return f;
}

namespace {

FamilyOutput multiperm_words(std::size_t s, std::size_t k1, std::size_t k2, std::size_t k3)
{
    if (s == 0 || k1 == 0 || k2 == 0 || k3 == 0)
        throw std::invalid_argument("multiperm_quadruple: parameters must be positive");
    FamilyOutput f;
    f.family = "multiperm";
    const std::vector<std::size_t> dims{k1, k2, k3};
    f.words.push_back(lex_build(make_lex_spec(dims, s, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{c[0], c[1], c[2], r};
    })));
    f.words.push_back(lex_build(make_lex_spec(dims, s, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{-c[0], -c[1], r, c[2]};
    })));
    f.words.push_back(lex_build(make_lex_spec(dims, s, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{-c[0], c[1], -c[2], r};
    })));
    f.words.push_back(lex_build(make_lex_spec(dims, s, [](const std::vector<std::int64_t>& c, std::int64_t r) {
        return std::vector<std::int64_t>{c[0], -c[1], r, -c[2]};
    })));
    return f;
}

} // namespace

FamilyOutput multiperm_quadruple(std::size_t s, std::size_t k1, std::size_t k2, std::size_t k3)
{
    FamilyOutput f = multiperm_words(s, k1, k2, k3);
    add_pair(f, 0, 1, Statistic::lcs, Rational(k3 + s - 1), true, "|Z|+s-1");
    add_pair(f, 2, 3, Statistic::lcs, Rational(k3 + s - 1), true, "|Z|+s-1");
    add_pair(f, 0, 3, Statistic::lcs, Rational(k1 * s), true, "|X|s");
    add_pair(f, 1, 2, Statistic::lcs, Rational(k1 * s), true, "|X|s");
    add_pair(f, 0, 2, Statistic::lcs, Rational(k2 * s), true, "|Y|s");
    // With a single z value the second and fourth words order each y block
    // by copy in the same direction, so the value drops to |Y|s.
    add_pair(f, 1, 3, Statistic::lcs, Rational(k2 * (2 * s - 1)), k3 >= 2 || s == 1, "|Y|(2s-1)");
    f.params = {{"s", s}, {"k1", k1}, {"k2", k2}, {"k3", k3}, {"k", k1 * k2 * k3}};
    return f;
}

double multiperm_quadruple_target(std::size_t k, std::size_t s)
{
    const double K = static_cast<double>(k), S = static_cast<double>(s);
    return std::cbrt(2 * S * S * K) + 5 * S / 3 + std::pow(S, 4.0 / 3.0) / std::cbrt(K);
}

FamilyOutput multiperm_quadruple_auto(std::size_t k, std::size_t s)
{
    if (k == 0 || s == 0)
        throw std::invalid_argument("multiperm_quadruple: k and s must be positive");
    const double base = std::cbrt(static_cast<double>(k) / (4.0 * static_cast<double>(s))) + 1.0 / 3.0;
    const auto k2 = static_cast<std::size_t>(std::max<std::int64_t>(1, closest_integer(base)));
    const std::size_t k1 = 2 * k2;
    const std::size_t k3 = (k + k1 * k2 - 1) / (k1 * k2);
    FamilyOutput f = multiperm_quadruple(s, k1, k2, k3);
    for (Word& w : f.words)
        w = keep_letters_up_to(w, k);
    for (Ceiling& c : f.ceilings)
        c.exact = false;
    f.params["k"] = k;
    f.params["auto"] = true;
    f.params["target"] = multiperm_quadruple_target(k, s);
    return f;
}

FamilyOutput tuplet_family(std::size_t T, std::size_t kappa, std::size_t max_letters)
{
    if (T < 2 || kappa == 0)
        throw std::invalid_argument("tuplet_family: need T >= 2 and kappa >= 1");
    // T-subsets of {1, ..., 2T-1} in lexicographic order.
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur(T);
    for (std::size_t i = 0; i < T; ++i)
        cur[i] = i + 1;
    while (true) {
        subsets.push_back(cur);
        std::size_t t = T;
        while (t > 0 && cur[t - 1] == 2 * T - 1 - (T - t))
            --t;
        if (t == 0)
            break;
        ++cur[t - 1];
        for (std::size_t u = t; u < T; ++u)
            cur[u] = cur[u - 1] + 1;
    }
    const std::size_t C = subsets.size();
    std::size_t letters = 1;
    for (std::size_t i = 0; i < C; ++i) {
        if (letters > max_letters / kappa)
            throw ResourceLimitError("tuplet_family: kappa^" + std::to_string(C) + " letters exceed the limit of " +
                                     std::to_string(max_letters));
        letters *= kappa;
    }
    const std::vector<std::size_t> dims(C, kappa);

    FamilyOutput f;
    f.family = "tuplet";
    for (std::size_t i = 0; i < 2 * T; ++i) {
        std::vector<std::int64_t> sign(C);
        for (std::size_t c = 0; c < C; ++c) {
            const bool member = std::find(subsets[c].begin(), subsets[c].end(), i) != subsets[c].end();
            // Word 0 reverses every coordinate.
            sign[c] = i > 0 && member ? 1 : -1;
        }
        f.words.push_back(lex_build(make_lex_spec(dims, 1, [&](const std::vector<std::int64_t>& x, std::int64_t) {
            std::vector<std::int64_t> key(C);
            for (std::size_t c = 0; c < C; ++c)
                key[c] = sign[c] * x[c];
            return key;
        })));
    }
    // Every T-subset of the 2T words.
    std::vector<std::size_t> pick(T);
    for (std::size_t i = 0; i < T; ++i)
        pick[i] = i;
    const std::size_t n = 2 * T;
    while (true) {
        f.ceilings.push_back(Ceiling{pick, Statistic::lcs_tuple, Rational(kappa), true, "kappa"});
        std::size_t t = T;
        while (t > 0 && pick[t - 1] == n - T + t - 1)
            --t;
        if (t == 0)
            break;
        ++pick[t - 1];
        for (std::size_t u = t; u < T; ++u)
            pick[u] = pick[u - 1] + 1;
    }
    f.params = {{"T", T}, {"kappa", kappa}, {"coordinates", C}, {"k", letters}};
    return f;
}

FamilyOutput stratified_family(std::size_t k, std::size_t n, const std::vector<std::size_t>& ms)
{
    if (k == 0)
        throw std::invalid_argument("stratified_family: k must be positive");
    if (n % k != 0)
        throw std::invalid_argument("stratified_family: k must divide n");
    std::vector<std::size_t> sorted = ms;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t m : sorted)
        if (m == 0 || (n / k) % m != 0)
            throw std::invalid_argument("stratified_family: m = " + std::to_string(m) + " does not divide n/k");

    FamilyOutput f;
    f.family = "stratified";
    for (std::size_t m : sorted) {
        std::vector<Letter> v;
        for (std::size_t rep = 0; rep < n / (m * k); ++rep)
            for (Letter l = 1; l <= k; ++l)
                v.insert(v.end(), m, l);
        f.words.emplace_back(std::move(v), k);
    }
    const std::size_t strata = sorted.size();
    for (Letter l = 1; l <= k; ++l)
        f.words.emplace_back(std::vector<Letter>(n, l), k);
    std::vector<Letter> up, down;
    for (Letter l = 1; l <= k; ++l)
        up.insert(up.end(), n / k, l);
    down.assign(up.rbegin(), up.rend());
    f.words.emplace_back(std::move(up), k);
    f.words.emplace_back(std::move(down), k);

    const Rational per_letter(n, k);
    for (std::size_t a = 0; a < strata; ++a)
        for (std::size_t b = a + 1; b < strata; ++b)
            add_pair(f, a, b, Statistic::lcs, (Rational(1, k) + Rational(sorted[a], sorted[b])) * n, false,
                     "(1/k+m1/m2)n");
    for (std::size_t a = strata; a < strata + k; ++a) {
        for (std::size_t b = a + 1; b < strata + k; ++b)
            add_pair(f, a, b, Statistic::lcs, Rational(0), true, "distinct constant words");
        for (std::size_t b = 0; b < strata; ++b)
            add_pair(f, b, a, Statistic::lcs, per_letter, true, "n/k");
        add_pair(f, a, strata + k, Statistic::lcs, per_letter, true, "n/k");
        add_pair(f, a, strata + k + 1, Statistic::lcs, per_letter, true, "n/k");
    }
    add_pair(f, strata + k, strata + k + 1, Statistic::lcs, per_letter, true, "n/k");
    f.params = {{"k", k}, {"n", n}, {"ms", sorted}};
    return f;
}

bool FamilyCheck::all_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CeilingCheck& c) { return c.holds; });
}

FamilyCheck verify_family(const FamilyOutput& family, const LcsOptions& options)
{
    FamilyCheck out;
    for (const Ceiling& c : family.ceilings) {
        for (std::size_t m : c.members)
            if (m >= family.words.size())
                throw std::invalid_argument("verify_family: ceiling refers to a missing word");
        CeilingCheck check{c, 0, false};
        const Word& a = family.words[c.members.at(0)];
        switch (c.statistic) {
        case Statistic::lcs:
            check.measured = lcs_length(a, family.words[c.members.at(1)]);
            break;
        case Statistic::lcs_reversed:
            check.measured = lcs_length(a, family.words[c.members.at(1)].reversed());
            break;
        case Statistic::lcs_reversible:
            check.measured = lcs_reversible(a, family.words[c.members.at(1)]).max;
            break;
        case Statistic::lcs_tuple: {
            std::vector<Word> members;
            for (std::size_t m : c.members)
                members.push_back(family.words[m]);
            check.measured = lcs_multi_length(members, options);
            break;
        }
        }
        const Rational measured(check.measured);
        check.holds = c.exact ? measured == c.value : measured <= c.value;
        out.checks.push_back(std::move(check));
    }
    return out;
}

} // namespace twinlcs
