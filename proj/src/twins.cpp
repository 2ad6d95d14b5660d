#include "twinlcs/twins.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twinlcs/lcs.hpp"

namespace twinlcs {

RoleWord::RoleWord(std::vector<std::uint8_t> roles) : roles_(std::move(roles))
{
    for (std::size_t i = 0; i < roles_.size(); ++i)
        if (roles_[i] > 2)
            throw std::invalid_argument("role at position " + std::to_string(i + 1) + " is not 0, 1 or 2");
}

RoleWord RoleWord::parse(std::string_view digits)
{
    std::vector<std::uint8_t> roles;
    roles.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '2')
            throw std::invalid_argument(std::string("role word contains '") + c + "'");
        roles.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return RoleWord(std::move(roles));
}

std::size_t RoleWord::count(std::uint8_t role) const
{
    return static_cast<std::size_t>(std::count(roles_.begin(), roles_.end(), role));
}

bool RoleWord::balanced() const
{
    return count(1) == count(2);
}

bool RoleWord::monotone() const
{
    long diff = 0;
    for (std::uint8_t r : roles_) {
        if (r == 1)
            ++diff;
        else if (r == 2 && --diff < 0)
            return false;
    }
    return diff == 0;
}

std::string RoleWord::str() const
{
    std::string s;
    s.reserve(roles_.size());
    for (std::uint8_t r : roles_)
        s.push_back(static_cast<char>('0' + r));
    return s;
}

Word TwinCertificate::twin() const
{
    return word.subsequence(first);
}

std::optional<TwinCertificate> extract(const Word& w, const RoleWord& roles)
{
    if (roles.size() != w.size())
        throw std::invalid_argument("extract: role word length " + std::to_string(roles.size()) +
                                    " differs from word length " + std::to_string(w.size()));
    TwinCertificate cert;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (roles[i] == 1)
            cert.first.push_back(i);
        else if (roles[i] == 2)
            cert.second.push_back(i);
    }
    if (cert.first.size() != cert.second.size())
        return std::nullopt;
    for (std::size_t i = 0; i < cert.first.size(); ++i)
        if (w[cert.first[i]] != w[cert.second[i]])
            return std::nullopt;
    cert.word = w;
    cert.roles = roles;
    return cert;
}

TwinCertificate certificate_from_positions(const Word& w, std::vector<std::size_t> first,
                                           std::vector<std::size_t> second)
{
    if (first.size() != second.size())
        throw std::invalid_argument("twins must have equal length");
    std::vector<std::uint8_t> roles(w.size(), 0);
    auto place = [&](const std::vector<std::size_t>& pos, std::uint8_t role) {
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (pos[i] >= w.size() || (i > 0 && pos[i] <= pos[i - 1]))
                throw std::invalid_argument("twin positions must be increasing and inside the word");
            if (roles[pos[i]] != 0)
                throw std::invalid_argument("twins share position " + std::to_string(pos[i] + 1));
            roles[pos[i]] = role;
        }
    };
    place(first, 1);
    place(second, 2);
    for (std::size_t i = 0; i < first.size(); ++i)
        if (w[first[i]] != w[second[i]])
            throw std::invalid_argument("twins differ at index " + std::to_string(i + 1));
    return TwinCertificate{w, RoleWord(std::move(roles)), std::move(first), std::move(second)};
}

RoleStats role_stats(const RoleWord& roles)
{
    if (!roles.balanced())
        throw std::invalid_argument("role_stats: role word has unequal numbers of 1s and 2s");
    RoleStats stats;
    stats.m = roles.count(1);
    while (stats.z < roles.size() && roles[stats.z] == 0)
        ++stats.z;
    std::uint8_t last_nonzero = 0;
    for (std::uint8_t r : roles.roles()) {
        if (r == 0)
            continue;
        if (r == 1 && last_nonzero == 2)
            ++stats.p;
        last_nonzero = r;
    }
    return stats;
}

TwinCertificate monotonize(const TwinCertificate& cert)
{
    std::vector<std::size_t> lo(cert.length()), hi(cert.length());
    for (std::size_t i = 0; i < cert.length(); ++i) {
        lo[i] = std::min(cert.first[i], cert.second[i]);
        hi[i] = std::max(cert.first[i], cert.second[i]);
    }
    try {
        return certificate_from_positions(cert.word, std::move(lo), std::move(hi));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error("monotonize produced invalid twins for roles " + cert.roles.str() + ": " + e.what());
    }
}

std::optional<std::pair<std::size_t, std::size_t>> regularity_violation(const TwinCertificate& cert)
{
    const auto& r = cert.roles.roles();
    const Word& w = cert.word;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0)
            continue;
        // First non-zero after i, and the zeros in between.
        std::size_t j = i + 1;
        for (; j < r.size() && r[j] == 0; ++j) {
            if (w[j] == w[i])
                return std::pair{i, j}; // (b)
        }
        if (r[i] == 2 && j < r.size() && r[j] == 1 && w[j] == w[i])
            return std::pair{i, j}; // (a)
    }
    return std::nullopt;
}

bool is_regular_pair(const TwinCertificate& cert)
{
    return cert.roles.monotone() && !regularity_violation(cert);
}

TwinCertificate regularize_local(const TwinCertificate& cert)
{
    if (!cert.roles.monotone())
        throw std::invalid_argument("regularize: certificate is not monotone (roles " + cert.roles.str() + ")");
    std::vector<std::uint8_t> roles = cert.roles.roles();
    TwinCertificate current = cert;
    while (auto v = regularity_violation(current)) {
        const auto [i, j] = *v;
        if (roles[j] == 1) {
            roles[i] = 1;
            roles[j] = 2;
        } else {
            roles[j] = roles[i];
            roles[i] = 0;
        }
        auto next = extract(cert.word, RoleWord(roles));
        if (!next || !next->monotone())
            throw std::logic_error("regularize: swap broke the twins (roles " + RoleWord(roles).str() + ")");
        current = std::move(*next);
    }
    return current;
}

TwinCertificate regularize(const TwinCertificate& cert, const TwinSearchOptions& options)
{
    TwinCertificate local = regularize_local(cert);
    try {
        auto best = lexmin_monotone_twins(cert.word, cert.length(), options);
        if (!best)
            throw std::logic_error("regularize: exact search missed twins of length " + std::to_string(cert.length()));
        if (best->roles > local.roles)
            throw std::logic_error("regularize: exact search returned a larger role word");
        return std::move(*best);
    } catch (const ResourceLimitError&) {
        return local;
    }
}

TwinCertificate twins_via_runs(const Word& w)
{
    std::vector<std::size_t> first, second;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        for (std::size_t t = i; t + 1 < j; t += 2) {
            first.push_back(t);
            second.push_back(t + 1);
        }
        i = j;
    }
    return certificate_from_positions(w, std::move(first), std::move(second));
}

bool BlockTwins::meets_floor() const
{
    // Compare against the real floor with a little slack for k = 3 * c^3.
    return std::all_of(block_lcs.begin(), block_lcs.end(),
                       [&](std::size_t v) { return static_cast<double>(v) + 1e-9 >= per_block_floor; });
}

BlockTwins twins_via_blocks(const Word& w)
{
    const std::size_t k = w.alphabet_size();
    const std::size_t block = 3 * k;
    BlockTwins out;
    out.full_blocks = w.size() / block;
    out.per_block_floor = std::cbrt(static_cast<double>(k) / 3.0);

    std::vector<std::size_t> first, second;
    for (std::size_t b = 0; b < out.full_blocks; ++b) {
        const std::size_t base = b * block;
        std::vector<std::size_t> count(k + 1, 0);
        for (std::size_t i = 0; i < block; ++i)
            ++count[w[base + i]];

        std::vector<std::size_t> seen(k + 1, 0);
        std::vector<std::size_t> parts[3];
        for (std::size_t i = 0; i < block; ++i) {
            const Letter l = w[base + i];
            const std::size_t copy = seen[l]++;
            if (copy < 3 * (count[l] / 3))
                parts[copy % 3].push_back(base + i);
        }

        std::size_t best = 0;
        std::pair<int, int> best_pair{0, 1};
        LcsResult best_lcs;
        bool have = false;
        for (auto [a, c] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            LcsResult r = lcs_pair(w.subsequence(parts[a]), w.subsequence(parts[c]));
            if (!have || r.length > best) {
                best = r.length;
                best_pair = {a, c};
                best_lcs = std::move(r);
                have = true;
            }
        }
        out.block_lcs.push_back(best);
        const auto& pa = parts[best_pair.first];
        const auto& pc = parts[best_pair.second];
        for (std::size_t t = 0; t < best; ++t) {
            first.push_back(pa[best_lcs.positions[0][t]]);
            second.push_back(pc[best_lcs.positions[1][t]]);
        }
    }
    // Blocks are visited left to right, so both position lists stay increasing.
    out.cert = certificate_from_positions(w, std::move(first), std::move(second));
    return out;
}

} // namespace twinlcs
