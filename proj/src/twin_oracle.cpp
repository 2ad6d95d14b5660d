// Reference values by role-word enumeration. A branch is cut as soon as the
// subsequences built so far stop being prefixes of one another, or when the
// positions left cannot beat the best value found.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "twinlcs/twins.hpp"

namespace twinlcs {

namespace {

void check_assignments(std::size_t base, std::size_t n, const OracleOptions& options)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > options.max_assignments / base) {
            throw ResourceLimitError("role enumeration over " + std::to_string(base) + "^" + std::to_string(n) +
                                     " assignments exceeds the oracle budget of " +
                                     std::to_string(options.max_assignments));
        }
        total *= base;
    }
    if (total > options.max_assignments)
        throw ResourceLimitError("role enumeration exceeds the oracle budget");
}

struct TupletEnumerator {
    const Word& w;
    std::size_t tuple;
    // Longest of the T subsequences; every other one is a prefix of it.
    std::vector<Letter> lead;
    std::vector<std::size_t> len;
    std::size_t sum = 0;
    std::size_t best = 0;

    void run(std::size_t i)
    {
        const std::size_t rest = w.size() - i;
        // All T sequences must end at a common length M >= |lead|.
        const std::size_t reachable = (rest + sum) / tuple;
        if (reachable < lead.size() || reachable <= best)
            return;
        if (i == w.size()) {
            best = std::max(best, lead.size());
            return;
        }
        const Letter x = w[i];
        for (std::size_t t = 0; t < tuple; ++t) {
            const bool extends = len[t] == lead.size();
            if (!extends && lead[len[t]] != x)
                continue;
            if (extends)
                lead.push_back(x);
            ++len[t];
            ++sum;
            run(i + 1);
            --sum;
            --len[t];
            if (extends)
                lead.pop_back();
        }
        run(i + 1);
    }
};

} // namespace

std::size_t lt_oracle(const Word& w, const OracleOptions& options)
{
    check_assignments(3, w.size(), options);
    std::vector<Letter> s1, s2;
    std::size_t best = 0;
    const std::size_t n = w.size();

    auto rec = [&](auto&& self, std::size_t i) -> void {
        const std::size_t longer = std::max(s1.size(), s2.size());
        const std::size_t gap = longer - std::min(s1.size(), s2.size());
        const std::size_t rest = n - i;
        if (rest < gap)
            return;
        if (longer + (rest - gap) / 2 <= best)
            return;
        if (i == n) {
            if (gap == 0)
                best = std::max(best, longer);
            return;
        }
        const Letter x = w[i];
        if (s1.size() >= s2.size() || s2[s1.size()] == x) {
            s1.push_back(x);
            self(self, i + 1);
            s1.pop_back();
        }
        if (s2.size() >= s1.size() || s1[s2.size()] == x) {
            s2.push_back(x);
            self(self, i + 1);
            s2.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return best;
}

std::size_t lt_tuplets(const Word& w, std::size_t T, const OracleOptions& options)
{
    if (T == 0)
        throw std::invalid_argument("lt_tuplets: T must be positive");
    if (T == 1)
        return w.size();
    check_assignments(T + 1, w.size(), options);
    TupletEnumerator e{w, T, {}, std::vector<std::size_t>(T, 0)};
    e.run(0);
    return e.best;
}

} // namespace twinlcs
