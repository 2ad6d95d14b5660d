#include "twinlcs/rng.hpp"

#include <stdexcept>

namespace twinlcs {

std::uint64_t CounterRng::below(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("CounterRng::below: n must be positive");
    const std::uint64_t limit = max() - max() % n;
    for (;;) {
        std::uint64_t x = (*this)();
        if (x < limit)
            return x % n;
    }
}

double CounterRng::uniform01()
{
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

Word sample_word(std::size_t k, std::size_t n, std::uint64_t seed, std::uint64_t index)
{
    if (k == 0)
        throw std::invalid_argument("sample_word: empty alphabet");
    CounterRng rng(seed, index);
    std::vector<Letter> letters(n);
    for (auto& a : letters)
        a = static_cast<Letter>(1 + rng.below(k));
    return Word(std::move(letters), k);
}

} // namespace twinlcs
