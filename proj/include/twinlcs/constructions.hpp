#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twinlcs/lcs.hpp"
#include "twinlcs/word.hpp"

namespace twinlcs {

/// One (letter, copy) row of a lexicographic construction.
struct LexRow {
    Letter letter = 1;
    std::size_t copy = 0;
    std::vector<std::int64_t> key;
};

/// Letters are points of X_1 x ... x X_d with |X_i| = dims[i], each present
/// `copies` times. A point (c_1, ..., c_d) with 0-based coordinates is the
/// letter 1 + mixed-radix value, first coordinate most significant.
struct LexSpec {
    std::vector<std::size_t> dims;
    std::size_t copies = 1;
    std::vector<LexRow> rows;

    std::size_t alphabet_size() const;
};

using LexKey = std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>& coords, std::int64_t copy)>;

/// Letter of a 0-based coordinate vector.
Letter lex_letter(const std::vector<std::size_t>& dims, const std::vector<std::int64_t>& coords);
/// 0-based coordinates of a letter.
std::vector<std::int64_t> lex_coords(const std::vector<std::size_t>& dims, Letter letter);

/// Rows for every letter and copy; `key` receives 0-based coordinates.
LexSpec make_lex_spec(std::vector<std::size_t> dims, std::size_t copies, const LexKey& key);

/// Sorts the rows by key. Throws `std::invalid_argument` on repeated keys.
Word lex_build(const LexSpec& spec);

/// Smallest prime >= x (deterministic Miller-Rabin over 64 bits).
std::uint64_t next_prime(std::uint64_t x);
bool is_prime(std::uint64_t x);

enum class Statistic {
    lcs,            ///< LCS(words[a], words[b])
    lcs_reversed,   ///< LCS(words[a], reverse words[b])
    lcs_reversible, ///< max of the two
    lcs_tuple,      ///< LCS of all listed members
};

std::string to_string(Statistic s);

struct Ceiling {
    std::vector<std::size_t> members;
    Statistic statistic = Statistic::lcs;
    Rational value;
    /// The measured value is expected to equal `value`, not only stay below.
    bool exact = false;
    std::string provenance;
};

struct FamilyOutput {
    std::string family;
    std::vector<Word> words;
    std::vector<Ceiling> ceilings;
    nlohmann::json params = nlohmann::json::object();
};

/// p permutations pi_i = [ (i^2 x + i y + z) mod p, (2 i x + y) mod p, x ],
/// i = 0..p-1, on p^3 letters. With k > 0 only the letters 1..k are kept.
FamilyOutput quadratic_family(std::uint64_t p, std::size_t k = 0);
/// k letters with p the smallest prime whose cube exceeds k.
FamilyOutput quadratic_family_for(std::size_t k);

/// [x y z], [-x -y z], [-x y -z], [x -y -z] on n^3 letters.
FamilyOutput bhn_quadruple(std::size_t n);

/// pi = [x y r], pi' = [x r -y] with |X| = k1, |Y| = k2, |R| = s.
FamilyOutput es_pair(std::size_t s, std::size_t k1, std::size_t k2);
/// k1 = closest integer to sqrt(k/s) + 1/2 (ties up), k2 = ceil(k/k1), then
/// the largest letters are deleted to leave exactly k.
FamilyOutput es_pair_auto(std::size_t k, std::size_t s);

/// [+x +y +z +r], [-x -y +r +z], [-x +y -z +r], [+x -y +r -z].
FamilyOutput multiperm_quadruple(std::size_t s, std::size_t k1, std::size_t k2, std::size_t k3);
/// k2 = closest integer to (k/4s)^{1/3} + 1/3, k1 = 2 k2, k3 = ceil(k/(k1 k2));
/// deleted down to k letters.
FamilyOutput multiperm_quadruple_auto(std::size_t k, std::size_t s);
/// (2 s^2 k)^{1/3} + 5s/3 + s^{4/3} k^{-1/3}
double multiperm_quadruple_target(std::size_t k, std::size_t s);

/// 2T permutations on kappa^C letters, C = binom(2T-1, T). Throws
/// `ResourceLimitError` when the alphabet exceeds `max_letters`.
FamilyOutput tuplet_family(std::size_t T, std::size_t kappa, std::size_t max_letters = 1u << 20);

/// w_m = (1^m 2^m ... k^m)^{n/(mk)} for each m, the constant words l^n and
/// the staircase 1^{n/k} ... k^{n/k} with its reverse.
FamilyOutput stratified_family(std::size_t k, std::size_t n, const std::vector<std::size_t>& ms);

struct CeilingCheck {
    Ceiling ceiling;
    std::size_t measured = 0;
    bool holds = false; ///< measured <= value, and == value when exact
};

struct FamilyCheck {
    std::vector<CeilingCheck> checks;
    bool all_hold() const;
};

FamilyCheck verify_family(const FamilyOutput& family, const LcsOptions& options = {});

/// Closest integer, halves rounded up.
std::int64_t closest_integer(double x);

} // namespace twinlcs
