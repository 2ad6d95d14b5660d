#pragma once

#include <json.hpp>

#include "twinlcs/constructions.hpp"
#include "twinlcs/twins.hpp"
#include "twinlcs/word.hpp"

namespace twinlcs {

/// Rationals travel as "p/q" strings.
Rational parse_rational(std::string_view text);

/// {"k": 3, "letters": [1, 3, 2]}
void to_json(nlohmann::json& j, const Word& w);
void from_json(const nlohmann::json& j, Word& w);

/// {"counts": [2, 2, 1]}
void to_json(nlohmann::json& j, const MultiSignature& s);
void from_json(const nlohmann::json& j, MultiSignature& s);

/// {"k": 2, "L": 2, "freqs": [{"pattern": [1, 2], "value": "1/3"}, ...]}
void to_json(nlohmann::json& j, const FrequencyTable& t);
void from_json(const nlohmann::json& j, FrequencyTable& t);

/// {"word": "k=2;w=1,2,1,2", "roles": "1212", "length": 2}. Reading
/// re-validates the roles against the word.
void to_json(nlohmann::json& j, const TwinCertificate& c);
void from_json(const nlohmann::json& j, TwinCertificate& c);

/// Words in the text word format, ceilings with their provenance.
void to_json(nlohmann::json& j, const Ceiling& c);
void to_json(nlohmann::json& j, const FamilyOutput& f);
void to_json(nlohmann::json& j, const FamilyCheck& c);

} // namespace twinlcs
