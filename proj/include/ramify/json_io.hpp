#pragma once

#include <json.hpp>

#include "automorphism.hpp"
#include "cyclotomic.hpp"
#include "filtration.hpp"
#include "oort.hpp"
#include "ramification.hpp"
#include "weierstrass.hpp"

namespace ramify {

// Series literal: {"p": <int>, "precision": <int>, "coeffs": [<int>, ...]},
// coefficients ascending by degree, each in [0, p), at most `precision` of
// them (missing high coefficients are zero).  Parsers reject structural
// problems with ParseError; semantic preconditions stay with the domain types.

nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries parse_series(const nlohmann::json& j);

nlohmann::json to_json(const JumpProfile& jp);
JumpProfile parse_jump_profile(const nlohmann::json& j);

nlohmann::json to_json(const FiltrationReport& fr);

nlohmann::json to_json(const ArtinTable& at);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const HasseArfVerdict& v);

nlohmann::json to_json(const OrbitProfile& op);
OrbitProfile parse_orbit_profile(const nlohmann::json& j, bool strict);

nlohmann::json to_json(const DifferentBalance& b);
nlohmann::json to_json(const ArtinIdentityReport& r);
nlohmann::json to_json(const GenusCheck& g);
nlohmann::json to_json(const OracleEntry& e);

// LiftScalar literal: {"p", "M", "coords": [p-1 residues mod p^M]}.
// LiftSeries literal: {"p", "M", "precision", "coeffs": [<LiftScalar>, ...]}.
nlohmann::json to_json(const LiftScalar& c);
LiftScalar parse_lift_scalar(const nlohmann::json& j);
nlohmann::json to_json(const LiftSeries& f);
LiftSeries parse_lift_series(const nlohmann::json& j);

nlohmann::json to_json(const DistinguishedFactorization& f);

} // namespace ramify
