#pragma once

#include <json.hpp>

#include "keycomb/diagram.hpp"
#include "keycomb/expansion.hpp"
#include "keycomb/insertion.hpp"
#include "keycomb/polynomial.hpp"
#include "keycomb/space.hpp"
#include "keycomb/tableau.hpp"

namespace keycomb {

using json = nlohmann::json;

json to_json(const Composition& a);
json to_json(Cell c);
json to_json(const Diagram& d);
json to_json(const MatchingSequence& m); // edges as [[c2,r2],[c1,r1]]
json to_json(const Polynomial& p);
json to_json(const SignedKeyExpansion& e);
json to_json(const KohnertSpace& s);
json to_json(const TargetSpace& s);
json to_json(const RectificationTrace& t);
json to_json(const SSYT& t);

Polynomial polynomial_from_json(const json& j);

} // namespace keycomb
