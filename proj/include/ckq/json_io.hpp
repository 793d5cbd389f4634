#pragma once

#include <json.hpp>

#include "ckq/classifier.hpp"
#include "ckq/relations.hpp"
#include "ckq/sphere.hpp"

namespace ckq {

using Json = nlohmann::ordered_json;

/// {order, params, coeffs:[{vpow, jexp:[...], re, im}]}, rationals as "p/q".
Json to_json(const VSeries& s);
VSeries series_from_json(const Json& j);

/// [{word:[names], coeff}].
Json to_json(const SeriesPoly& p, const Alphabet& al);
SeriesPoly poly_from_json(const Json& j, const Alphabet& al, const Domain& d);

/// {n, sigma, multiplier:{exponents}, assignment, order, rules:[{lhs, rhs}],
/// star:[{generator, image}], invariant}.
Json to_json(const Presentation& p);
/// Rebuilds the expanded data (rules, star, invariant); closed forms are
/// not part of the schema.
Presentation presentation_from_json(const Json& j);
bool same_expanded(const Presentation& a, const Presentation& b);

Json to_json(const SpherePresentation& s);
Json to_json(const ClassificationReport& r);
Json to_json(const ExtMatrix& m);

}  // namespace ckq
