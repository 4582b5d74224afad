#pragma once

#include "lpm/geometry.hpp"
#include "lpm/matroid.hpp"
#include "lpm/polynomial.hpp"
#include "lpm/poset.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace lpm {

// nlohmann's default object keeps keys sorted, which makes every dump
// canonical; all serialization below relies on that.
using Json = nlohmann::json;

// {"ground_size": n, "rank": t, "bases": [[...], ...]} — bases lexicographic.
Json matroid_to_json(const LatticePathMatroid& m);

// {"vertices": [["p/q", ...], ...],
//  "facets": [{"normal": [int...], "offset": "int", "tight": [int...]}, ...],
//  "f_vector": [int...]}
Json polytope_to_json(const std::vector<Point>& vertices, const std::vector<Facet>& facets,
                      const std::vector<long long>& f_vector);

// {"ranks": [int...], "hasse": [[lower, upper], ...]}
Json poset_to_json(const GradedPoset& p);

// {"coeffs": [int...], "min_degree": int}; coefficients must fit in 64 bits.
Json polynomial_to_json(const IntPolynomial& p);
Json polynomial_to_json(const LaurentPolynomial& p);

// Two-space indentation plus trailing newline; byte-stable for equal values.
std::string canonical_dump(const Json& j);

}  // namespace lpm
