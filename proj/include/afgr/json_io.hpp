#pragma once

// JSON encoding (1-based permutations) and the textual input syntax of the CLI.
//
//   coweight      "1,-1,0"
//   element       "e" | "s0s1s0" | "1,-1|2,1" (trans|perm, perm 1-based)
//   permutation   "e" | "w0" | "3,2,1" (1-based images)
//   points        "1,-1,0;0,1,-1" with rationals allowed ("1/3,-1/3,0")
//   subdivision   cells separated by '|', each cell a point list

#include <string>
#include <vector>

#include <json.hpp>

#include "afgr/degeneration.hpp"
#include "afgr/dims.hpp"
#include "afgr/polytope.hpp"
#include "afgr/weyl.hpp"

namespace afgr {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Coweight& c);
Json to_json(const Perm& w);
Json to_json(const AffineWeylElt& x);
Json to_json(const AffineRoot& g);
Json to_json(const MomentPoint& p);
Json to_json(const Polytope& P);
Json to_json(const DimResult& r);
Json to_json(const UpperBound& u);
Json to_json(const Component& c);
Json to_json(const P1Limit& p);
Json to_json(const LimitReport& r);

Rational rational_from_json(const Json& j);
Coweight coweight_from_json(const Json& j);
AffineWeylElt element_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);

Rational parse_rational(const std::string& s);
Coweight parse_coweight(const std::string& s, int n);
Perm parse_perm(const std::string& s, int n);
AffineWeylElt parse_element(const std::string& s, int n);
std::vector<MomentPoint> parse_points(const std::string& s, int n);
std::vector<int> parse_word(const std::string& s, int n);
AffineRoot parse_affine_root(const std::string& root, Int level, int n);

std::string word_string(const std::vector<int>& word);

}  // namespace afgr
