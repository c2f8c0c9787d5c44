#include "afgr/golden.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "afgr/error.hpp"

namespace afgr {

namespace {

const Coweight kZero{0, 0, 0};
const Coweight kAlpha{1, -1, 0};
const Coweight kBeta{0, 1, -1};
const Coweight kTheta{1, 0, -1};

Polytope hull(std::vector<Coweight> pts) { return convex_hull(pts); }

Polytope hexagon() {
  std::vector<Coweight> orb;
  std::vector<int> p{0, 1, 2};
  do {
    orb.push_back(Perm(p).act(kTheta));
  } while (std::next_permutation(p.begin(), p.end()));
  return hull(orb);
}

}  // namespace

std::vector<std::string> polytope_names() {
  return {"point", "segment", "triangle", "trapezoid", "hexagon", "prime-triangle", "sl2-segment"};
}

Polytope named_polytope(const std::string& name) {
  if (name == "point") return hull({-kTheta});
  if (name == "segment") return hull({-kTheta, -kAlpha});
  if (name == "triangle") return hull({-kTheta, -kBeta, kZero});
  if (name == "trapezoid") return mv_polytope_sl3(0, 1, 1, 0);
  if (name == "hexagon") return hexagon();
  if (name == "prime-triangle") return hull({kZero, kAlpha, kTheta});
  if (name == "sl2-segment") return hull({Coweight{-2, 2}, Coweight{1, -1}});
  throw UsageError("unknown polytope '" + name + "'");
}

std::vector<std::string> subdivision_names() { return {"trivial", "rhombi", "mother", "mother-mixed"}; }

NamedSubdivision named_subdivision(const std::string& name) {
  NamedSubdivision s;
  if (name == "trivial") {
    s.outer = hexagon();
    s.subdivision.cells = {s.outer};
    s.expected_regular = true;
    return s;
  }
  if (name == "rhombi") {
    s.outer = hexagon();
    s.subdivision.cells = {hull({kZero, kAlpha, kTheta, kBeta}), hull({kZero, kBeta, -kAlpha, -kTheta}),
                           hull({kZero, -kTheta, -kBeta, kAlpha})};
    s.expected_regular = true;
    return s;
  }
  if (name == "mother" || name == "mother-mixed") {
    // Outer triangle O, inner triangle I, each trapezoid O_i O_{i+1} I_{i+1} I_i
    // cut by a diagonal. Cutting all three the same rotational way is the
    // classical non-regular triangulation.
    const std::vector<Coweight> O{kAlpha * 2, kBeta * 2, -kTheta * 2};
    const std::vector<Coweight> I{kAlpha, kBeta, -kTheta};
    s.outer = hull(O);
    s.subdivision.cells.push_back(hull(I));
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const bool twisted = name == "mother" || i != 0;
      if (twisted) {
        s.subdivision.cells.push_back(hull({O[i], O[j], I[i]}));
        s.subdivision.cells.push_back(hull({O[j], I[j], I[i]}));
      } else {
        s.subdivision.cells.push_back(hull({O[i], O[j], I[j]}));
        s.subdivision.cells.push_back(hull({O[i], I[j], I[i]}));
      }
    }
    s.expected_regular = name == "mother-mixed";
    return s;
  }
  throw UsageError("unknown subdivision '" + name + "'");
}

std::vector<GoldenCase> golden_corpus() {
  return {
      {"point", "-(a+b)", -kTheta, named_polytope("point"), 0, 1, 1},
      {"segment", "-a", -kAlpha, named_polytope("segment"), 1, 2, 2},
      {"triangle", "0", kZero, named_polytope("triangle"), 2, 3, 3},
      {"trapezoid", "a", kAlpha, named_polytope("trapezoid"), 3, 4, 5},
      {"hexagon", "a+b", kTheta, named_polytope("hexagon"), 4, 6, 6},
  };
}

bool ExamplesReport::all_pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  for (const auto& s : subdivisions)
    if (!s.pass) return false;
  return true;
}

ExamplesReport run_examples(Int cap, const std::string& only) {
  ExamplesReport r;
  bool matched = false;
  for (const auto& c : golden_corpus()) {
    if (!only.empty() && only != c.key) continue;
    matched = true;
    GoldenOutcome o;
    o.c = c;
    o.lower = component_lower_bound(c.polytope);
    o.dimension = dimension_estimate(c.polytope);
    o.upper = component_upper_bound(c.polytope, o.dimension, cap);
    o.pass = o.lower == c.expected_lower && o.dimension == c.dimension && !o.upper.cap_exceeded &&
             o.lower <= c.expected_components && o.upper.count >= c.expected_components;
    r.cases.push_back(std::move(o));
  }
  for (const auto& name : subdivision_names()) {
    if (!only.empty() && only != name) continue;
    matched = true;
    const auto s = named_subdivision(name);
    const auto res = check_regular_subdivision(s.outer, s.subdivision);
    RegularityOutcome o;
    o.name = name;
    o.expected = s.expected_regular;
    o.regular = res.regular;
    o.certificate_valid = !res.regular && verify_farkas(res.system, res.rhs, res.certificate);
    o.pass = o.regular == o.expected && (o.regular || o.certificate_valid);
    r.subdivisions.push_back(o);
  }
  if (!matched) throw UsageError("unknown example case '" + only + "'");
  return r;
}

Json to_json(const ExamplesReport& r) {
  Json cases = Json::array();
  for (const auto& o : r.cases)
    cases.push_back({{"case", o.c.key},
                     {"mu", to_json(o.c.mu)},
                     {"mu_label", o.c.mu_label},
                     {"polytope", to_json(o.c.polytope)},
                     {"dimension", o.dimension},
                     {"lower_bound", o.lower},
                     {"expected_lower_bound", o.c.expected_lower},
                     {"known_components", o.c.expected_components},
                     {"upper_bound", to_json(o.upper)},
                     {"pass", o.pass}});
  Json subs = Json::array();
  for (const auto& o : r.subdivisions)
    subs.push_back({{"subdivision", o.name},
                    {"expected_regular", o.expected},
                    {"regular", o.regular},
                    {"certificate_valid", o.certificate_valid},
                    {"pass", o.pass}});
  return Json{{"cases", cases}, {"subdivisions", subs}, {"all_pass", r.all_pass()}};
}

std::string to_text(const ExamplesReport& r) {
  std::ostringstream os;
  if (!r.cases.empty()) {
    os << std::left << std::setw(11) << "case" << std::setw(8) << "mu" << std::setw(5) << "dim"
       << std::setw(7) << "lower" << std::setw(7) << "known" << std::setw(8) << "upper"
       << "result\n";
    for (const auto& o : r.cases) {
      std::string up = std::to_string(o.upper.count) + (o.upper.cap_exceeded ? "+" : "");
      os << std::setw(11) << o.c.key << std::setw(8) << o.c.mu_label << std::setw(5) << o.dimension
         << std::setw(7) << o.lower << std::setw(7) << o.c.expected_components << std::setw(8) << up
         << (o.pass ? "PASS" : "FAIL") << '\n';
    }
  }
  if (!r.subdivisions.empty()) {
    os << std::left << std::setw(14) << "subdivision" << std::setw(10) << "expected" << std::setw(10)
       << "regular" << "result\n";
    for (const auto& o : r.subdivisions)
      os << std::setw(14) << o.name << std::setw(10) << (o.expected ? "yes" : "no") << std::setw(10)
         << (o.regular ? "yes" : "no") << (o.pass ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace afgr
