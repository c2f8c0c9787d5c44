#include "afgr/json_io.hpp"

#include <cctype>
#include <sstream>

#include "afgr/error.hpp"

namespace afgr {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
  const std::string t = trim(s);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != t.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

Json mpz_json(const mpz_class& z) {
  if (!z.fits_slong_p()) return z.get_str();
  return static_cast<Int>(z.get_si());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<Int>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw UsageError("expected an integer in JSON");
}

}  // namespace

Json to_json(const Rational& q) {
  return Json{{"num", mpz_json(q.get_num())}, {"den", mpz_json(q.get_den())}};
}

Json to_json(const Coweight& c) { return Json(c.coords()); }

Json to_json(const Perm& w) {
  Json a = Json::array();
  for (int i = 0; i < w.rank(); ++i) a.push_back(w(i) + 1);
  return a;
}

Json to_json(const AffineWeylElt& x) {
  Json j{{"trans", to_json(x.trans())}, {"perm", to_json(x.fin())}};
  if (x.trans().is_sl()) j["word"] = reduced_word(x);
  return j;
}

Json to_json(const AffineRoot& g) {
  return Json{{"root", {g.root.i + 1, g.root.j + 1}}, {"level", g.level}};
}

Json to_json(const MomentPoint& p) {
  Json a = Json::array();
  for (const auto& c : p.coords()) a.push_back(to_json(c));
  return a;
}

Json to_json(const Polytope& P) {
  Json a = Json::array();
  for (const auto& v : P.vertices()) a.push_back(to_json(v));
  return a;
}

Json to_json(const DimResult& r) {
  Json j;
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["empty"] = r.empty();
  j["equidimensional"] = r.equidimensional;
  j["kind"] = r.kind;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const UpperBound& u) {
  return Json{{"count", u.count},
              {"cap_exceeded", u.cap_exceeded},
              {"candidates", u.candidates},
              {"subsets_visited", u.subsets_visited}};
}

Json to_json(const Component& c) {
  return Json{{"anchor", to_json(c.anchor)}, {"polytope", to_json(c.polytope)}};
}

Json to_json(const P1Limit& p) {
  Json fp = Json::array(), edges = Json::array(), roots = Json::array();
  for (const auto& x : p.fixed_points) fp.push_back(to_json(x));
  for (const auto& [a, b] : p.edges) edges.push_back({to_json(a), to_json(b)});
  for (const auto& g : p.edge_roots) roots.push_back(to_json(g));
  return Json{{"fixed_points", fp}, {"edges", edges}, {"edge_roots", roots}};
}

Json to_json(const LimitReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  return Json{{"polytope", to_json(r.polytope)},
              {"lower_bound", r.lower_bound},
              {"upper_bound", r.upper_bound ? to_json(*r.upper_bound) : Json(nullptr)},
              {"components", comps}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw UsageError("expected {\"num\",\"den\"}");
  const mpz_class den = mpz_from_json(j.at("den"));
  if (den == 0) throw UsageError("zero denominator");
  Rational q(mpz_from_json(j.at("num")), den);
  q.canonicalize();
  return q;
}

Coweight coweight_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an integer array");
  std::vector<Int> c;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw UsageError("expected an integer array");
    c.push_back(v.get<Int>());
  }
  return Coweight(c);
}

AffineWeylElt element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("trans") || !j.contains("perm"))
    throw UsageError("expected {\"trans\",\"perm\"}");
  std::vector<int> p;
  for (const auto& v : j.at("perm")) p.push_back(v.get<int>() - 1);
  return AffineWeylElt(coweight_from_json(j.at("trans")), Perm(p));
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("expected a vertex array");
  std::vector<MomentPoint> pts;
  for (const auto& v : j) {
    std::vector<Rational> c;
    for (const auto& q : v) c.push_back(rational_from_json(q));
    pts.emplace_back(std::move(c));
  }
  return convex_hull(pts);
}

Rational parse_rational(const std::string& s) {
  const std::string t = trim(s);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return make_rational(parse_int(t));
  const Int den = parse_int(t.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in '" + s + "'");
  return make_rational(parse_int(t.substr(0, slash)), den);
}

Coweight parse_coweight(const std::string& s, int n) {
  std::vector<Int> c;
  for (const auto& part : split(s, ',')) c.push_back(parse_int(part));
  if (static_cast<int>(c.size()) != n)
    throw UsageError("coweight '" + s + "' has " + std::to_string(c.size()) +
                     " coordinates, expected " + std::to_string(n));
  return Coweight(c);
}

Perm parse_perm(const std::string& s, int n) {
  const std::string t = trim(s);
  if (t == "e" || t == "id") return Perm::identity(n);
  if (t == "w0") return Perm::longest(n);
  std::vector<int> p;
  for (const auto& part : split(t, ',')) p.push_back(static_cast<int>(parse_int(part)) - 1);
  if (static_cast<int>(p.size()) != n) throw UsageError("permutation '" + s + "' has wrong length");
  try {
    return Perm(p);
  } catch (const DomainError& e) {
    throw UsageError(std::string("bad permutation: ") + e.what());
  }
}

std::vector<int> parse_word(const std::string& s, int n) {
  const std::string t = trim(s);
  std::vector<int> w;
  if (t.empty() || t == "e") return w;
  if (t.find(',') != std::string::npos || std::isdigit(static_cast<unsigned char>(t[0]))) {
    for (const auto& part : split(t, ',')) w.push_back(static_cast<int>(parse_int(part)));
  } else {
    std::size_t i = 0;
    while (i < t.size()) {
      if (t[i] != 's') throw UsageError("bad word '" + s + "'");
      std::size_t j = i + 1;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      if (j == i + 1) throw UsageError("bad word '" + s + "'");
      w.push_back(static_cast<int>(parse_int(t.substr(i + 1, j - i - 1))));
      i = j;
    }
  }
  for (int k : w)
    if (k < 0 || k >= n) throw UsageError("generator index " + std::to_string(k) + " out of range");
  return w;
}

AffineWeylElt parse_element(const std::string& s, int n) {
  const std::string t = trim(s);
  const auto bar = t.find('|');
  if (bar == std::string::npos) {
    const auto w = parse_word(t, n);
    return from_word(n, w);
  }
  return AffineWeylElt(parse_coweight(t.substr(0, bar), n), parse_perm(t.substr(bar + 1), n));
}

std::vector<MomentPoint> parse_points(const std::string& s, int n) {
  std::vector<MomentPoint> out;
  for (const auto& pt : split(s, ';')) {
    if (trim(pt).empty()) continue;
    std::vector<Rational> c;
    for (const auto& part : split(pt, ',')) c.push_back(parse_rational(part));
    if (static_cast<int>(c.size()) != n) throw UsageError("point '" + pt + "' has wrong length");
    out.emplace_back(std::move(c));
  }
  if (out.empty()) throw UsageError("empty point list");
  return out;
}

AffineRoot parse_affine_root(const std::string& root, Int level, int n) {
  const auto parts = split(root, ',');
  if (parts.size() != 2) throw UsageError("root must be 'i,j'");
  const int i = static_cast<int>(parse_int(parts[0])) - 1;
  const int j = static_cast<int>(parse_int(parts[1])) - 1;
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw UsageError("bad root '" + root + "'");
  return AffineRoot{Root{i, j}, level};
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int k : word) s += "s" + std::to_string(k);
  return s;
}

}  // namespace afgr
