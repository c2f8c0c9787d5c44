// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "afgr/degeneration.hpp"
#include "afgr/dims.hpp"
#include "afgr/error.hpp"
#include "afgr/golden.hpp"
#include "afgr/json_io.hpp"
#include "afgr/orders.hpp"
#include "afgr/render.hpp"
#include "afgr/upper_bound.hpp"

using namespace afgr;

namespace {

struct Config {
  int rank = 3;
  std::string mode = "SL";
  Int cap = 1000000;
  std::string output = "text";
};

Config cfg;

bool sl() { return cfg.mode == "SL"; }

Coweight cw(const std::string& s) {
  Coweight c = parse_coweight(s, cfg.rank);
  if (sl()) require_sl(c, "input");
  return c;
}

AffineWeylElt elt(const std::string& s) {
  AffineWeylElt x = parse_element(s, cfg.rank);
  if (sl()) require_sl(x.trans(), "input");
  return x;
}

std::string text_of(const AffineWeylElt& x) {
  std::string s = x.str();
  if (x.trans().is_sl()) s += " = " + word_string(reduced_word(x));
  return s;
}

std::string text_of(const Polytope& P) {
  std::string s = std::to_string(P.size()) + " vertices:";
  for (const auto& v : P.vertices()) s += " " + v.str();
  return s;
}

std::string text_of(const DimResult& r) {
  std::string s = r.kind + ": " + (r.value ? std::to_string(*r.value) : std::string("empty"));
  if (r.value) s += r.equidimensional ? " (equidimensional)" : " (upper bound)";
  if (!r.note.empty()) s += " [" + r.note + "]";
  return s;
}

std::string text_of(const Component& c) {
  return "anchor " + text_of(c.anchor) + ", polytope " + text_of(c.polytope);
}

void emit(const Json& j, const std::string& text) {
  if (cfg.output == "json") std::cout << j.dump(2) << '\n';
  else if (cfg.output == "text") std::cout << text << '\n';
  else throw UsageError("--output svg is only available for polytope results");
}

void emit_polytope(const Polytope& P, const Json& j, const std::string& text) {
  if (cfg.output == "svg") std::cout << render_svg(P);
  else emit(j, text);
}

Polytope polytope_arg(const std::string& name, const std::string& points) {
  if (!name.empty() && !points.empty()) throw UsageError("give either --polytope or --points");
  if (!name.empty()) {
    Polytope P = named_polytope(name);
    if (P.rank() != cfg.rank)
      throw UsageError("polytope '" + name + "' needs --rank " + std::to_string(P.rank()));
    return P;
  }
  if (points.empty()) throw UsageError("a polytope is required (--polytope or --points)");
  return convex_hull(parse_points(points, cfg.rank));
}

Subdivision subdivision_arg(const std::string& cells) {
  Subdivision S;
  std::stringstream ss(cells);
  std::string cell;
  while (std::getline(ss, cell, '|')) S.cells.push_back(convex_hull(parse_points(cell, cfg.rank)));
  if (S.cells.empty()) throw UsageError("empty subdivision");
  return S;
}

Json dim_map_json(const std::map<Int, Int>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

using Action = std::function<void()>;

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("AFGR_CAP")) {
    try {
      cfg.cap = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "error: AFGR_CAP must be an integer\n";
      return 2;
    }
  }
  const bool cap_from_env = std::getenv("AFGR_CAP") != nullptr;

  CLI::App app{"Affine Weyl groups, semi-infinite orders, MV polytopes and the central degeneration in type A"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rank", cfg.rank, "ambient rank n (coordinates per coweight)")->check(CLI::Range(2, 12));
  app.add_option("--mode", cfg.mode, "SL or GL")->check(CLI::IsMember({"SL", "GL"}));
  Int cap_opt = cfg.cap;
  auto* cap_flag = app.add_option("--cap", cap_opt, "enumeration cap (overridden by AFGR_CAP)");
  app.add_option("--output", cfg.output, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));

  Action action;
  auto on = [&action](CLI::App* c, Action a) {
    c->callback([&action, a]() { action = a; });
    return c;
  };
  std::string x_s, y_s, w_s, word_s, root_s, lambda_s, mu_s, b1_s, b2_s, beta_s, points_s, poly_s, q_s,
      cells_s, c_s, vertex_s, gamma_s, roots_s, case_s, out_s, example_s;
  Int level = 0, d = 0;
  bool opposite = false;

  // weyl
  auto* weyl = app.add_subcommand("weyl", "affine Weyl group operations")->require_subcommand(1);
  {
    auto* c = weyl->add_subcommand("compose", "product x*y");
    c->add_option("--x", x_s)->required();
    c->add_option("--y", y_s)->required();
    on(c, [&] {
      const auto z = compose(elt(x_s), elt(y_s));
      emit(to_json(z), text_of(z));
    });
    c = weyl->add_subcommand("word", "element of a word of simple reflections");
    c->add_option("--word", word_s, "e.g. s0s1s0 or 0,1,0")->required();
    on(c, [&] {
      const auto z = from_word(cfg.rank, parse_word(word_s, cfg.rank));
      emit(to_json(z), text_of(z));
    });
    c = weyl->add_subcommand("length", "Iwahori-Matsumoto length");
    c->add_option("--x", x_s)->required();
    on(c, [&] {
      const Int l = length(elt(x_s));
      emit(Json{{"length", l}}, std::to_string(l));
    });
    c = weyl->add_subcommand("bruhat", "is x <= y in Bruhat order");
    c->add_option("--x", x_s)->required();
    c->add_option("--y", y_s)->required();
    on(c, [&] {
      const bool r = bruhat_leq(elt(x_s), elt(y_s));
      emit(Json{{"leq", r}}, r ? "true" : "false");
    });
    c = weyl->add_subcommand("reflection", "affine reflection t_{k a} s_a");
    c->add_option("--root", root_s, "i,j (1-based)")->required();
    c->add_option("--level", level);
    on(c, [&] {
      const auto z = reflection(cfg.rank, parse_affine_root(root_s, level, cfg.rank));
      emit(to_json(z), text_of(z));
    });
    c = weyl->add_subcommand("moment", "moment image lambda + w.b0");
    c->add_option("--x", x_s)->required();
    on(c, [&] {
      const auto p = moment_image(elt(x_s));
      emit(to_json(p), p.str());
    });
  }

  // order
  auto* order = app.add_subcommand("order", "dominance and semi-infinite orders")->require_subcommand(1);
  {
    for (const std::string kind : {"lattice", "cone"}) {
      auto* c = order->add_subcommand(kind, "semi-infinite order x <= y for U_w orbits");
      c->add_option("--x", x_s)->required();
      c->add_option("--y", y_s)->required();
      c->add_option("--w", w_s, "finite Weyl element: e, w0 or 1-based images")->default_val("w0");
      on(c, [&, kind] {
        const Perm w = parse_perm(w_s, cfg.rank);
        const bool r = kind == "lattice" ? semiinf_leq_lattice(elt(x_s), elt(y_s), w)
                                         : semiinf_leq_cone(elt(x_s), elt(y_s), w);
        emit(Json{{"leq", r}, {"form", kind}}, r ? "true" : "false");
      });
    }
    auto* c = order->add_subcommand("dominance", "is a <= b in dominance order");
    c->add_option("--x", x_s, "coweight a")->required();
    c->add_option("--y", y_s, "coweight b")->required();
    on(c, [&] {
      const bool r = dominance_leq(cw(x_s), cw(y_s));
      emit(Json{{"leq", r}}, r ? "true" : "false");
    });
    c = order->add_subcommand("flag", "lattice flag of an element");
    c->add_option("--x", x_s)->required();
    on(c, [&] {
      const auto f = flag_of(elt(x_s));
      Json j = Json::array();
      std::string t;
      for (const auto& e : f.etas) {
        j.push_back(to_json(e));
        t += e.str() + " ";
      }
      emit(Json{{"etas", j}}, t);
    });
  }

  // polytope
  auto* poly = app.add_subcommand("polytope", "exact polytope operations")->require_subcommand(1);
  {
    auto add_poly = [&](CLI::App* c) {
      c->add_option("--polytope", poly_s, "named polytope");
      c->add_option("--points", points_s, "points 'a,b,c;d,e,f'");
    };
    auto* c = poly->add_subcommand("hull", "convex hull");
    add_poly(c);
    on(c, [&] {
      const auto P = polytope_arg(poly_s, points_s);
      emit_polytope(P, to_json(P), text_of(P));
    });
    c = poly->add_subcommand("contains", "membership of a point");
    add_poly(c);
    c->add_option("--point", q_s)->required();
    on(c, [&] {
      const bool r = contains(polytope_arg(poly_s, points_s), parse_points(q_s, cfg.rank).front());
      emit(Json{{"contains", r}}, r ? "true" : "false");
    });
    c = poly->add_subcommand("lattice", "coset lattice points (v + coroot lattice) in P");
    add_poly(c);
    c->add_option("--vertex", vertex_s)->required();
    on(c, [&] {
      const auto pts = coset_lattice_points(polytope_arg(poly_s, points_s), parse_coweight(vertex_s, cfg.rank));
      Json j = Json::array();
      std::string t = std::to_string(pts.size()) + " points:";
      for (const auto& p : pts) {
        j.push_back(to_json(p));
        t += " " + p.str();
      }
      emit(Json{{"count", pts.size()}, {"points", j}}, t);
    });
    c = poly->add_subcommand("count", "root-direction count at a vertex");
    add_poly(c);
    c->add_option("--vertex", vertex_s)->required();
    on(c, [&] {
      const Int k = root_direction_count(polytope_arg(poly_s, points_s), parse_coweight(vertex_s, cfg.rank));
      emit(Json{{"count", k}}, std::to_string(k));
    });
    c = poly->add_subcommand("dim", "dimension estimate (common vertex count)");
    add_poly(c);
    on(c, [&] {
      const Int k = dimension_estimate(polytope_arg(poly_s, points_s));
      emit(Json{{"dimension", k}}, std::to_string(k));
    });
    c = poly->add_subcommand("mv", "SL3 MV polytope from prime coefficients");
    c->add_option("--c", c_s, "c1,c2,c3,c4")->required();
    on(c, [&] {
      if (cfg.rank != 3) throw UsageError("mv needs --rank 3");
      const auto k = parse_coweight(c_s, 4);
      const auto P = mv_polytope_sl3(k[0], k[1], k[2], k[3]);
      emit_polytope(P, to_json(P), text_of(P));
    });
    c = poly->add_subcommand("minkowski", "Minkowski sum of two point sets' hulls");
    c->add_option("--points", points_s)->required();
    c->add_option("--with", q_s)->required();
    on(c, [&] {
      const auto P = minkowski_sum(convex_hull(parse_points(points_s, cfg.rank)),
                                   convex_hull(parse_points(q_s, cfg.rank)));
      emit_polytope(P, to_json(P), text_of(P));
    });
    c = poly->add_subcommand("regular", "regular-subdivision check");
    add_poly(c);
    c->add_option("--cells", cells_s, "cells separated by '|'");
    c->add_option("--example", example_s, "trivial, rhombi, mother, mother-mixed");
    on(c, [&] {
      Polytope P;
      Subdivision S;
      if (!example_s.empty()) {
        const auto ns = named_subdivision(example_s);
        if (ns.outer.rank() != cfg.rank) throw UsageError("example needs --rank 3");
        P = ns.outer;
        S = ns.subdivision;
      } else {
        P = polytope_arg(poly_s, points_s);
        if (cells_s.empty()) throw UsageError("--cells or --example is required");
        S = subdivision_arg(cells_s);
      }
      const auto r = check_regular_subdivision(P, S);
      Json j{{"regular", r.regular}};
      if (r.regular) {
        Json h = Json::array();
        for (std::size_t i = 0; i < r.points.size(); ++i)
          h.push_back({{"point", to_json(r.points[i])}, {"height", to_json(r.heights[i])}});
        j["lifting"] = h;
      } else {
        Json y = Json::array();
        for (const auto& v : r.certificate) y.push_back(to_json(v));
        j["certificate"] = y;
        j["certificate_valid"] = verify_farkas(r.system, r.rhs, r.certificate);
      }
      emit(j, r.regular ? "regular" : "not regular (infeasibility certificate found)");
    });
  }

  // degen
  auto* degen = app.add_subcommand("degen", "degeneration rules and bounds")->require_subcommand(1);
  {
    auto* c = degen->add_subcommand("point", "limit of the fixed point t^beta");
    c->add_option("--beta", beta_s)->required();
    on(c, [&] {
      const auto z = degenerate_fixed_point(cw(beta_s));
      emit(to_json(z), text_of(z));
    });
    c = degen->add_subcommand("p1", "limit of the T-invariant P^1 between t^b1 and t^b2");
    c->add_option("--b1", b1_s)->required();
    c->add_option("--b2", b2_s)->required();
    on(c, [&] {
      const auto p = degenerate_p1(cw(b1_s), cw(b2_s));
      std::string t;
      for (const auto& z : p.fixed_points) t += text_of(z) + "\n";
      t += "edges: 1-2, 2-3";
      emit(to_json(p), t);
    });
    c = degen->add_subcommand("root", "limit of a root subgroup U_gamma");
    c->add_option("--root", root_s, "i,j (1-based)")->required();
    c->add_option("--level", level);
    on(c, [&] {
      const auto g = degenerate_root_subgroup(parse_affine_root(root_s, level, cfg.rank));
      emit(to_json(g), "root (" + std::to_string(g.root.i + 1) + "," + std::to_string(g.root.j + 1) +
                           ") level " + std::to_string(g.level));
    });
    c = degen->add_subcommand("product", "limit of a product of root-subgroup orbits through t^mu");
    c->add_option("--mu", mu_s)->required();
    c->add_option("--roots", roots_s, "'i,j,k;...' (root i,j at level k)");
    on(c, [&] {
      std::vector<AffineRoot> gs;
      std::stringstream ss(roots_s);
      std::string entry;
      while (std::getline(ss, entry, ';')) {
        const Coweight ijk = parse_coweight(entry, 3);
        gs.push_back(parse_affine_root(std::to_string(ijk[0]) + "," + std::to_string(ijk[1]), ijk[2], cfg.rank));
      }
      const auto [anchor, roots] = degenerate_product_orbit(cw(mu_s), gs);
      Json rs = Json::array();
      std::string t = "anchor " + text_of(anchor) + "; roots";
      for (const auto& g : roots) {
        rs.push_back(to_json(g));
        t += " (" + std::to_string(g.root.i + 1) + "," + std::to_string(g.root.j + 1) + ")+" +
             std::to_string(g.level) + "d";
      }
      emit(Json{{"anchor", to_json(anchor)}, {"roots", rs}}, t);
    });
    c = degen->add_subcommand("semiinf", "limit of the U_w orbit through t^mu");
    c->add_option("--w", w_s)->default_val("w0");
    c->add_option("--mu", mu_s)->required();
    c->add_option("--y", y_s, "test membership of y in the closure");
    on(c, [&] {
      const Perm w = parse_perm(w_s, cfg.rank);
      const auto a = degenerate_semiinfinite(w, cw(mu_s));
      Json j{{"anchor", to_json(a)}};
      std::string t = "anchor " + text_of(a);
      if (!y_s.empty()) {
        const bool in = in_semiinfinite_limit(elt(y_s), w, cw(mu_s));
        j["contains"] = in;
        t += in ? "; contains y" : "; does not contain y";
      }
      emit(j, t);
    });
    c = degen->add_subcommand("admissible", "lambda-admissible set");
    c->add_option("--lambda", lambda_s)->required();
    on(c, [&] {
      const auto A = admissible_set(cw(lambda_s));
      Json el = Json::array(), mx = Json::array();
      std::string t = std::to_string(A.elements.size()) + " elements; maximal:";
      for (const auto& z : A.elements) el.push_back(to_json(z));
      for (const auto& z : A.maximal) {
        mx.push_back(to_json(z));
        t += " " + word_string(reduced_word(z));
      }
      emit(Json{{"elements", el}, {"maximal", mx}}, t);
    });
    c = degen->add_subcommand("go-limit", "limit of the G(O)-orbit Gr^lambda");
    c->add_option("--lambda", lambda_s)->required();
    on(c, [&] {
      const auto r = go_orbit_limit(cw(lambda_s));
      std::string t = std::to_string(r.components.size()) + " components";
      for (const auto& comp : r.components) t += "\n  " + text_of(comp);
      emit(to_json(r), t);
    });
    c = degen->add_subcommand("bounds", "component-count bounds for a lattice polytope");
    c->add_option("--polytope", poly_s, "named polytope");
    c->add_option("--points", points_s);
    c->add_option("--d", d, "dimension of the general fiber (default: dimension estimate)");
    on(c, [&] {
      const auto P = polytope_arg(poly_s, points_s);
      const Int dim = d > 0 ? d : dimension_estimate(P);
      LimitReport r;
      r.polytope = limit_polytope(P);
      r.lower_bound = component_lower_bound(P);
      r.upper_bound = component_upper_bound(P, dim, cfg.cap);
      Json j = to_json(r);
      j["dimension"] = dim;
      const auto& u = *r.upper_bound;
      emit(j, "dimension " + std::to_string(dim) + ", lower bound " + std::to_string(r.lower_bound) +
                  ", upper bound " + std::to_string(u.count) + (u.cap_exceeded ? " (cap exceeded, partial)" : ""));
    });
    c = degen->add_subcommand("sl2-mv", "SL2 MV cycle limit");
    c->add_option("--lambda", lambda_s)->required();
    c->add_option("--mu", mu_s)->required();
    on(c, [&] {
      if (cfg.rank != 2) throw UsageError("sl2-mv needs --rank 2");
      const auto r = sl2_mv_limit(cw(lambda_s), cw(mu_s));
      Json fp = Json::array(), comps = Json::array();
      for (const auto& z : r.fixed_points) fp.push_back(to_json(z));
      std::string t = "d = " + std::to_string(r.d) + ", " + std::to_string(r.fixed_points.size()) +
                      " fixed points, cells by dimension:";
      for (const auto& [k, v] : r.cells_by_dim) t += " " + std::to_string(k) + ":" + std::to_string(v);
      for (const auto& comp : r.components) {
        comps.push_back(to_json(comp));
        t += "\n  " + text_of(comp);
      }
      emit(Json{{"d", r.d}, {"fixed_point_count", r.fixed_points.size()}, {"fixed_points", fp},
                {"cells_by_dim", dim_map_json(r.cells_by_dim)}, {"components", comps}},
           t);
    });
    c = degen->add_subcommand("sl2-iwahori", "SL2 Iwahori-orbit limit");
    c->add_option("--gamma", gamma_s)->required();
    c->add_flag("--opposite", opposite, "orbit of the opposite Iwahori");
    on(c, [&] {
      if (cfg.rank != 2) throw UsageError("sl2-iwahori needs --rank 2");
      const auto r = sl2_iwahori_limit(cw(gamma_s), opposite);
      Json comps = Json::array();
      std::string t = "d = " + std::to_string(r.d);
      for (const auto& comp : r.components) {
        comps.push_back(to_json(comp));
        t += "\n  " + text_of(comp);
      }
      emit(Json{{"d", r.d}, {"components", comps}}, t);
    });
  }

  // dims
  auto* dims = app.add_subcommand("dims", "dimension formulas")->require_subcommand(1);
  {
    auto* c = dims->add_subcommand("height", "height of a coroot-lattice element");
    c->add_option("--lambda", lambda_s)->required();
    on(c, [&] {
      const Int h = height(cw(lambda_s));
      emit(Json{{"height", h}}, std::to_string(h));
    });
    c = dims->add_subcommand("iwahori-gr", "dimension of the Iwahori orbit through t^lambda in Gr");
    c->add_option("--lambda", lambda_s)->required();
    on(c, [&] {
      const Int v = iwahori_dim_gr(cw(lambda_s));
      emit(Json{{"dimension", v}}, std::to_string(v));
    });
    c = dims->add_subcommand("iwahori-fl", "dimension of the Iwahori orbit of x in Fl");
    c->add_option("--x", x_s)->required();
    on(c, [&] {
      const Int v = iwahori_dim_fl(elt(x_s));
      emit(Json{{"dimension", v}}, std::to_string(v));
    });
    c = dims->add_subcommand("gr-int", "Iwahori orbit of lambda meets S_{w0}^mu");
    c->add_option("--lambda", lambda_s)->required();
    c->add_option("--mu", mu_s)->required();
    on(c, [&] {
      const auto r = gr_intersection_dim(cw(lambda_s), cw(mu_s));
      emit(to_json(r), text_of(r));
    });
    c = dims->add_subcommand("fl-bound", "upper bound for the Fl intersection");
    c->add_option("--x", x_s)->required();
    c->add_option("--y", y_s)->required();
    on(c, [&] {
      const auto r = fl_intersection_bound(elt(x_s), elt(y_s));
      emit(to_json(r), text_of(r));
    });
  }

  // examples
  auto* ex = app.add_subcommand("examples", "run the worked-example corpus");
  ex->add_option("--case", case_s, "point, segment, triangle, trapezoid, hexagon or a subdivision name");
  int examples_status = 0;
  on(ex, [&] {
    const auto r = run_examples(cfg.cap, case_s);
    emit(to_json(r), to_text(r));
    examples_status = r.all_pass() ? 0 : 1;
  });

  // render
  auto* render = app.add_subcommand("render", "SVG drawing of a polytope");
  render->add_option("--polytope", poly_s, "named polytope");
  render->add_option("--points", points_s);
  render->add_option("--out", out_s, "output file (default stdout)");
  on(render, [&] {
    const std::string svg = render_svg(polytope_arg(poly_s, points_s));
    if (out_s.empty()) {
      std::cout << svg;
    } else {
      std::ofstream f(out_s);
      if (!f) throw UsageError("cannot write " + out_s);
      f << svg;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!cap_from_env && cap_flag->count() > 0) cfg.cap = cap_opt;
  try {
    if (!action) throw UsageError("no command given");
    action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  }
  return examples_status;
}
