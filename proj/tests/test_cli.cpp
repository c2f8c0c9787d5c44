#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int rc = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " AFGR_CLI_PATH " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  const int status = pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli: P1 limit as JSON") {
  const auto r = run("degen p1 --rank 2 --b1 1,-1 --b2 -1,1 --output json");
  REQUIRE(r.rc == 0);
  const auto j = json_of(r);
  REQUIRE(j["fixed_points"].size() == 3);
  CHECK(j["fixed_points"][0]["trans"] == nlohmann::json::array({1, -1}));
  CHECK(j["fixed_points"][0]["perm"] == nlohmann::json::array({1, 2}));
  CHECK(j["fixed_points"][1]["trans"] == nlohmann::json::array({1, -1}));
  CHECK(j["fixed_points"][1]["perm"] == nlohmann::json::array({2, 1}));
  CHECK(j["fixed_points"][2]["trans"] == nlohmann::json::array({-1, 1}));
  CHECK(j["fixed_points"][2]["perm"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("cli: exit codes") {
  CHECK(run("weyl length --rank 2 --x s0s1s0").rc == 0);
  CHECK(run("degen admissible --rank 2 --lambda -1,1").rc == 1);
  CHECK(run("degen p1 --rank 2 --b1 1,-1 --b2 1,-1").rc == 1);
  CHECK(run("no-such-command").rc == 2);
  CHECK(run("weyl length --rank 2 --x s7").rc == 2);
  CHECK(run("dims height --rank 3 --lambda 1,2").rc == 2);
  CHECK(run("").rc == 2);
}

TEST_CASE("cli: golden trapezoid") {
  const auto r = run("examples --case trapezoid --output json");
  REQUIRE(r.rc == 0);
  const auto c = json_of(r)["cases"][0];
  CHECK(c["lower_bound"] == 4);
  CHECK(c["known_components"] == 5);
  CHECK(c["upper_bound"]["cap_exceeded"] == false);
  CHECK(c["upper_bound"]["count"].get<int>() >= 5);
  const auto text = run("examples --case trapezoid --output text");
  CHECK(text.out.find("PASS") != std::string::npos);
}

TEST_CASE("cli: cap override from the environment") {
  const auto r = run("examples --case hexagon --output json", "AFGR_CAP=5");
  CHECK(r.rc == 1);
  CHECK(json_of(r)["cases"][0]["upper_bound"]["cap_exceeded"] == true);
  const auto ok = run("examples --case hexagon --cap 5 --output json", "AFGR_CAP=1000000");
  CHECK(ok.rc == 0);
}

TEST_CASE("cli: SVG rendering") {
  const std::string path = "cli_test_hexagon.svg";
  REQUIRE(run("render --rank 3 --polytope hexagon --out " + path).rc == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string svg = ss.str();
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = svg.find("class=\"vertex\"", pos)) != std::string::npos; ++pos) ++count;
  CHECK(count == 6);
  std::remove(path.c_str());
  CHECK(run("render --rank 4 --points 1,0,0,-1").rc != 0);
}

TEST_CASE("cli: JSON re-serialization is idempotent and runs are deterministic") {
  for (const std::string args :
       {"weyl compose --rank 2 --x s0 --y s1 --output json", "polytope mv --c 0,1,1,0 --output json",
        "dims gr-int --rank 3 --lambda -1,0,1 --mu 0,0,0 --output json",
        "degen sl2-mv --rank 2 --lambda 2,-2 --mu 1,-1 --output json"}) {
    const auto a = run(args), b = run(args);
    INFO(args);
    REQUIRE(a.rc == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::ordered_json::parse(a.out);
    CHECK(nlohmann::ordered_json::parse(j.dump()).dump() == j.dump());
  }
}
