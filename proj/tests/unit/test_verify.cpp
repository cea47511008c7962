#include "hallkit/errors.hpp"
#include "hallkit/verify.hpp"

#include <doctest.h>

using namespace hallkit;

TEST_CASE("thrown errors become failing reports") {
  const CheckReport r = run_check("demo", "none", [](CheckReport&) { throw ResourceError("cap rep_space exceeded"); });
  CHECK_FALSE(r.pass);
  CHECK(r.discrepancy.at("error") == "cap rep_space exceeded");
  const auto j = r.to_json();
  for (const char* key : {"name", "instance", "pass", "discrepancy", "wall_time_ms"}) CHECK(j.contains(key));
}

TEST_CASE("a nonzero element fails the report and is recorded") {
  Engine e(a2_quiver(2));
  const CheckReport r = run_check("demo", "", [&](CheckReport& rep) {
    expect_zero(rep, e.dbl().plus(e.catalog().simple(0)), e.dbl(), "leftover");
  });
  CHECK_FALSE(r.pass);
  CHECK(r.discrepancy.at("label") == "leftover");
  CHECK(e.dbl().from_json(r.discrepancy.at("element")) == e.dbl().plus(e.catalog().simple(0)));
}

TEST_CASE("vacuous instances pass") {
  Engine e(kronecker_quiver(2));
  CHECK(check_green(e, 0).pass);
  const auto seq = simple_sequence(e.catalog());
  const CheckReport r = check_orbit_formulas(e, seq, 0);
  CHECK(r.pass);
  CHECK(r.checked == 0);
}

TEST_CASE("mutation checks on the small fixtures") {
  Engine e2(kronecker_quiver(2)), e3(kronecker_quiver(3)), a2(a2_quiver(2));
  const auto s = simple_sequence(a2.catalog());
  CHECK(check_left_formula(a2, s[0], s[1], 1).pass);
  CHECK(check_left_formula(e2, find_exceptional(e2.catalog(), {2, 1}), find_exceptional(e2.catalog(), {1, 0}), -1).pass);
  CHECK(check_left_formula(e3, find_exceptional(e3.catalog(), {0, 1}), find_exceptional(e3.catalog(), {1, 2}), 1).pass);
  CHECK(check_right_formula(e2, e2.catalog().simple(0), e2.catalog().simple(1), 1).pass);
  CHECK(check_serre(e2, find_exceptional(e2.catalog(), {2, 1}), find_exceptional(e2.catalog(), {1, 0}), 1).pass);
}

TEST_CASE("projective line transport") {
  Engine e(kronecker_quiver(2));
  CHECK(e.catalog().at(line_bundle(e, 0)).dim == DimVector{0, 1});
  CHECK(e.catalog().at(line_bundle(e, 2)).dim == DimVector{2, 3});
  CHECK_THROWS_AS(line_bundle(e, -1), DomainError);
  CHECK_FALSE(check_line_left(e, 0).pass);
  CHECK(check_line_left(e, 1).pass);
  CHECK(check_line_right(e, 0).pass);
  Engine a(a2_quiver(2));
  CHECK_THROWS_AS(line_bundle(a, 1), DomainError);
}

TEST_CASE("suite groups have distinct keys") {
  std::set<std::string> keys;
  for (const auto& g : default_suite()) keys.insert(g.key);
  CHECK(keys.size() == 8);
}
