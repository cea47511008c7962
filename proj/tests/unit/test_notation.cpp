#include "hallkit/errors.hpp"
#include "hallkit/notation.hpp"

#include <doctest.h>

using namespace hallkit;

TEST_CASE("class addresses") {
  Engine e(kronecker_quiver(2));
  Notation nt(e);
  CHECK(nt.parse_class("[1,0]") == e.catalog().simple(0));
  CHECK(nt.parse_class("0,1") == e.catalog().simple(1));
  CHECK_THROWS_AS(nt.parse_class("[1,1]"), DomainError);
  CHECK_THROWS_AS(nt.parse_class("[1,1]#9"), DomainError);
  CHECK_THROWS_AS(nt.parse_class("[1,1,1]"), ParseError);
  for (ClassId c : nt.candidates(DimVector{1, 1})) CHECK(nt.parse_class(nt.label(c)) == c);
  CHECK(nt.parse_exceptional("2,1") == find_exceptional(e.catalog(), {2, 1}));
}

TEST_CASE("Hall expressions") {
  Engine e(a2_quiver(2));
  Notation nt(e);
  const HallElement x = nt.parse_hall("u+[1,0] u+[0,1]");
  CHECK(x == e.hall().mul(e.hall().u(e.catalog().simple(0)), e.hall().u(e.catalog().simple(1))));
  CHECK(nt.parse_hall("2*v^-1 - 1/2") == Coeff::v_power(2, -1) * Coeff(2) * e.hall().one() - Coeff(mpq_class(1, 2)) * e.hall().one());
  CHECK(nt.parse_hall("(u[1,0] + u[0,1])^2") == nt.parse_hall("u[1,0]u[1,0] + u[1,0]u[0,1] + u[0,1]u[1,0] + u[0,1]u[0,1]"));
  CHECK(nt.parse_hall("u[1,0]^(2)") == nt.parse_hall("v^2*u[2,0]"));
  CHECK_THROWS_AS(nt.parse_hall("u-[1,0]"), ParseError);
  CHECK_THROWS_AS(nt.parse_hall("u[1,0] +"), ParseError);
  CHECK_THROWS_AS(nt.parse_hall("w"), ParseError);
}

TEST_CASE("printed elements parse back") {
  Engine e(kronecker_quiver(2));
  Notation nt(e);
  const char* inputs[] = {"u+[1,0] u-[1,0]", "u+[1,2]#4^(2) u-[2,3]#19 + v^-1*K[1,-1]", "u+[0,1] u-[1,0] u+[2,1]#4", "0",
                          "(1+v)*K[2,0] - 3/4"};
  for (const char* s : inputs) {
    const DoubleElement x = nt.parse_double(s);
    const std::string printed = nt.render(x);
    CHECK(nt.parse_double(printed) == x);
    CHECK(nt.render(nt.parse_double(printed)) == printed);
  }
  const HallTensor t = e.hall().comul(nt.parse_hall("u[1,1]#1 K[1,0]"));
  CHECK(nt.parse_tensor(nt.render(t)) == t);
}

TEST_CASE("JSON carries the expression and sorted terms") {
  Engine e(a2_quiver(2));
  Notation nt(e);
  const auto j = nt.to_json(nt.parse_hall("u[1,0] u[0,1]"));
  CHECK(j.at("expr") == "1/2*v*u[1,1]#0 + 1/2*v*u[1,1]#1");
  CHECK(j.at("terms").size() == 2);
  CHECK(nt.to_json(HallElement()).at("expr") == "0");
}
