#include "hallkit/coeff.hpp"
#include "hallkit/errors.hpp"

#include <doctest.h>

#include <map>

using namespace hallkit;

namespace {

/// Gaussian binomial in q by Pascal's rule, over plain integers.
long gauss(long q, int l, int i) {
  if (i < 0 || i > l) return 0;
  if (i == 0 || i == l) return 1;
  long qi = 1;
  for (int k = 0; k < i; ++k) qi *= q;
  return gauss(q, l - 1, i - 1) + qi * gauss(q, l - 1, i);
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

} // namespace

TEST_CASE("v squares to q and inverts through v/q") {
  for (int q : {2, 3, 5, 7}) {
    const Coeff v = Coeff::v(q);
    CHECK(v * v == Coeff(q));
    CHECK(v * Coeff::v_power(q, -1) == Coeff(1));
    CHECK(Coeff::v_power(q, -1) == Coeff(q, 0, mpq_class(1, q)));
    CHECK(Coeff::v_power(q, 5) == v.pow(5));
    CHECK(v.pow(-3) * v.pow(3) == Coeff(1));
  }
}

TEST_CASE("field operations") {
  const Coeff x(3, mpq_class(1, 2), 2), y(3, -1, mpq_class(1, 3));
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK(x * x.inverse() == Coeff(1));
  CHECK(-(-x) == x);
  CHECK_THROWS_AS(Coeff(0).inverse(), DomainError);
}

TEST_CASE("quantum integers at small q") {
  // [2] = v + v^-1 and |3] = 1 + q + q^2
  CHECK(qbracket(2, 2) == Coeff(2, 0, mpq_class(3, 2)));
  CHECK(qbracket(2, 3) == Coeff(mpq_class(7, 2)));
  CHECK(qbar(2, 3) == Coeff(7));
  CHECK(qbar(3, 4, 2) == Coeff(1 + 9 + 81 + 729));
  CHECK(qfact(3, 0) == Coeff(1));
}

TEST_CASE("barred binomials are Gaussian binomials in q^d") {
  for (int q : {2, 3})
    for (int d : {1, 2, 3})
      for (int l = 0; l <= 7; ++l)
        for (int i = 0; i <= l; ++i) CHECK(qbarbinom(q, l, i, d) == Coeff(gauss(ipow(q, d), l, i)));
}

TEST_CASE("bracket binomials are symmetric under v -> v^-1 and match the barred ones up to v^{d i(l-i)}") {
  for (int q : {2, 3})
    for (int l = 0; l <= 6; ++l)
      for (int i = 0; i <= l; ++i) {
        CHECK(qbinom(q, l, i) == qbinom(q, l, l - i));
        CHECK(qbarbinom(q, l, i) == Coeff::v_power(q, i * (l - i)) * qbinom(q, l, i));
      }
}

TEST_CASE("alternating binomial sums vanish") {
  for (int q : {2, 3, 5})
    for (int d = 1; d <= 3; ++d)
      for (int l = 1; l <= 10; ++l) CHECK(alternating_binomial_sum(q, l, d).is_zero());
}

TEST_CASE("text and JSON forms") {
  CHECK(Coeff(mpq_class(3, 2)).to_string() == "3/2");
  CHECK(Coeff::v(2).to_string() == "v");
  CHECK((-Coeff::v(2)).to_string() == "-v");
  CHECK(Coeff(2, 1, mpq_class(1, 2)).to_string() == "(1+1/2*v)");
  const Coeff x(5, mpq_class(-7, 3), mpq_class(2, 9));
  CHECK(Coeff::from_json(x.to_json(), 5) == x);
  CHECK(x.to_json().dump() == R"({"a":"-7/3","b":"2/9"})");
  CHECK(Coeff(4).to_json().dump() == R"({"a":"4/1","b":"0/1"})");
}
