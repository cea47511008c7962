#include "hallkit/dbl.hpp"
#include "hallkit/errors.hpp"

#include <doctest.h>

#include <random>

using namespace hallkit;

namespace {

struct Fixture {
  Catalog cat;
  HallAlgebra H{cat};
  DoubleAlgebra D{H};
  explicit Fixture(Quiver Q) : cat(std::move(Q)) {}
};

} // namespace

TEST_CASE("straightening a simple past itself") {
  for (int q : {2, 3}) {
    Fixture f(kronecker_quiver(q));
    DoubleAlgebra& D = f.D;
    for (int vtx : {0, 1}) {
      const ClassId s = f.cat.simple(vtx);
      const KClass ks = f.cat.at(s).dim.k();
      // u+ u- = u- u+ + (K_{-S} - K_S) / (q - 1)
      const DoubleElement expected =
          D.mul(D.minus(s), D.plus(s)) + Coeff(mpq_class(1, q - 1)) * (D.torus(-ks) - D.torus(ks));
      CHECK(D.straighten(s, s) == expected);
    }
  }
}

TEST_CASE("orthogonal simples commute") {
  Fixture f(a3_quiver(2));
  DoubleAlgebra& D = f.D;
  const ClassId s1 = f.cat.simple(0), s3 = f.cat.simple(2);
  CHECK(D.mul(D.plus(s1), D.minus(s3)) == D.mul(D.minus(s3), D.plus(s1)));
}

TEST_CASE("torus conjugation in both copies") {
  Fixture f(kronecker_quiver(3));
  DoubleAlgebra& D = f.D;
  const KClass g{1, -1};
  for (ClassId c : f.cat.enumerate(DimVector{1, 1})) {
    const int e = f.cat.quiver().symmetric_form(g, f.cat.at(c).dim.k());
    CHECK(D.mul(D.mul(D.torus(g), D.plus(c)), D.torus(-g)) == D.v_pow(e) * D.plus(c));
    CHECK(D.mul(D.mul(D.torus(g), D.minus(c)), D.torus(-g)) == D.v_pow(-e) * D.minus(c));
  }
}

TEST_CASE("associativity on random monomials") {
  Fixture f(a2_quiver(2));
  DoubleAlgebra& D = f.D;
  std::vector<ClassId> pool{0};
  for (const DimVector& d : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}, DimVector{2, 0}})
    for (ClassId c : f.cat.enumerate(d)) pool.push_back(c);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> kk(-1, 1);
  auto mono = [&] { return DoubleElement({pool[pick(rng)], KClass{kk(rng), kk(rng)}, pool[pick(rng)]}, Coeff(1)); };
  for (int i = 0; i < 40; ++i) {
    const auto x = mono(), y = mono(), z = mono();
    CHECK(D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z)));
  }
}

TEST_CASE("divided powers") {
  Fixture f(kronecker_quiver(2));
  DoubleAlgebra& D = f.D;
  const ClassId s1 = f.cat.simple(0);
  for (int sign : {1, -1}) {
    CHECK(D.divided_power(s1, 0, sign) == D.one());
    CHECK(D.divided_power(s1, 1, sign) == D.u(s1, sign));
    for (int t = 2; t <= 3; ++t) CHECK(D.divided_power(s1, t, sign) == D.divided_power_by_powers(s1, t, sign));
  }
  const ClassId split = f.cat.direct_sum(s1, f.cat.simple(1));
  CHECK_THROWS_AS(D.divided_power(split, 2, 1), DomainError);
}

TEST_CASE("degrees add under multiplication") {
  Fixture f(kronecker_quiver(2));
  DoubleAlgebra& D = f.D;
  const ClassId s1 = f.cat.simple(0), s2 = f.cat.simple(1);
  const DoubleElement x = D.mul(D.plus(s1), D.minus(s2));
  CHECK(D.degree(x) == KClass{1, -1});
  CHECK_THROWS_AS(D.degree(D.plus(s1) + D.plus(s2)), DomainError);
}

TEST_CASE("theta element has one term per regular class") {
  for (int q : {2, 3}) {
    Fixture f(kronecker_quiver(q));
    CHECK(f.D.theta1(1).size() == static_cast<size_t>(q + 1));
    CHECK(f.D.theta1(-1).size() == static_cast<size_t>(q + 1));
  }
}

TEST_CASE("double elements round-trip through JSON") {
  Fixture f(kronecker_quiver(2));
  const DoubleElement x = f.D.straighten(f.cat.simple(0), f.cat.simple(0));
  CHECK(f.D.from_json(f.D.to_json(x)) == x);
}
