#include "hallkit/hallalg.hpp"

#include <doctest.h>

using namespace hallkit;

namespace {

struct A2 {
  Catalog cat;
  HallAlgebra H{cat};
  ClassId s1, s2, split, proj;
  explicit A2(int q) : cat(a2_quiver(q)) {
    s1 = cat.simple(0);
    s2 = cat.simple(1);
    split = cat.direct_sum(s1, s2);
    proj = -1;
    for (ClassId c : cat.enumerate(DimVector{1, 1}))
      if (c != split) proj = c;
  }
  HallBasis b(ClassId c, KClass k = KClass::zero(2)) const { return {c, k}; }
};

} // namespace

TEST_CASE("product of the two simples of A2") {
  for (int q : {2, 3}) {
    A2 a(q);
    const Coeff vinv = Coeff::v_power(q, -1);
    HallElement expected;
    expected.add(a.b(a.proj), vinv);
    expected.add(a.b(a.split), vinv);
    CHECK(a.H.mul(a.H.u(a.s1), a.H.u(a.s2)) == expected);
    CHECK(a.H.mul(a.H.u(a.s2), a.H.u(a.s1)) == a.H.u(a.split));
  }
}

TEST_CASE("coproduct of the projective of A2") {
  for (int q : {2, 3}) {
    A2 a(q);
    const KClass p{1, 1}, z = KClass::zero(2);
    HallTensor expected;
    expected.add({a.b(a.proj), a.b(0)}, Coeff(1));
    expected.add({a.b(0, p), a.b(a.proj)}, Coeff(1));
    expected.add({a.b(a.s1, KClass{0, 1}), a.b(a.s2)}, Coeff::v_power(q, -1) * Coeff(q - 1));
    CHECK(a.H.comul(a.H.u(a.proj)) == expected);
  }
}

TEST_CASE("pairing of basis elements") {
  A2 a(3);
  CHECK(a.H.pairing(a.b(a.proj), a.b(a.proj)) == Coeff(mpq_class(1, 2)));
  CHECK(a.H.pairing(a.b(a.split), a.b(a.split)) == Coeff(mpq_class(1, 4)));
  CHECK(a.H.pairing(a.b(a.proj), a.b(a.split)).is_zero());
  // default sign: v^{-(alpha,beta)}
  CHECK(a.H.pairing(a.b(0, KClass{1, 0}), a.b(0, KClass{1, 0})) == Coeff::v_power(3, -2));
}

TEST_CASE("torus elements commute past generators by the symmetric form") {
  A2 a(2);
  const KClass g{1, 0};
  const HallElement lhs = a.H.mul(a.H.torus(g), a.H.u(a.proj));
  const HallElement rhs = a.H.mul(a.H.u(a.proj), a.H.torus(g));
  CHECK(lhs == a.H.v_pow(a.cat.quiver().symmetric_form(g, KClass{1, 1})) * rhs);
}

TEST_CASE("Hopf property with torus parts needs the positive exponent") {
  Catalog cat(a2_quiver(2));
  HallAlgebra H(cat);
  std::vector<ClassId> cls{0};
  for (const DimVector& d : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}})
    for (ClassId c : cat.enumerate(d)) cls.push_back(c);
  const std::vector<KClass> ks{KClass{0, 0}, KClass{1, 0}, KClass{0, -1}};
  auto holds = [&] {
    for (ClassId x : cls)
      for (ClassId y : cls)
        for (const KClass& kx : ks)
          for (const KClass& ky : ks)
            for (ClassId c : cls)
              for (const KClass& kc : ks) {
                const HallElement prod = H.mul(HallBasis{x, kx}, HallBasis{y, ky});
                const HallElement uc({c, kc}, Coeff(1));
                const HallTensor split({{x, kx}, {y, ky}}, Coeff(1));
                if (!(H.pairing(prod, uc) == H.pairing(split, H.comul(uc)))) return false;
              }
    return true;
  };
  H.set_torus_sign(1);
  CHECK(holds());
  H.set_torus_sign(-1);
  CHECK_FALSE(holds());
}

TEST_CASE("elements round-trip through JSON") {
  A2 a(2);
  HallElement x = a.H.mul(a.H.u(a.s1), a.H.u(a.s2));
  x.add(a.b(a.s2, KClass{-1, 2}), Coeff(mpq_class(5, 3)));
  CHECK(a.H.from_json(a.H.to_json(x)) == x);
}
