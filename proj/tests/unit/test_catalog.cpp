#include "hallkit/catalog.hpp"
#include "hallkit/errors.hpp"

#include <doctest.h>

using namespace hallkit;

namespace {

mpz_class gl_product(unsigned long q, const DimVector& d) {
  mpz_class r = 1;
  for (int x : d.coords()) r *= general_linear_order(q, x);
  return r;
}

mpz_class ipow(unsigned long q, long long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(e));
  return r;
}

} // namespace

TEST_CASE("GL orders") {
  CHECK(general_linear_order(2, 2) == 6);
  CHECK(general_linear_order(3, 2) == 48);
  CHECK(general_linear_order(2, 0) == 1);
}

TEST_CASE("orbit sizes fill the representation space") {
  for (int q : {2, 3}) {
    Catalog cat(kronecker_quiver(q));
    for (const DimVector& d : {DimVector{1, 1}, DimVector{2, 1}, DimVector{1, 2}, DimVector{2, 2}}) {
      mpz_class total = 0;
      for (const auto& [c, orbit] : cat.enumerate_with_orbits(d)) {
        CHECK(mpz_class(orbit) * cat.at(c).aut_count == gl_product(static_cast<unsigned long>(q), d));
        total += orbit;
      }
      CHECK(total == ipow(static_cast<unsigned long>(q), cat.quiver().space_dimension(d)));
    }
  }
}

TEST_CASE("class counts") {
  for (int q : {2, 3, 5}) {
    Catalog cat(kronecker_quiver(q));
    const auto cls = cat.enumerate(DimVector{1, 1});
    CHECK(cls.size() == static_cast<size_t>(q + 2));
    int indec = 0;
    for (ClassId c : cls) indec += cat.is_indecomposable(c);
    CHECK(indec == q + 1);
  }
  Catalog a2(a2_quiver(2));
  CHECK(a2.enumerate(DimVector{1, 1}).size() == 2);
  // one class per rank of the single map
  CHECK(a2.enumerate(DimVector{2, 2}).size() == 3);
  CHECK(a2.enumerate(DimVector{2, 3}).size() == 3);
}

TEST_CASE("automorphism counts agree with an exhaustive scan") {
  Catalog cat(kronecker_quiver(2));
  for (const DimVector& d : {DimVector{1, 1}, DimVector{2, 1}, DimVector{2, 2}})
    for (ClassId c : cat.enumerate(d)) CHECK(cat.count_automorphisms(c) == cat.at(c).aut_count);
}

TEST_CASE("Hall numbers of A2") {
  for (int q : {2, 3}) {
    Catalog cat(a2_quiver(q));
    const ClassId s1 = cat.simple(0), s2 = cat.simple(1);
    const ClassId split = cat.direct_sum(s1, s2);
    ClassId proj = -1;
    for (ClassId c : cat.enumerate(DimVector{1, 1}))
      if (c != split) proj = c;
    REQUIRE(proj >= 0);
    CHECK(cat.hall_number(proj, s1, s2) == 1);
    CHECK(cat.hall_number(proj, s2, s1) == 0);
    CHECK(cat.hall_number(split, s1, s2) == 1);
    CHECK(cat.hall_number(split, s2, s1) == 1);
    // subspaces of dimension 1 in F_q^2
    CHECK(cat.hall_number(cat.multiple(s1, 2), s1, s1) == q + 1);
    CHECK(cat.ext_dim(s1, s2) == 1);
    CHECK(cat.ext_dim(s2, s1) == 0);
    CHECK(cat.hom_dim(proj, s1) == 1);
  }
}

TEST_CASE("exact pairs count Hall numbers times automorphisms") {
  Catalog cat(kronecker_quiver(2));
  for (ClassId lam : cat.enumerate(DimVector{2, 2}))
    for (const auto& f : cat.filtration_table(lam))
      CHECK(cat.exact_pair_count(lam, f.quotient, f.sub) == f.count * cat.at(f.quotient).aut_count * cat.at(f.sub).aut_count);
}

TEST_CASE("identification is canonical") {
  Catalog cat(kronecker_quiver(3));
  const ClassId a = cat.direct_sum(cat.simple(0), cat.simple(1));
  const ClassId b = cat.direct_sum(cat.simple(1), cat.simple(0));
  CHECK(a == b);
  CHECK(cat.identify(cat.at(a).canon) == a);
  CHECK(cat.is_exceptional(cat.simple(0)));
  CHECK_FALSE(cat.is_exceptional(a));
}

TEST_CASE("caps are reported by name") {
  Caps caps;
  caps.enum_total_dim = 2;
  Catalog cat(kronecker_quiver(2), caps);
  try {
    cat.enumerate(DimVector{2, 1});
    FAIL("expected a ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("enum_total_dim") != std::string::npos);
  }
}
