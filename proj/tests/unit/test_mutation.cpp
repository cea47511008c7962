#include "hallkit/errors.hpp"
#include "hallkit/mutation.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace hallkit;

namespace {

DimVector dim(Catalog& cat, ClassId c) { return cat.at(c).dim; }

/// Absolute determinant of the 2x2 or 3x3 matrix of dimension vectors.
long lattice_index(Catalog& cat, const ExceptionalSequence& e) {
  std::vector<std::vector<long>> m;
  for (ClassId c : e) m.push_back(std::vector<long>(cat.at(c).dim.vec().begin(), cat.at(c).dim.vec().end()));
  if (m.size() == 2) return std::labs(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  return std::labs(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
}

} // namespace

TEST_CASE("classification of Kronecker pairs") {
  Catalog cat(kronecker_quiver(2));
  struct Row {
    DimVector a, b;
    PairCase left, right;
    DimVector gamma, lambda;
  };
  const Row rows[] = {
      {{1, 0}, {0, 1}, PairCase::nonpos, PairCase::nonpos, {2, 1}, {1, 2}},
      {{0, 1}, {1, 2}, PairCase::small, PairCase::big, {1, 0}, {2, 3}},
      {{2, 1}, {1, 0}, PairCase::big, PairCase::small, {3, 2}, {0, 1}},
      {{1, 2}, {2, 3}, PairCase::big, PairCase::big, {0, 1}, {3, 4}},
  };
  for (const auto& r : rows) {
    const ClassId a = find_exceptional(cat, r.a), b = find_exceptional(cat, r.b);
    const ExceptionalPair p = classify_pair(cat, a, b);
    CHECK(p.left_case == r.left);
    CHECK(p.right_case == r.right);
    CHECK(left_target_dim(cat, p) == r.gamma);
    CHECK(right_target_dim(cat, p) == r.lambda);
    CHECK(dim(cat, left_mutation(cat, a, b)) == r.gamma);
    CHECK(dim(cat, right_mutation(cat, a, b)) == r.lambda);
  }
  const ExceptionalPair p = classify_pair(cat, cat.simple(0), cat.simple(1));
  CHECK(p.n == 2);
  CHECK(p.m == 2);
  CHECK(roman(PairCase::big) == "ii");
}

TEST_CASE("non-exceptional pairs are rejected") {
  Catalog cat(kronecker_quiver(2));
  CHECK_THROWS_AS(classify_pair(cat, cat.simple(1), cat.simple(0)), DomainError);
  CHECK_FALSE(is_exceptional_pair(cat, cat.simple(1), cat.simple(0)));
}

TEST_CASE("exceptional classes are unique per dimension vector") {
  Catalog cat(kronecker_quiver(3));
  CHECK(exceptional_classes(cat, DimVector{1, 2}).size() == 1);
  CHECK(exceptional_classes(cat, DimVector{1, 1}).empty());
  CHECK_THROWS_AS(find_exceptional(cat, DimVector{2, 2}), DomainError);
}

TEST_CASE("large exceptional classes are reached through the braid orbit") {
  Catalog cat(kronecker_quiver(3));
  const ClassId c = find_exceptional(cat, DimVector{3, 4});
  CHECK(cat.at(c).dim == DimVector{3, 4});
  CHECK(cat.is_exceptional(c));
}

TEST_CASE("braid words") {
  CHECK(parse_braid("").empty());
  const BraidWord w = parse_braid("s1 s2^-1 s1");
  REQUIRE(w.size() == 3);
  CHECK(w[1] == BraidLetter{2, -1});
  CHECK(to_string(w) == "s1 s2^-1 s1");
  CHECK_THROWS_AS(parse_braid("t1"), ParseError);
}

TEST_CASE("left mutation of the case-iii fixture") {
  Catalog cat(kronecker_quiver(2));
  const ExceptionalSequence e{find_exceptional(cat, {0, 1}), find_exceptional(cat, {1, 2})};
  const ExceptionalSequence l = braid_step(cat, e, {1, 1});
  CHECK(dim(cat, l[0]) == DimVector{1, 0});
  CHECK(dim(cat, l[1]) == DimVector{0, 1});
  CHECK(braid_apply(cat, {}, e) == e);
  CHECK(braid_step(cat, l, {1, -1}) == e);
}

TEST_CASE("orbits") {
  Catalog cat(kronecker_quiver(2));
  const ExceptionalSequence e{find_exceptional(cat, {0, 1}), find_exceptional(cat, {1, 2})};
  CHECK(orbit_enumerate(cat, e, 0) == std::set<ExceptionalSequence>{e});
  const auto two = orbit_enumerate(cat, e, 2);
  CHECK(two.count({find_exceptional(cat, {1, 2}), find_exceptional(cat, {2, 3})}) == 1);
  CHECK(two.count({cat.simple(0), cat.simple(1)}) == 1);
  for (const auto& s : two) {
    CHECK(is_exceptional_sequence(cat, s));
    CHECK(lattice_index(cat, s) == 1);
  }

  Catalog a2(a2_quiver(3));
  const auto simples = simple_sequence(a2);
  for (const auto& s : orbit_enumerate(a2, simples, 3))
    for (ClassId c : s) CHECK(a2.at(c).dim.total() <= 2);
}

TEST_CASE("braid relations and lattice preservation on A3") {
  Catalog cat(a3_quiver(2));
  const auto e = simple_sequence(cat);
  CHECK(is_complete(cat, e));
  for (const auto& s : orbit_enumerate(cat, e, 2)) {
    CHECK(lattice_index(cat, s) == 1);
    CHECK(braid_apply(cat, parse_braid("s1 s2 s1"), s) == braid_apply(cat, parse_braid("s2 s1 s2"), s));
    CHECK(braid_apply(cat, parse_braid("s1^-1 s2^-1 s1^-1"), s) == braid_apply(cat, parse_braid("s2^-1 s1^-1 s2^-1"), s));
    for (int i : {1, 2}) {
      CHECK(braid_step(cat, braid_step(cat, s, {i, 1}), {i, -1}) == s);
      CHECK(braid_step(cat, braid_step(cat, s, {i, -1}), {i, 1}) == s);
    }
  }
}
