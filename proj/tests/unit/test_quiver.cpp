#include "hallkit/errors.hpp"
#include "hallkit/quiver.hpp"

#include <doctest.h>

using namespace hallkit;

TEST_CASE("Euler form of the bundled quivers") {
  const Quiver a2 = a2_quiver(2), k = kronecker_quiver(3), a3 = a3_quiver(2);
  CHECK(a2.euler_form(DimVector{1, 0}, DimVector{0, 1}) == -1);
  CHECK(a2.euler_form(DimVector{0, 1}, DimVector{1, 0}) == 0);
  CHECK(k.euler_form(DimVector{1, 0}, DimVector{0, 1}) == -2);
  CHECK(k.euler_form(DimVector{1, 1}, DimVector{1, 1}) == 0);
  CHECK(k.symmetric_form(DimVector{1, 2}, DimVector{2, 3}) ==
        k.euler_form(DimVector{1, 2}, DimVector{2, 3}) + k.euler_form(DimVector{2, 3}, DimVector{1, 2}));
  CHECK(a3.euler_form(DimVector{1, 1, 1}, DimVector{1, 1, 1}) == 1);
  CHECK(k.is_kronecker());
  CHECK_FALSE(a2.is_kronecker());
}

TEST_CASE("representation space dimension") {
  CHECK(kronecker_quiver(2).space_dimension(DimVector{3, 4}) == 24);
  CHECK(a3_quiver(2).space_dimension(DimVector{1, 2, 3}) == 8);
}

TEST_CASE("invalid quivers are rejected") {
  CHECK_THROWS_AS(Quiver({"a", "b"}, {{0, 1}, {1, 0}}, 2), DomainError);
  CHECK_THROWS_AS(Quiver({"a"}, {{0, 0}}, 2), DomainError);
  CHECK_THROWS_AS(Quiver({}, {}, 2), DomainError);
  CHECK_THROWS_AS(Quiver({"a"}, {}, 4), DomainError);
}

TEST_CASE("JSON files load and round-trip") {
  const Quiver k = Quiver::load(HALLKIT_DATA_DIR "/quivers/kronecker.json");
  CHECK(k.is_kronecker());
  CHECK(k.q() == 2);
  CHECK(Quiver::from_json(k.to_json()).to_json() == k.to_json());
  CHECK(Quiver::load(HALLKIT_DATA_DIR "/quivers/a3.json").rank() == 3);
  CHECK_THROWS_AS(Quiver::from_json(nlohmann::json{{"vertices", {"1"}}, {"arrows", {{{"from", "1"}, {"to", "9"}}}}}),
                  DomainError);
}

TEST_CASE("dimension vectors") {
  CHECK((DimVector{1, 2} + DimVector{2, 3}) == DimVector{3, 5});
  CHECK_THROWS((void)(DimVector{1, 0} - DimVector{0, 1}));
  CHECK(DimVector{1, 2}.fits_in(DimVector{2, 2}));
  CHECK_FALSE(DimVector{1, 3}.fits_in(DimVector{2, 2}));
}
