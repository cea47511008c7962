#pragma once

#include "hallkit/dbl.hpp"
#include "hallkit/mutation.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hallkit {

/// Catalog, Hall algebra and double of one quiver, wired together.
class Engine {
public:
  explicit Engine(Quiver quiver, Caps caps = {}, uint64_t seed = 1)
      : cat_(std::move(quiver), caps, seed), hall_(cat_), dbl_(hall_) {}
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  Catalog& catalog() { return cat_; }
  HallAlgebra& hall() { return hall_; }
  DoubleAlgebra& dbl() { return dbl_; }
  const Quiver& quiver() const { return cat_.quiver(); }
  std::string describe() const;

private:
  Catalog cat_;
  HallAlgebra hall_;
  DoubleAlgebra dbl_;
};

struct CheckReport {
  std::string name;
  std::string instance;
  bool pass = true;
  nlohmann::json discrepancy = nlohmann::json::array();  ///< empty array on pass
  double wall_time_ms = 0;
  /// Number of identities compared.
  long checked = 0;

  nlohmann::json to_json() const;
};

/// Runs body, timing it; a thrown Error becomes a failing report carrying the message.
CheckReport run_check(const std::string& name, const std::string& instance,
                      const std::function<void(CheckReport&)>& body);

/// Records x as the discrepancy unless it is zero.
void expect_zero(CheckReport& r, const DoubleElement& x, const DoubleAlgebra& D, const std::string& label);

/// Alternating q-binomial sums for 1 <= l <= max_l, 1 <= d <= max_d.
CheckReport check_alternating_sums(int q, int max_l, int max_d);

/// Hall associativity (scalar and algebra), coassociativity, the Hopf property on K-free
/// triples, the extension-count oracle and torus commutation, over classes of total dimension <= dim_cap.
CheckReport check_green(Engine& e, int dim_cap);

/// Left mutation formula for the pair: the right-hand side equals u^{sign}_gamma.
CheckReport check_left_formula(Engine& e, ClassId alpha, ClassId beta, int sign);
/// Right mutation formula: the right-hand side equals u^{sign}_lambda.
CheckReport check_right_formula(Engine& e, ClassId alpha, ClassId beta, int sign);
/// Both alternating Serre-type sums vanish.
CheckReport check_serre(Engine& e, ClassId alpha, ClassId beta, int sign);

/// Kronecker class (i, i+1), the image of the line bundle of degree i.
ClassId line_bundle(Engine& e, int i);
/// Regular classes of dimension (1,1) number q + 1.
CheckReport check_degree_one_count(Engine& e);
/// Projective-line left formula for the pair of degrees (i, i+1), i >= 1, both signs,
/// with the commutator identities behind it and agreement with the generic formula.
CheckReport check_line_left(Engine& e, int i);
/// Projective-line right formula for degrees (i, i+1), i >= 0.
CheckReport check_line_right(Engine& e, int i);

/// Walks the braid orbit of seq to the given depth; every edge is checked by the mutation
/// formulas in both directions and both signs, and R_i L_i = L_i R_i = id is checked on every member.
CheckReport check_orbit_formulas(Engine& e, const ExceptionalSequence& seq, int depth);
/// s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1} (and the inverse word) on every member of the orbit.
CheckReport check_braid_relations(Engine& e, const ExceptionalSequence& seq, int depth);

/// Straightening has leading coefficient 1 and strictly smaller remaining terms, for all pairs of
/// classes of total dimension <= dim_cap.
CheckReport check_straighten_leading(Engine& e, int dim_cap);
/// (xy)z = x(yz) on random monomial triples (seeded) over classes of total dimension <= dim_cap.
CheckReport check_double_associativity(Engine& e, int dim_cap, int triples, uint64_t seed);
/// Closed-form divided powers equal powers over quantum factorials, t <= max_t.
CheckReport check_divided_powers(Engine& e, int dim_cap, int max_t);

/// A titled batch of checks on the bundled fixtures.
struct SuiteGroup {
  std::string key;    ///< short selector such as "sums" or "orbits"
  std::string title;
  std::function<std::vector<CheckReport>(const std::function<void(const CheckReport&)>&)> run;
};

/// The default suite, in a fixed order.
std::vector<SuiteGroup> default_suite();

} // namespace hallkit
