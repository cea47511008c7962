#pragma once

#include "hallkit/quiver.hpp"
#include "hallkit/representation.hpp"

#include <gmpxx.h>

#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hallkit {

using ClassId = int;

/// Enumeration bounds; every one of them is reported by name when exceeded.
struct Caps {
  int enum_total_dim = 7;                      ///< enumerate_isoclasses: total dimension
  unsigned long long rep_space = 1ULL << 24;   ///< q^(representation space dimension), also Ext enumeration
  unsigned long long end_search = 1ULL << 20;  ///< |Hom| for exhaustive scans
  int class_total_dim = 16;                    ///< total dimension of any class entering Hall computations
};

struct IsoClass {
  ClassId id = 0;
  DimVector dim;
  Representation canon;
  /// Sorted multiset of indecomposable class ids; {id} for an indecomposable class.
  std::vector<ClassId> decomposition;
  int end_dim = 0;
  /// Degree over F_q of the residue field of End; 0 unless indecomposable.
  int residue_degree = 0;
  mpz_class aut_count;

  bool indecomposable() const { return decomposition.size() == 1; }
};

/// One row of a filtration table: count = g^lambda_{quotient, sub}.
struct Filtration {
  ClassId quotient;
  ClassId sub;
  mpz_class count;
};

/// Interned registry of isomorphism classes for a fixed quiver and field.
///
/// Classes are identified through a Krull-Schmidt decomposition: End(X) is searched for an
/// element whose minimal polynomial has two coprime factors (which splits X), and locality of
/// End is certified through the trace form when no such element exists.
class Catalog {
public:
  explicit Catalog(Quiver quiver, Caps caps = {}, uint64_t seed = 1);

  const Quiver& quiver() const { return quiver_; }
  int q() const { return quiver_.q(); }
  const Caps& caps() const { return caps_; }

  ClassId identify(const Representation& X);
  const IsoClass& at(ClassId id) const;
  size_t size() const;
  ClassId zero_class() const { return 0; }
  ClassId simple(int vertex);
  ClassId direct_sum(ClassId a, ClassId b);
  ClassId multiple(ClassId a, int t);

  /// One class per GL-orbit in the representation space of d, in order of first
  /// appearance when the space is scanned lexicographically.
  std::vector<ClassId> enumerate(const DimVector& d);
  /// Same scan, also returning the orbit size measured by breadth-first search.
  std::vector<std::pair<ClassId, unsigned long>> enumerate_with_orbits(const DimVector& d);

  int hom_dim(ClassId x, ClassId y);
  std::vector<Morphism> hom_space(ClassId x, ClassId y);
  int ext_dim(ClassId x, ClassId y);
  bool is_indecomposable(ClassId x) const { return at(x).indecomposable(); }
  bool is_exceptional(ClassId x);
  /// Number of units of End(X) by exhaustive scan; an oracle for aut_count.
  mpz_class count_automorphisms(ClassId x);

  /// g^lambda_{alpha beta}: subobjects of V_lambda isomorphic to V_beta with quotient V_alpha.
  mpz_class hall_number(ClassId lambda, ClassId alpha, ClassId beta);
  /// Pairs (i, p) forming a short exact sequence V_beta -> V_lambda -> V_alpha, counted directly.
  mpz_class exact_pair_count(ClassId lambda, ClassId alpha, ClassId beta);
  /// Filtrations of V_lambda whose subobject has dimension vector sub_dim.
  const std::vector<Filtration>& filtrations(ClassId lambda, const DimVector& sub_dim);
  /// Number of stable subspace tuples of dimension sub_dim in V_lambda.
  unsigned long long stable_subspace_count(ClassId lambda, const DimVector& sub_dim);
  std::vector<Filtration> filtration_table(ClassId lambda);
  /// Terms (lambda, g^lambda_{alpha beta}) with nonzero Hall number, computed from Ext^1(alpha, beta).
  const std::vector<std::pair<ClassId, mpz_class>>& product_terms(ClassId alpha, ClassId beta);

  nlohmann::json dump() const;
  nlohmann::json class_json(ClassId id) const;

private:
  struct Piece {
    Representation rep;
    int end_dim;
    int residue_degree;
  };
  void decompose(const Representation& X, std::vector<Piece>& out);
  ClassId intern_indecomposable(const Piece& p);
  ClassId intern_multiset(std::vector<ClassId> parts, const Representation* rep, int end_dim);
  bool isomorphic_indecomposables(const Representation& a, const Representation& b, int end_dim);
  mpz_class automorphism_count(const std::vector<ClassId>& parts, int end_dim) const;
  void check_class_dim(const DimVector& d) const;
  std::vector<Filtration> compute_filtrations(ClassId lambda, const DimVector& sub_dim, unsigned long long& count);

  Quiver quiver_;
  Caps caps_;
  uint64_t seed_;
  mutable std::recursive_mutex mutex_;
  std::deque<IsoClass> classes_;
  std::unordered_map<std::string, ClassId> memo_;
  std::map<std::vector<ClassId>, ClassId> by_parts_;
  std::map<DimVector, std::vector<ClassId>> indecomposables_by_dim_;
  std::map<std::pair<ClassId, ClassId>, int> hom_cache_;
  std::map<std::pair<ClassId, DimVector>, std::pair<std::vector<Filtration>, unsigned long long>> filtration_cache_;
  std::map<std::pair<ClassId, ClassId>, std::vector<std::pair<ClassId, mpz_class>>> product_cache_;
};

/// |GL_n(F_Q)|.
mpz_class general_linear_order(unsigned long Q, int n);

} // namespace hallkit
