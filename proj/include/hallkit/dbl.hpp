#pragma once

#include "hallkit/hallalg.hpp"

#include <map>
#include <mutex>

namespace hallkit {

struct ExceptionalPair;

/// u^-_minus K_k u^+_plus.
struct Monomial {
  ClassId minus = 0;
  KClass k;
  ClassId plus = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using DoubleElement = Sparse<Monomial>;

/// The reduced Drinfeld double in the normal order minus * torus * plus.
class DoubleAlgebra {
public:
  explicit DoubleAlgebra(HallAlgebra& hall) : hall_(hall) {}

  HallAlgebra& hall() const { return hall_; }
  Catalog& catalog() const { return hall_.catalog(); }
  const Quiver& quiver() const { return hall_.quiver(); }
  int q() const { return hall_.q(); }
  Coeff v_pow(long e) const { return hall_.v_pow(e); }

  DoubleElement one() const;
  DoubleElement plus(ClassId c) const;
  DoubleElement minus(ClassId c) const;
  /// u^+ for sign > 0, u^- otherwise.
  DoubleElement u(ClassId c, int sign) const { return sign > 0 ? plus(c) : minus(c); }
  DoubleElement torus(const KClass& g) const;
  DoubleElement scalar(const Coeff& c) const { return c * one(); }

  /// Normal form of u^+_lambda u^-_mu.
  const DoubleElement& straighten(ClassId lambda, ClassId mu);
  DoubleElement mul(const Monomial& x, const Monomial& y);
  DoubleElement mul(const DoubleElement& x, const DoubleElement& y);
  DoubleElement commutator(const DoubleElement& x, const DoubleElement& y);
  /// x^t by repeated multiplication.
  DoubleElement power(const DoubleElement& x, int t);

  /// v^{eps t(t-1)} u^{sign}_{t lambda} for an exceptional class.
  DoubleElement divided_power(ClassId lambda, int t, int sign);
  /// (u^{sign}_lambda)^t / [t]!_eps, computed by multiplication.
  DoubleElement divided_power_by_powers(ClassId lambda, int t, int sign);

  /// Right-hand side of the left mutation formula of the pair; sign picks the copy of the result.
  DoubleElement left_mutation_rhs(const ExceptionalPair& p, int sign);
  DoubleElement right_mutation_rhs(const ExceptionalPair& p, int sign);
  /// The two alternating sums that vanish for an exceptional pair (first in alpha, then in beta).
  std::pair<DoubleElement, DoubleElement> serre_sums(const ExceptionalPair& p, int sign);

  /// (v - v^-1) times the sum of u^{sign} over the regular classes of dimension (1,1); Kronecker only.
  DoubleElement theta1(int sign);

  /// K(A)-degree plus - minus of a monomial.
  KClass degree(const Monomial& m) const;
  /// Common degree of all terms; DomainError when the element is not homogeneous.
  KClass degree(const DoubleElement& x) const;

  nlohmann::json to_json(const DoubleElement& x) const;
  DoubleElement from_json(const nlohmann::json& j) const;

  size_t memo_size() const;

private:
  DoubleElement compute_straighten(ClassId lambda, ClassId mu);
  DoubleElement times_torus(const DoubleElement& x, const KClass& g) const;
  DoubleElement hall_in_copy(ClassId a, ClassId b, int sign);
  int eps(ClassId c) const;

  HallAlgebra& hall_;
  mutable std::recursive_mutex mutex_;
  std::map<std::pair<ClassId, ClassId>, DoubleElement> memo_;
};

} // namespace hallkit
