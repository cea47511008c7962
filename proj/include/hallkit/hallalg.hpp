#pragma once

#include "hallkit/catalog.hpp"
#include "hallkit/coeff.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hallkit {

/// Finite linear combination over an ordered key type; zero coefficients are never stored.
template <class Key>
class Sparse {
public:
  using Map = std::map<Key, Coeff>;

  Sparse() = default;
  Sparse(const Key& k, const Coeff& c) { add(k, c); }

  void add(const Key& k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const Sparse& o, const Coeff& scale) {
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Sparse& operator+=(const Sparse& o) {
    add(o, Coeff(1));
    return *this;
  }
  Sparse& operator-=(const Sparse& o) {
    add(o, Coeff(-1));
    return *this;
  }
  friend Sparse operator+(Sparse x, const Sparse& y) { return x += y; }
  friend Sparse operator-(Sparse x, const Sparse& y) { return x -= y; }
  friend Sparse operator*(const Coeff& s, const Sparse& x) {
    Sparse r;
    r.add(x, s);
    return r;
  }
  friend bool operator==(const Sparse& x, const Sparse& y) { return (x - y).is_zero(); }

private:
  Map terms_;
};

/// u_cls K_k.
struct HallBasis {
  ClassId cls = 0;
  KClass k;
  friend bool operator==(const HallBasis&, const HallBasis&) = default;
  friend auto operator<=>(const HallBasis&, const HallBasis&) = default;
};

using HallElement = Sparse<HallBasis>;
using HallTensor = Sparse<std::pair<HallBasis, HallBasis>>;
using HallTensor3 = Sparse<std::tuple<HallBasis, HallBasis, HallBasis>>;

/// One summand of the coproduct of u_lambda: coeff * u_quotient (x) u_sub.
struct CoproductTerm {
  ClassId quotient;
  ClassId sub;
  Coeff coeff;  ///< v^<quotient,sub> a_quotient a_sub / a_lambda * g
};

/// The extended Hall algebra of a catalog's category.
class HallAlgebra {
public:
  explicit HallAlgebra(Catalog& catalog) : cat_(catalog) {}

  Catalog& catalog() const { return cat_; }
  const Quiver& quiver() const { return cat_.quiver(); }
  int q() const { return cat_.q(); }
  Coeff v_pow(long e) const { return Coeff::v_power(q(), e); }
  KClass dim_of(ClassId c) const { return cat_.at(c).dim.k(); }

  HallElement u(ClassId c) const { return HallElement({c, KClass::zero(quiver().rank())}, Coeff::v_power(q(), 0)); }
  HallElement torus(const KClass& g) const { return HallElement({0, g}, Coeff::v_power(q(), 0)); }
  HallElement one() const { return u(0); }

  /// v^<alpha,beta> sum_lambda g^lambda_{alpha beta} u_lambda.
  HallElement hall_product(ClassId alpha, ClassId beta);
  HallElement mul(const HallBasis& x, const HallBasis& y);
  HallElement mul(const HallElement& x, const HallElement& y);

  /// Summands of the coproduct of u_lambda; with sub_dims set, only subobjects of those
  /// dimension vectors are listed.
  std::vector<CoproductTerm> coproduct_terms(ClassId lambda, const std::vector<DimVector>* sub_dims = nullptr);
  /// Coproduct; sign = -1 selects the torus part K_{-beta+gamma} of the minus copy.
  HallTensor comul(const HallElement& x, int sign = 1);
  HallTensor3 comul_left(const HallTensor& t);   ///< (comul x id)
  HallTensor3 comul_right(const HallTensor& t);  ///< (id x comul)

  /// Green's pairing. torus_sign is the sign of the exponent of v in front of (alpha,beta).
  Coeff pairing(const HallBasis& x, const HallBasis& y) const;
  Coeff pairing(const HallElement& x, const HallElement& y) const;
  Coeff pairing(const HallTensor& x, const HallTensor& y) const;
  int torus_sign() const { return torus_sign_; }
  void set_torus_sign(int s) { torus_sign_ = s < 0 ? -1 : 1; }

  nlohmann::json to_json(const HallElement& x) const;
  HallElement from_json(const nlohmann::json& j) const;
  nlohmann::json to_json(const HallTensor& t) const;

private:
  Catalog& cat_;
  int torus_sign_ = -1;
};

} // namespace hallkit
