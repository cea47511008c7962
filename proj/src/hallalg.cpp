#include "hallkit/hallalg.hpp"

#include "hallkit/errors.hpp"

#include <algorithm>

namespace hallkit {

HallElement HallAlgebra::hall_product(ClassId alpha, ClassId beta) {
  HallElement out;
  const Coeff tw = v_pow(quiver().euler_form(dim_of(alpha), dim_of(beta)));
  const KClass zero = KClass::zero(quiver().rank());
  for (const auto& [lam, g] : cat_.product_terms(alpha, beta)) out.add({lam, zero}, tw * Coeff(mpq_class(g)));
  return out;
}

HallElement HallAlgebra::mul(const HallBasis& x, const HallBasis& y) {
  const Coeff tw = v_pow(quiver().symmetric_form(x.k, dim_of(y.cls)));
  const HallElement p = hall_product(x.cls, y.cls);
  HallElement out;
  for (const auto& [b, c] : p.terms()) out.add({b.cls, x.k + y.k}, c * tw);
  return out;
}

HallElement HallAlgebra::mul(const HallElement& x, const HallElement& y) {
  HallElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(mul(a, b), ca * cb);
  return out;
}

std::vector<CoproductTerm> HallAlgebra::coproduct_terms(ClassId lambda, const std::vector<DimVector>* sub_dims) {
  std::vector<Filtration> rows;
  if (sub_dims) {
    for (const auto& d : *sub_dims) {
      if (d.size() != quiver().rank() || !d.fits_in(cat_.at(lambda).dim)) continue;
      const auto& part = cat_.filtrations(lambda, d);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else {
    rows = cat_.filtration_table(lambda);
  }
  std::vector<CoproductTerm> out;
  out.reserve(rows.size());
  const mpz_class& al = cat_.at(lambda).aut_count;
  for (const auto& f : rows) {
    const mpq_class scale(f.count * cat_.at(f.quotient).aut_count * cat_.at(f.sub).aut_count, al);
    const Coeff c = v_pow(quiver().euler_form(dim_of(f.quotient), dim_of(f.sub))) * Coeff(scale);
    out.push_back({f.quotient, f.sub, c});
  }
  return out;
}

HallTensor HallAlgebra::comul(const HallElement& x, int sign) {
  HallTensor out;
  for (const auto& [b, c] : x.terms())
    for (const auto& t : coproduct_terms(b.cls)) {
      const KClass left_k = sign * dim_of(t.sub) + b.k;
      out.add({{t.quotient, left_k}, {t.sub, b.k}}, c * t.coeff);
    }
  return out;
}

HallTensor3 HallAlgebra::comul_left(const HallTensor& t) {
  HallTensor3 out;
  for (const auto& [k, c] : t.terms()) {
    const HallTensor d = comul(HallElement(k.first, Coeff(1)));
    for (const auto& [kk, cc] : d.terms()) out.add({kk.first, kk.second, k.second}, c * cc);
  }
  return out;
}

HallTensor3 HallAlgebra::comul_right(const HallTensor& t) {
  HallTensor3 out;
  for (const auto& [k, c] : t.terms()) {
    const HallTensor d = comul(HallElement(k.second, Coeff(1)));
    for (const auto& [kk, cc] : d.terms()) out.add({k.first, kk.first, kk.second}, c * cc);
  }
  return out;
}

Coeff HallAlgebra::pairing(const HallBasis& x, const HallBasis& y) const {
  if (x.cls != y.cls) return Coeff(0);
  return v_pow(torus_sign_ * quiver().symmetric_form(x.k, y.k)) / Coeff(mpq_class(cat_.at(x.cls).aut_count));
}

Coeff HallAlgebra::pairing(const HallElement& x, const HallElement& y) const {
  Coeff s(0);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (a.cls == b.cls) s += ca * cb * pairing(a, b);
  return s;
}

Coeff HallAlgebra::pairing(const HallTensor& x, const HallTensor& y) const {
  Coeff s(0);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (a.first.cls == b.first.cls && a.second.cls == b.second.cls)
        s += ca * cb * pairing(a.first, b.first) * pairing(a.second, b.second);
  return s;
}

nlohmann::json HallAlgebra::to_json(const HallElement& x) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [b, c] : x.terms()) out.push_back({{"class", b.cls}, {"k", b.k.vec()}, {"coeff", c.to_json()}});
  return out;
}

HallElement HallAlgebra::from_json(const nlohmann::json& j) const {
  HallElement out;
  try {
    for (const auto& t : j) {
      const ClassId cls = t.at("class").get<int>();
      cat_.at(cls);
      KClass k(t.at("k").get<std::vector<int>>());
      if (k.size() != quiver().rank()) throw DomainError("K-class length mismatch");
      out.add({cls, k}, Coeff::from_json(t.at("coeff"), q()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Hall element: ") + e.what());
  }
  return out;
}

nlohmann::json HallAlgebra::to_json(const HallTensor& t) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : t.terms())
    out.push_back({{"left", {{"class", k.first.cls}, {"k", k.first.k.vec()}}},
                   {"right", {{"class", k.second.cls}, {"k", k.second.k.vec()}}},
                   {"coeff", c.to_json()}});
  return out;
}

} // namespace hallkit
