#include "hallkit/dbl.hpp"

#include "hallkit/errors.hpp"
#include "hallkit/mutation.hpp"

#include <algorithm>
#include <set>

namespace hallkit {

DoubleElement DoubleAlgebra::one() const {
  return DoubleElement({0, KClass::zero(quiver().rank()), 0}, v_pow(0));
}

DoubleElement DoubleAlgebra::plus(ClassId c) const {
  return DoubleElement({0, KClass::zero(quiver().rank()), c}, v_pow(0));
}

DoubleElement DoubleAlgebra::minus(ClassId c) const {
  return DoubleElement({c, KClass::zero(quiver().rank()), 0}, v_pow(0));
}

DoubleElement DoubleAlgebra::torus(const KClass& g) const {
  if (g.size() != quiver().rank()) throw DomainError("K-class length mismatch");
  return DoubleElement({0, g, 0}, v_pow(0));
}

int DoubleAlgebra::eps(ClassId c) const {
  const KClass d = catalog().at(c).dim.k();
  return quiver().euler_form(d, d);
}

KClass DoubleAlgebra::degree(const Monomial& m) const {
  return catalog().at(m.plus).dim.k() - catalog().at(m.minus).dim.k();
}

KClass DoubleAlgebra::degree(const DoubleElement& x) const {
  if (x.is_zero()) return KClass::zero(quiver().rank());
  const KClass d = degree(x.terms().begin()->first);
  for (const auto& [m, c] : x.terms())
    if (degree(m) != d) throw DomainError("element is not homogeneous");
  return d;
}

size_t DoubleAlgebra::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

DoubleElement DoubleAlgebra::times_torus(const DoubleElement& x, const KClass& g) const {
  DoubleElement out;
  for (const auto& [m, c] : x.terms()) {
    const Coeff s = v_pow(-quiver().symmetric_form(g, catalog().at(m.plus).dim.k()));
    out.add({m.minus, m.k + g, m.plus}, c * s);
  }
  return out;
}

const DoubleElement& DoubleAlgebra::straighten(ClassId lambda, ClassId mu) {
  std::lock_guard lock(mutex_);
  if (auto it = memo_.find({lambda, mu}); it != memo_.end()) return it->second;
  DoubleElement r = compute_straighten(lambda, mu);
  return memo_.emplace(std::make_pair(lambda, mu), std::move(r)).first->second;
}

DoubleElement DoubleAlgebra::compute_straighten(ClassId lambda, ClassId mu) {
  const int r = quiver().rank();
  if (lambda == 0 || mu == 0) return DoubleElement({mu, KClass::zero(r), lambda}, v_pow(0));

  Catalog& cat = catalog();
  const DimVector ld = cat.at(lambda).dim;
  const DimVector md = cat.at(mu).dim;

  // Only pairs whose middle classes can match contribute, so the larger side
  // is expanded at the subobject dimensions the smaller side allows.
  std::vector<CoproductTerm> tl, tm;
  auto needed = [&](const std::vector<CoproductTerm>& small, const DimVector& top_small, const DimVector& top_big,
                    bool small_is_lambda) {
    std::set<DimVector> dims;
    for (const auto& t : small) {
      const DimVector sub = cat.at(t.sub).dim;
      const DimVector quo = top_small - sub;
      if (small_is_lambda) {
        dims.insert(quo);  // sub of mu equals quotient of lambda
        if (sub.fits_in(top_big)) dims.insert(top_big - sub);  // quotient of mu equals sub of lambda
      } else {
        if (sub.fits_in(top_big)) dims.insert(top_big - sub);  // quotient of lambda equals sub of mu
        dims.insert(quo);  // sub of lambda equals quotient of mu
      }
    }
    return std::vector<DimVector>(dims.begin(), dims.end());
  };
  if (ld.total() <= md.total()) {
    tl = hall_.coproduct_terms(lambda);
    const auto dims = needed(tl, ld, md, true);
    tm = hall_.coproduct_terms(mu, &dims);
  } else {
    tm = hall_.coproduct_terms(mu);
    const auto dims = needed(tm, md, ld, false);
    tl = hall_.coproduct_terms(lambda, &dims);
  }

  std::multimap<ClassId, const CoproductTerm*> mu_by_sub, mu_by_quotient;
  for (const auto& t : tm) {
    mu_by_sub.emplace(t.sub, &t);
    mu_by_quotient.emplace(t.quotient, &t);
  }

  DoubleElement out;
  for (const auto& b : tl) {
    // Terms paired through the sub of mu and the quotient of lambda.
    auto [lo, hi] = mu_by_sub.equal_range(b.quotient);
    for (auto it = lo; it != hi; ++it) {
      const CoproductTerm& a = *it->second;
      const Coeff c = a.coeff * b.coeff / Coeff(mpq_class(cat.at(b.quotient).aut_count));
      out.add({a.quotient, -cat.at(a.sub).dim.k(), b.sub}, c);
    }
    if (b.sub == 0) continue;
    // Terms paired through the quotient of mu and the sub of lambda; moved to the other side.
    auto [lo2, hi2] = mu_by_quotient.equal_range(b.sub);
    for (auto it = lo2; it != hi2; ++it) {
      const CoproductTerm& a = *it->second;
      if (cat.at(b.quotient).dim.total() >= ld.total() || cat.at(a.sub).dim.total() >= md.total())
        throw InvariantError("straightening recursion does not decrease dimension");
      const KClass bs = cat.at(b.sub).dim.k();
      const Coeff c = a.coeff * b.coeff / Coeff(mpq_class(cat.at(b.sub).aut_count)) *
                      v_pow(-quiver().symmetric_form(bs, cat.at(a.sub).dim.k()));
      const DoubleElement inner = straighten(b.quotient, a.sub);
      out.add(times_torus(inner, bs), -c);
    }
  }
  return out;
}

DoubleElement DoubleAlgebra::hall_in_copy(ClassId a, ClassId b, int sign) {
  (void)sign;  // both copies carry the same multiplication
  DoubleElement out;
  const KClass zero = KClass::zero(quiver().rank());
  if (a == 0 || b == 0) {
    const ClassId c = a == 0 ? b : a;
    out.add({sign < 0 ? c : 0, zero, sign < 0 ? 0 : c}, v_pow(0));
    return out;
  }
  const HallElement prod = hall_.hall_product(a, b);
  for (const auto& [basis, c] : prod.terms())
    out.add({sign < 0 ? basis.cls : 0, zero, sign < 0 ? 0 : basis.cls}, c);
  return out;
}

DoubleElement DoubleAlgebra::mul(const Monomial& x, const Monomial& y) {
  const DoubleElement s = straighten(x.plus, y.minus);
  DoubleElement out;
  for (const auto& [m, c] : s.terms()) {
    const Coeff tw = c * v_pow(-quiver().symmetric_form(x.k, catalog().at(m.minus).dim.k()) -
                               quiver().symmetric_form(y.k, catalog().at(m.plus).dim.k()));
    const DoubleElement left = hall_in_copy(x.minus, m.minus, -1);
    const DoubleElement right = hall_in_copy(m.plus, y.plus, 1);
    const KClass k = x.k + m.k + y.k;
    for (const auto& [lm, lc] : left.terms())
      for (const auto& [rm, rc] : right.terms()) out.add({lm.minus, k, rm.plus}, tw * lc * rc);
  }
  return out;
}

DoubleElement DoubleAlgebra::mul(const DoubleElement& x, const DoubleElement& y) {
  DoubleElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(mul(a, b), ca * cb);
  return out;
}

DoubleElement DoubleAlgebra::commutator(const DoubleElement& x, const DoubleElement& y) {
  return mul(x, y) - mul(y, x);
}

DoubleElement DoubleAlgebra::power(const DoubleElement& x, int t) {
  if (t < 0) throw DomainError("negative power");
  DoubleElement r = one();
  for (int i = 0; i < t; ++i) r = mul(r, x);
  return r;
}

DoubleElement DoubleAlgebra::divided_power(ClassId lambda, int t, int sign) {
  if (t < 0) throw DomainError("negative divided power");
  if (t == 0) return one();
  if (!catalog().is_exceptional(lambda)) throw DomainError("divided powers need an exceptional class");
  const long e = eps(lambda);
  return v_pow(e * t * (t - 1)) * u(catalog().multiple(lambda, t), sign);
}

DoubleElement DoubleAlgebra::divided_power_by_powers(ClassId lambda, int t, int sign) {
  if (!catalog().is_exceptional(lambda)) throw DomainError("divided powers need an exceptional class");
  return qfact(q(), t, eps(lambda)).inverse() * power(u(lambda, sign), t);
}

DoubleElement DoubleAlgebra::left_mutation_rhs(const ExceptionalPair& p, int sign) {
  const int s = sign > 0 ? 1 : -1;
  const int n = p.n;
  const long ea = p.eps_alpha;
  const KClass a = catalog().at(p.alpha).dim.k();
  const KClass b = catalog().at(p.beta).dim.k();
  DoubleElement sum;
  for (int j = 0; j <= n; ++j) {
    DoubleElement term;
    Coeff c(j % 2 ? -1 : 1);
    switch (p.left_case) {
      case PairCase::nonpos:
        c *= v_pow(ea * (n - j));
        term = mul(mul(divided_power(p.alpha, n - j, s), u(p.beta, s)), divided_power(p.alpha, j, s));
        break;
      case PairCase::big:
        c *= v_pow(-ea * (n - 1) * (n - j));
        term = mul(mul(divided_power(p.alpha, n - j, s), u(p.beta, -s)), divided_power(p.alpha, j, s));
        break;
      case PairCase::small:
        c *= v_pow(-ea * (n - 1) * (n - j));
        term = mul(mul(divided_power(p.alpha, n - j, -s), u(p.beta, s)), divided_power(p.alpha, j, -s));
        break;
    }
    sum.add(term, c);
  }
  switch (p.left_case) {
    case PairCase::nonpos: return sum;
    case PairCase::big: return v_pow(p.eps_beta) * mul(torus(s * b), sum);
    case PairCase::small: return mul(torus(-s * n * a), sum);
  }
  return sum;
}

DoubleElement DoubleAlgebra::right_mutation_rhs(const ExceptionalPair& p, int sign) {
  const int s = sign > 0 ? 1 : -1;
  const int m = p.m;
  const long eb = p.eps_beta;
  const KClass a = catalog().at(p.alpha).dim.k();
  const KClass b = catalog().at(p.beta).dim.k();
  DoubleElement sum;
  for (int j = 0; j <= m; ++j) {
    DoubleElement term;
    Coeff c(j % 2 ? -1 : 1);
    switch (p.right_case) {
      case PairCase::nonpos:
        c *= v_pow(eb * (m - j));
        term = mul(mul(divided_power(p.beta, j, s), u(p.alpha, s)), divided_power(p.beta, m - j, s));
        break;
      case PairCase::big:
        c *= v_pow(-eb * (m - 1) * (m - j));
        term = mul(mul(divided_power(p.beta, j, s), u(p.alpha, -s)), divided_power(p.beta, m - j, s));
        break;
      case PairCase::small:
        c *= v_pow(-eb * (m - 1) * (m - j));
        term = mul(mul(divided_power(p.beta, j, -s), u(p.alpha, s)), divided_power(p.beta, m - j, -s));
        break;
    }
    sum.add(term, c);
  }
  switch (p.right_case) {
    case PairCase::nonpos: return sum;
    case PairCase::big: return v_pow(p.eps_alpha) * mul(sum, torus(-s * a));
    case PairCase::small: return mul(sum, torus(s * m * b));
  }
  return sum;
}

std::pair<DoubleElement, DoubleElement> DoubleAlgebra::serre_sums(const ExceptionalPair& p, int sign) {
  const int s = sign > 0 ? 1 : -1;
  const bool positive = p.euler > 0;
  const int other = positive ? -s : s;
  DoubleElement first, second;
  for (int j = 0; j <= p.n + 1; ++j) {
    Coeff c(j % 2 ? -1 : 1);
    if (positive) c *= v_pow(static_cast<long>(p.eps_alpha) * p.n * j);
    first.add(mul(mul(divided_power(p.alpha, p.n + 1 - j, s), u(p.beta, other)), divided_power(p.alpha, j, s)), c);
  }
  for (int j = 0; j <= p.m + 1; ++j) {
    Coeff c(j % 2 ? -1 : 1);
    if (positive) c *= v_pow(-static_cast<long>(p.eps_beta) * p.m * j);
    second.add(mul(mul(divided_power(p.beta, p.m + 1 - j, s), u(p.alpha, other)), divided_power(p.beta, j, s)), c);
  }
  return {first, second};
}

DoubleElement DoubleAlgebra::theta1(int sign) {
  if (!quiver().is_kronecker()) throw DomainError("theta1 is defined for the Kronecker quiver only");
  DoubleElement sum;
  for (ClassId c : catalog().enumerate(DimVector{1, 1}))
    if (catalog().is_indecomposable(c)) sum += u(c, sign);
  return (v_pow(1) - v_pow(-1)) * sum;
}

nlohmann::json DoubleAlgebra::to_json(const DoubleElement& x) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back({{"minus", m.minus}, {"k", m.k.vec()}, {"plus", m.plus}, {"coeff", c.to_json()}});
  return out;
}

DoubleElement DoubleAlgebra::from_json(const nlohmann::json& j) const {
  DoubleElement out;
  try {
    for (const auto& t : j) {
      Monomial m{t.at("minus").get<int>(), KClass(t.at("k").get<std::vector<int>>()), t.at("plus").get<int>()};
      catalog().at(m.minus);
      catalog().at(m.plus);
      if (m.k.size() != quiver().rank()) throw DomainError("K-class length mismatch");
      out.add(m, Coeff::from_json(t.at("coeff"), q()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed double element: ") + e.what());
  }
  return out;
}

} // namespace hallkit
