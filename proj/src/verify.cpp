#include "hallkit/verify.hpp"

#include "hallkit/errors.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace hallkit {

namespace {

std::string sign_name(int s) { return s > 0 ? "+" : "-"; }

std::string pair_name(Catalog& cat, ClassId a, ClassId b) {
  return cat.at(a).dim.to_string() + "," + cat.at(b).dim.to_string();
}

std::string sequence_name(Catalog& cat, const ExceptionalSequence& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + cat.at(s[i]).dim.to_string();
  return out + ")";
}

void fail(CheckReport& r, nlohmann::json what) {
  if (r.pass) r.discrepancy = std::move(what);
  r.pass = false;
}

void expect_equal(CheckReport& r, const Coeff& x, const Coeff& y, const std::string& label) {
  ++r.checked;
  if (!(x == y)) fail(r, {{"label", label}, {"difference", (x - y).to_json()}});
}

template <class Key>
void expect_same(CheckReport& r, const Sparse<Key>& x, const Sparse<Key>& y, const std::string& label,
                 const std::function<nlohmann::json(const Sparse<Key>&)>& show) {
  ++r.checked;
  if (!(x == y)) fail(r, {{"label", label}, {"difference", show(x - y)}});
}

/// Nonzero classes of every dimension vector with total at most cap.
std::map<DimVector, std::vector<ClassId>> classes_up_to(Catalog& cat, int cap) {
  std::map<DimVector, std::vector<ClassId>> out;
  const int r = cat.quiver().rank();
  std::vector<int> cur(static_cast<size_t>(r), 0);
  for (;;) {
    const DimVector d(cur);
    if (!d.is_zero() && d.total() <= cap) out[d] = cat.enumerate(d);
    size_t i = 0;
    while (i < cur.size() && ++cur[i] > cap) cur[i++] = 0;
    if (i == cur.size()) break;
  }
  return out;
}

std::vector<ClassId> flatten(const std::map<DimVector, std::vector<ClassId>>& m) {
  std::vector<ClassId> out;
  for (const auto& [d, v] : m) out.insert(out.end(), v.begin(), v.end());
  return out;
}

KClass unit(int r, int i, int s = 1) {
  KClass k = KClass::zero(r);
  k[i] = s;
  return k;
}

} // namespace

std::string Engine::describe() const {
  const Quiver& Q = quiver();
  std::ostringstream os;
  if (Q.is_kronecker()) {
    os << "Kronecker";
  } else {
    os << "quiver[";
    for (size_t i = 0; i < Q.arrows().size(); ++i)
      os << (i ? " " : "") << Q.vertices()[static_cast<size_t>(Q.arrows()[i].source)] << "->"
         << Q.vertices()[static_cast<size_t>(Q.arrows()[i].target)];
    os << "]";
  }
  os << " q=" << Q.q();
  return os.str();
}

nlohmann::json CheckReport::to_json() const {
  return {{"name", name},   {"instance", instance},         {"pass", pass},
          {"checked", checked}, {"discrepancy", discrepancy}, {"wall_time_ms", wall_time_ms}};
}

CheckReport run_check(const std::string& name, const std::string& instance,
                      const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.name = name;
  r.instance = instance;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    fail(r, {{"error", e.what()}});
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void expect_zero(CheckReport& r, const DoubleElement& x, const DoubleAlgebra& D, const std::string& label) {
  ++r.checked;
  if (!x.is_zero()) fail(r, {{"label", label}, {"element", D.to_json(x)}});
}

CheckReport check_alternating_sums(int q, int max_l, int max_d) {
  return run_check("alternating q-binomial sums", "q=" + std::to_string(q), [&](CheckReport& r) {
    for (int d = 1; d <= max_d; ++d)
      for (int l = 1; l <= max_l; ++l) {
        const std::string at = "l=" + std::to_string(l) + " d=" + std::to_string(d);
        expect_equal(r, alternating_binomial_sum(q, l, d), Coeff(0), "sum " + at);
        expect_equal(r, qbar(q, l, d), Coeff::v_power(q, static_cast<long>(d) * (l - 1)) * qbracket(q, l, d),
                     "|l] " + at);
        expect_equal(r, qbarfact(q, l, d),
                     Coeff::v_power(q, static_cast<long>(d) * l * (l - 1) / 2) * qfact(q, l, d), "|l]! " + at);
        for (int i = 0; i <= l; ++i)
          expect_equal(r, qbarbinom(q, l, i, d),
                       Coeff::v_power(q, static_cast<long>(d) * i * (l - i)) * qbinom(q, l, i, d),
                       "binomial " + at + " i=" + std::to_string(i));
      }
  });
}

CheckReport check_green(Engine& e, int dim_cap) {
  return run_check("Green structure", e.describe() + " total dim <= " + std::to_string(dim_cap), [&](CheckReport& r) {
    Catalog& cat = e.catalog();
    HallAlgebra& H = e.hall();
    const int rank = e.quiver().rank();
    const auto by_dim = classes_up_to(cat, dim_cap);
    const auto all = flatten(by_dim);
    auto dim = [&](ClassId c) { return cat.at(c).dim; };
    auto classes_of = [&](const DimVector& d) -> const std::vector<ClassId>& {
      static const std::vector<ClassId> none;
      auto it = by_dim.find(d);
      return it == by_dim.end() ? none : it->second;
    };
    auto show_h = [&](const HallElement& x) { return H.to_json(x); };
    auto show_t = [&](const HallTensor& x) { return H.to_json(x); };
    auto show_t3 = [&](const HallTensor3& x) { return nlohmann::json(static_cast<long>(x.size())); };

    // Extension counts against subobject counts, and the exact-pair oracle.
    for (ClassId a : all)
      for (ClassId b : all) {
        const DimVector s = dim(a) + dim(b);
        if (s.total() > dim_cap) continue;
        std::map<ClassId, mpz_class> from_ext;
        for (const auto& [lam, g] : cat.product_terms(a, b)) from_ext[lam] = g;
        for (ClassId lam : classes_of(s)) {
          const mpz_class g = cat.hall_number(lam, a, b);
          const mpz_class ge = from_ext.count(lam) ? from_ext[lam] : mpz_class(0);
          ++r.checked;
          if (g != ge)
            fail(r, {{"label", "Hall number by subobjects vs extensions"}, {"triple", {lam, a, b}},
                     {"subobjects", g.get_str()}, {"extensions", ge.get_str()}});
          if (g == 0) continue;
          ++r.checked;
          const mpz_class pairs = cat.exact_pair_count(lam, a, b);
          if (pairs != g * cat.at(a).aut_count * cat.at(b).aut_count)
            fail(r, {{"label", "exact pair count"}, {"triple", {lam, a, b}}, {"pairs", pairs.get_str()}});
        }
      }

    // Associativity of Hall numbers and of the product, with and without torus parts.
    for (ClassId a : all)
      for (ClassId b : all)
        for (ClassId c : all) {
          const DimVector ab = dim(a) + dim(b), bc = dim(b) + dim(c), abc = ab + dim(c);
          if (abc.total() > dim_cap) continue;
          for (ClassId nu : classes_of(abc)) {
            mpz_class lhs = 0, rhs = 0;
            for (ClassId m : classes_of(ab)) lhs += cat.hall_number(m, a, b) * cat.hall_number(nu, m, c);
            for (ClassId m : classes_of(bc)) rhs += cat.hall_number(nu, a, m) * cat.hall_number(m, b, c);
            ++r.checked;
            if (lhs != rhs) fail(r, {{"label", "Hall number associativity"}, {"triple", {a, b, c}}, {"class", nu}});
          }
          const KClass z = KClass::zero(rank);
          const HallBasis xa{a, z}, xb{b, z}, xc{c, z};
          expect_same<HallBasis>(r, H.mul(H.mul(HallElement(xa, Coeff(1)), HallElement(xb, Coeff(1))), HallElement(xc, Coeff(1))),
                                 H.mul(HallElement(xa, Coeff(1)), H.mul(HallElement(xb, Coeff(1)), HallElement(xc, Coeff(1)))),
                                 "associativity", show_h);
          const HallElement ka({a, unit(rank, 0)}, Coeff(1)), kb({b, unit(rank, rank - 1, -1)}, Coeff(1)),
              kc({c, unit(rank, 0) + unit(rank, rank - 1)}, Coeff(1));
          expect_same<HallBasis>(r, H.mul(H.mul(ka, kb), kc), H.mul(ka, H.mul(kb, kc)), "associativity with torus", show_h);
        }

    // Coassociativity.
    for (ClassId c : all)
      for (const KClass& k : {KClass::zero(rank), unit(rank, 0)}) {
        const HallTensor d = H.comul(HallElement({c, k}, Coeff(1)));
        expect_same<std::tuple<HallBasis, HallBasis, HallBasis>>(r, H.comul_left(d), H.comul_right(d),
                                                                 "coassociativity", show_t3);
      }

    // Hopf property on torus-free basis elements.
    for (ClassId a : all)
      for (ClassId b : all) {
        const DimVector ab = dim(a) + dim(b);
        if (ab.total() > dim_cap) continue;
        const KClass z = KClass::zero(rank);
        const HallElement prod = H.mul(HallBasis{a, z}, HallBasis{b, z});
        const HallTensor split({{a, z}, {b, z}}, Coeff(1));
        for (ClassId c : classes_of(ab)) {
          const HallElement uc({c, z}, Coeff(1));
          expect_equal(r, H.pairing(prod, uc), H.pairing(split, H.comul(uc)),
                       "Hopf pairing " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        }
      }

    // Torus commutation.
    for (ClassId c : all)
      for (int i = 0; i < rank; ++i) {
        const KClass g = unit(rank, i);
        const HallElement lhs = H.mul(H.mul(H.torus(g), H.u(c)), H.torus(-g));
        expect_same<HallBasis>(r, lhs, H.v_pow(e.quiver().symmetric_form(g, dim(c).k())) * H.u(c),
                               "torus commutation", show_h);
      }
    (void)show_t;
  });
}

CheckReport check_left_formula(Engine& e, ClassId alpha, ClassId beta, int sign) {
  Catalog& cat = e.catalog();
  return run_check("left mutation formula", e.describe() + " pair " + pair_name(cat, alpha, beta) + " sign " + sign_name(sign),
                   [&](CheckReport& r) {
                     const ExceptionalPair p = classify_pair(cat, alpha, beta);
                     const ClassId gamma = left_mutation(cat, alpha, beta);
                     r.instance += " case " + roman(p.left_case) + " target " + cat.at(gamma).dim.to_string();
                     DoubleAlgebra& D = e.dbl();
                     expect_zero(r, D.left_mutation_rhs(p, sign) - D.u(gamma, sign), D, "rhs - u_gamma");
                   });
}

CheckReport check_right_formula(Engine& e, ClassId alpha, ClassId beta, int sign) {
  Catalog& cat = e.catalog();
  return run_check("right mutation formula", e.describe() + " pair " + pair_name(cat, alpha, beta) + " sign " + sign_name(sign),
                   [&](CheckReport& r) {
                     const ExceptionalPair p = classify_pair(cat, alpha, beta);
                     const ClassId lambda = right_mutation(cat, alpha, beta);
                     r.instance += " case " + roman(p.right_case) + " target " + cat.at(lambda).dim.to_string();
                     DoubleAlgebra& D = e.dbl();
                     expect_zero(r, D.right_mutation_rhs(p, sign) - D.u(lambda, sign), D, "rhs - u_lambda");
                   });
}

CheckReport check_serre(Engine& e, ClassId alpha, ClassId beta, int sign) {
  Catalog& cat = e.catalog();
  return run_check("Serre-type relations", e.describe() + " pair " + pair_name(cat, alpha, beta) + " sign " + sign_name(sign),
                   [&](CheckReport& r) {
                     const ExceptionalPair p = classify_pair(cat, alpha, beta);
                     r.instance += p.euler > 0 ? " (positive form)" : " (nonpositive form)";
                     DoubleAlgebra& D = e.dbl();
                     const auto [first, second] = D.serre_sums(p, sign);
                     expect_zero(r, first, D, "sum in alpha");
                     expect_zero(r, second, D, "sum in beta");
                   });
}

ClassId line_bundle(Engine& e, int i) {
  if (!e.quiver().is_kronecker()) throw DomainError("line bundles live on the Kronecker quiver");
  if (i < 0) throw DomainError("negative degrees are not modules");
  return find_exceptional(e.catalog(), DimVector{i, i + 1});
}

CheckReport check_degree_one_count(Engine& e) {
  return run_check("regular classes of dimension (1,1)", e.describe(), [&](CheckReport& r) {
    Catalog& cat = e.catalog();
    long n = 0;
    for (ClassId c : cat.enumerate(DimVector{1, 1}))
      if (cat.is_indecomposable(c)) ++n;
    ++r.checked;
    if (n != cat.q() + 1) fail(r, {{"label", "count"}, {"found", n}, {"expected", cat.q() + 1}});
  });
}

CheckReport check_line_left(Engine& e, int i) {
  return run_check("projective line left formula", e.describe() + " i=" + std::to_string(i), [&](CheckReport& r) {
    if (i < 1) throw DomainError("the left formula needs i >= 1");
    DoubleAlgebra& D = e.dbl();
    Catalog& cat = e.catalog();
    const ClassId prev = line_bundle(e, i - 1), cur = line_bundle(e, i), next = line_bundle(e, i + 1);
    const KClass pn = cat.at(next).dim.k(), pc = cat.at(cur).dim.k(), delta{1, 1};
    const ExceptionalPair p = classify_pair(cat, cur, next);
    if (p.left_case != PairCase::big || left_mutation(cat, cur, next) != prev)
      fail(r, {{"label", "left mutation of the pair is not the previous line bundle"}});
    for (int s : {1, -1}) {
      DoubleElement sum;
      for (int j = 0; j <= 2; ++j)
        sum.add(D.mul(D.mul(D.divided_power(cur, 2 - j, s), D.u(next, -s)), D.divided_power(cur, j, s)),
                Coeff(j % 2 ? -1 : 1) * D.v_pow(j - 1));
      const DoubleElement rhs = D.mul(D.torus(s * pn), sum);
      expect_zero(r, rhs - D.u(prev, s), D, "display " + sign_name(s));
      expect_zero(r, rhs - D.left_mutation_rhs(p, s), D, "generic formula " + sign_name(s));
    }
    const Coeff qq(D.q());
    const DoubleElement theta = D.theta1(-1);
    const DoubleElement comm = D.commutator(D.plus(cur), D.minus(next));
    expect_zero(r, (qq - Coeff(1)) * D.mul(comm, D.torus(pc)) - theta, D, "theta from commutator");
    const DoubleElement back = (qq - qq.inverse()).inverse() * D.mul(D.torus(delta), D.commutator(D.plus(cur), theta));
    expect_zero(r, back - D.plus(prev), D, "previous bundle from theta");
  });
}

CheckReport check_line_right(Engine& e, int i) {
  return run_check("projective line right formula", e.describe() + " i=" + std::to_string(i), [&](CheckReport& r) {
    if (i < 0) throw DomainError("the right formula needs i >= 0");
    DoubleAlgebra& D = e.dbl();
    Catalog& cat = e.catalog();
    const ClassId cur = line_bundle(e, i), next = line_bundle(e, i + 1), after = line_bundle(e, i + 2);
    const KClass pc = cat.at(cur).dim.k();
    const ExceptionalPair p = classify_pair(cat, cur, next);
    if (p.right_case != PairCase::big || right_mutation(cat, cur, next) != after)
      fail(r, {{"label", "right mutation of the pair is not the next line bundle"}});
    for (int s : {1, -1}) {
      DoubleElement sum;
      for (int j = 0; j <= 2; ++j)
        sum.add(D.mul(D.mul(D.divided_power(next, j, s), D.u(cur, -s)), D.divided_power(next, 2 - j, s)),
                Coeff(j % 2 ? -1 : 1) * D.v_pow(j - 1));
      const DoubleElement rhs = D.mul(sum, D.torus(-s * pc));
      expect_zero(r, rhs - D.u(after, s), D, "display " + sign_name(s));
      expect_zero(r, rhs - D.right_mutation_rhs(p, s), D, "generic formula " + sign_name(s));
    }
    const Coeff qq(D.q());
    const DoubleElement theta = D.theta1(1);
    const DoubleElement comm = D.commutator(D.minus(cur), D.plus(next));
    expect_zero(r, (qq - Coeff(1)) * D.mul(comm, D.torus(-pc)) - theta, D, "theta from commutator");
    const Coeff scale = ((Coeff(1) - qq.inverse()) * (Coeff(1) + qq)).inverse();
    expect_zero(r, scale * D.commutator(theta, D.plus(next)) - D.plus(after), D, "next bundle from theta");
  });
}

CheckReport check_orbit_formulas(Engine& e, const ExceptionalSequence& seq, int depth) {
  Catalog& cat = e.catalog();
  return run_check("mutation formulas along the braid orbit",
                   e.describe() + " from " + sequence_name(cat, seq) + " depth " + std::to_string(depth),
                   [&](CheckReport& r) {
                     DoubleAlgebra& D = e.dbl();
                     std::set<std::tuple<ClassId, ClassId, int>> done;
                     auto left_edge = [&](ClassId a, ClassId b, ClassId target) {
                       if (!done.insert({a, b, 1}).second) return;
                       const ExceptionalPair p = classify_pair(cat, a, b);
                       for (int s : {1, -1})
                         expect_zero(r, D.left_mutation_rhs(p, s) - D.u(target, s), D,
                                     "left " + pair_name(cat, a, b) + " " + sign_name(s));
                     };
                     auto right_edge = [&](ClassId a, ClassId b, ClassId target) {
                       if (!done.insert({a, b, -1}).second) return;
                       const ExceptionalPair p = classify_pair(cat, a, b);
                       for (int s : {1, -1})
                         expect_zero(r, D.right_mutation_rhs(p, s) - D.u(target, s), D,
                                     "right " + pair_name(cat, a, b) + " " + sign_name(s));
                     };
                     std::set<ExceptionalSequence> seen{seq};
                     std::vector<ExceptionalSequence> frontier{seq};
                     for (int level = 0; level < depth; ++level) {
                       std::vector<ExceptionalSequence> next;
                       for (const auto& s : frontier)
                         for (int i = 1; i < static_cast<int>(s.size()); ++i) {
                           const size_t k = static_cast<size_t>(i - 1);
                           const ExceptionalSequence l = braid_step(cat, s, {i, 1});
                           const ExceptionalSequence rr = braid_step(cat, s, {i, -1});
                           left_edge(s[k], s[k + 1], l[k]);
                           right_edge(l[k], l[k + 1], s[k + 1]);
                           right_edge(s[k], s[k + 1], rr[k + 1]);
                           left_edge(rr[k], rr[k + 1], s[k]);
                           ++r.checked;
                           if (braid_step(cat, l, {i, -1}) != s || braid_step(cat, rr, {i, 1}) != s)
                             fail(r, {{"label", "left and right mutation are not inverse"},
                                      {"sequence", sequence_json(cat, s)}, {"index", i}});
                           for (const auto& t : {l, rr})
                             if (seen.insert(t).second) next.push_back(t);
                         }
                       frontier = std::move(next);
                     }
                     r.instance += ", " + std::to_string(seen.size()) + " sequences";
                   });
}

CheckReport check_braid_relations(Engine& e, const ExceptionalSequence& seq, int depth) {
  Catalog& cat = e.catalog();
  return run_check("braid relations", e.describe() + " from " + sequence_name(cat, seq) + " depth " + std::to_string(depth),
                   [&](CheckReport& r) {
                     const auto orbit = orbit_enumerate(cat, seq, depth);
                     for (const auto& s : orbit)
                       for (int i = 1; i + 1 < static_cast<int>(s.size()); ++i)
                         for (int x : {1, -1}) {
                           const BraidWord w1{{i, x}, {i + 1, x}, {i, x}};
                           const BraidWord w2{{i + 1, x}, {i, x}, {i + 1, x}};
                           ++r.checked;
                           if (braid_apply(cat, w1, s) != braid_apply(cat, w2, s))
                             fail(r, {{"label", "braid relation"}, {"word", to_string(w1)}, {"sequence", sequence_json(cat, s)}});
                         }
                     r.instance += ", " + std::to_string(orbit.size()) + " sequences";
                   });
}

CheckReport check_straighten_leading(Engine& e, int dim_cap) {
  return run_check("straightening is triangular", e.describe() + " total dim <= " + std::to_string(dim_cap),
                   [&](CheckReport& r) {
                     Catalog& cat = e.catalog();
                     DoubleAlgebra& D = e.dbl();
                     const auto all = flatten(classes_up_to(cat, dim_cap));
                     const KClass z = KClass::zero(e.quiver().rank());
                     for (ClassId lam : all)
                       for (ClassId mu : all) {
                         const DoubleElement& s = D.straighten(lam, mu);
                         ++r.checked;
                         if (!(s.coeff({mu, z, lam}) == Coeff(1)))
                           fail(r, {{"label", "leading coefficient"}, {"pair", {lam, mu}}, {"element", D.to_json(s)}});
                         const KClass deg = cat.at(lam).dim.k() - cat.at(mu).dim.k();
                         for (const auto& [m, c] : s.terms()) {
                           if (m.minus == mu && m.plus == lam && m.k.is_zero()) continue;
                           const bool smaller = cat.at(m.minus).dim.total() < cat.at(mu).dim.total() &&
                                                cat.at(m.plus).dim.total() < cat.at(lam).dim.total();
                           if (!smaller || D.degree(m) != deg)
                             fail(r, {{"label", "non-triangular term"}, {"pair", {lam, mu}}, {"element", D.to_json(s)}});
                         }
                       }
                   });
}

CheckReport check_double_associativity(Engine& e, int dim_cap, int triples, uint64_t seed) {
  return run_check("double associativity",
                   e.describe() + " " + std::to_string(triples) + " triples, seed " + std::to_string(seed),
                   [&](CheckReport& r) {
                     Catalog& cat = e.catalog();
                     DoubleAlgebra& D = e.dbl();
                     std::vector<ClassId> pool{0};
                     for (ClassId c : flatten(classes_up_to(cat, dim_cap))) pool.push_back(c);
                     std::mt19937_64 rng(seed);
                     std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
                     std::uniform_int_distribution<int> kpart(-1, 1);
                     const int rank = e.quiver().rank();
                     auto monomial = [&] {
                       KClass k = KClass::zero(rank);
                       for (int i = 0; i < rank; ++i) k[i] = kpart(rng);
                       return DoubleElement({pool[pick(rng)], k, pool[pick(rng)]}, Coeff(1));
                     };
                     for (int t = 0; t < triples; ++t) {
                       const DoubleElement x = monomial(), y = monomial(), z = monomial();
                       const DoubleElement xy = D.mul(x, y);
                       expect_zero(r, D.mul(xy, z) - D.mul(x, D.mul(y, z)), D, "triple " + std::to_string(t));
                       ++r.checked;
                       if (!xy.is_zero() && D.degree(xy) != D.degree(x) + D.degree(y))
                         fail(r, {{"label", "degree is not additive"}, {"triple", t}});
                     }
                   });
}

CheckReport check_divided_powers(Engine& e, int dim_cap, int max_t) {
  return run_check("divided powers", e.describe() + " t <= " + std::to_string(max_t), [&](CheckReport& r) {
    Catalog& cat = e.catalog();
    DoubleAlgebra& D = e.dbl();
    for (ClassId c : flatten(classes_up_to(cat, dim_cap))) {
      if (!cat.is_exceptional(c)) continue;
      for (int t = 1; t <= max_t; ++t)
        for (int s : {1, -1})
          expect_zero(r, D.divided_power(c, t, s) - D.divided_power_by_powers(c, t, s), D,
                      cat.at(c).dim.to_string() + " t=" + std::to_string(t) + " " + sign_name(s));
    }
  });
}

namespace {

using Sink = std::function<void(const CheckReport&)>;

struct Collector {
  const Sink& sink;
  std::vector<CheckReport> out;
  void operator()(CheckReport r) {
    if (sink) sink(r);
    out.push_back(std::move(r));
  }
};

const DimVector kPairs[][2] = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 2}}, {{2, 1}, {1, 0}}, {{1, 2}, {2, 3}}};

/// Mutation-formula fixtures: A2 simples and four Kronecker pairs.
template <class Check>
std::vector<CheckReport> pair_group(const Sink& sink, Check check) {
  Collector c{sink, {}};
  for (int q : {2, 3}) {
    Engine a2(a2_quiver(q));
    const auto s = simple_sequence(a2.catalog());
    for (int sign : {1, -1}) c(check(a2, s[0], s[1], sign));
    Engine kr(kronecker_quiver(q));
    for (const auto& p : kPairs) {
      const ClassId x = find_exceptional(kr.catalog(), p[0]), y = find_exceptional(kr.catalog(), p[1]);
      for (int sign : {1, -1}) c(check(kr, x, y, sign));
    }
  }
  return std::move(c.out);
}

} // namespace

std::vector<SuiteGroup> default_suite() {
  std::vector<SuiteGroup> g;
  g.push_back({"sums", "alternating q-binomial sums vanish", [](const Sink& sink) {
                 Collector c{sink, {}};
                 for (int q : {2, 3}) c(check_alternating_sums(q, 10, 3));
                 return std::move(c.out);
               }});
  g.push_back({"green", "Hall algebra structure and Green's formula", [](const Sink& sink) {
                 Collector c{sink, {}};
                 for (int q : {2, 3}) {
                   Engine a2(a2_quiver(q)), kr(kronecker_quiver(q));
                   c(check_green(a2, 4));
                   c(check_green(kr, 4));
                 }
                 return std::move(c.out);
               }});
  g.push_back({"left", "left mutation formulas", [](const Sink& sink) { return pair_group(sink, check_left_formula); }});
  g.push_back({"right", "right mutation formulas", [](const Sink& sink) { return pair_group(sink, check_right_formula); }});
  g.push_back({"serre", "Serre-type relations", [](const Sink& sink) { return pair_group(sink, check_serre); }});
  g.push_back({"line", "projective line formulas", [](const Sink& sink) {
                 Collector c{sink, {}};
                 for (int q : {2, 3}) {
                   Engine kr(kronecker_quiver(q));
                   c(check_degree_one_count(kr));
                   for (int i : {1, 2}) c(check_line_left(kr, i));
                   for (int i : {0, 1}) c(check_line_right(kr, i));
                 }
                 return std::move(c.out);
               }});
  g.push_back({"orbits", "braid orbits of exceptional sequences", [](const Sink& sink) {
                 Collector c{sink, {}};
                 for (int q : {2, 3}) {
                   Engine a2(a2_quiver(q)), a3(a3_quiver(q)), kr(kronecker_quiver(q));
                   c(check_orbit_formulas(a2, simple_sequence(a2.catalog()), 3));
                   c(check_orbit_formulas(a3, simple_sequence(a3.catalog()), 3));
                   c(check_braid_relations(a3, simple_sequence(a3.catalog()), 3));
                   Catalog& kc = kr.catalog();
                   c(check_orbit_formulas(kr, {find_exceptional(kc, {0, 1}), find_exceptional(kc, {1, 2})}, 3));
                 }
                 return std::move(c.out);
               }});
  g.push_back({"double", "double algebra well-definedness", [](const Sink& sink) {
                 Collector c{sink, {}};
                 for (int q : {2, 3}) {
                   Engine a2(a2_quiver(q)), kr(kronecker_quiver(q));
                   c(check_straighten_leading(a2, 3));
                   c(check_straighten_leading(kr, 3));
                   c(check_divided_powers(a2, 3, 3));
                   c(check_divided_powers(kr, 3, 3));
                 }
                 Engine a2(a2_quiver(3)), a3(a3_quiver(2)), kr(kronecker_quiver(2));
                 c(check_double_associativity(a2, 2, 100, 20261016));
                 c(check_double_associativity(a3, 2, 100, 20261016));
                 c(check_double_associativity(kr, 2, 100, 20261016));
                 return std::move(c.out);
               }});
  return g;
}

} // namespace hallkit
