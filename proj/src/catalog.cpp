#include "hallkit/catalog.hpp"

#include "hallkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace hallkit {

namespace {

unsigned long long checked_power(unsigned long long base, long long e, unsigned long long limit, bool& over) {
  unsigned long long r = 1;
  over = false;
  for (long long i = 0; i < e; ++i) {
    if (r > limit / base) {
      over = true;
      return limit;
    }
    r *= base;
  }
  return r;
}

bool nilpotent(const Morphism& f) {
  for (const auto& m : f) {
    if (m.rows() == 0) continue;
    FqMatrix p = m;
    for (int k = 1; k < m.rows(); ++k) p = p * m;
    if (!p.is_zero()) return false;
  }
  return true;
}

bool all_blocks_full_rank(const Morphism& f, bool by_columns) {
  for (const auto& m : f) {
    const int want = by_columns ? m.cols() : m.rows();
    if (want == 0) continue;
    if (rank(m) != want) return false;
  }
  return true;
}

uint8_t trace(const FqMatrix& m) {
  const auto& F = m.field();
  uint8_t t = 0;
  for (int i = 0; i < m.rows(); ++i) t = F.add(t, m(i, i));
  return t;
}

FpPoly poly_power(const FpPoly& g, int k, int p) {
  FpPoly r{{1}};
  for (int i = 0; i < k; ++i) r = poly_mul(r, g, p);
  return r;
}

// Visits every F_q-combination of a basis of Hom(X,Y), including the zero map.
void for_each_morphism(int q, const Representation& X, const Representation& Y, const std::vector<Morphism>& basis,
                       const std::function<void(const Morphism&)>& visit) {
  Morphism zero;
  for (int i = 0; i < X.dim.size(); ++i) zero.emplace_back(q, Y.dim[i], X.dim[i]);
  std::vector<uint8_t> c(basis.size(), 0);
  Morphism cur = zero;
  for (;;) {
    visit(cur);
    size_t pos = 0;
    while (pos < c.size()) {
      // cur += basis[pos]; wrap to zero when the digit overflows
      for (size_t i = 0; i < cur.size(); ++i) cur[i] = cur[i] + basis[pos][i];
      if (++c[pos] < q) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == c.size()) return;
  }
}

} // namespace

mpz_class general_linear_order(unsigned long Q, int n) {
  mpz_class r = 1;
  mpz_class Qn;
  mpz_ui_pow_ui(Qn.get_mpz_t(), Q, static_cast<unsigned long>(n));
  for (int j = 0; j < n; ++j) {
    mpz_class Qj;
    mpz_ui_pow_ui(Qj.get_mpz_t(), Q, static_cast<unsigned long>(j));
    r *= Qn - Qj;
  }
  return r;
}

Catalog::Catalog(Quiver quiver, Caps caps, uint64_t seed)
    : quiver_(std::move(quiver)), caps_(caps), seed_(seed) {
  IsoClass zero;
  zero.id = 0;
  zero.dim = DimVector::zero(quiver_.rank());
  zero.canon = zero_representation(quiver_, zero.dim);
  zero.aut_count = 1;
  classes_.push_back(zero);
  memo_[zero.canon.key()] = 0;
  by_parts_[{}] = 0;
}

const IsoClass& Catalog::at(ClassId id) const {
  std::lock_guard lock(mutex_);
  if (id < 0 || static_cast<size_t>(id) >= classes_.size()) throw DomainError("unknown class id " + std::to_string(id));
  return classes_[static_cast<size_t>(id)];
}

size_t Catalog::size() const {
  std::lock_guard lock(mutex_);
  return classes_.size();
}

void Catalog::check_class_dim(const DimVector& d) const {
  if (d.total() > caps_.class_total_dim)
    throw ResourceError("cap class_total_dim=" + std::to_string(caps_.class_total_dim) + " exceeded by dimension vector " +
                        d.to_string());
}

mpz_class Catalog::automorphism_count(const std::vector<ClassId>& parts, int end_dim) const {
  std::map<ClassId, int> mult;
  for (ClassId p : parts) ++mult[p];
  long semisimple = 0;
  mpz_class gl = 1;
  for (auto [id, m] : mult) {
    const int s = classes_[static_cast<size_t>(id)].residue_degree;
    semisimple += static_cast<long>(m) * m * s;
    unsigned long Q = 1;
    for (int i = 0; i < s; ++i) Q *= static_cast<unsigned long>(q());
    gl *= general_linear_order(Q, m);
  }
  const long rad = end_dim - semisimple;
  if (rad < 0) throw InvariantError("negative radical dimension in automorphism count");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q()), static_cast<unsigned long>(rad));
  return r * gl;
}

void Catalog::decompose(const Representation& X, std::vector<Piece>& out) {
  if (X.dim.total() == 0) return;
  const int p = q();
  const auto basis = hom_basis(quiver_, X, X);
  const int d = static_cast<int>(basis.size());
  if (d == 1) {
    out.push_back({X, 1, 1});
    return;
  }
  std::mt19937_64 rng(seed_ ^ std::hash<std::string>{}(X.key()));
  int s = 1;
  int primitive_degree = 0;

  // Returns true after splitting X along two coprime factors of the minimal polynomial.
  auto examine = [&](const Morphism& b) {
    const FpPoly m = minimal_polynomial(b, p);
    const auto fac = poly_factor(m, p, rng());
    if (fac.size() >= 2) {
      const FpPoly A = poly_power(fac[0].first, fac[0].second, p);
      FpPoly B, rem;
      poly_divmod(m, A, p, B, rem);
      SubspaceTuple W1, W2;
      for (const auto& blk : b) {
        W1.push_back(row_reduce(nullspace(poly_eval(A, blk))));
        W2.push_back(row_reduce(nullspace(poly_eval(B, blk))));
      }
      decompose(restrict_to(quiver_, X, W1), out);
      decompose(restrict_to(quiver_, X, W2), out);
      return true;
    }
    const int deg = fac.empty() ? 1 : fac[0].first.degree();
    s = std::lcm(s, deg);
    primitive_degree = std::max(primitive_degree, deg);
    return false;
  };

  // Certifies that End(X) is local with residue field of degree s.
  auto certify_local = [&]() {
    if (primitive_degree != s) return false;
    int v = -1;
    for (int i = 0; i < X.dim.size(); ++i) {
      if (X.dim[i] % s != 0) return false;
      if (v < 0 && X.dim[i] > 0 && (X.dim[i] / s) % p != 0) v = i;
    }
    if (v < 0) return false;
    const auto& F = PrimeField::get(p);
    const uint8_t kinv = F.inv(F.reduce(X.dim[v] / s));
    // Linear functional x -> Tr(residue of x), read off one vertex.
    auto tau = [&](const FqMatrix& m) { return F.mul(kinv, trace(m)); };
    FqMatrix G(p, d, d);
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) G.at(l, j) = tau(basis[static_cast<size_t>(j)][static_cast<size_t>(v)] * basis[static_cast<size_t>(l)][static_cast<size_t>(v)]);
    const FqMatrix Rc = nullspace(G);
    if (Rc.rows() != d - s) return false;
    std::vector<Morphism> R;
    for (int i = 0; i < Rc.rows(); ++i) R.push_back(combine(basis, std::span<const uint8_t>(Rc.row(i), static_cast<size_t>(d))));
    auto in_R = [&](const Morphism& x) {
      for (const auto& bl : basis)
        if (tau(x[static_cast<size_t>(v)] * bl[static_cast<size_t>(v)])) return false;
      return true;
    };
    for (const auto& r : R)
      for (const auto& b : basis)
        if (!in_R(compose(r, b)) || !in_R(compose(b, r))) return false;
    // R acts nilpotently: iterate W <- R W until it vanishes.
    std::vector<FqMatrix> W;
    int total = 0;
    for (int i = 0; i < X.dim.size(); ++i) {
      W.push_back(FqMatrix::identity(p, X.dim[i]));
      total += X.dim[i];
    }
    while (total > 0) {
      int next_total = 0;
      for (int i = 0; i < X.dim.size(); ++i) {
        FqMatrix cols(p, X.dim[i], 0);
        for (const auto& r : R) cols = hstack(cols, r[static_cast<size_t>(i)] * W[static_cast<size_t>(i)]);
        const Echelon e = row_reduce(cols.transpose());
        W[static_cast<size_t>(i)] = e.basis.transpose();
        next_total += e.rank();
      }
      if (next_total >= total) return false;
      total = next_total;
    }
    return true;
  };

  for (const auto& b : basis)
    if (examine(b)) return;
  std::vector<uint8_t> c(static_cast<size_t>(d));
  for (int attempt = 0; attempt < 48; ++attempt) {
    if (attempt % 8 == 0 && certify_local()) {
      out.push_back({X, d, s});
      return;
    }
    for (auto& x : c) x = static_cast<uint8_t>(rng() % static_cast<uint64_t>(p));
    if (examine(combine(basis, c))) return;
  }
  if (certify_local()) {
    out.push_back({X, d, s});
    return;
  }
  bool over = false;
  checked_power(static_cast<unsigned long long>(p), d, caps_.end_search, over);
  if (over)
    throw ResourceError("cap end_search=" + std::to_string(caps_.end_search) + " exceeded while testing End of " +
                        X.dim.to_string() + " for locality");
  bool split = false;
  for_each_morphism(p, X, X, basis, [&](const Morphism& b) {
    if (split || is_zero(b)) return;
    split = examine(b);
  });
  if (!split) out.push_back({X, d, s});
}

bool Catalog::isomorphic_indecomposables(const Representation& a, const Representation& b, int end_dim) {
  const auto F = hom_basis(quiver_, a, b);
  if (static_cast<int>(F.size()) != end_dim) return false;
  const auto G = hom_basis(quiver_, b, a);
  if (static_cast<int>(G.size()) != end_dim) return false;
  for (const auto& f : F)
    for (const auto& g : G)
      if (!nilpotent(compose(g, f))) return true;
  return false;
}

ClassId Catalog::intern_indecomposable(const Piece& piece) {
  auto& bucket = indecomposables_by_dim_[piece.rep.dim];
  for (ClassId cid : bucket) {
    const IsoClass& c = classes_[static_cast<size_t>(cid)];
    if (c.end_dim == piece.end_dim && c.residue_degree == piece.residue_degree &&
        isomorphic_indecomposables(c.canon, piece.rep, piece.end_dim))
      return cid;
  }
  IsoClass c;
  c.id = static_cast<ClassId>(classes_.size());
  c.dim = piece.rep.dim;
  c.canon = piece.rep;
  c.decomposition = {c.id};
  c.end_dim = piece.end_dim;
  c.residue_degree = piece.residue_degree;
  classes_.push_back(c);
  classes_.back().aut_count = automorphism_count({c.id}, c.end_dim);
  bucket.push_back(c.id);
  by_parts_[{c.id}] = c.id;
  memo_.emplace(piece.rep.key(), c.id);
  return c.id;
}

ClassId Catalog::intern_multiset(std::vector<ClassId> parts, const Representation* rep, int end_dim) {
  std::sort(parts.begin(), parts.end());
  if (auto it = by_parts_.find(parts); it != by_parts_.end()) return it->second;
  IsoClass c;
  c.id = static_cast<ClassId>(classes_.size());
  if (rep) {
    c.canon = *rep;
  } else {
    c.canon = zero_representation(quiver_, DimVector::zero(quiver_.rank()));
    for (ClassId p : parts) c.canon = hallkit::direct_sum(c.canon, classes_[static_cast<size_t>(p)].canon);
  }
  c.dim = c.canon.dim;
  c.end_dim = end_dim >= 0 ? end_dim : hom_dimension(quiver_, c.canon, c.canon);
  c.decomposition = parts;
  c.aut_count = automorphism_count(parts, c.end_dim);
  classes_.push_back(c);
  by_parts_[parts] = c.id;
  memo_.emplace(c.canon.key(), c.id);
  return c.id;
}

ClassId Catalog::identify(const Representation& X) {
  validate(quiver_, X);
  if (X.dim.total() == 0) return 0;
  check_class_dim(X.dim);
  std::lock_guard lock(mutex_);
  const std::string key = X.key();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<Piece> pieces;
  decompose(X, pieces);
  std::vector<ClassId> parts;
  for (const auto& piece : pieces) parts.push_back(intern_indecomposable(piece));
  ClassId id;
  if (parts.size() == 1) {
    id = parts.front();
  } else {
    std::sort(parts.begin(), parts.end());
    auto it = by_parts_.find(parts);
    id = it != by_parts_.end() ? it->second : intern_multiset(parts, &X, -1);
  }
  memo_.emplace(key, id);
  return id;
}

ClassId Catalog::simple(int vertex) { return identify(simple_representation(quiver_, vertex)); }

ClassId Catalog::direct_sum(ClassId a, ClassId b) {
  std::lock_guard lock(mutex_);
  std::vector<ClassId> parts = at(a).decomposition;
  const auto& pb = at(b).decomposition;
  parts.insert(parts.end(), pb.begin(), pb.end());
  std::sort(parts.begin(), parts.end());
  if (auto it = by_parts_.find(parts); it != by_parts_.end()) return it->second;
  check_class_dim(at(a).dim + at(b).dim);
  return intern_multiset(parts, nullptr, -1);
}

ClassId Catalog::multiple(ClassId a, int t) {
  if (t < 0) throw DomainError("negative multiplicity");
  ClassId r = 0;
  for (int i = 0; i < t; ++i) r = direct_sum(r, a);
  return r;
}

std::vector<ClassId> Catalog::enumerate(const DimVector& d) {
  std::vector<ClassId> out;
  for (auto [id, n] : enumerate_with_orbits(d)) out.push_back(id);
  return out;
}

std::vector<std::pair<ClassId, unsigned long>> Catalog::enumerate_with_orbits(const DimVector& d) {
  if (d.size() != quiver_.rank()) throw DomainError("dimension vector length does not match the quiver");
  if (d.total() > caps_.enum_total_dim)
    throw ResourceError("cap enum_total_dim=" + std::to_string(caps_.enum_total_dim) + " exceeded by " + d.to_string());
  const int qq = q();
  const long long L = quiver_.space_dimension(d);
  bool over = false;
  const unsigned long long N = checked_power(static_cast<unsigned long long>(qq), L, caps_.rep_space, over);
  if (over || N > caps_.rep_space)
    throw ResourceError("cap rep_space=" + std::to_string(caps_.rep_space) + " exceeded by representation space of " +
                        d.to_string());
  const auto& arrows = quiver_.arrows();
  const auto& F = PrimeField::get(qq);

  auto decode = [&](unsigned long long idx) {
    Representation X = zero_representation(quiver_, d);
    std::vector<uint8_t> digits(static_cast<size_t>(L));
    for (long long k = L - 1; k >= 0; --k) {
      digits[static_cast<size_t>(k)] = static_cast<uint8_t>(idx % static_cast<unsigned long long>(qq));
      idx /= static_cast<unsigned long long>(qq);
    }
    size_t pos = 0;
    for (auto& m : X.maps)
      for (auto& x : m.data()) x = digits[pos++];
    return X;
  };
  auto encode = [&](const Representation& X) {
    unsigned long long idx = 0;
    for (const auto& m : X.maps)
      for (uint8_t x : m.data()) idx = idx * static_cast<unsigned long long>(qq) + x;
    return idx;
  };

  struct Gen {
    int vertex;
    FqMatrix g, ginv;
  };
  std::vector<Gen> gens;
  uint8_t omega = 1;
  for (uint8_t w = 2; w < qq; ++w) {
    uint8_t x = w;
    int order = 1;
    while (x != 1) {
      x = F.mul(x, w);
      ++order;
    }
    if (order == qq - 1) {
      omega = w;
      break;
    }
  }
  for (int i = 0; i < d.size(); ++i) {
    const int n = d[i];
    if (n == 0) continue;
    std::vector<FqMatrix> mats;
    if (omega != 1) {
      FqMatrix D = FqMatrix::identity(qq, n);
      D.at(0, 0) = omega;
      mats.push_back(D);
    }
    if (n >= 2) {
      FqMatrix E = FqMatrix::identity(qq, n);
      E.at(0, 1) = 1;
      mats.push_back(E);
      FqMatrix C(qq, n, n);
      for (int j = 0; j < n; ++j) C.at((j + 1) % n, j) = 1;
      mats.push_back(C);
      FqMatrix T = FqMatrix::identity(qq, n);
      T.at(0, 0) = T.at(1, 1) = 0;
      T.at(0, 1) = T.at(1, 0) = 1;
      mats.push_back(T);
    }
    for (auto& m : mats) {
      FqMatrix inv;
      invert(m, inv);
      gens.push_back({i, m, inv});
    }
  }

  std::vector<bool> seen(N, false);
  std::vector<std::pair<ClassId, unsigned long>> out;
  std::vector<unsigned long long> queue;
  for (unsigned long long idx = 0; idx < N; ++idx) {
    if (seen[idx]) continue;
    const ClassId id = identify(decode(idx));
    seen[idx] = true;
    queue.assign(1, idx);
    unsigned long orbit = 0;
    while (!queue.empty()) {
      const unsigned long long x = queue.back();
      queue.pop_back();
      ++orbit;
      const Representation X = decode(x);
      for (const auto& g : gens) {
        Representation Y = X;
        for (size_t ai = 0; ai < arrows.size(); ++ai) {
          if (arrows[ai].target == g.vertex) Y.maps[ai] = g.g * Y.maps[ai];
          if (arrows[ai].source == g.vertex) Y.maps[ai] = Y.maps[ai] * g.ginv;
        }
        const unsigned long long y = encode(Y);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    if (std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.first == id; }))
      throw InvariantError("two orbits of " + d.to_string() + " identified as the same class");
    out.emplace_back(id, orbit);
  }
  return out;
}

int Catalog::hom_dim(ClassId x, ClassId y) {
  std::lock_guard lock(mutex_);
  if (auto it = hom_cache_.find({x, y}); it != hom_cache_.end()) return it->second;
  const int h = hom_dimension(quiver_, at(x).canon, at(y).canon);
  hom_cache_[{x, y}] = h;
  return h;
}

std::vector<Morphism> Catalog::hom_space(ClassId x, ClassId y) { return hom_basis(quiver_, at(x).canon, at(y).canon); }

int Catalog::ext_dim(ClassId x, ClassId y) {
  const int e = hom_dim(x, y) - quiver_.euler_form(at(x).dim, at(y).dim);
  if (e < 0) throw InvariantError("negative Ext dimension between classes " + std::to_string(x) + " and " + std::to_string(y));
  return e;
}

bool Catalog::is_exceptional(ClassId x) { return x != 0 && is_indecomposable(x) && hom_dim(x, x) == 1 && ext_dim(x, x) == 0; }

mpz_class Catalog::count_automorphisms(ClassId x) {
  const Representation X = at(x).canon;
  const auto basis = hom_basis(quiver_, X, X);
  bool over = false;
  checked_power(static_cast<unsigned long long>(q()), static_cast<long long>(basis.size()), caps_.end_search, over);
  if (over) throw ResourceError("cap end_search=" + std::to_string(caps_.end_search) + " exceeded by End of class " + std::to_string(x));
  mpz_class n = 0;
  if (basis.empty()) return 1;
  for_each_morphism(q(), X, X, basis, [&](const Morphism& f) {
    if (all_blocks_full_rank(f, true)) ++n;
  });
  return n;
}

std::vector<Filtration> Catalog::compute_filtrations(ClassId lambda, const DimVector& sub_dim, unsigned long long& count) {
  const Representation X = at(lambda).canon;
  check_class_dim(X.dim);
  std::map<std::pair<ClassId, ClassId>, unsigned long long> tally;
  count = 0;
  for_each_stable_subspace(quiver_, X, sub_dim, [&](const SubspaceTuple& U) {
    const ClassId sub = identify(restrict_to(quiver_, X, U));
    const ClassId quo = identify(quotient_by(quiver_, X, U));
    ++tally[{quo, sub}];
    ++count;
  });
  std::vector<Filtration> out;
  for (const auto& [k, n] : tally) out.push_back({k.first, k.second, mpz_class(static_cast<unsigned long>(n))});
  return out;
}

const std::vector<Filtration>& Catalog::filtrations(ClassId lambda, const DimVector& sub_dim) {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(lambda, sub_dim);
  if (auto it = filtration_cache_.find(key); it != filtration_cache_.end()) return it->second.first;
  unsigned long long count = 0;
  auto rows = compute_filtrations(lambda, sub_dim, count);
  return filtration_cache_.emplace(key, std::make_pair(std::move(rows), count)).first->second.first;
}

unsigned long long Catalog::stable_subspace_count(ClassId lambda, const DimVector& sub_dim) {
  std::lock_guard lock(mutex_);
  filtrations(lambda, sub_dim);
  return filtration_cache_.at({lambda, sub_dim}).second;
}

std::vector<Filtration> Catalog::filtration_table(ClassId lambda) {
  const DimVector top = at(lambda).dim;
  std::vector<Filtration> out;
  std::vector<int> cur(static_cast<size_t>(top.size()), 0);
  for (;;) {
    const auto& rows = filtrations(lambda, DimVector(cur));
    out.insert(out.end(), rows.begin(), rows.end());
    size_t i = 0;
    while (i < cur.size() && ++cur[i] > top[static_cast<int>(i)]) cur[i++] = 0;
    if (i == cur.size()) break;
  }
  return out;
}

mpz_class Catalog::hall_number(ClassId lambda, ClassId alpha, ClassId beta) {
  const IsoClass& L = at(lambda);
  if (at(alpha).dim.k() + at(beta).dim.k() != L.dim.k()) return 0;
  for (const auto& f : filtrations(lambda, at(beta).dim))
    if (f.quotient == alpha && f.sub == beta) return f.count;
  return 0;
}

mpz_class Catalog::exact_pair_count(ClassId lambda, ClassId alpha, ClassId beta) {
  const Representation V = at(lambda).canon;
  const Representation A = at(alpha).canon;
  const Representation B = at(beta).canon;
  if (A.dim.k() + B.dim.k() != V.dim.k()) return 0;
  const auto inj_basis = hom_basis(quiver_, B, V);
  bool over = false;
  checked_power(static_cast<unsigned long long>(q()), static_cast<long long>(inj_basis.size()), caps_.end_search, over);
  if (over) throw ResourceError("cap end_search=" + std::to_string(caps_.end_search) + " exceeded by Hom(beta, lambda)");
  mpz_class count = 0;
  for_each_morphism(q(), B, V, inj_basis, [&](const Morphism& i) {
    if (!all_blocks_full_rank(i, true)) return;
    const Representation C = quotient_by(quiver_, V, image_of(i));
    const auto p_basis = hom_basis(quiver_, C, A);
    bool over2 = false;
    checked_power(static_cast<unsigned long long>(q()), static_cast<long long>(p_basis.size()), caps_.end_search, over2);
    if (over2) throw ResourceError("cap end_search=" + std::to_string(caps_.end_search) + " exceeded by Hom(cokernel, alpha)");
    for_each_morphism(q(), C, A, p_basis, [&](const Morphism& p) {
      if (all_blocks_full_rank(p, false)) ++count;
    });
  });
  return count;
}

const std::vector<std::pair<ClassId, mpz_class>>& Catalog::product_terms(ClassId alpha, ClassId beta) {
  std::lock_guard lock(mutex_);
  if (auto it = product_cache_.find({alpha, beta}); it != product_cache_.end()) return it->second;
  const Representation X = at(alpha).canon;
  const Representation Y = at(beta).canon;
  check_class_dim(X.dim + Y.dim);
  const ExtComplement ec = ext_complement(quiver_, X, Y);
  const int e = static_cast<int>(ec.cocycles.size());
  bool over = false;
  checked_power(static_cast<unsigned long long>(q()), e, caps_.rep_space, over);
  if (over) throw ResourceError("cap rep_space=" + std::to_string(caps_.rep_space) + " exceeded by Ext^1 enumeration");
  std::map<ClassId, unsigned long long> tally;
  std::vector<uint8_t> c(static_cast<size_t>(e), 0);
  std::vector<FqMatrix> h;
  for (const auto& a : quiver_.arrows()) h.emplace_back(q(), Y.dim[a.target], X.dim[a.source]);
  for (;;) {
    ++tally[identify(extension(quiver_, X, Y, h))];
    size_t pos = 0;
    while (pos < c.size()) {
      for (size_t ai = 0; ai < h.size(); ++ai) h[ai] = h[ai] + ec.cocycles[pos][ai];
      if (++c[pos] < q()) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == c.size()) break;
  }
  mpz_class qhom;
  mpz_ui_pow_ui(qhom.get_mpz_t(), static_cast<unsigned long>(q()), static_cast<unsigned long>(ec.hom_dim));
  const mpz_class denom = qhom * at(alpha).aut_count * at(beta).aut_count;
  std::vector<std::pair<ClassId, mpz_class>> out;
  for (auto [lam, n] : tally) {
    const mpz_class num = mpz_class(static_cast<unsigned long>(n)) * at(lam).aut_count;
    if (num % denom != 0) throw InvariantError("non-integral Hall number from extension count");
    out.emplace_back(lam, num / denom);
  }
  return product_cache_.emplace(std::make_pair(alpha, beta), std::move(out)).first->second;
}

nlohmann::json Catalog::class_json(ClassId id) const {
  const IsoClass& c = at(id);
  nlohmann::json aut = c.aut_count.fits_slong_p() ? nlohmann::json(c.aut_count.get_si()) : nlohmann::json(c.aut_count.get_str());
  return {{"id", c.id}, {"dim", c.dim.vec()}, {"aut_count", aut}, {"decomposition", c.decomposition}};
}

nlohmann::json Catalog::dump() const {
  std::lock_guard lock(mutex_);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : classes_) out.push_back(class_json(c.id));
  return out;
}

} // namespace hallkit
