#include "hallkit/representation.hpp"

#include "hallkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hallkit {

std::string Representation::key() const {
  std::string k;
  for (int x : dim.vec()) k.push_back(static_cast<char>(x));
  k.push_back('|');
  for (const auto& m : maps) k.append(reinterpret_cast<const char*>(m.data().data()), m.data().size());
  return k;
}

Representation zero_representation(const Quiver& Q, const DimVector& d) {
  Representation X{d, {}};
  for (const auto& a : Q.arrows()) X.maps.emplace_back(Q.q(), d[a.target], d[a.source]);
  return X;
}

Representation simple_representation(const Quiver& Q, int vertex) {
  std::vector<int> d(static_cast<size_t>(Q.rank()), 0);
  d.at(static_cast<size_t>(vertex)) = 1;
  return zero_representation(Q, DimVector(std::move(d)));
}

void validate(const Quiver& Q, const Representation& X) {
  if (X.dim.size() != Q.rank()) throw DomainError("representation has the wrong number of vertices");
  if (X.maps.size() != Q.arrows().size()) throw DomainError("representation has the wrong number of arrows");
  for (size_t i = 0; i < X.maps.size(); ++i) {
    const auto& a = Q.arrows()[i];
    if (X.maps[i].rows() != X.dim[a.target] || X.maps[i].cols() != X.dim[a.source] || X.maps[i].q() != Q.q())
      throw DomainError("matrix shape does not match the dimension vector");
  }
}

namespace {

// Matrix of phi -> (phi_t M^X_a - M^Y_a phi_s)_a; columns index the entries of phi,
// rows index the entries of the per-arrow cocycles.
FqMatrix coboundary_matrix(const Quiver& Q, const Representation& X, const Representation& Y,
                           std::vector<int>& var_offset) {
  const int r = Q.rank();
  var_offset.assign(static_cast<size_t>(r) + 1, 0);
  for (int i = 0; i < r; ++i) var_offset[static_cast<size_t>(i) + 1] = var_offset[static_cast<size_t>(i)] + Y.dim[i] * X.dim[i];
  int eq = 0;
  for (const auto& a : Q.arrows()) eq += Y.dim[a.target] * X.dim[a.source];
  const auto& F = PrimeField::get(Q.q());
  FqMatrix D(Q.q(), eq, var_offset.back());
  int row = 0;
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    const int s = a.source, t = a.target;
    const FqMatrix& MX = X.maps[ai];
    const FqMatrix& MY = Y.maps[ai];
    const int Yt = Y.dim[t], Xs = X.dim[s], Xt = X.dim[t], Ys = Y.dim[s];
    for (int i = 0; i < Yt; ++i) {
      for (int c = 0; c < Xs; ++c, ++row) {
        for (int k = 0; k < Xt; ++k) {
          const uint8_t m = MX(k, c);
          if (m) D.at(row, var_offset[static_cast<size_t>(t)] + i * Xt + k) = m;
        }
        for (int k = 0; k < Ys; ++k) {
          const uint8_t m = MY(i, k);
          if (!m) continue;
          uint8_t& e = D.at(row, var_offset[static_cast<size_t>(s)] + k * Xs + c);
          e = F.sub(e, m);
        }
      }
    }
  }
  return D;
}

Morphism unpack_morphism(const Quiver& Q, const Representation& X, const Representation& Y,
                         const std::vector<int>& off, const uint8_t* v) {
  Morphism f;
  for (int i = 0; i < Q.rank(); ++i) {
    FqMatrix m(Q.q(), Y.dim[i], X.dim[i]);
    std::copy(v + off[static_cast<size_t>(i)], v + off[static_cast<size_t>(i) + 1], m.data().begin());
    f.push_back(std::move(m));
  }
  return f;
}

} // namespace

std::vector<Morphism> hom_basis(const Quiver& Q, const Representation& X, const Representation& Y) {
  std::vector<int> off;
  const FqMatrix D = coboundary_matrix(Q, X, Y, off);
  const FqMatrix N = nullspace(D);
  std::vector<Morphism> out;
  out.reserve(static_cast<size_t>(N.rows()));
  for (int i = 0; i < N.rows(); ++i) out.push_back(unpack_morphism(Q, X, Y, off, N.row(i)));
  return out;
}

int hom_dimension(const Quiver& Q, const Representation& X, const Representation& Y) {
  std::vector<int> off;
  const FqMatrix D = coboundary_matrix(Q, X, Y, off);
  return D.cols() - rank(D);
}

ExtComplement ext_complement(const Quiver& Q, const Representation& X, const Representation& Y) {
  std::vector<int> off;
  const FqMatrix D = coboundary_matrix(Q, X, Y, off);
  const Echelon img = row_reduce(D.transpose());
  ExtComplement out;
  out.hom_dim = D.cols() - img.rank();
  std::vector<char> hit(static_cast<size_t>(D.rows()), 0);
  for (int p : img.pivots) hit[static_cast<size_t>(p)] = 1;
  for (int coord = 0; coord < D.rows(); ++coord) {
    if (hit[static_cast<size_t>(coord)]) continue;
    std::vector<FqMatrix> h;
    int base = 0;
    for (const auto& a : Q.arrows()) {
      FqMatrix m(Q.q(), Y.dim[a.target], X.dim[a.source]);
      const int n = m.rows() * m.cols();
      if (coord >= base && coord < base + n) m.data()[static_cast<size_t>(coord - base)] = 1;
      base += n;
      h.push_back(std::move(m));
    }
    out.cocycles.push_back(std::move(h));
  }
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  h.reserve(f.size());
  for (size_t i = 0; i < f.size(); ++i) h.push_back(g[i] * f[i]);
  return h;
}

Morphism identity_morphism(int q, const Representation& X) {
  Morphism f;
  for (int x : X.dim.vec()) f.push_back(FqMatrix::identity(q, x));
  return f;
}

Morphism combine(const std::vector<Morphism>& basis, std::span<const uint8_t> coeffs) {
  if (basis.empty()) throw DomainError("combination of an empty basis");
  Morphism out;
  for (const auto& m : basis.front()) out.emplace_back(m.q(), m.rows(), m.cols());
  for (size_t j = 0; j < basis.size(); ++j) {
    if (!coeffs[j]) continue;
    for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + basis[j][i].scaled(coeffs[j]);
  }
  return out;
}

bool is_zero(const Morphism& f) {
  return std::all_of(f.begin(), f.end(), [](const FqMatrix& m) { return m.is_zero(); });
}

bool is_intertwiner(const Quiver& Q, const Representation& X, const Representation& Y, const Morphism& f) {
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    if (!(f[static_cast<size_t>(a.target)] * X.maps[ai] == Y.maps[ai] * f[static_cast<size_t>(a.source)])) return false;
  }
  return true;
}

Representation direct_sum(const Representation& X, const Representation& Y) {
  Representation S{X.dim + Y.dim, {}};
  for (size_t ai = 0; ai < X.maps.size(); ++ai) {
    const auto& a = X.maps[ai];
    const auto& b = Y.maps[ai];
    FqMatrix m(a.q(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    S.maps.push_back(std::move(m));
  }
  return S;
}

Representation direct_power(const Representation& X, int t) {
  if (t < 0) throw DomainError("negative multiplicity");
  Representation S{DimVector::zero(X.dim.size()), {}};
  for (const auto& m : X.maps) S.maps.emplace_back(m.q(), 0, 0);
  for (int i = 0; i < t; ++i) S = direct_sum(S, X);
  return S;
}

Representation extension(const Quiver& Q, const Representation& X, const Representation& Y,
                         const std::vector<FqMatrix>& cocycle) {
  Representation E{Y.dim + X.dim, {}};
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    FqMatrix m(Q.q(), E.dim[a.target], E.dim[a.source]);
    m.set_block(0, 0, Y.maps[ai]);
    m.set_block(0, Y.dim[a.source], cocycle[ai]);
    m.set_block(Y.dim[a.target], Y.dim[a.source], X.maps[ai]);
    E.maps.push_back(std::move(m));
  }
  return E;
}

bool is_stable(const Quiver& Q, const Representation& X, const SubspaceTuple& U) {
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    const Echelon& Us = U[static_cast<size_t>(a.source)];
    const Echelon& Ut = U[static_cast<size_t>(a.target)];
    if (Us.rank() == 0) continue;
    FqMatrix img = Us.basis * X.maps[ai].transpose();
    for (int j = 0; j < img.rows(); ++j) {
      reduce_mod(Ut, img.row(j));
      for (int c = 0; c < img.cols(); ++c)
        if (img(j, c)) return false;
    }
  }
  return true;
}

Representation restrict_to(const Quiver& Q, const Representation& X, const SubspaceTuple& U) {
  Representation S{dim_of(U), {}};
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    const Echelon& Us = U[static_cast<size_t>(a.source)];
    const Echelon& Ut = U[static_cast<size_t>(a.target)];
    FqMatrix m(Q.q(), Ut.rank(), Us.rank());
    if (Us.rank() > 0 && Ut.rank() > 0) {
      const FqMatrix img = Us.basis * X.maps[ai].transpose();
      for (int j = 0; j < Us.rank(); ++j)
        for (int i = 0; i < Ut.rank(); ++i) m.at(i, j) = img(j, Ut.pivots[static_cast<size_t>(i)]);
    }
    S.maps.push_back(std::move(m));
  }
  return S;
}

Representation quotient_by(const Quiver& Q, const Representation& X, const SubspaceTuple& U) {
  std::vector<std::vector<int>> free(static_cast<size_t>(Q.rank()));
  std::vector<int> d;
  for (int i = 0; i < Q.rank(); ++i) {
    std::vector<char> piv(static_cast<size_t>(X.dim[i]), 0);
    for (int p : U[static_cast<size_t>(i)].pivots) piv[static_cast<size_t>(p)] = 1;
    for (int c = 0; c < X.dim[i]; ++c)
      if (!piv[static_cast<size_t>(c)]) free[static_cast<size_t>(i)].push_back(c);
    d.push_back(static_cast<int>(free[static_cast<size_t>(i)].size()));
  }
  Representation R{DimVector(d), {}};
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    const auto& fs = free[static_cast<size_t>(a.source)];
    const auto& ft = free[static_cast<size_t>(a.target)];
    const FqMatrix& M = X.maps[ai];
    FqMatrix m(Q.q(), static_cast<int>(ft.size()), static_cast<int>(fs.size()));
    std::vector<uint8_t> col(static_cast<size_t>(M.rows()));
    for (size_t j = 0; j < fs.size(); ++j) {
      for (int r = 0; r < M.rows(); ++r) col[static_cast<size_t>(r)] = M(r, fs[j]);
      reduce_mod(U[static_cast<size_t>(a.target)], col.data());
      for (size_t i = 0; i < ft.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = col[static_cast<size_t>(ft[i])];
    }
    R.maps.push_back(std::move(m));
  }
  return R;
}

SubspaceTuple image_of(const Morphism& f) {
  SubspaceTuple U;
  for (const auto& m : f) U.push_back(row_reduce(m.transpose()));
  return U;
}

SubspaceTuple kernel_of(const Morphism& f) {
  SubspaceTuple U;
  for (const auto& m : f) U.push_back(row_reduce(nullspace(m)));
  return U;
}

DimVector dim_of(const SubspaceTuple& U) {
  std::vector<int> d;
  for (const auto& e : U) d.push_back(e.rank());
  return DimVector(std::move(d));
}

void for_each_subspace(int q, int m, int k, const std::function<void(const FqMatrix&)>& visit) {
  if (k < 0 || k > m) return;
  std::vector<int> piv(static_cast<size_t>(k));
  std::iota(piv.begin(), piv.end(), 0);
  FqMatrix R(q, k, m);
  for (;;) {
    // free positions: (row i, column j) with j > piv[i] and j not a pivot
    std::vector<std::pair<int, int>> slots;
    std::vector<char> is_piv(static_cast<size_t>(m), 0);
    for (int p : piv) is_piv[static_cast<size_t>(p)] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = piv[static_cast<size_t>(i)] + 1; j < m; ++j)
        if (!is_piv[static_cast<size_t>(j)]) slots.emplace_back(i, j);
    std::fill(R.data().begin(), R.data().end(), 0);
    for (int i = 0; i < k; ++i) R.at(i, piv[static_cast<size_t>(i)]) = 1;
    std::vector<int> digits(slots.size(), 0);
    for (;;) {
      visit(R);
      size_t pos = 0;
      while (pos < digits.size()) {
        auto [i, j] = slots[pos];
        if (++digits[pos] < q) {
          R.at(i, j) = static_cast<uint8_t>(digits[pos]);
          break;
        }
        digits[pos] = 0;
        R.at(i, j) = 0;
        ++pos;
      }
      if (pos == digits.size()) break;
    }
    // next pivot combination
    int i = k - 1;
    while (i >= 0 && piv[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++piv[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j) - 1] + 1;
  }
}

namespace {

void stable_step(const Quiver& Q, const Representation& X, const DimVector& d, size_t pos, SubspaceTuple& U,
                 const std::function<void(const SubspaceTuple&)>& visit) {
  const auto& order = Q.topological_order();
  if (pos == order.size()) {
    visit(U);
    return;
  }
  const int t = order[pos];
  const int n = X.dim[t];
  const int q = Q.q();
  FqMatrix gens(q, 0, n);
  for (size_t ai = 0; ai < Q.arrows().size(); ++ai) {
    const auto& a = Q.arrows()[ai];
    if (a.target != t) continue;
    const Echelon& Us = U[static_cast<size_t>(a.source)];
    if (Us.rank() == 0) continue;
    gens = vstack(gens, Us.basis * X.maps[ai].transpose());
  }
  const Echelon W = row_reduce(gens);
  const int need = d[t] - W.rank();
  if (need < 0) return;
  std::vector<int> free;
  {
    std::vector<char> piv(static_cast<size_t>(n), 0);
    for (int p : W.pivots) piv[static_cast<size_t>(p)] = 1;
    for (int c = 0; c < n; ++c)
      if (!piv[static_cast<size_t>(c)]) free.push_back(c);
  }
  if (need == 0) {
    U[static_cast<size_t>(t)] = W;
    stable_step(Q, X, d, pos + 1, U, visit);
    return;
  }
  for_each_subspace(q, static_cast<int>(free.size()), need, [&](const FqMatrix& R) {
    FqMatrix lifted(q, R.rows(), n);
    for (int i = 0; i < R.rows(); ++i)
      for (size_t j = 0; j < free.size(); ++j) lifted.at(i, free[j]) = R(i, static_cast<int>(j));
    U[static_cast<size_t>(t)] = W.rank() ? row_reduce(vstack(W.basis, lifted)) : row_reduce(lifted);
    stable_step(Q, X, d, pos + 1, U, visit);
  });
}

} // namespace

void for_each_stable_subspace(const Quiver& Q, const Representation& X, const DimVector& d,
                              const std::function<void(const SubspaceTuple&)>& visit) {
  if (!d.fits_in(X.dim)) return;
  SubspaceTuple U(static_cast<size_t>(Q.rank()));
  for (int i = 0; i < Q.rank(); ++i) U[static_cast<size_t>(i)].basis = FqMatrix(Q.q(), 0, X.dim[i]);
  stable_step(Q, X, d, 0, U, visit);
}

} // namespace hallkit
