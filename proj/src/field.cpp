#include "hallkit/field.hpp"

#include "hallkit/errors.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

namespace hallkit {

bool is_supported_prime(int q) { return q == 2 || q == 3 || q == 5 || q == 7; }

PrimeField::PrimeField(int p) : p_(p) {
  for (int a = 0; a < p; ++a) {
    neg_[a] = static_cast<uint8_t>((p - a) % p);
    for (int b = 0; b < p; ++b) {
      add_[a][b] = static_cast<uint8_t>((a + b) % p);
      mul_[a][b] = static_cast<uint8_t>((a * b) % p);
      if ((a * b) % p == 1) inv_[a] = static_cast<uint8_t>(b);
    }
  }
}

const PrimeField& PrimeField::get(int p) {
  static const std::array<PrimeField, 4> fields{PrimeField(2), PrimeField(3), PrimeField(5),
                                                PrimeField(7)};
  switch (p) {
  case 2: return fields[0];
  case 3: return fields[1];
  case 5: return fields[2];
  case 7: return fields[3];
  default: throw DomainError("unsupported field size " + std::to_string(p) + " (use 2, 3, 5 or 7)");
  }
}

uint8_t PrimeField::inv(uint8_t a) const {
  if (a == 0) throw DomainError("division by zero in F_q");
  return inv_[a];
}

uint8_t PrimeField::reduce(long long x) const {
  long long r = x % p_;
  if (r < 0) r += p_;
  return static_cast<uint8_t>(r);
}

FqMatrix::FqMatrix(int q, int rows, int cols)
    : rows_(rows), cols_(cols), q_(static_cast<uint8_t>(q)),
      data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix shape");
}

FqMatrix FqMatrix::identity(int q, int n) {
  FqMatrix m(q, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](uint8_t x) { return x == 0; });
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(q_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = (*this)(r, c);
  return t;
}

FqMatrix FqMatrix::scaled(uint8_t c) const {
  const auto& f = field();
  FqMatrix out = *this;
  for (auto& x : out.data_) x = f.mul(x, c);
  return out;
}

FqMatrix FqMatrix::block(int r0, int c0, int nr, int nc) const {
  FqMatrix b(q_, nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) b.at(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void FqMatrix::set_block(int r0, int c0, const FqMatrix& b) {
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) at(r0 + r, c0 + c) = b(r, c);
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    if (r) os << ';';
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << int((*this)(r, c));
  }
  os << ']';
  return os.str();
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  const auto& f = a.field();
  FqMatrix out(a.q_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    uint8_t* o = out.row(i);
    const uint8_t* ar = a.row(i);
    for (int k = 0; k < a.cols_; ++k) {
      const uint8_t x = ar[k];
      if (!x) continue;
      const uint8_t* br = b.row(k);
      for (int j = 0; j < b.cols_; ++j) o[j] = f.add(o[j], f.mul(x, br[j]));
    }
  }
  return out;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  const auto& f = a.field();
  FqMatrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = f.add(a.data_[i], b.data_[i]);
  return out;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
  const auto& f = a.field();
  FqMatrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = f.sub(a.data_[i], b.data_[i]);
  return out;
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  FqMatrix out(a.q(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols()) throw DomainError("vstack column mismatch");
  FqMatrix out(a.q(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Echelon row_reduce(FqMatrix m) {
  const auto& f = m.field();
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(m.row(piv), m.row(piv) + cols, m.row(r));
    uint8_t* pr = m.row(r);
    const uint8_t s = f.inv(pr[c]);
    for (int j = c; j < cols; ++j) pr[j] = f.mul(pr[j], s);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint8_t* ri = m.row(i);
      const uint8_t x = ri[c];
      if (!x) continue;
      const uint8_t nx = f.neg(x);
      for (int j = c; j < cols; ++j) ri[j] = f.add(ri[j], f.mul(nx, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.basis = m.block(0, 0, r, cols);
  e.pivots = std::move(pivots);
  return e;
}

int rank(const FqMatrix& m) { return row_reduce(m).rank(); }

FqMatrix nullspace(const FqMatrix& m) {
  const Echelon e = row_reduce(m);
  const auto& f = m.field();
  const int n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  FqMatrix out(m.q(), n - e.rank(), n);
  int k = 0;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    out.at(k, fc) = 1;
    for (int i = 0; i < e.rank(); ++i) out.at(k, e.pivots[i]) = f.neg(e.basis(i, fc));
    ++k;
  }
  return out;
}

bool invert(const FqMatrix& m, FqMatrix& out) {
  if (!m.is_square()) throw DomainError("inverse of non-square matrix");
  const int n = m.rows();
  const Echelon e = row_reduce(hstack(m, FqMatrix::identity(m.q(), n)));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return false;
  out = e.basis.block(0, n, n, n);
  return true;
}

void reduce_mod(const Echelon& e, uint8_t* v) {
  const auto& f = e.basis.field();
  const int cols = e.basis.cols();
  for (int i = 0; i < e.rank(); ++i) {
    const uint8_t x = v[e.pivots[i]];
    if (!x) continue;
    const uint8_t nx = f.neg(x);
    const uint8_t* br = e.basis.row(i);
    for (int j = e.pivots[i]; j < cols; ++j) v[j] = f.add(v[j], f.mul(nx, br[j]));
  }
}

std::vector<uint8_t> coordinates_in(const Echelon& e, std::span<const uint8_t> v) {
  std::vector<uint8_t> out(e.rank());
  for (int i = 0; i < e.rank(); ++i) out[i] = v[e.pivots[i]];
  return out;
}

// ---------------------------------------------------------------- polynomials

namespace {

void trim(FpPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

FpPoly poly_x() { return FpPoly{{0, 1}}; }
FpPoly poly_one() { return FpPoly{{1}}; }

FpPoly derivative(const FpPoly& f, int p) {
  const auto& F = PrimeField::get(p);
  FpPoly d;
  for (int i = 1; i <= f.degree(); ++i) d.c.push_back(F.mul(F.reduce(i), f.c[i]));
  trim(d);
  return d;
}

FpPoly pth_root(const FpPoly& f, int p) {
  FpPoly r;
  for (int i = 0; i <= f.degree(); i += p) r.c.push_back(f.c[i]);
  trim(r);
  return r;
}

FpPoly poly_div(const FpPoly& a, const FpPoly& b, int p) {
  FpPoly quot, rem;
  poly_divmod(a, b, p, quot, rem);
  return quot;
}

void squarefree(const FpPoly& f, int p, int mult, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() < 1) return;
  const FpPoly d = derivative(f, p);
  if (d.is_zero()) {
    squarefree(pth_root(f, p), p, mult * p, out);
    return;
  }
  FpPoly c = poly_gcd(f, d, p);
  FpPoly w = poly_div(f, c, p);
  int i = 1;
  while (w.degree() > 0) {
    const FpPoly y = poly_gcd(w, c, p);
    const FpPoly z = poly_div(w, y, p);
    if (z.degree() > 0) out.emplace_back(poly_monic(z, p), i * mult);
    ++i;
    w = y;
    c = poly_div(c, y, p);
  }
  if (c.degree() > 0) squarefree(pth_root(c, p), p, mult * p, out);
}

void equal_degree(const FpPoly& g, int d, int p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const int n = g.degree();
  for (;;) {
    FpPoly a;
    for (int i = 0; i < n; ++i) a.c.push_back(static_cast<uint8_t>(rng() % p));
    trim(a);
    if (a.degree() < 1) continue;
    FpPoly b;
    if (p == 2) {
      FpPoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = poly_mod(poly_mul(t, t, p), g, p);
        FpPoly s = b;
        for (size_t k = 0; k < std::max(s.c.size(), t.c.size()); ++k) {
          if (k >= s.c.size()) s.c.push_back(0);
          s.c[k] = static_cast<uint8_t>(s.c[k] ^ (k < t.c.size() ? t.c[k] : 0));
        }
        trim(s);
        b = s;
      }
    } else {
      unsigned long long e = 1;
      for (int i = 0; i < d; ++i) e *= static_cast<unsigned long long>(p);
      b = poly_sub(poly_powmod(a, (e - 1) / 2, g, p), poly_one(), p);
    }
    const FpPoly h = poly_gcd(g, b, p);
    if (h.degree() > 0 && h.degree() < n) {
      equal_degree(h, d, p, rng, out);
      equal_degree(poly_div(g, h, p), d, p, rng, out);
      return;
    }
  }
}

} // namespace

FpPoly poly_monic(const FpPoly& f, int p) {
  if (f.is_zero()) return f;
  const auto& F = PrimeField::get(p);
  const uint8_t s = F.inv(f.c.back());
  FpPoly r = f;
  for (auto& x : r.c) x = F.mul(x, s);
  return r;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, int p) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& F = PrimeField::get(p);
  FpPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  trim(r);
  return r;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b, int p) {
  const auto& F = PrimeField::get(p);
  FpPoly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = F.sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  trim(r);
  return r;
}

void poly_divmod(const FpPoly& a, const FpPoly& b, int p, FpPoly& quot, FpPoly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& F = PrimeField::get(p);
  rem = a;
  quot.c.assign(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, 0);
  const uint8_t lead_inv = F.inv(b.c.back());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const uint8_t s = F.mul(rem.c.back(), lead_inv);
    quot.c[shift] = s;
    for (int i = 0; i <= b.degree(); ++i)
      rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(s, b.c[i]));
    trim(rem);
  }
  trim(quot);
}

FpPoly poly_mod(const FpPoly& a, const FpPoly& b, int p) {
  FpPoly quot, rem;
  poly_divmod(a, b, p, quot, rem);
  return rem;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, int p) {
  while (!b.is_zero()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

FpPoly poly_powmod(FpPoly base, unsigned long long e, const FpPoly& m, int p) {
  FpPoly result = poly_one();
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1ULL) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::pair<FpPoly, int>> poly_factor(const FpPoly& f, int p, uint64_t seed) {
  std::vector<std::pair<FpPoly, int>> sqf;
  squarefree(poly_monic(f, p), p, 1, sqf);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<FpPoly, int>> out;
  for (auto& [z0, mult] : sqf) {
    FpPoly z = z0;
    FpPoly h = poly_mod(poly_x(), z, p);
    for (int d = 1; z.degree() >= 2 * d; ++d) {
      h = poly_powmod(h, static_cast<unsigned long long>(p), z, p);
      const FpPoly g = poly_gcd(z, poly_sub(h, poly_x(), p), p);
      if (g.degree() > 0) {
        std::vector<FpPoly> parts;
        equal_degree(g, d, p, rng, parts);
        for (auto& part : parts) out.emplace_back(poly_monic(part, p), mult);
        z = poly_div(z, g, p);
        h = poly_mod(h, z, p);
      }
    }
    if (z.degree() > 0) out.emplace_back(poly_monic(z, p), mult);
  }
  // Deterministic order: by degree, then coefficients.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  return out;
}

FqMatrix poly_eval(const FpPoly& f, const FqMatrix& a) {
  const int n = a.rows();
  FqMatrix r(a.q(), n, n);
  const auto& F = a.field();
  for (int i = f.degree(); i >= 0; --i) {
    r = r * a;
    for (int k = 0; k < n; ++k) r.at(k, k) = F.add(r(k, k), f.c[i]);
  }
  return r;
}

FpPoly minimal_polynomial(std::span<const FqMatrix> blocks, int p) {
  const auto& F = PrimeField::get(p);
  size_t len = 0;
  int total = 0;
  for (const auto& b : blocks) {
    len += b.data().size();
    total += b.rows();
  }
  if (total == 0) return poly_one();
  // Rows of the form [vec(A^k) | e_k], kept reduced against earlier pivots.
  const size_t width = len + static_cast<size_t>(total) + 1;
  std::vector<std::vector<uint8_t>> rows;
  std::vector<size_t> pivots;
  std::vector<FqMatrix> power;
  for (const auto& b : blocks) power.push_back(FqMatrix::identity(p, b.rows()));
  for (int k = 0; k <= total; ++k) {
    std::vector<uint8_t> v(width, 0);
    size_t off = 0;
    for (const auto& m : power) {
      std::copy(m.data().begin(), m.data().end(), v.begin() + static_cast<long>(off));
      off += m.data().size();
    }
    v[len + static_cast<size_t>(k)] = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
      const uint8_t x = v[pivots[i]];
      if (!x) continue;
      const uint8_t nx = F.neg(x);
      for (size_t j = 0; j < width; ++j) v[j] = F.add(v[j], F.mul(nx, rows[i][j]));
    }
    size_t piv = len;
    for (size_t j = 0; j < len; ++j)
      if (v[j]) { piv = j; break; }
    if (piv == len) {
      FpPoly m;
      m.c.assign(v.begin() + static_cast<long>(len), v.begin() + static_cast<long>(len) + k + 1);
      trim(m);
      return poly_monic(m, p);
    }
    const uint8_t s = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, s);
    for (size_t i = 0; i < rows.size(); ++i) {
      const uint8_t x = rows[i][piv];
      if (!x) continue;
      const uint8_t nx = F.neg(x);
      for (size_t j = 0; j < width; ++j) rows[i][j] = F.add(rows[i][j], F.mul(nx, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    for (size_t i = 0; i < power.size(); ++i) power[i] = power[i] * blocks[i];
  }
  throw InvariantError("minimal polynomial degree exceeded the dimension");
}

} // namespace hallkit
