#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hallkit {

/// Lookup tables for F_p, p in {2,3,5,7}.
class PrimeField {
public:
  static const PrimeField& get(int p);

  int p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;
  uint8_t reduce(long long x) const;

private:
  explicit PrimeField(int p);
  int p_;
  uint8_t add_[7][7]{};
  uint8_t mul_[7][7]{};
  uint8_t neg_[7]{};
  uint8_t inv_[7]{};
};

bool is_supported_prime(int q);

class FqMatrix {
public:
  FqMatrix() = default;
  FqMatrix(int q, int rows, int cols);
  static FqMatrix identity(int q, int n);

  int q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return PrimeField::get(q_); }

  uint8_t operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  uint8_t& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  uint8_t* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const uint8_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }
  std::span<const uint8_t> data() const { return data_; }
  std::span<uint8_t> data() { return data_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  FqMatrix transpose() const;
  FqMatrix scaled(uint8_t c) const;
  FqMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const FqMatrix& b);
  std::string to_string() const;

  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend bool operator==(const FqMatrix& a, const FqMatrix& b) = default;
  friend auto operator<=>(const FqMatrix& a, const FqMatrix& b) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  uint8_t q_ = 2;
  std::vector<uint8_t> data_;
};

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);

/// Reduced row echelon form with zero rows removed.
struct Echelon {
  FqMatrix basis;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon row_reduce(FqMatrix m);
int rank(const FqMatrix& m);

/// Rows form a basis of {x : m x = 0}.
FqMatrix nullspace(const FqMatrix& m);

/// Returns false when m is singular.
bool invert(const FqMatrix& m, FqMatrix& out);

/// Reduce v (length = basis.cols()) modulo the row space of an echelon basis.
void reduce_mod(const Echelon& e, uint8_t* v);

/// Coordinates of a vector lying in the row space of an echelon basis.
std::vector<uint8_t> coordinates_in(const Echelon& e, std::span<const uint8_t> v);

/// Polynomials over F_p, coefficients low degree first, no trailing zeros.
struct FpPoly {
  std::vector<uint8_t> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

FpPoly poly_monic(const FpPoly& f, int p);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b, int p);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b, int p);
void poly_divmod(const FpPoly& a, const FpPoly& b, int p, FpPoly& quot, FpPoly& rem);
FpPoly poly_mod(const FpPoly& a, const FpPoly& b, int p);
FpPoly poly_gcd(FpPoly a, FpPoly b, int p);
FpPoly poly_powmod(FpPoly base, unsigned long long e, const FpPoly& m, int p);

/// Distinct monic irreducible factors of f with their multiplicities.
std::vector<std::pair<FpPoly, int>> poly_factor(const FpPoly& f, int p, uint64_t seed = 1);

/// p(A) for a square matrix A.
FqMatrix poly_eval(const FpPoly& f, const FqMatrix& a);

/// Minimal polynomial of the block-diagonal operator with the given square blocks.
FpPoly minimal_polynomial(std::span<const FqMatrix> blocks, int p);

} // namespace hallkit
