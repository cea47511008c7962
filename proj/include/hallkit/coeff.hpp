#pragma once

#include <gmpxx.h>

#include <string>

#include <json.hpp>

namespace hallkit {

/// a + b*v in Q(v) with v*v = q. A value with q == 0 is a plain rational that adopts
/// the field of whatever it is combined with.
class Coeff {
public:
  Coeff() = default;
  Coeff(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Coeff(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  Coeff(int q, mpq_class a, mpq_class b);

  /// v^e in Q(sqrt q); negative exponents use v^-1 = v/q.
  static Coeff v_power(int q, long e);
  static Coeff v(int q) { return v_power(q, 1); }

  int q() const { return q_; }
  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff x, const Coeff& y) { return x += y; }
  friend Coeff operator-(Coeff x, const Coeff& y) { return x -= y; }
  friend Coeff operator*(Coeff x, const Coeff& y) { return x *= y; }
  friend Coeff operator/(Coeff x, const Coeff& y) { return x /= y; }
  friend Coeff operator-(Coeff x);
  Coeff inverse() const;
  Coeff pow(long e) const;

  /// Componentwise equality; the field tag is ignored when both sides are rational.
  friend bool operator==(const Coeff& x, const Coeff& y);

  nlohmann::json to_json() const;
  static Coeff from_json(const nlohmann::json& j, int q);
  /// Compact text such as "3/2", "-v", "(1+1/2*v)"; accepted back by the expression parser.
  std::string to_string() const;

private:
  void bind(int q);
  static int join(int p, int q);

  int q_ = 0;
  mpq_class a_;
  mpq_class b_;
};

/// [l] with v replaced by v^d.
Coeff qbracket(int q, int l, int d = 1);
/// |l] = (q^l - 1)/(q - 1), with v replaced by v^d.
Coeff qbar(int q, int l, int d = 1);
Coeff qfact(int q, int l, int d = 1);
Coeff qbarfact(int q, int l, int d = 1);
Coeff qbinom(int q, int l, int i, int d = 1);
Coeff qbarbinom(int q, int l, int i, int d = 1);
/// sum_{i=0}^{l} (-1)^i v^{d i(i-1)} |l choose i]_d.
Coeff alternating_binomial_sum(int q, int l, int d = 1);

} // namespace hallkit
