#include "hallkit/coeff.hpp"

#include "hallkit/errors.hpp"

#include <sstream>

namespace hallkit {

namespace {

std::string fraction(const mpq_class& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpq_class parse_fraction(const std::string& s) {
  mpq_class x;
  if (x.set_str(s, 10) != 0 || x.get_den() == 0) throw ParseError("bad rational literal '" + s + "'");
  x.canonicalize();
  return x;
}

mpq_class rational_power(long base, long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

/// Text for a rational used as a factor: "3", "3/2", "-1/2".
std::string plain(const mpq_class& x) { return x.get_den() == 1 ? x.get_num().get_str() : x.get_str(); }

} // namespace

Coeff::Coeff(int q, mpq_class a, mpq_class b) : q_(q), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (q_ == 0 && sgn(b_) != 0) throw DomainError("irrational coefficient without a field size");
}

Coeff Coeff::v_power(int q, long e) {
  if (q <= 1) throw DomainError("v needs a field size");
  const long half = (e >= 0 ? e : e - 1) / 2;  // floor(e/2)
  const mpq_class s = rational_power(q, half);
  if (e - 2 * half == 0) return Coeff(q, s, 0);
  return Coeff(q, 0, s);
}

int Coeff::join(int p, int q) {
  if (p == 0) return q;
  if (q == 0 || p == q) return p;
  throw DomainError("coefficients from different fields (q=" + std::to_string(p) + " and q=" + std::to_string(q) + ")");
}

void Coeff::bind(int q) { q_ = join(q_, q); }

Coeff& Coeff::operator+=(const Coeff& o) {
  bind(o.q_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  bind(o.q_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  bind(o.q_);
  const mpq_class a = a_ * o.a_ + b_ * o.b_ * q_;
  const mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) { return *this *= o.inverse(); }

Coeff operator-(Coeff x) {
  x.a_ = -x.a_;
  x.b_ = -x.b_;
  return x;
}

Coeff Coeff::inverse() const {
  const mpq_class norm = a_ * a_ - b_ * b_ * q_;
  if (sgn(norm) == 0) throw DomainError("division by zero coefficient");
  return Coeff(q_, a_ / norm, -b_ / norm);
}

Coeff Coeff::pow(long e) const {
  Coeff base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Coeff r(1);
  r.q_ = q_;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool operator==(const Coeff& x, const Coeff& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.q_ == y.q_;
}

nlohmann::json Coeff::to_json() const { return {{"a", fraction(a_)}, {"b", fraction(b_)}}; }

Coeff Coeff::from_json(const nlohmann::json& j, int q) {
  try {
    return Coeff(q, parse_fraction(j.at("a").get<std::string>()), parse_fraction(j.at("b").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed coefficient: ") + e.what());
  }
}

std::string Coeff::to_string() const {
  if (sgn(b_) == 0) return plain(a_);
  std::string vt;
  if (b_ == 1) vt = "v";
  else if (b_ == -1) vt = "-v";
  else vt = plain(b_) + "*v";
  if (sgn(a_) == 0) return vt;
  std::ostringstream os;
  os << '(' << plain(a_) << (vt[0] == '-' ? "" : "+") << vt << ')';
  return os.str();
}

Coeff qbracket(int q, int l, int d) {
  if (l < 0) throw DomainError("quantum integer of a negative number");
  Coeff s(0);
  for (int k = 0; k < l; ++k) s += Coeff::v_power(q, static_cast<long>(d) * (l - 1 - 2 * k));
  return s;
}

Coeff qbar(int q, int l, int d) {
  if (l < 0) throw DomainError("quantum integer of a negative number");
  Coeff s(0);
  for (int k = 0; k < l; ++k) s += Coeff::v_power(q, 2L * d * k);
  return s;
}

Coeff qfact(int q, int l, int d) {
  Coeff r = Coeff::v_power(q, 0);
  for (int t = 1; t <= l; ++t) r *= qbracket(q, t, d);
  return r;
}

Coeff qbarfact(int q, int l, int d) {
  Coeff r = Coeff::v_power(q, 0);
  for (int t = 1; t <= l; ++t) r *= qbar(q, t, d);
  return r;
}

Coeff qbinom(int q, int l, int i, int d) {
  if (i < 0 || i > l) throw DomainError("binomial index out of range");
  return qfact(q, l, d) / (qfact(q, i, d) * qfact(q, l - i, d));
}

Coeff qbarbinom(int q, int l, int i, int d) {
  if (i < 0 || i > l) throw DomainError("binomial index out of range");
  return qbarfact(q, l, d) / (qbarfact(q, i, d) * qbarfact(q, l - i, d));
}

Coeff alternating_binomial_sum(int q, int l, int d) {
  Coeff s(0);
  for (int i = 0; i <= l; ++i) {
    Coeff t = Coeff::v_power(q, static_cast<long>(d) * i * (i - 1)) * qbarbinom(q, l, i, d);
    s += (i % 2 ? -t : t);
  }
  return s;
}

} // namespace hallkit
