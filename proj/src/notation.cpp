#include "hallkit/notation.hpp"

#include "hallkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hallkit {

namespace {

/// Recursive-descent reader over one expression; Alg supplies the algebra operations.
template <class Alg>
class Reader {
public:
  using Elem = typename Alg::Elem;

  Reader(std::string_view text, Alg& alg, Notation& nt) : s_(text), alg_(alg), nt_(nt) {}

  Elem whole() {
    Elem x = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

  Elem sum() {
    skip();
    Elem acc = alg_.scalar(Coeff(0));
    int sign = 1;
    if (eat('+')) sign = 1;
    else if (eat('-')) sign = -1;
    for (;;) {
      Elem p = product();
      acc = sign > 0 ? acc + p : acc - p;
      skip();
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else return acc;
    }
  }

  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }

  Elem product(bool stop_at_bracket = false) {
    Elem acc = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        if (stop_at_bracket && at('<')) return acc;
        acc = alg_.mul(acc, factor());
      } else if (starts_factor()) {
        acc = alg_.mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 'u' || c == 'K' || c == 'v' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected an integer");
    long n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_++] - '0');
      if (n > 1000000000L) error("integer too large");
    }
    return neg ? -n : n;
  }

  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (eat(']')) return out;
    do out.push_back(static_cast<int>(integer()));
    while (eat(','));
    expect(']');
    return out;
  }

  ClassId address() {
    skip();
    const size_t start = pos_;
    if (at('{')) {
      int depth = 0;
      do {
        if (s_[pos_] == '{') ++depth;
        else if (s_[pos_] == '}') --depth;
        ++pos_;
      } while (depth > 0 && pos_ < s_.size());
      if (depth != 0) error("unbalanced braces");
    } else {
      int_list();
      if (eat('#')) integer();
    }
    return nt_.parse_class(s_.substr(start, pos_ - start));
  }

  /// Exponent after '^': "(t)" marks a divided power, a bare integer an ordinary one.
  int exponent(bool& divided) {
    divided = false;
    if (!eat('^')) return 1;
    if (eat('(')) {
      const long t = integer();
      expect(')');
      divided = true;
      return static_cast<int>(t);
    }
    return static_cast<int>(integer());
  }

  Elem power(const Elem& x, int t) {
    if (t < 0) error("negative power");
    Elem r = alg_.scalar(Coeff(1));
    for (int i = 0; i < t; ++i) r = alg_.mul(r, x);
    return r;
  }

  Elem factor() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return alg_.neg(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class r(integer());
      if (eat('/')) {
        const long d = integer();
        if (d == 0) error("zero denominator");
        r /= d;
      }
      return alg_.scalar(Coeff(r));
    }
    if (c == 'v') {
      ++pos_;
      long e = 1;
      if (eat('^')) {
        if (eat('(')) {
          e = integer();
          expect(')');
        } else {
          e = integer();
        }
      }
      return alg_.scalar(Coeff::v_power(alg_.q(), e));
    }
    if (c == 'K') {
      ++pos_;
      const std::vector<int> g = int_list();
      if (static_cast<int>(g.size()) != alg_.rank()) error("torus index has the wrong length");
      bool divided = false;
      const int t = exponent(divided);
      if (divided) error("divided powers apply to generators only");
      return power(alg_.torus(KClass(g)), t);
    }
    if (c == 'u') {
      ++pos_;
      int sign = 0;
      if (pos_ < s_.size() && s_[pos_] == '+') sign = 1, ++pos_;
      else if (pos_ < s_.size() && s_[pos_] == '-') sign = -1, ++pos_;
      const ClassId cls = address();
      bool divided = false;
      const int t = exponent(divided);
      if (divided) return alg_.divided(cls, t, sign);
      return power(alg_.u(cls, sign), t);
    }
    if (c == '(') {
      ++pos_;
      Elem x = sum();
      expect(')');
      bool divided = false;
      const int t = exponent(divided);
      if (divided) error("divided powers apply to generators only");
      return power(x, t);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  Alg& alg_;
  Notation& nt_;
};

struct HallOps {
  using Elem = HallElement;
  HallAlgebra& H;
  int q() const { return H.q(); }
  int rank() const { return H.quiver().rank(); }
  Elem scalar(const Coeff& c) const { return c * H.one(); }
  Elem neg(const Elem& x) const { return Coeff(-1) * x; }
  Elem torus(const KClass& g) const { return H.torus(g); }
  Elem u(ClassId c, int sign) const {
    if (sign < 0) throw ParseError("u-[...] belongs to the double; use u[...] or u+[...] here");
    return H.u(c);
  }
  Elem mul(const Elem& x, const Elem& y) const { return H.mul(x, y); }
  Elem divided(ClassId c, int t, int sign) const {
    if (sign < 0) throw ParseError("u-[...] belongs to the double");
    if (t < 0) throw DomainError("negative divided power");
    if (t == 0) return H.one();
    Catalog& cat = H.catalog();
    if (!cat.is_exceptional(c)) throw DomainError("divided powers need an exceptional class");
    const KClass d = cat.at(c).dim.k();
    const long e = H.quiver().euler_form(d, d);
    return H.v_pow(e * t * (t - 1)) * H.u(cat.multiple(c, t));
  }
};

struct DoubleOps {
  using Elem = DoubleElement;
  DoubleAlgebra& D;
  int q() const { return D.q(); }
  int rank() const { return D.quiver().rank(); }
  Elem scalar(const Coeff& c) const { return D.scalar(c); }
  Elem neg(const Elem& x) const { return Coeff(-1) * x; }
  Elem torus(const KClass& g) const { return D.torus(g); }
  Elem u(ClassId c, int sign) const { return D.u(c, sign == 0 ? 1 : sign); }
  Elem mul(const Elem& x, const Elem& y) const { return D.mul(x, y); }
  Elem divided(ClassId c, int t, int sign) const { return D.divided_power(c, t, sign == 0 ? 1 : sign); }
};

std::string kclass_text(const KClass& k) {
  std::string out = "[";
  for (int i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
  return out + "]";
}

} // namespace

DimVector Notation::parse_dim(std::string_view text) const {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c) != 0; }), t.end());
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ParseError("unbalanced brackets in dimension vector " + std::string(text));
    t = t.substr(1, t.size() - 2);
  }
  std::vector<int> v;
  size_t start = 0;
  while (start <= t.size()) {
    const size_t end = std::min(t.find(',', start), t.size());
    const std::string part = t.substr(start, end - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad dimension vector " + std::string(text));
    v.push_back(std::stoi(part));
    start = end + 1;
  }
  if (static_cast<int>(v.size()) != e_.quiver().rank())
    throw ParseError("dimension vector " + std::string(text) + " does not match the quiver's " +
                     std::to_string(e_.quiver().rank()) + " vertices");
  return DimVector(v);
}

const std::vector<ClassId>& Notation::candidates(const DimVector& d) {
  auto it = candidates_.find(d);
  if (it != candidates_.end()) return it->second;
  std::vector<ClassId> list;
  if (enumerable(e_.catalog(), d)) list = e_.catalog().enumerate(d);
  else list = {find_exceptional(e_.catalog(), d)};
  return candidates_.emplace(d, std::move(list)).first->second;
}

ClassId Notation::parse_class(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unbalanced braces in " + std::string(text));
    const std::string_view inner = text.substr(1, text.size() - 2);
    ClassId sum = 0;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || (inner[i] == '+' && depth == 0)) {
        sum = e_.catalog().direct_sum(sum, parse_class(inner.substr(start, i - start)));
        start = i + 1;
      } else if (inner[i] == '{' || inner[i] == '[') {
        ++depth;
      } else if (inner[i] == '}' || inner[i] == ']') {
        --depth;
      }
    }
    return sum;
  }
  const size_t hash = text.find('#');
  const DimVector d = parse_dim(text.substr(0, hash));
  const auto& list = candidates(d);
  if (hash == std::string_view::npos) {
    if (list.size() == 1) return list.front();
    nlohmann::json options = nlohmann::json::array();
    for (ClassId c : list) options.push_back(class_entry(c));
    throw DomainError("dimension vector " + d.to_string() + " carries " + std::to_string(list.size()) +
                      " classes; choose one with #k: " + options.dump());
  }
  const std::string idx(text.substr(hash + 1));
  if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad class index in " + std::string(text));
  const size_t k = std::stoul(idx);
  if (k >= list.size())
    throw DomainError("class index " + idx + " out of range; " + d.to_string() + " carries " +
                      std::to_string(list.size()) + " classes");
  return list[k];
}

ClassId Notation::parse_exceptional(std::string_view text) {
  if (text.find('#') != std::string_view::npos) return parse_class(text);
  return find_exceptional(e_.catalog(), parse_dim(text));
}

std::string Notation::label(ClassId c) {
  Catalog& cat = e_.catalog();
  const DimVector& d = cat.at(c).dim;
  if (!enumerable(cat, d) && c != 0 && !cat.is_exceptional(c)) {
    const auto& parts = cat.at(c).decomposition;
    if (parts.size() == 1) throw DomainError("indecomposable class of dimension " + d.to_string() + " is beyond the scan caps and has no text label");
    std::string out = "{";
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + label(parts[i]);
    return out + "}";
  }
  const auto& list = candidates(d);
  const auto it = std::find(list.begin(), list.end(), c);
  if (it == list.end()) throw DomainError("class " + std::to_string(c) + " has no text label");
  std::string out = kclass_text(d.k());
  if (list.size() > 1) out += "#" + std::to_string(it - list.begin());
  return out;
}

nlohmann::json Notation::class_entry(ClassId c) {
  Catalog& cat = e_.catalog();
  const IsoClass& ic = cat.at(c);
  nlohmann::json parts = nlohmann::json::array();
  for (ClassId p : ic.decomposition) parts.push_back(label(p));
  return {{"label", label(c)},
          {"dim", ic.dim.vec()},
          {"summands", parts},
          {"aut_count", ic.aut_count.get_str()},
          {"end_dim", ic.end_dim},
          {"indecomposable", ic.indecomposable()},
          {"exceptional", c != 0 && cat.is_exceptional(c)}};
}

HallElement Notation::parse_hall(std::string_view text) {
  HallOps ops{e_.hall()};
  return Reader<HallOps>(text, ops, *this).whole();
}

DoubleElement Notation::parse_double(std::string_view text) {
  DoubleOps ops{e_.dbl()};
  return Reader<DoubleOps>(text, ops, *this).whole();
}

HallTensor Notation::parse_tensor(std::string_view text) {
  HallOps ops{e_.hall()};
  Reader<HallOps> r(text, ops, *this);
  HallTensor out;
  if (r.done()) r.error("empty tensor");
  int sign = r.eat('-') ? -1 : (r.eat('+'), 1);
  for (;;) {
    Coeff c(sign);
    if (!r.at('<')) {
      const HallElement s = r.product(true);
      if (s.size() > 1 || (s.size() == 1 && s.terms().begin()->first != HallBasis{0, KClass::zero(ops.rank())}))
        r.error("a tensor term's prefix must be a scalar");
      c *= s.coeff({0, KClass::zero(ops.rank())});
    }
    r.expect('<');
    const HallElement x = r.sum();
    r.expect('|');
    const HallElement y = r.sum();
    r.expect('>');
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) out.add({a, b}, c * ca * cb);
    if (r.done()) return out;
    if (r.eat('+')) sign = 1;
    else if (r.eat('-')) sign = -1;
    else r.error("expected '+' or '-' between tensor terms");
  }
}

std::string Notation::term_text(const Coeff& c, const std::string& monomial) const {
  if (monomial.empty()) return c.to_string();
  if (c == Coeff(1)) return monomial;
  if (c == Coeff(-1)) return "-" + monomial;
  return c.to_string() + "*" + monomial;
}

std::string Notation::hall_monomial(const HallBasis& b) {
  std::string out;
  if (b.cls != 0) out = "u" + label(b.cls);
  if (!b.k.is_zero()) out += (out.empty() ? "" : " ") + ("K" + kclass_text(b.k));
  return out;
}

std::string Notation::double_monomial(const Monomial& m) {
  std::string out;
  auto put = [&](const std::string& s) { out += (out.empty() ? "" : " ") + s; };
  if (m.minus != 0) put("u-" + label(m.minus));
  if (!m.k.is_zero()) put("K" + kclass_text(m.k));
  if (m.plus != 0) put("u+" + label(m.plus));
  return out;
}

namespace {

struct Row {
  std::string monomial;
  std::string text;
  nlohmann::json json;
};

std::string join_rows(std::vector<Row>& rows) {
  if (rows.empty()) return "0";
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.monomial < b.monomial; });
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) out += (i ? " + " : "") + rows[i].text;
  return out;
}

nlohmann::json rows_json(std::vector<Row>& rows) {
  const std::string expr = join_rows(rows);
  nlohmann::json terms = nlohmann::json::array();
  for (auto& r : rows) terms.push_back(std::move(r.json));
  return {{"expr", expr}, {"terms", terms}};
}

} // namespace

std::string Notation::render(const HallElement& x) { return to_json(x).at("expr").get<std::string>(); }
std::string Notation::render(const DoubleElement& x) { return to_json(x).at("expr").get<std::string>(); }
std::string Notation::render(const HallTensor& t) { return to_json(t).at("expr").get<std::string>(); }

nlohmann::json Notation::to_json(const HallElement& x) {
  std::vector<Row> rows;
  for (const auto& [b, c] : x.terms()) {
    const std::string m = hall_monomial(b);
    rows.push_back({m, term_text(c, m),
                    {{"coeff", c.to_json()}, {"class", b.cls == 0 ? nlohmann::json(nullptr) : nlohmann::json(label(b.cls))},
                     {"k", b.k.vec()}}});
  }
  return rows_json(rows);
}

nlohmann::json Notation::to_json(const DoubleElement& x) {
  std::vector<Row> rows;
  auto lab = [&](ClassId c) { return c == 0 ? nlohmann::json(nullptr) : nlohmann::json(label(c)); };
  for (const auto& [m, c] : x.terms()) {
    const std::string mono = double_monomial(m);
    rows.push_back({mono, term_text(c, mono),
                    {{"coeff", c.to_json()}, {"minus", lab(m.minus)}, {"k", m.k.vec()}, {"plus", lab(m.plus)}}});
  }
  return rows_json(rows);
}

nlohmann::json Notation::to_json(const HallTensor& t) {
  std::vector<Row> rows;
  for (const auto& [k, c] : t.terms()) {
    std::string l = hall_monomial(k.first), r = hall_monomial(k.second);
    if (l.empty()) l = "1";
    if (r.empty()) r = "1";
    const std::string mono = "<" + l + " | " + r + ">";
    rows.push_back({mono, term_text(c, mono),
                    {{"coeff", c.to_json()}, {"left", hall_monomial(k.first)}, {"right", hall_monomial(k.second)}}});
  }
  return rows_json(rows);
}

} // namespace hallkit
