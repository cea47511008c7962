#include "hallkit/quiver.hpp"

#include "hallkit/errors.hpp"
#include "hallkit/field.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hallkit {

namespace {

std::string join(std::span<const int> c) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

void check_lengths(std::span<const int> d, std::span<const int> e, int r) {
  if (static_cast<int>(d.size()) != r || static_cast<int>(e.size()) != r)
    throw DomainError("vector length does not match the number of vertices");
}

} // namespace

bool KClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

int KClass::total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

std::string KClass::to_string() const { return join(c_); }

KClass& KClass::operator+=(const KClass& o) {
  if (o.c_.size() != c_.size()) throw DomainError("K-class length mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  if (o.c_.size() != c_.size()) throw DomainError("K-class length mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

KClass operator-(KClass a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

KClass operator*(int s, KClass a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

DimVector::DimVector(std::vector<int> c) : c_(std::move(c)) {
  if (std::any_of(c_.begin(), c_.end(), [](int x) { return x < 0; }))
    throw DomainError("dimension vector with a negative entry: " + join(c_));
}

bool DimVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

int DimVector::total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool DimVector::fits_in(const DimVector& e) const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > e.c_[i]) return false;
  return true;
}

std::string DimVector::to_string() const { return join(c_); }

DimVector operator+(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension vector length mismatch");
  std::vector<int> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return DimVector(std::move(c));
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension vector length mismatch");
  std::vector<int> c(a.c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return DimVector(std::move(c));
}

DimVector operator*(int s, const DimVector& a) {
  std::vector<int> c(a.c_);
  for (auto& x : c) x *= s;
  return DimVector(std::move(c));
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, int q)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), q_(q) {
  if (vertices_.empty()) throw DomainError("quiver has no vertices");
  if (!is_supported_prime(q_)) throw DomainError("q must be one of 2, 3, 5, 7");
  const int r = rank();
  std::vector<int> indeg(static_cast<size_t>(r), 0);
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= r || a.target < 0 || a.target >= r)
      throw DomainError("arrow endpoint out of range");
    if (a.source == a.target) throw DomainError("quiver has a loop");
    ++indeg[static_cast<size_t>(a.target)];
  }
  std::vector<int> ready;
  for (int i = r - 1; i >= 0; --i)
    if (indeg[static_cast<size_t>(i)] == 0) ready.push_back(i);
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    topo_.push_back(v);
    std::vector<int> next;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[static_cast<size_t>(a.target)] == 0) next.push_back(a.target);
    std::sort(next.rbegin(), next.rend());
    for (int t : next) ready.push_back(t);
  }
  if (static_cast<int>(topo_.size()) != r) throw DomainError("quiver has an oriented cycle");
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto index = [&](const nlohmann::json& v) {
      const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      auto it = std::find(vertices.begin(), vertices.end(), s);
      if (it == vertices.end()) throw DomainError("arrow refers to unknown vertex " + s);
      return static_cast<int>(it - vertices.begin());
    };
    std::vector<Arrow> arrows;
    for (const auto& a : j.value("arrows", nlohmann::json::array()))
      arrows.push_back({index(a.at("from")), index(a.at("to"))});
    return Quiver(std::move(vertices), std::move(arrows), j.value("q", 2));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed quiver description: ") + e.what());
  }
}

Quiver Quiver::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open quiver file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("quiver file " + path + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : arrows_)
    arrows.push_back({{"from", vertices_[static_cast<size_t>(a.source)]},
                      {"to", vertices_[static_cast<size_t>(a.target)]}});
  return {{"q", q_}, {"vertices", vertices_}, {"arrows", arrows}};
}

int Quiver::euler_form(std::span<const int> d, std::span<const int> e) const {
  check_lengths(d, e, rank());
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += d[static_cast<size_t>(i)] * e[static_cast<size_t>(i)];
  for (const auto& a : arrows_) s -= d[static_cast<size_t>(a.source)] * e[static_cast<size_t>(a.target)];
  return s;
}

int Quiver::symmetric_form(std::span<const int> d, std::span<const int> e) const {
  return euler_form(d, e) + euler_form(e, d);
}

long long Quiver::space_dimension(const DimVector& d) const {
  long long s = 0;
  for (const auto& a : arrows_) s += static_cast<long long>(d[a.source]) * d[a.target];
  return s;
}

bool Quiver::is_kronecker() const {
  return rank() == 2 && arrows_.size() == 2 &&
         std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == 0 && a.target == 1; });
}

Quiver a2_quiver(int q) { return Quiver({"1", "2"}, {{0, 1}}, q); }

Quiver a3_quiver(int q) { return Quiver({"1", "2", "3"}, {{0, 1}, {1, 2}}, q); }

Quiver kronecker_quiver(int q) { return Quiver({"1", "2"}, {{0, 1}, {0, 1}}, q); }

} // namespace hallkit
