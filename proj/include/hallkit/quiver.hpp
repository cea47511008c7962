#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace hallkit {

/// Integer vector indexed by vertices; a class in the Grothendieck group.
class KClass {
public:
  KClass() = default;
  explicit KClass(std::vector<int> c) : c_(std::move(c)) {}
  KClass(std::initializer_list<int> c) : c_(c) {}
  static KClass zero(int r) { return KClass(std::vector<int>(static_cast<size_t>(r), 0)); }

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  std::span<const int> coords() const { return c_; }
  const std::vector<int>& vec() const { return c_; }
  bool is_zero() const;
  int total() const;
  std::string to_string() const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator-(KClass a);
  friend KClass operator*(int s, KClass a);
  friend bool operator==(const KClass&, const KClass&) = default;
  friend auto operator<=>(const KClass&, const KClass&) = default;

private:
  std::vector<int> c_;
};

/// Dimension vector: a KClass with nonnegative entries.
class DimVector {
public:
  DimVector() = default;
  explicit DimVector(std::vector<int> c);
  DimVector(std::initializer_list<int> c) : DimVector(std::vector<int>(c)) {}
  static DimVector zero(int r) { return DimVector(std::vector<int>(static_cast<size_t>(r), 0)); }

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  std::span<const int> coords() const { return c_; }
  const std::vector<int>& vec() const { return c_; }
  bool is_zero() const;
  int total() const;
  /// Componentwise d <= e.
  bool fits_in(const DimVector& e) const;
  KClass k() const { return KClass(c_); }
  operator KClass() const { return k(); }
  std::string to_string() const;

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  /// Throws when the difference has a negative entry.
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend DimVector operator*(int s, const DimVector& a);
  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

private:
  std::vector<int> c_;
};

struct Arrow {
  int source;
  int target;
};

/// Acyclic quiver with a prime field size q.
class Quiver {
public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, int q);

  static Quiver from_json(const nlohmann::json& j);
  static Quiver load(const std::string& path);
  nlohmann::json to_json() const;

  /// The same quiver over another prime field.
  Quiver with_q(int q) const { return Quiver(vertices_, arrows_, q); }

  int rank() const { return static_cast<int>(vertices_.size()); }
  int q() const { return q_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Vertices ordered so that every arrow goes from an earlier to a later entry.
  const std::vector<int>& topological_order() const { return topo_; }

  int euler_form(std::span<const int> d, std::span<const int> e) const;
  int euler_form(const KClass& d, const KClass& e) const { return euler_form(d.coords(), e.coords()); }
  int euler_form(const DimVector& d, const DimVector& e) const { return euler_form(d.coords(), e.coords()); }
  int symmetric_form(std::span<const int> d, std::span<const int> e) const;
  int symmetric_form(const KClass& d, const KClass& e) const { return symmetric_form(d.coords(), e.coords()); }
  int symmetric_form(const DimVector& d, const DimVector& e) const { return symmetric_form(d.coords(), e.coords()); }

  /// Number of field entries in the representation space of d.
  long long space_dimension(const DimVector& d) const;

  /// Two vertices joined by exactly two parallel arrows from the first to the second.
  bool is_kronecker() const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  int q_;
  std::vector<int> topo_;
};

/// Bundled fixtures: arrows point from lower to higher vertex index.
Quiver a2_quiver(int q);
Quiver a3_quiver(int q);
Quiver kronecker_quiver(int q);

} // namespace hallkit
