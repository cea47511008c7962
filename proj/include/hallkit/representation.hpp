#pragma once

#include "hallkit/field.hpp"
#include "hallkit/quiver.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hallkit {

/// One matrix per arrow, of shape d_target x d_source (column-vector convention).
struct Representation {
  DimVector dim;
  std::vector<FqMatrix> maps;

  /// Byte string identifying the matrix tuple exactly; used as a memo key.
  std::string key() const;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// One matrix per vertex, of shape Y_i x X_i.
using Morphism = std::vector<FqMatrix>;

/// Per-vertex subspaces, each given by a reduced echelon basis (rows).
using SubspaceTuple = std::vector<Echelon>;

Representation zero_representation(const Quiver& Q, const DimVector& d);
Representation simple_representation(const Quiver& Q, int vertex);
void validate(const Quiver& Q, const Representation& X);

std::vector<Morphism> hom_basis(const Quiver& Q, const Representation& X, const Representation& Y);
int hom_dimension(const Quiver& Q, const Representation& X, const Representation& Y);

/// Basis of a complement to the coboundaries inside the cocycle space
/// (one matrix of shape Y_t x X_s per arrow); its span maps bijectively onto Ext^1(X,Y).
struct ExtComplement {
  std::vector<std::vector<FqMatrix>> cocycles;
  int hom_dim = 0;
};
ExtComplement ext_complement(const Quiver& Q, const Representation& X, const Representation& Y);

Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity_morphism(int q, const Representation& X);
Morphism combine(const std::vector<Morphism>& basis, std::span<const uint8_t> coeffs);
bool is_zero(const Morphism& f);
bool is_intertwiner(const Quiver& Q, const Representation& X, const Representation& Y, const Morphism& f);

Representation direct_sum(const Representation& X, const Representation& Y);
Representation direct_power(const Representation& X, int t);

/// Middle term of the extension of X by Y defined by a cocycle; the basis at each
/// vertex lists Y first, then X.
Representation extension(const Quiver& Q, const Representation& X, const Representation& Y,
                         const std::vector<FqMatrix>& cocycle);

bool is_stable(const Quiver& Q, const Representation& X, const SubspaceTuple& U);
Representation restrict_to(const Quiver& Q, const Representation& X, const SubspaceTuple& U);
Representation quotient_by(const Quiver& Q, const Representation& X, const SubspaceTuple& U);
SubspaceTuple image_of(const Morphism& f);
SubspaceTuple kernel_of(const Morphism& f);
DimVector dim_of(const SubspaceTuple& U);

/// Calls visit for every k-dimensional subspace of F_q^m; the argument holds a
/// reduced echelon basis. Enumeration order is deterministic.
void for_each_subspace(int q, int m, int k, const std::function<void(const FqMatrix&)>& visit);

/// Calls visit for every arrow-stable subspace tuple of X with dimension vector d.
void for_each_stable_subspace(const Quiver& Q, const Representation& X, const DimVector& d,
                              const std::function<void(const SubspaceTuple&)>& visit);

} // namespace hallkit
