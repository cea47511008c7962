#include "hallkit/mutation.hpp"

#include "hallkit/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <sstream>

namespace hallkit {

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::nonpos: return "nonpos";
    case PairCase::big: return "big";
    case PairCase::small: return "small";
  }
  return "?";
}

std::string roman(PairCase c) {
  switch (c) {
    case PairCase::nonpos: return "i";
    case PairCase::big: return "ii";
    case PairCase::small: return "iii";
  }
  return "?";
}

bool is_exceptional_pair(Catalog& cat, ClassId alpha, ClassId beta) {
  return cat.is_exceptional(alpha) && cat.is_exceptional(beta) && cat.hom_dim(beta, alpha) == 0 &&
         cat.ext_dim(beta, alpha) == 0;
}

ExceptionalPair classify_pair(Catalog& cat, ClassId alpha, ClassId beta) {
  if (!is_exceptional_pair(cat, alpha, beta)) throw DomainError("not an exceptional pair");
  const Quiver& Q = cat.quiver();
  const DimVector a = cat.at(alpha).dim;
  const DimVector b = cat.at(beta).dim;
  ExceptionalPair p;
  p.alpha = alpha;
  p.beta = beta;
  p.euler = Q.euler_form(a, b);
  p.eps_alpha = Q.euler_form(a, a);
  p.eps_beta = Q.euler_form(b, b);
  if (p.euler % p.eps_alpha != 0 || p.euler % p.eps_beta != 0)
    throw InvariantError("non-integral mutation multiplicity");
  p.n = std::abs(p.euler / p.eps_alpha);
  p.m = std::abs(p.euler / p.eps_beta);
  auto split = [&](int lhs, int rhs) {
    if (p.euler <= 0) return PairCase::nonpos;
    if (lhs == rhs) throw InvariantError("mutation case is ambiguous");
    return lhs > rhs ? PairCase::big : PairCase::small;
  };
  p.left_case = split(p.n * a.total(), b.total());
  p.right_case = split(p.m * b.total(), a.total());
  return p;
}

DimVector left_target_dim(Catalog& cat, const ExceptionalPair& p) {
  const DimVector a = cat.at(p.alpha).dim;
  const DimVector b = cat.at(p.beta).dim;
  switch (p.left_case) {
    case PairCase::nonpos: return b + p.n * a;
    case PairCase::big: return p.n * a - b;
    case PairCase::small: return b - p.n * a;
  }
  return b;
}

DimVector right_target_dim(Catalog& cat, const ExceptionalPair& p) {
  const DimVector a = cat.at(p.alpha).dim;
  const DimVector b = cat.at(p.beta).dim;
  switch (p.right_case) {
    case PairCase::nonpos: return a + p.m * b;
    case PairCase::big: return p.m * b - a;
    case PairCase::small: return a - p.m * b;
  }
  return a;
}

std::vector<ClassId> exceptional_classes(Catalog& cat, const DimVector& d) {
  std::vector<ClassId> out;
  for (ClassId c : cat.enumerate(d))
    if (cat.is_exceptional(c)) out.push_back(c);
  return out;
}

bool enumerable(const Catalog& cat, const DimVector& d) {
  if (d.total() > cat.caps().enum_total_dim) return false;
  const long long s = cat.quiver().space_dimension(d);
  unsigned long long size = 1;
  for (long long i = 0; i < s; ++i) {
    size *= static_cast<unsigned long long>(cat.q());
    if (size > cat.caps().end_search) return false;
  }
  return true;
}

namespace {

/// Confirms the constructed class: expected dimension, exceptional, and unique when the
/// dimension vector is small enough to enumerate.
void confirm(Catalog& cat, ClassId c, const DimVector& expected, const char* what) {
  if (cat.at(c).dim != expected)
    throw InvariantError(std::string(what) + " has dimension " + cat.at(c).dim.to_string() + ", expected " +
                         expected.to_string());
  if (!cat.is_exceptional(c)) throw InvariantError(std::string(what) + " is not exceptional");
  if (enumerable(cat, expected)) {
    const auto all = exceptional_classes(cat, expected);
    if (all.size() != 1 || all.front() != c)
      throw InvariantError(std::string(what) + ": exceptional class of dimension " + expected.to_string() +
                           " is not unique");
  }
}

Morphism row_of_maps(const std::vector<Morphism>& fs) {
  Morphism out = fs.front();
  for (size_t k = 1; k < fs.size(); ++k)
    for (size_t i = 0; i < out.size(); ++i) out[i] = hstack(out[i], fs[k][i]);
  return out;
}

Morphism column_of_maps(const std::vector<Morphism>& fs) {
  Morphism out = fs.front();
  for (size_t k = 1; k < fs.size(); ++k)
    for (size_t i = 0; i < out.size(); ++i) out[i] = vstack(out[i], fs[k][i]);
  return out;
}

/// Cocycle of the extension of X^n by Y (or of X by Y^n when stacked) built from the Ext basis.
std::vector<FqMatrix> universal_cocycle(const std::vector<std::vector<FqMatrix>>& basis, bool side_by_side) {
  std::vector<FqMatrix> out = basis.front();
  for (size_t k = 1; k < basis.size(); ++k)
    for (size_t a = 0; a < out.size(); ++a)
      out[a] = side_by_side ? hstack(out[a], basis[k][a]) : vstack(out[a], basis[k][a]);
  return out;
}

} // namespace

ClassId left_mutation(Catalog& cat, ClassId alpha, ClassId beta) {
  const ExceptionalPair p = classify_pair(cat, alpha, beta);
  const Quiver& Q = cat.quiver();
  const Representation A = cat.at(alpha).canon;
  const Representation B = cat.at(beta).canon;
  const DimVector target = left_target_dim(cat, p);
  ClassId gamma = 0;
  if (p.left_case == PairCase::nonpos) {
    const ExtComplement ec = ext_complement(Q, A, B);
    if (static_cast<int>(ec.cocycles.size()) != p.n || ec.hom_dim != 0)
      throw InvariantError("Ext dimension does not match the mutation multiplicity");
    if (p.n == 0) return beta;
    gamma = cat.identify(extension(Q, direct_power(A, p.n), B, universal_cocycle(ec.cocycles, true)));
  } else {
    const auto homs = hom_basis(Q, A, B);
    if (static_cast<int>(homs.size()) != p.n) throw InvariantError("Hom dimension does not match the multiplicity");
    const Representation An = direct_power(A, p.n);
    const Morphism ev = row_of_maps(homs);
    const DimVector image = dim_of(image_of(ev));
    if (p.left_case == PairCase::big) {
      if (image != B.dim) throw InvariantError("evaluation map is not surjective in the big case");
      gamma = cat.identify(restrict_to(Q, An, kernel_of(ev)));
    } else {
      if (!dim_of(kernel_of(ev)).is_zero()) throw InvariantError("evaluation map is not injective in the small case");
      gamma = cat.identify(quotient_by(Q, B, image_of(ev)));
    }
  }
  confirm(cat, gamma, target, "left mutation");
  if (!is_exceptional_pair(cat, gamma, alpha)) throw InvariantError("left mutation does not form an exceptional pair");
  return gamma;
}

ClassId right_mutation(Catalog& cat, ClassId alpha, ClassId beta) {
  const ExceptionalPair p = classify_pair(cat, alpha, beta);
  const Quiver& Q = cat.quiver();
  const Representation A = cat.at(alpha).canon;
  const Representation B = cat.at(beta).canon;
  const DimVector target = right_target_dim(cat, p);
  ClassId lambda = 0;
  if (p.right_case == PairCase::nonpos) {
    const ExtComplement ec = ext_complement(Q, A, B);
    if (static_cast<int>(ec.cocycles.size()) != p.m || ec.hom_dim != 0)
      throw InvariantError("Ext dimension does not match the mutation multiplicity");
    if (p.m == 0) return alpha;
    lambda = cat.identify(extension(Q, A, direct_power(B, p.m), universal_cocycle(ec.cocycles, false)));
  } else {
    const auto homs = hom_basis(Q, A, B);
    if (static_cast<int>(homs.size()) != p.m) throw InvariantError("Hom dimension does not match the multiplicity");
    const Representation Bm = direct_power(B, p.m);
    const Morphism coev = column_of_maps(homs);
    if (p.right_case == PairCase::big) {
      if (!dim_of(kernel_of(coev)).is_zero()) throw InvariantError("coevaluation is not injective in the big case");
      lambda = cat.identify(quotient_by(Q, Bm, image_of(coev)));
    } else {
      if (dim_of(image_of(coev)) != Bm.dim) throw InvariantError("coevaluation is not surjective in the small case");
      lambda = cat.identify(restrict_to(Q, A, kernel_of(coev)));
    }
  }
  confirm(cat, lambda, target, "right mutation");
  if (!is_exceptional_pair(cat, beta, lambda)) throw InvariantError("right mutation does not form an exceptional pair");
  return lambda;
}

ExceptionalSequence simple_sequence(Catalog& cat) {
  ExceptionalSequence e;
  for (int v : cat.quiver().topological_order()) e.push_back(cat.simple(v));
  return e;
}

ClassId find_exceptional(Catalog& cat, const DimVector& d) {
  if (d.size() != cat.quiver().rank()) throw DomainError("dimension vector length mismatch");
  if (enumerable(cat, d)) {
    const auto all = exceptional_classes(cat, d);
    if (all.empty()) throw DomainError("no exceptional class of dimension " + d.to_string());
    return all.front();
  }
  // Entries far larger than the target never lie on a useful path.
  const int bound = 2 * d.total() + 2;
  auto small = [&](const ExceptionalSequence& s) {
    return std::all_of(s.begin(), s.end(), [&](ClassId c) { return cat.at(c).dim.total() <= bound; });
  };
  std::set<ExceptionalSequence> seen;
  std::vector<ExceptionalSequence> frontier{simple_sequence(cat)};
  seen.insert(frontier.front());
  for (int depth = 0; depth <= 2 * d.total() && !frontier.empty(); ++depth) {
    std::vector<ExceptionalSequence> next;
    for (const auto& s : frontier) {
      for (ClassId c : s)
        if (cat.at(c).dim == d) return c;
      for (int i = 1; i < static_cast<int>(s.size()); ++i)
        for (int x : {1, -1}) {
          ExceptionalSequence t;
          try {
            t = braid_step(cat, s, {i, x});
          } catch (const ResourceError&) {
            continue;
          }
          if (small(t) && seen.insert(t).second) next.push_back(std::move(t));
        }
    }
    frontier = std::move(next);
  }
  throw DomainError("no exceptional class of dimension " + d.to_string() + " found in the braid orbit");
}

bool is_exceptional_sequence(Catalog& cat, const ExceptionalSequence& e) {
  for (size_t i = 0; i < e.size(); ++i) {
    if (!cat.is_exceptional(e[i])) return false;
    for (size_t j = i + 1; j < e.size(); ++j)
      if (!is_exceptional_pair(cat, e[i], e[j])) return false;
  }
  return true;
}

bool is_complete(const Catalog& cat, const ExceptionalSequence& e) {
  return static_cast<int>(e.size()) == cat.quiver().rank();
}

BraidWord parse_braid(const std::string& text) {
  static const std::regex letter(R"(s(\d+)(?:\^(-?1))?)");
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, letter)) throw ParseError("bad braid letter '" + tok + "'");
    const int i = std::stoi(m[1].str());
    if (i < 1) throw ParseError("braid generator index must be positive");
    w.push_back({i, m[2].matched && m[2].str() == "-1" ? -1 : 1});
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(l.index) + (l.exponent < 0 ? "^-1" : "");
  }
  return s;
}

ExceptionalSequence braid_step(Catalog& cat, const ExceptionalSequence& e, const BraidLetter& l) {
  if (l.index < 1 || l.index >= static_cast<int>(e.size()))
    throw DomainError("braid generator s" + std::to_string(l.index) + " out of range for a sequence of length " +
                      std::to_string(e.size()));
  ExceptionalSequence out = e;
  const size_t i = static_cast<size_t>(l.index - 1);
  if (l.exponent > 0) {
    out[i] = left_mutation(cat, e[i], e[i + 1]);
    out[i + 1] = e[i];
  } else {
    out[i] = e[i + 1];
    out[i + 1] = right_mutation(cat, e[i], e[i + 1]);
  }
  return out;
}

ExceptionalSequence braid_apply(Catalog& cat, const BraidWord& w, const ExceptionalSequence& e) {
  if (!is_exceptional_sequence(cat, e)) throw DomainError("not an exceptional sequence");
  ExceptionalSequence cur = e;
  for (const auto& l : w) cur = braid_step(cat, cur, l);
  if (!is_exceptional_sequence(cat, cur)) throw InvariantError("braid action left the exceptional sequences");
  return cur;
}

std::set<ExceptionalSequence> orbit_enumerate(Catalog& cat, const ExceptionalSequence& e, int depth) {
  if (!is_exceptional_sequence(cat, e)) throw DomainError("not an exceptional sequence");
  std::set<ExceptionalSequence> seen{e};
  std::vector<ExceptionalSequence> frontier{e};
  for (int d = 0; d < depth; ++d) {
    std::vector<ExceptionalSequence> next;
    for (const auto& s : frontier)
      for (int i = 1; i < static_cast<int>(s.size()); ++i)
        for (int x : {1, -1}) {
          ExceptionalSequence t = braid_step(cat, s, {i, x});
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
    frontier = std::move(next);
  }
  return seen;
}

nlohmann::json sequence_json(const Catalog& cat, const ExceptionalSequence& e) {
  nlohmann::json out = nlohmann::json::array();
  for (ClassId c : e) out.push_back({{"id", c}, {"dim", cat.at(c).dim.vec()}});
  return out;
}

} // namespace hallkit
