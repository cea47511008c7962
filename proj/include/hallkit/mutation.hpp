#pragma once

#include "hallkit/catalog.hpp"

#include <set>
#include <string>
#include <vector>

namespace hallkit {

/// Which branch of the mutation formulas applies.
enum class PairCase { nonpos, big, small };

std::string to_string(PairCase c);
/// "i", "ii", "iii".
std::string roman(PairCase c);

struct ExceptionalPair {
  ClassId alpha = 0;
  ClassId beta = 0;
  int euler = 0;  ///< <alpha, beta>
  int n = 0;      ///< |<alpha,beta> / <alpha,alpha>|
  int m = 0;      ///< |<alpha,beta> / <beta,beta>|
  int eps_alpha = 1;
  int eps_beta = 1;
  PairCase left_case = PairCase::nonpos;
  PairCase right_case = PairCase::nonpos;
};

bool is_exceptional_pair(Catalog& cat, ClassId alpha, ClassId beta);
/// DomainError unless (alpha, beta) is an exceptional pair.
ExceptionalPair classify_pair(Catalog& cat, ClassId alpha, ClassId beta);

/// Dimension vector of L(alpha, beta) (resp. R(alpha, beta)) predicted by the case.
DimVector left_target_dim(Catalog& cat, const ExceptionalPair& p);
DimVector right_target_dim(Catalog& cat, const ExceptionalPair& p);

/// L(alpha, beta), built from the universal extension, evaluation kernel or cokernel.
ClassId left_mutation(Catalog& cat, ClassId alpha, ClassId beta);
/// R(alpha, beta), built from the universal extension, coevaluation cokernel or kernel.
ClassId right_mutation(Catalog& cat, ClassId alpha, ClassId beta);

/// Whether the space of d is small enough (end_search) for exhaustive class scans.
bool enumerable(const Catalog& cat, const DimVector& d);

/// Exceptional classes of a dimension vector, by enumeration (caps apply).
std::vector<ClassId> exceptional_classes(Catalog& cat, const DimVector& d);

using ExceptionalSequence = std::vector<ClassId>;

/// Simple classes ordered sources first; an exceptional sequence for any acyclic quiver.
ExceptionalSequence simple_sequence(Catalog& cat);

/// The exceptional class of dimension d: by enumeration when the space is small, otherwise by a
/// breadth-first walk of the braid orbit of the simple sequence. DomainError if none is found.
ClassId find_exceptional(Catalog& cat, const DimVector& d);

bool is_exceptional_sequence(Catalog& cat, const ExceptionalSequence& e);
bool is_complete(const Catalog& cat, const ExceptionalSequence& e);

struct BraidLetter {
  int index = 1;     ///< 1-based generator index
  int exponent = 1;  ///< +1 (left mutation) or -1 (right mutation)
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};
using BraidWord = std::vector<BraidLetter>;

/// Parses "s1 s2^-1 s1"; the empty string is the identity word.
BraidWord parse_braid(const std::string& text);
std::string to_string(const BraidWord& w);

/// Applies one letter: s_i is L_i, s_i^-1 is R_i.
ExceptionalSequence braid_step(Catalog& cat, const ExceptionalSequence& e, const BraidLetter& l);
/// Applies the letters left to right.
ExceptionalSequence braid_apply(Catalog& cat, const BraidWord& w, const ExceptionalSequence& e);

/// All sequences reached by words of length at most depth.
std::set<ExceptionalSequence> orbit_enumerate(Catalog& cat, const ExceptionalSequence& e, int depth);

nlohmann::json sequence_json(const Catalog& cat, const ExceptionalSequence& e);

} // namespace hallkit
