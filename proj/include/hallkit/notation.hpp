#pragma once

#include "hallkit/verify.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hallkit {

/// Text form of classes and elements.
///
/// A class is written as its dimension vector, "[1,1]" or "1,1", with "#k" selecting the k-th
/// (0-based) class in scan order when the vector carries several. Classes too large to scan are
/// written as their exceptional class "[d]" or as a direct sum "{x+y+z}" of labelled summands. Elements are sums of products:
///
///   u+[1,0] u-[0,1]      plus and minus generators (plain u[...] in the Hall algebra)
///   K[1,-1]              torus element
///   u+[1,2]^(2)          divided power; x^3 is an ordinary power
///   -3/2*v^-1 (1+v)      coefficients: integers, fractions, v, parentheses, optional '*'
///
/// Tensors are sums of terms "c*<x | y>".
class Notation {
public:
  explicit Notation(Engine& e) : e_(e) {}

  Engine& engine() { return e_; }

  DimVector parse_dim(std::string_view text) const;
  /// Classes of a dimension vector in scan order; just the exceptional class when the space is too large to scan.
  const std::vector<ClassId>& candidates(const DimVector& d);
  ClassId parse_class(std::string_view text);
  /// Like parse_class, but a bare dimension vector selects its exceptional class.
  ClassId parse_exceptional(std::string_view text);
  std::string label(ClassId c);
  nlohmann::json class_entry(ClassId c);

  HallElement parse_hall(std::string_view text);
  DoubleElement parse_double(std::string_view text);
  HallTensor parse_tensor(std::string_view text);

  std::string render(const HallElement& x);
  std::string render(const DoubleElement& x);
  std::string render(const HallTensor& t);

  /// {"expr": text, "terms": [...]}; terms sorted by their text.
  nlohmann::json to_json(const HallElement& x);
  nlohmann::json to_json(const DoubleElement& x);
  nlohmann::json to_json(const HallTensor& t);

private:
  std::string term_text(const Coeff& c, const std::string& monomial) const;
  std::string hall_monomial(const HallBasis& b);
  std::string double_monomial(const Monomial& m);

  Engine& e_;
  std::map<DimVector, std::vector<ClassId>> candidates_;
};

} // namespace hallkit
