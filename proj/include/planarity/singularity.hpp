#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "planarity/core_math.hpp"

namespace planarity {

enum class TreeDefect { Syntax, Multiplicity, Proximity };

/// A structurally invalid tree built in code.
class InvalidTree : public DomainError {
 public:
  InvalidTree(TreeDefect defect, const std::string& what) : DomainError(what), defect_(defect) {}
  TreeDefect defect() const { return defect_; }

 private:
  TreeDefect defect_;
};

/// Tree text that fails the grammar or the tree constraints.
class TreeParseError : public ParseError {
 public:
  TreeParseError(TreeDefect defect, const std::string& what) : ParseError(what), defect_(defect) {}
  TreeDefect defect() const { return defect_; }

 private:
  TreeDefect defect_;
};

/// Multiplicities of a singular point and its infinitely near points.
///
/// Each child is a singular point on the strict transform after blowing up
/// its parent. Only free points are modeled, so the proximity condition is
/// the simplified sum(children) <= parent. Smooth points (multiplicity 1)
/// never appear; leaves resolve after one more blow-up.
struct MultiplicityTree {
  int multiplicity = 2;
  std::vector<MultiplicityTree> children;

  static MultiplicityTree ordinary(int order) { return {order, {}}; }

  /// Throws InvalidTree on multiplicity < 2 or a proximity violation.
  void validate() const;

  bool operator==(const MultiplicityTree&) const = default;
};

/// A curve's singular points; empty for a smooth curve.
using SingularityProfile = std::vector<MultiplicityTree>;

/// Total genus drop: sum over all nodes of C(m, 2).
ExactInt delta_invariant(const MultiplicityTree& tree);

/// Geometric genus C(D-1, 2) - sum of delta invariants.
/// Throws DomainError if that is negative.
ExactInt plane_genus(int degree, const SingularityProfile& profile);

/// Smallest l >= 0 such that a degree-(d+l) curve with an ordinary l-fold
/// point can have genus g.
long min_defect_via_geometry(int g, int d);

/// TREE := INT ( "[" TREE ("," TREE)* "]" )?
MultiplicityTree parse_tree(std::string_view text);
std::string format_tree(const MultiplicityTree& tree);

/// Top-level list of trees separated by ';'.
SingularityProfile parse_profile(std::string_view text);

}  // namespace planarity
