#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "planarity/core_math.hpp"

namespace planarity {

/// Divisor class a*L_inf + b*F on the Hirzebruch surface Sigma_n.
///
/// L_0 = L_inf + n F, so d*L_0 + k*F has coordinates (a, b) = (d, d n + k).
struct DivisorClass {
  int n = 0;
  long a = 0;  ///< coefficient of L_inf
  long b = 0;  ///< coefficient of F

  static DivisorClass fiber(int n) { return {n, 0, 1}; }
  static DivisorClass section_at_infinity(int n) { return {n, 1, 0}; }
  static DivisorClass zero_section(int n) { return {n, 1, n}; }
  static DivisorClass from_l0_basis(int n, long d, long k) { return {n, d, d * n + k}; }

  /// Coefficients (d, k) with this = d*L_0 + k*F.
  long l0_coefficient() const { return a; }
  long f_coefficient_in_l0_basis() const { return b - a * n; }

  /// "3L0+2F", "2Linf-F", "K" ... on the given surface. Throws ParseError.
  static DivisorClass parse(int n, std::string_view text);
  std::string str() const;

  bool operator==(const DivisorClass&) const = default;
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x);
DivisorClass operator*(long s, const DivisorClass& x);

/// F^2 = 0, L_inf^2 = -n, F.L_inf = 1, extended bilinearly.
long intersect(const DivisorClass& x, const DivisorClass& y);

/// K = -(2 L_inf + (2 + n) F).
DivisorClass canonical_class(int n);

/// 1 + (C^2 + K.C)/2 as an exact rational.
ExactRat adjunction_genus(const DivisorClass& c);

/// (d-1)(dn + 2k - 2)/2 for a smooth curve of class d L_0 + k F.
/// Throws DomainError if the value is negative or not an integer.
ExactInt smooth_genus(int n, long d, long k);

/// Strict transform on Sigma_1 of a degree-(d+l) plane curve with an l-fold
/// point at the blown-up point: d L_0 + l F.
DivisorClass blowup_plane_class(long d, long l);

/// -K.C + g - 1 - sum(mu_i - 1) on Sigma_1.
long expected_severi_dim_hirz(int g, const DivisorClass& c, const std::optional<Partition>& mu = std::nullopt);

struct EffectiveCombination {
  bool in_f_linf = false;  ///< non-negative combination of F and L_inf
  bool in_f_l0 = false;    ///< non-negative combination of F and L_0
};

EffectiveCombination is_effective_combination(const DivisorClass& c);

}  // namespace planarity
