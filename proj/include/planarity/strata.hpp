#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarity/core_math.hpp"

namespace planarity {

/// dim H_{g,d} = 2d + 2g - 2.
long ambient_dim(int g, int d);
/// dim H_{g,mu} = 2d + 2g - 2 - sum(mu_i - 1).
long ambient_dim_mu(int g, const Partition& mu);

/// Minimal planarity defect m(g,d) = max(0, ceil((g - C(d-1,2)) / (d-1))).
long min_defect(int g, int d);
/// Smallest l >= 0 with C(d+l-1,2) - C(l,2) >= g, found by scanning.
long min_defect_scan(int g, int d);

/// M(g,d) = max(0, ceil((g - d + 2) / 2)).
long max_defect(int g, int d);
/// Smallest l >= 0 with 3d + g + 2l - 4 >= 2d + 2g - 2, found by scanning.
long max_defect_scan(int g, int d);

/// True when M(g,d) exceeds the bound d + 2 stated for one-pole functions.
bool max_defect_exceeds_bound(int g, int d);

/// dim H^l_{g,d} = min(3d + g + 2l - 4, 2d + 2g - 2); requires l >= m(g,d).
long stratum_dim(int g, int d, int l);
long stratum_dim_mu(int g, const Partition& mu, int l);

/// Nodes of a degree-(d+l) genus-g plane curve with an ordinary l-fold point:
/// C(d+l-1,2) - C(l,2) - g. Throws DomainError when negative.
ExactInt node_count(int g, int d, int l);

/// Expected dimension 3d + g + 2l - 1 of the Severi variety S_{g,d,l}.
long severi_expected_dim(int g, int d, int l);
long severi_expected_dim_mu(int g, const Partition& mu, int l);

/// The one-piece prediction: d >= g + 2, or d = 3.
bool corollary_predicts_single(int g, int d);
/// The defect ceil((g - 1) / 2) of the d = 3 one-piece case.
long cubic_single_defect(int g);

struct StratumReport {
  long l = 0;
  long stratum_dim = 0;
  long severi_expected_dim = 0;
  ExactInt node_count;
  bool is_top = false;
};

struct StratificationReport {
  int g = 0;
  int d = 0;
  std::optional<Partition> mu;
  long m = 0;
  long M = 0;           ///< closed-form M(g,d)
  long top = 0;         ///< last level listed: max(m, M)
  long ambient_dim = 0;
  std::vector<StratumReport> strata;
  bool single_stratum = false;

  bool corollary_single = false;     ///< what the one-piece corollary predicts
  bool corollary_exception = false;  ///< single_stratum != corollary_single
  bool m_exceeds_M = false;          ///< formula M below m (d = 2, g >= 2)
  bool exceeds_d_plus_2 = false;     ///< M > d + 2
  std::vector<std::string> notes;
};

StratificationReport stratification_report(int g, int d);
StratificationReport stratification_report(int g, const Partition& mu);

}  // namespace planarity
