#include "planarity/strata.hpp"

#include <algorithm>

namespace planarity {

namespace {

void check_genus_degree(int g, int d) {
  if (g < 0) throw DomainError("genus must be >= 0");
  if (d < 2) throw DomainError("degree must be >= 2");
}

long plane_capacity(int d, long l) {
  // C(d+l-1, 2) - C(l, 2), the genus of a degree-(d+l) curve with an ordinary l-fold point
  const ExactInt v = binomial(d + l - 1, 2) - binomial(l, 2);
  return v.get_si();
}

}  // namespace

long ambient_dim(int g, int d) {
  check_genus_degree(g, d);
  return 2L * d + 2L * g - 2;
}

long ambient_dim_mu(int g, const Partition& mu) {
  check_genus_degree(g, mu.size());
  return ambient_dim(g, mu.size()) - mu.ramification();
}

long min_defect(int g, int d) {
  check_genus_degree(g, d);
  const long numerator = g - binomial(d - 1, 2).get_si();
  return std::max(0L, ceil_div(numerator, d - 1));
}

long min_defect_scan(int g, int d) {
  check_genus_degree(g, d);
  long l = 0;
  while (plane_capacity(d, l) < g) ++l;
  return l;
}

long max_defect(int g, int d) {
  check_genus_degree(g, d);
  return std::max(0L, ceil_div(static_cast<long>(g) - d + 2, 2));
}

long max_defect_scan(int g, int d) {
  check_genus_degree(g, d);
  long l = 0;
  while (3L * d + g + 2 * l - 4 < 2L * d + 2L * g - 2) ++l;
  return l;
}

bool max_defect_exceeds_bound(int g, int d) { return max_defect(g, d) > d + 2L; }

long stratum_dim(int g, int d, int l) {
  if (l < min_defect(g, d))
    throw DomainError("stratum empty: l = " + std::to_string(l) + " is below the minimal defect " +
                      std::to_string(min_defect(g, d)));
  return std::min(3L * d + g + 2L * l - 4, 2L * d + 2L * g - 2);
}

long stratum_dim_mu(int g, const Partition& mu, int l) {
  return stratum_dim(g, mu.size(), l) - mu.ramification();
}

ExactInt node_count(int g, int d, int l) {
  if (g < 0) throw DomainError("genus must be >= 0");
  if (d < 1 || l < 0) throw DomainError("node_count needs d >= 1 and l >= 0");
  ExactInt nodes = binomial(d + l - 1, 2) - binomial(l, 2) - g;
  if (nodes < 0)
    throw DomainError("genus exceeds maximum for (d, l) = (" + std::to_string(d) + ", " + std::to_string(l) + ")");
  return nodes;
}

long severi_expected_dim(int g, int d, int l) {
  if (l < min_defect(g, d))
    throw DomainError("Severi variety empty: l = " + std::to_string(l) + " is below the minimal defect");
  return 3L * d + g + 2L * l - 1;
}

long severi_expected_dim_mu(int g, const Partition& mu, int l) {
  return severi_expected_dim(g, mu.size(), l) - mu.ramification();
}

bool corollary_predicts_single(int g, int d) { return d >= g + 2 || d == 3; }

long cubic_single_defect(int g) { return ceil_div(static_cast<long>(g) - 1, 2); }

namespace {

StratificationReport build_report(int g, int d, const std::optional<Partition>& mu) {
  StratificationReport rep;
  rep.g = g;
  rep.d = d;
  rep.mu = mu;
  rep.m = min_defect(g, d);
  rep.M = max_defect(g, d);
  if (rep.m != min_defect_scan(g, d) || rep.M != max_defect_scan(g, d))
    throw InternalError("defect closed form disagrees with its defining scan");

  rep.top = std::max(rep.m, rep.M);
  rep.ambient_dim = mu ? ambient_dim_mu(g, *mu) : ambient_dim(g, d);
  for (long l = rep.m; l <= rep.top; ++l) {
    StratumReport s;
    s.l = l;
    const int li = static_cast<int>(l);
    s.stratum_dim = mu ? stratum_dim_mu(g, *mu, li) : stratum_dim(g, d, li);
    s.severi_expected_dim = mu ? severi_expected_dim_mu(g, *mu, li) : severi_expected_dim(g, d, li);
    s.node_count = node_count(g, d, li);
    s.is_top = l >= rep.M;
    rep.strata.push_back(std::move(s));
  }

  rep.single_stratum = rep.m >= rep.M;
  rep.corollary_single = corollary_predicts_single(g, d);
  rep.corollary_exception = rep.single_stratum != rep.corollary_single;
  rep.m_exceeds_M = rep.m > rep.M;
  rep.exceeds_d_plus_2 = rep.M > d + 2L;

  if (d == 3 && rep.m != cubic_single_defect(g))
    throw InternalError("cubic one-piece defect disagrees with m(g,3)");

  if (rep.m_exceeds_M)
    rep.notes.push_back("closed-form M = " + std::to_string(rep.M) + " is below m = " + std::to_string(rep.m) +
                        "; the stratum at l = m already has full dimension, so the filtration has one term");
  if (rep.corollary_exception)
    rep.notes.push_back(std::string("one-piece prediction (d >= g+2 or d = 3) says ") +
                        (rep.corollary_single ? "single" : "not single") + " but computed m = " +
                        std::to_string(rep.m) + ", M = " + std::to_string(rep.M));
  if (rep.exceeds_d_plus_2)
    rep.notes.push_back("M = " + std::to_string(rep.M) + " exceeds the bound d + 2 = " + std::to_string(d + 2));
  return rep;
}

}  // namespace

StratificationReport stratification_report(int g, int d) { return build_report(g, d, std::nullopt); }

StratificationReport stratification_report(int g, const Partition& mu) {
  return build_report(g, mu.size(), mu);
}

}  // namespace planarity
