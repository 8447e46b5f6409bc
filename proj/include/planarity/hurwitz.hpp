#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "planarity/core_math.hpp"

namespace planarity {

/// TUPLES: raw transitive tuple count N_trans.
/// LABELED_POLES: N_trans * aut(mu) / d!, the normalization under which the
/// genus-0 formulas for h_{0,d} and h_{0,mu} agree.
enum class Convention { Tuples, LabeledPoles };

enum class Engine { Brute, Character, ClosedForm, CutAndJoin };

std::string_view to_string(Convention c);
std::string_view to_string(Engine e);
Convention parse_convention(std::string_view text);
Engine parse_engine(std::string_view text);

/// Number of simple branch points r = d + n + 2g - 2 (may be negative).
long simple_branch_count(int genus, const Partition& mu);

struct BruteOptions {
  std::uint64_t budget = 1'000'000'000;  ///< visited search nodes
  unsigned threads = 0;                  ///< 0: hardware concurrency
};

/// N_trans(d, r, mu) by depth-first enumeration of transposition tuples.
///
/// Prunes on parity, on the cycle count of the running product and on the
/// number of orbits still to be connected. Throws BudgetExceeded rather than
/// returning a partial count.
ExactInt count_transitive_brute(int d, int r, const Partition& mu, const BruteOptions& options = {});

/// N_trans(d, r, mu) from Frobenius totals by inclusion-exclusion over the
/// orbit containing point 0.
ExactInt count_transitive_character(int d, int r, const Partition& mu);

/// (2d-2)! d^{d-3}
ExactRat small_hurwitz_genus0(int d);

/// (d+n-2)! prod(mu_i^mu_i / mu_i!) d^{n-3}, labeled-poles convention.
ExactRat single_hurwitz_genus0(const Partition& mu);

/// h_{g,mu} (labeled-poles convention) by cut-and-join recursion.
ExactRat cut_and_join(int genus, const Partition& mu);

struct HurwitzQuery {
  int genus = 0;
  Partition profile;
  Convention convention = Convention::LabeledPoles;
  Engine engine = Engine::Character;

  long r() const { return simple_branch_count(genus, profile); }
};

struct HurwitzResult {
  ExactRat value;
  ExactInt raw_transitive_tuples;
  long r = 0;
  Engine engine = Engine::Character;
  Convention convention = Convention::LabeledPoles;
  bool void_query = false;  ///< r < 0: no such coverings
};

/// Converts a raw transitive count to the requested convention.
ExactRat apply_convention(const ExactInt& raw, const Partition& mu, Convention convention);

HurwitzResult hurwitz_number(const HurwitzQuery& query, const BruteOptions& options = {});

/// Status of the plane-curve orbit counts h_d (smooth degree-d plane curves
/// with a fixed set of tangent lines through p, modulo G_p).
enum class OrbitCountStatus {
  BridgedToHurwitz,      ///< equals h_{g,(1^d)}/d! with g = (d-1)(d-2)/2
  DocumentedUnresolved,  ///< published value matches neither normalization
  ReferenceOnly,         ///< literature constant; no engine computes it
};

struct PlaneOrbitReference {
  int degree;
  ExactInt published;
  OrbitCountStatus status;
  std::string note;
};

/// Published values for d = 2, 3, 4; nullopt otherwise.
std::optional<PlaneOrbitReference> plane_orbit_reference(int d);

}  // namespace planarity
