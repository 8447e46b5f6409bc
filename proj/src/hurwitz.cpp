#include "planarity/hurwitz.hpp"

namespace planarity {

std::string_view to_string(Convention c) {
  return c == Convention::Tuples ? "tuples" : "labeled-poles";
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Brute: return "brute";
    case Engine::Character: return "character";
    case Engine::ClosedForm: return "closed-form";
    case Engine::CutAndJoin: return "cut-and-join";
  }
  return "unknown";
}

Convention parse_convention(std::string_view text) {
  if (text == "tuples") return Convention::Tuples;
  if (text == "labeled-poles") return Convention::LabeledPoles;
  throw ParseError("unknown convention '" + std::string(text) + "' (expected tuples or labeled-poles)");
}

Engine parse_engine(std::string_view text) {
  if (text == "brute") return Engine::Brute;
  if (text == "character") return Engine::Character;
  if (text == "closed-form") return Engine::ClosedForm;
  if (text == "cut-and-join") return Engine::CutAndJoin;
  throw ParseError("unknown engine '" + std::string(text) + "'");
}

long simple_branch_count(int genus, const Partition& mu) {
  return static_cast<long>(mu.size()) + mu.length() + 2L * genus - 2;
}

ExactRat small_hurwitz_genus0(int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
  ExactRat out = rat_pow(d, static_cast<long>(d) - 3) * factorial(2L * d - 2);
  out.canonicalize();
  return out;
}

ExactRat single_hurwitz_genus0(const Partition& mu) {
  if (mu.empty()) throw DomainError("profile must be a partition of d >= 1");
  const long d = mu.size();
  const long n = mu.length();
  ExactRat out = factorial(d + n - 2);
  for (int p : mu.parts()) out *= rat_pow(p, p) / factorial(p);
  out *= rat_pow(d, n - 3);
  out.canonicalize();
  return out;
}

ExactRat apply_convention(const ExactInt& raw, const Partition& mu, Convention convention) {
  if (convention == Convention::Tuples) return ExactRat(raw);
  ExactRat out(raw * aut_factor(mu), factorial(mu.size()));
  out.canonicalize();
  return out;
}

namespace {

ExactInt raw_from_labeled(const ExactRat& h, const Partition& mu) {
  ExactRat raw = h * factorial(mu.size()) / aut_factor(mu);
  raw.canonicalize();
  if (raw.get_den() != 1)
    throw InternalError("labeled-poles value " + to_string(h) + " does not lift to an integer tuple count");
  return raw.get_num();
}

}  // namespace

HurwitzResult hurwitz_number(const HurwitzQuery& query, const BruteOptions& options) {
  if (query.genus < 0) throw DomainError("genus must be >= 0");
  if (query.profile.empty()) throw DomainError("profile must be a partition of d >= 1");
  if (query.engine == Engine::ClosedForm && query.genus != 0)
    throw UnsupportedEngine("the closed-form engine only covers genus 0");

  HurwitzResult result;
  result.engine = query.engine;
  result.convention = query.convention;
  result.r = query.r();
  if (result.r < 0) {
    result.void_query = true;
    result.value = 0;
    result.raw_transitive_tuples = 0;
    return result;
  }

  const Partition& mu = query.profile;
  const int d = mu.size();
  const int r = static_cast<int>(result.r);
  switch (query.engine) {
    case Engine::Brute:
      result.raw_transitive_tuples = count_transitive_brute(d, r, mu, options);
      break;
    case Engine::Character:
      result.raw_transitive_tuples = count_transitive_character(d, r, mu);
      break;
    case Engine::ClosedForm:
      result.raw_transitive_tuples = raw_from_labeled(single_hurwitz_genus0(mu), mu);
      break;
    case Engine::CutAndJoin:
      result.raw_transitive_tuples = raw_from_labeled(cut_and_join(query.genus, mu), mu);
      break;
  }
  result.value = apply_convention(result.raw_transitive_tuples, mu, query.convention);
  return result;
}

std::optional<PlaneOrbitReference> plane_orbit_reference(int d) {
  switch (d) {
    case 2:
      return PlaneOrbitReference{
          2, 2, OrbitCountStatus::DocumentedUnresolved,
          "published h_2 = 2; the matching Hurwitz number h_{0,(1,1)} is 1 as a tuple count and 1/2 "
          "after division by 2!, so neither normalization reproduces it; left unresolved"};
    case 3:
      return PlaneOrbitReference{
          3, 40, OrbitCountStatus::BridgedToHurwitz,
          "h_3 = 40 equals h_{1,(1,1,1)} = 240 transitive tuples divided by 3!"};
    case 4: {
      ExactInt value;
      mpz_ui_pow_ui(value.get_mpz_t(), 3, 10);
      value = 120 * (value - 1);
      return PlaneOrbitReference{
          4, value, OrbitCountStatus::ReferenceOnly,
          "h_4 = 120 * (3^10 - 1) is a published count for plane quartics; it differs from the "
          "genus-3 Hurwitz number and no engine here computes it"};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace planarity
