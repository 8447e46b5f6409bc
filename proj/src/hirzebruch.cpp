#include "planarity/hirzebruch.hpp"

#include <cctype>

namespace planarity {

namespace {

void require_same_surface(const DivisorClass& x, const DivisorClass& y) {
  if (x.n != y.n)
    throw DomainError("classes live on different surfaces Sigma_" + std::to_string(x.n) + " and Sigma_" +
                      std::to_string(y.n));
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return {x.n, x.a + y.a, x.b + y.b};
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) { return x + (-y); }

DivisorClass operator-(const DivisorClass& x) { return {x.n, -x.a, -x.b}; }

DivisorClass operator*(long s, const DivisorClass& x) { return {x.n, s * x.a, s * x.b}; }

long intersect(const DivisorClass& x, const DivisorClass& y) {
  require_same_surface(x, y);
  return -static_cast<long>(x.n) * x.a * y.a + x.a * y.b + y.a * x.b;
}

DivisorClass canonical_class(int n) {
  if (n < 0) throw DomainError("Hirzebruch index must be >= 0");
  return -(2 * DivisorClass::section_at_infinity(n) + (2L + n) * DivisorClass::fiber(n));
}

ExactRat adjunction_genus(const DivisorClass& c) {
  const long twice = intersect(c, c) + intersect(canonical_class(c.n), c);
  ExactRat g(twice, 2);
  g.canonicalize();
  return g + 1;
}

ExactInt smooth_genus(int n, long d, long k) {
  if (n < 0) throw DomainError("Hirzebruch index must be >= 0");
  const ExactInt twice = ExactInt(d - 1) * (ExactInt(d) * n + 2 * k - 2);
  if (twice < 0 || !mpz_divisible_ui_p(twice.get_mpz_t(), 2))
    throw DomainError("class not representable by a smooth curve (genus " + to_string(ExactRat(twice) / 2) + ")");
  ExactInt g;
  mpz_divexact_ui(g.get_mpz_t(), twice.get_mpz_t(), 2);
  return g;
}

DivisorClass blowup_plane_class(long d, long l) {
  if (d < 1 || l < 0) throw DomainError("blowup_plane_class needs d >= 1 and l >= 0");
  return DivisorClass::from_l0_basis(1, d, l);
}

long expected_severi_dim_hirz(int g, const DivisorClass& c, const std::optional<Partition>& mu) {
  if (c.n != 1) throw DomainError("expected Severi dimension is stated on Sigma_1");
  if (g < 0) throw DomainError("genus must be >= 0");
  const long ramification = mu ? mu->ramification() : 0;
  return -intersect(canonical_class(1), c) + g - 1 - ramification;
}

EffectiveCombination is_effective_combination(const DivisorClass& c) {
  EffectiveCombination out;
  out.in_f_linf = c.a >= 0 && c.b >= 0;
  out.in_f_l0 = c.l0_coefficient() >= 0 && c.f_coefficient_in_l0_basis() >= 0;
  return out;
}

DivisorClass DivisorClass::parse(int n, std::string_view text) {
  if (n < 0) throw ParseError("Hirzebruch index must be >= 0");
  DivisorClass total{n, 0, 0};
  std::size_t i = 0;
  bool any = false;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      throw ParseError("expected '+' or '-' in class expression '" + std::string(text) + "'");
    }
    long coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = coeff * 10 + (text[i] - '0');
        if (coeff > 1'000'000'000) throw ParseError("coefficient too large");
        ++i;
      }
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::size_t start = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view name = text.substr(start, i - start);
    DivisorClass unit;
    if (name == "F") unit = fiber(n);
    else if (name == "Linf") unit = section_at_infinity(n);
    else if (name == "L0") unit = zero_section(n);
    else if (name == "K") unit = canonical_class(n);
    else throw ParseError("unknown class symbol '" + std::string(name) + "' (expected F, Linf, L0 or K)");
    total = total + (sign * coeff) * unit;
    any = true;
  }
  if (!any) throw ParseError("empty class expression");
  return total;
}

std::string DivisorClass::str() const {
  auto term = [](long c, const char* name, bool first) {
    std::string s;
    if (c < 0) s += first ? "-" : " - ";
    else if (!first) s += " + ";
    const long abs_c = c < 0 ? -c : c;
    if (abs_c != 1) s += std::to_string(abs_c);
    return s + name;
  };
  std::string out;
  if (a != 0) out += term(a, "Linf", true);
  if (b != 0) out += term(b, "F", out.empty());
  return out.empty() ? "0" : out;
}

}  // namespace planarity
