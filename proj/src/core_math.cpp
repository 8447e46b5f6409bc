#include "planarity/core_math.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace planarity {

ExactInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

ExactInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  ExactInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long ceil_div(long a, long b) {
  if (b <= 0) throw DomainError("ceil_div: divisor must be positive");
  long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

ExactRat rat_pow(const ExactInt& base, long exp) {
  ExactInt p;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e);
  if (exp >= 0) return ExactRat(p);
  if (p == 0) throw DomainError("rat_pow: zero to a negative power");
  ExactRat out(ExactInt(1), p);
  out.canonicalize();
  return out;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRat& v) {
  ExactRat c(v);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
  return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty partition");
  while (true) {
    skip_ws();
    std::size_t start = i;
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("partition part too large");
      ++i;
    }
    if (i == start) throw ParseError("expected a positive integer in partition '" + std::string(text) + "'");
    if (value < 1) throw ParseError("partition parts must be positive");
    parts.push_back(static_cast<int>(value));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("unexpected character in partition '" + std::string(text) + "'");
    ++i;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw ParseError("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int d) {
  if (d < 1) throw DomainError("partitions_of: d must be >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, bound); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

ExactInt aut_factor(const Partition& mu) {
  ExactInt out = 1;
  for (int m : mu.multiplicities()) out *= factorial(m);
  return out;
}

ExactInt z_factor(const Partition& mu) {
  ExactInt out = 1;
  auto mult = mu.multiplicities();
  for (std::size_t i = 1; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    ExactInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), i, static_cast<unsigned long>(mult[i]));
    out *= p * factorial(mult[i]);
  }
  return out;
}

}  // namespace planarity
