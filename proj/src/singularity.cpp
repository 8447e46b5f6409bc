#include "planarity/singularity.hpp"

#include <cctype>

namespace planarity {

void MultiplicityTree::validate() const {
  if (multiplicity < 2)
    throw InvalidTree(TreeDefect::Multiplicity,
                      "multiplicity " + std::to_string(multiplicity) + " < 2 in a singularity tree");
  long sum = 0;
  for (const auto& child : children) {
    child.validate();
    sum += child.multiplicity;
  }
  if (sum > multiplicity)
    throw InvalidTree(TreeDefect::Proximity, "proximity violation: children sum to " + std::to_string(sum) +
                                                 " > parent multiplicity " + std::to_string(multiplicity));
}

namespace {

ExactInt delta_unchecked(const MultiplicityTree& tree) {
  ExactInt total = binomial(tree.multiplicity, 2);
  for (const auto& child : tree.children) total += delta_unchecked(child);
  return total;
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  MultiplicityTree parse_single() {
    MultiplicityTree tree = parse_tree();
    skip_ws();
    if (pos_ != text_.size()) syntax("trailing characters");
    return tree;
  }

  SingularityProfile parse_list() {
    SingularityProfile profile;
    skip_ws();
    if (pos_ == text_.size()) return profile;
    while (true) {
      profile.push_back(parse_tree());
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ';') syntax("expected ';' between trees");
      ++pos_;
    }
    return profile;
  }

 private:
  [[noreturn]] void syntax(const std::string& what) const {
    throw TreeParseError(TreeDefect::Syntax,
                         what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  MultiplicityTree parse_tree() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) syntax("multiplicity too large");
      ++pos_;
    }
    if (pos_ == start) syntax("expected a multiplicity");
    MultiplicityTree tree{static_cast<int>(value), {}};
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      while (true) {
        tree.children.push_back(parse_tree());
        skip_ws();
        if (pos_ == text_.size()) syntax("unterminated '['");
        if (text_[pos_] == ']') {
          ++pos_;
          break;
        }
        if (text_[pos_] != ',') syntax("expected ',' or ']'");
        ++pos_;
      }
    }
    return tree;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void validate_parsed(const MultiplicityTree& tree) {
  try {
    tree.validate();
  } catch (const InvalidTree& e) {
    throw TreeParseError(e.defect(), e.what());
  }
}

}  // namespace

ExactInt delta_invariant(const MultiplicityTree& tree) {
  tree.validate();
  return delta_unchecked(tree);
}

ExactInt plane_genus(int degree, const SingularityProfile& profile) {
  if (degree < 1) throw DomainError("degree must be >= 1");
  ExactInt g = binomial(degree - 1, 2);
  for (const auto& tree : profile) g -= delta_invariant(tree);
  if (g < 0) throw DomainError("profile exceeds genus capacity of degree " + std::to_string(degree));
  return g;
}

long min_defect_via_geometry(int g, int d) {
  if (g < 0) throw DomainError("genus must be >= 0");
  if (d < 2) throw DomainError("degree must be >= 2");
  for (long l = 0;; ++l) {
    SingularityProfile profile;
    if (l >= 2) profile.push_back(MultiplicityTree::ordinary(static_cast<int>(l)));
    if (plane_genus(static_cast<int>(d + l), profile) >= g) return l;
  }
}

MultiplicityTree parse_tree(std::string_view text) {
  MultiplicityTree tree = TreeParser(text).parse_single();
  validate_parsed(tree);
  return tree;
}

SingularityProfile parse_profile(std::string_view text) {
  SingularityProfile profile = TreeParser(text).parse_list();
  for (const auto& tree : profile) validate_parsed(tree);
  return profile;
}

std::string format_tree(const MultiplicityTree& tree) {
  std::string out = std::to_string(tree.multiplicity);
  if (!tree.children.empty()) {
    out += '[';
    for (std::size_t i = 0; i < tree.children.size(); ++i) {
      if (i) out += ',';
      out += format_tree(tree.children[i]);
    }
    out += ']';
  }
  return out;
}

}  // namespace planarity
