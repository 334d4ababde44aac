#include "leray/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace leray {

ExteriorAlgebra::ExteriorAlgebra(std::vector<int> generator_degrees) : degrees_(std::move(generator_degrees)) {
  if (degrees_.size() > kMaxGenerators)
    throw std::invalid_argument("exterior algebra supports at most " + std::to_string(kMaxGenerators) +
                                " generators");
  for (int d : degrees_)
    if (d <= 0 || d % 2 == 0)
      throw std::invalid_argument("exterior generator degree must be positive and odd, got " + std::to_string(d));
}

std::vector<std::size_t> subset_indices(SubsetMask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return out;
}

SubsetMask subset_mask(const std::vector<std::size_t>& indices) {
  SubsetMask mask = 0;
  for (std::size_t i : indices) {
    if (i == 0 || i > ExteriorAlgebra::kMaxGenerators)
      throw std::invalid_argument("generator index out of range: " + std::to_string(i));
    mask |= SubsetMask{1} << (i - 1);
  }
  return mask;
}

std::vector<BasisMonomial> exterior_basis(const ExteriorAlgebra& algebra) {
  const std::size_t n = algebra.rank();
  if (n >= 32) throw std::invalid_argument("basis enumeration limited to fewer than 32 generators");
  std::vector<BasisMonomial> basis;
  basis.reserve(std::size_t{1} << n);
  for (SubsetMask mask = 0; mask < (SubsetMask{1} << n); ++mask) {
    BasisMonomial m{subset_indices(mask), 0};
    for (std::size_t i : m.subset) m.degree += algebra.degree_of(i);
    basis.push_back(std::move(m));
  }
  std::sort(basis.begin(), basis.end(), [](const BasisMonomial& a, const BasisMonomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.subset < b.subset;
  });
  return basis;
}

ExteriorElement ExteriorElement::scalar(const ExteriorAlgebra& algebra, const Rational& c) {
  ExteriorElement e(algebra);
  e.add_term(0, c);
  return e;
}

ExteriorElement ExteriorElement::generator(const ExteriorAlgebra& algebra, std::size_t index) {
  return basis(algebra, {index});
}

ExteriorElement ExteriorElement::basis(const ExteriorAlgebra& algebra, const std::vector<std::size_t>& subset,
                                       const Rational& c) {
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("basis subset must be strictly increasing");
  ExteriorElement e(algebra);
  e.add_term(subset_mask(subset), c);
  return e;
}

Rational ExteriorElement::coefficient(SubsetMask subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add_term(SubsetMask subset, const Rational& c) {
  const std::size_t n = algebra_.rank();
  if (n < 64 && (subset >> n) != 0)
    throw std::invalid_argument("subset uses generators beyond rank " + std::to_string(n));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(subset, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int ExteriorElement::degree_of(SubsetMask subset) const {
  int deg = 0;
  for (std::size_t i : subset_indices(subset)) deg += algebra_.degree_of(i);
  return deg;
}

bool ExteriorElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int first = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return degree_of(kv.first) == first; });
}

int ExteriorElement::degree() const {
  if (!is_homogeneous()) throw std::domain_error("element is not homogeneous");
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

namespace {

void require_same_algebra(const ExteriorElement& a, const ExteriorElement& b) {
  if (!(a.algebra() == b.algebra())) throw std::invalid_argument("exterior elements live in different algebras");
}

}  // namespace

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& rhs) {
  require_same_algebra(*this, rhs);
  for (const auto& [s, c] : rhs.terms_) add_term(s, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& rhs) {
  require_same_algebra(*this, rhs);
  for (const auto& [s, c] : rhs.terms_) add_term(s, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= c;
  return *this;
}

int wedge_sign(SubsetMask a, SubsetMask b) {
  if ((a & b) != 0) return 0;
  // Each index j in b has to move past every index of a greater than j.
  int inversions = 0;
  for (SubsetMask rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const SubsetMask above = j == 63 ? 0 : (~SubsetMask{0} << (j + 1));
    inversions += std::popcount(a & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  require_same_algebra(a, b);
  ExteriorElement out(a.algebra());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      const int sign = wedge_sign(sa, sb);
      if (sign == 0) continue;
      out.add_term(sa | sb, sign > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

std::string ExteriorElement::to_string(std::string_view symbol) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t i : subset_indices(s)) {
      if (!mono.empty()) mono += "∧";
      mono += std::string(symbol) + std::to_string(i);
    }
    if (mono.empty())
      out += mag.to_string();
    else if (mag == Rational(1))
      out += mono;
    else
      out += mag.to_string() + "·" + mono;
  }
  return out;
}

}  // namespace leray
