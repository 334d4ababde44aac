#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "leray/rational.hpp"

namespace leray {

/// Degrees of the generators z_1..z_n of an exterior algebra. All degrees are
/// positive and odd, so every generator squares to zero and any two
/// generators anticommute.
class ExteriorAlgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 62;

  explicit ExteriorAlgebra(std::vector<int> generator_degrees);

  std::size_t rank() const { return degrees_.size(); }
  /// Degree of z_index, 1-based.
  int degree_of(std::size_t index) const { return degrees_.at(index - 1); }
  const std::vector<int>& degrees() const { return degrees_; }

  friend bool operator==(const ExteriorAlgebra&, const ExteriorAlgebra&) = default;

 private:
  std::vector<int> degrees_;
};

/// Generator subset encoded as a bitmask: bit (i-1) set iff z_i is present.
/// The wedge monomial is always read in increasing index order.
using SubsetMask = std::uint64_t;

struct BasisMonomial {
  std::vector<std::size_t> subset;  // 1-based, increasing
  int degree = 0;

  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

/// All 2^n wedge monomials, sorted by (degree, subset).
std::vector<BasisMonomial> exterior_basis(const ExteriorAlgebra& algebra);

class ExteriorElement {
 public:
  using TermMap = std::map<SubsetMask, Rational>;

  explicit ExteriorElement(ExteriorAlgebra algebra) : algebra_(std::move(algebra)) {}

  static ExteriorElement scalar(const ExteriorAlgebra& algebra, const Rational& c);
  /// z_index (1-based).
  static ExteriorElement generator(const ExteriorAlgebra& algebra, std::size_t index);
  /// c · z_{i1} ∧ ... ∧ z_{ik} with the indices already increasing.
  static ExteriorElement basis(const ExteriorAlgebra& algebra, const std::vector<std::size_t>& subset,
                               const Rational& c = Rational(1));

  const ExteriorAlgebra& algebra() const { return algebra_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(SubsetMask subset) const;

  void add_term(SubsetMask subset, const Rational& c);

  /// Degree of one wedge monomial.
  int degree_of(SubsetMask subset) const;
  /// True iff all stored monomials share one degree (the zero element is
  /// homogeneous of every degree; degree() then returns 0).
  bool is_homogeneous() const;
  int degree() const;

  ExteriorElement& operator+=(const ExteriorElement& rhs);
  ExteriorElement& operator-=(const ExteriorElement& rhs);
  ExteriorElement& operator*=(const Rational& c);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(ExteriorElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

  /// "z1∧z2 - 3·z3"; the empty monomial prints as its coefficient.
  std::string to_string(std::string_view symbol = "z") const;

 private:
  ExteriorAlgebra algebra_;
  TermMap terms_;
};

/// Sign of z_A ∧ z_B relative to z_{A∪B}: parity of the permutation sorting
/// the concatenated index sequence. Returns 0 for overlapping subsets.
int wedge_sign(SubsetMask a, SubsetMask b);

/// Throws std::invalid_argument when the algebras differ.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

std::vector<std::size_t> subset_indices(SubsetMask mask);
SubsetMask subset_mask(const std::vector<std::size_t>& indices);

}  // namespace leray
