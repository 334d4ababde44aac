#include "leray/gl_cohomology.hpp"

#include <stdexcept>

namespace leray {

ExteriorAlgebra gl_algebra(int n) {
  if (n < 0) throw std::invalid_argument("GL_n needs n >= 0");
  std::vector<int> degrees;
  for (int l = 1; l <= n; ++l) degrees.push_back(2 * l - 1);
  return ExteriorAlgebra(std::move(degrees));
}

bool is_gl_algebra(const ExteriorAlgebra& algebra) {
  const auto& deg = algebra.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] != 2 * static_cast<int>(i) + 1) return false;
  return true;
}

GLCohomology GLCohomology::make(int n) {
  if (n < 1) throw std::invalid_argument("GL_n needs n >= 1");
  GLCohomology gl;
  gl.n = n;
  gl.algebra = gl_algebra(n);
  for (int l = 1; l <= n; ++l) gl.weights.push_back(2 * l);
  return gl;
}

BigradedPolynomial gl_poincare(int n) { return gl_poincare_serre(n).forget_weights(); }

BigradedPolynomial gl_poincare_serre(int n) {
  if (n < 0) throw std::invalid_argument("GL_n needs n >= 0");
  BigradedPolynomial p(Rational(1));
  for (int l = 1; l <= n; ++l) p = p * BigradedPolynomial::one_plus(2 * l - 1, 2 * l);
  return p;
}

SphereModel SphereModel::make(int n) {
  if (n < 1) throw std::invalid_argument("Q_n needs n >= 1");
  return SphereModel{n, BigradedPolynomial::one_plus(2 * n - 1, 2 * n)};
}

bool sphere_fibration_check(int n) { return sphere_fibration_check(n, SphereModel::make(n).poincare_serre); }

bool sphere_fibration_check(int n, const BigradedPolynomial& sphere) {
  if (n < 2) throw std::invalid_argument("sphere fibration check needs n >= 2");
  return sphere * gl_poincare_serre(n - 1) == gl_poincare_serre(n);
}

namespace {

void require_gl(const ExteriorElement& x) {
  if (!is_gl_algebra(x.algebra())) throw std::invalid_argument("element does not live in H*(GL_n)");
}

template <class SignFn>
ExteriorElement rescale_monomials(const ExteriorElement& x, SignFn sign_of) {
  ExteriorElement out(x.algebra());
  for (const auto& [subset, c] : x.terms()) out.add_term(subset, sign_of(subset) > 0 ? c : -c);
  return out;
}

}  // namespace

ExteriorElement transposition_involution(const ExteriorElement& x) {
  require_gl(x);
  return rescale_monomials(x, [](SubsetMask subset) {
    int sign = 1;
    for (std::size_t l : subset_indices(subset))
      if ((l - 1) % 2 == 1) sign = -sign;
    return sign;
  });
}

ExteriorElement inversion_involution(const ExteriorElement& x) {
  require_gl(x);
  return rescale_monomials(x, [&x](SubsetMask subset) { return x.degree_of(subset) % 2 == 0 ? 1 : -1; });
}

ExteriorElement restrict_to_subgroup(const ExteriorElement& x) {
  require_gl(x);
  const auto n = static_cast<int>(x.algebra().rank());
  if (n < 1) throw std::invalid_argument("restriction needs n >= 1");
  const SubsetMask top = SubsetMask{1} << (n - 1);
  ExteriorElement out(gl_algebra(n - 1));
  for (const auto& [subset, c] : x.terms())
    if ((subset & top) == 0) out.add_term(subset, c);
  return out;
}

}  // namespace leray
