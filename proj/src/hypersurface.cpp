#include "leray/hypersurface.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "leray/gl_cohomology.hpp"

namespace leray {

ModuliInstance ModuliInstance::make(int n, int d) {
  if (n < 1) throw std::invalid_argument("ambient dimension n must be >= 1, got " + std::to_string(n));
  if (d < 2) throw std::invalid_argument("degree d must be >= 2, got " + std::to_string(d));
  return ModuliInstance{n, d};
}

namespace {

BigInt minus_one_pow(int k) { return k % 2 == 0 ? BigInt(1) : BigInt(-1); }

// 1 - (1-d)^n
BigInt one_minus_power(const ModuliInstance& inst) { return BigInt(1) - ipow(1L - inst.d, inst.n); }

// Pullback along a map sending the hyperplane class h to scale*h_X, landing
// in Q[h_X]/(h_X^order).
TruncatedSeries pull_back(const TruncatedSeries& s, const Rational& scale, std::size_t order) {
  std::vector<Rational> out;
  Rational factor(1);
  for (std::size_t i = 0; i < std::min(order, s.order()); ++i) {
    out.push_back(s[i] * factor);
    factor *= scale;
  }
  return {order, std::move(out)};
}

}  // namespace

BigInt discriminant_degree(const ModuliInstance& inst) { return BigInt(inst.n + 1) * ipow(inst.d - 1L, inst.n); }

BigInt milnor_brieskorn(std::span<const int> exponents) {
  BigInt mu(1);
  for (int a : exponents) {
    if (a < 2) throw std::invalid_argument("Brieskorn–Pham exponent must be >= 2, got " + std::to_string(a));
    mu *= a - 1;
  }
  return mu;
}

BigInt iota_multiplier(const ModuliInstance& inst) {
  const int exponent[] = {inst.d};
  return milnor_brieskorn(exponent);
}

TruncatedSeries gauss_chern_total(const ModuliInstance& inst) {
  const auto order = static_cast<std::size_t>(inst.n);
  const auto line = TruncatedSeries::linear(order, Rational(1), Rational(inst.d - 1));
  const auto dual = TruncatedSeries::linear(order, Rational(1), Rational(-1));
  return inverse(line) * inverse(dual);
}

TruncatedSeries gauss_chern_total_whitney(const ModuliInstance& inst) {
  const ProjectiveSpaceCohomology pn{inst.n};
  const auto x_order = static_cast<std::size_t>(inst.n);

  // c(E) = c(O(1))^{-(n+1)} on P^n
  const auto c_o1 = pn.one() + pn.hyperplane();
  const auto c_e = pow(c_o1, -(inst.n + 1));

  // gamma^* h = (d-1) h_X
  const auto c_gamma_e = pull_back(c_e, Rational(inst.d - 1), x_order);

  const auto c_o_minus1 = TruncatedSeries::linear(x_order, Rational(1), Rational(-1));
  const auto c_quotient = inverse(c_o_minus1);
  const auto c_o_dminus1 = TruncatedSeries::linear(x_order, Rational(1), Rational(inst.d - 1));
  const auto c_f = inverse(c_quotient * pow(c_o_dminus1, inst.n));

  return c_gamma_e * inverse(c_f);
}

Rational chern_top_closed_form(const ModuliInstance& inst) { return Rational(one_minus_power(inst), BigInt(inst.d)); }

Rational chern_top_coefficient(const ModuliInstance& inst) {
  const auto series = gauss_chern_total(inst);
  const Rational& top = series[static_cast<std::size_t>(inst.n - 1)];
  const Rational closed = chern_top_closed_form(inst);
  if (top != closed)
    throw CrossCheckFailure("c_{n-1} mismatch for (n,d)=(" + std::to_string(inst.n) + "," + std::to_string(inst.d) +
                            "): series " + top.to_string() + " vs closed form " + closed.to_string());
  if (!top.is_integer()) throw CrossCheckFailure("c_{n-1} is not integral: " + top.to_string());
  return top;
}

BigInt chern_degree(const ModuliInstance& inst) {
  // deg h_X^{n-1} = d on a degree-d hypersurface
  const BigInt degree = (chern_top_coefficient(inst) * Rational(BigInt(inst.d))).to_integer();
  if (degree != one_minus_power(inst))
    throw CrossCheckFailure("Chern degree mismatch: " + degree.get_str() + " vs " + one_minus_power(inst).get_str());
  return degree;
}

BigInt t1_multiplicity(const ModuliInstance& inst) { return BigInt(inst.d) * ipow(inst.d - 1L, inst.n); }

BigInt t2_coefficient(const ModuliInstance& inst) {
  const BigInt closed = minus_one_pow(inst.n) * one_minus_power(inst);
  // [T_2] = (-1)^n [T_2'] and [T_2'] = deg c_{n-1} [T_1]
  const BigInt via_transposition = minus_one_pow(inst.n) * chern_degree(inst);
  if (closed != via_transposition)
    throw CrossCheckFailure("[T_2] coefficient mismatch: " + closed.get_str() + " vs " + via_transposition.get_str());
  return closed;
}

BigInt pullback_coefficient(const ModuliInstance& inst) {
  const BigInt sum = t1_multiplicity(inst) + t2_coefficient(inst);
  const BigInt closed = ipow(inst.d - 1L, inst.n + 1) + minus_one_pow(inst.n);
  if (sum != closed)
    throw CrossCheckFailure("r_n^*[S] coefficient mismatch: " + sum.get_str() + " vs " + closed.get_str());
  return sum;
}

int codim_sigma_ell(const ModuliInstance& inst, int l) {
  if (l < 1 || l > inst.n + 1)
    throw std::invalid_argument("l must lie in [1, " + std::to_string(inst.n + 1) + "], got " + std::to_string(l));
  const int codim_sigma = l;
  const int codim_d = l;
  const int eta_degree = gl_algebra(inst.n + 1).degree_of(static_cast<std::size_t>(l));
  if (codim_sigma != codim_d || 2 * codim_d != eta_degree + 1)
    throw CrossCheckFailure("codimension bookkeeping failed for l=" + std::to_string(l));
  return codim_sigma;
}

VerifierReport verify_instance(const ModuliInstance& inst) {
  VerifierReport r;
  r.instance = inst;
  r.discriminant_degree = discriminant_degree(inst);
  r.iota_multiplier = iota_multiplier(inst);
  if (r.iota_multiplier != inst.d - 1) throw CrossCheckFailure("iota multiplier differs from d - 1");
  r.t1_multiplicity = t1_multiplicity(inst);
  r.t2_coefficient = t2_coefficient(inst);
  r.pullback_coefficient = pullback_coefficient(inst);
  r.chern_top_coefficient = chern_top_coefficient(inst);
  r.chern_degree = chern_degree(inst);

  if (gauss_chern_total_whitney(inst) != gauss_chern_total(inst))
    throw CrossCheckFailure("Whitney route disagrees with the direct Chern series");
  if (r.pullback_coefficient != r.t1_multiplicity + r.t2_coefficient)
    throw CrossCheckFailure("pullback coefficient is not t1 + t2");

  r.nonvanishing = r.pullback_coefficient != 0;
  if (inst.satisfies_hypothesis() && !r.nonvanishing)
    throw CrossCheckFailure("vanishing certificate for d >= 3 at (n,d)=(" + std::to_string(inst.n) + "," +
                            std::to_string(inst.d) + ")");
  return r;
}

std::string render_table(const VerifierReport& r) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(r.instance.n)},
      {"d", std::to_string(r.instance.d)},
      {"hypothesis d>=3", r.satisfies_hypothesis() ? "yes" : "no (boundary case)"},
      {"transitive action", r.instance.transitive_action() ? "yes" : "no"},
      {"discriminant degree", r.discriminant_degree.get_str()},
      {"iota multiplier", r.iota_multiplier.get_str()},
      {"[T_1] multiplicity", r.t1_multiplicity.get_str()},
      {"[T_2] coefficient", r.t2_coefficient.get_str()},
      {"r_n^*[S] coefficient", r.pullback_coefficient.get_str()},
      {"c_{n-1} coefficient", r.chern_top_coefficient.to_string()},
      {"c_{n-1} degree", r.chern_degree.get_str()},
      {"nonvanishing", r.nonvanishing ? "true" : "false"},
  };
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << std::string(width - k.size(), ' ') << k << ": " << v << '\n';
  return out.str();
}

}  // namespace leray
