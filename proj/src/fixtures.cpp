#include "leray/fixtures.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "leray/gl_cohomology.hpp"
#include "leray/serialize.hpp"

namespace leray {

BigradedPolynomial fixture_ps_m24() { return BigradedPolynomial::one_plus(6, 12); }

BigradedPolynomial fixture_ps_u(int n, int d) {
  const bool point_quotient = (n == 2 && d == 3) || (n == 3 && d == 3) || (n == 4 && d == 3) || (n == 2 && d == 5);
  if (point_quotient) return gl_poincare_serre(n + 1);
  if (n == 2 && d == 4) return gl_poincare_serre(3) * fixture_ps_m24();
  throw std::out_of_range("no fixture for ps_u(" + std::to_string(n) + "," + std::to_string(d) + ")");
}

std::map<std::string, BigradedPolynomial> standard_fixtures() {
  std::map<std::string, BigradedPolynomial> out;
  for (int k = 1; k <= 8; ++k) out.emplace("ps_gl_" + std::to_string(k), gl_poincare_serre(k));
  out.emplace("ps_point", BigradedPolynomial(Rational(1)));
  out.emplace("ps_m24", fixture_ps_m24());
  for (auto [n, d] : std::initializer_list<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 3}, {2, 5}, {2, 4}})
    out.emplace("ps_u_" + std::to_string(n) + "_" + std::to_string(d), fixture_ps_u(n, d));
  return out;
}

std::string fixture_file_text(const BigradedPolynomial& p) { return to_json(p).dump(2) + "\n"; }

void write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [stem, poly] : standard_fixtures()) {
    std::ofstream out(dir / (stem + ".json"));
    if (!out) throw std::runtime_error("cannot write fixture " + stem);
    out << fixture_file_text(poly);
  }
}

}  // namespace leray
