#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "leray/bigraded.hpp"

namespace leray {

// Poincaré–Serre polynomials taken from the literature on moduli of smooth
// hypersurfaces. Only ps_gl and the products below are computed; the rest
// records external results as data:
//   ps_u(n,d) = ps_gl(n+1) for (2,3), (3,3), (4,3), (2,5)  (the quotient has
//   the rational cohomology of a point),
//   ps_u(2,4) = ps_gl(3) * ps_m24 with ps_m24 = 1 + t^6 u^12 (H^6 = Q(-6)).

BigradedPolynomial fixture_ps_m24();

/// ps_u(n,d) for the five recorded instances; throws std::out_of_range
/// otherwise.
BigradedPolynomial fixture_ps_u(int n, int d);

/// All fixtures by file stem: ps_gl_1..ps_gl_8, ps_point, ps_m24,
/// ps_u_2_3, ps_u_3_3, ps_u_4_3, ps_u_2_5, ps_u_2_4.
std::map<std::string, BigradedPolynomial> standard_fixtures();

/// Writes <stem>.json for each fixture (two-space indented, trailing newline).
void write_fixtures(const std::filesystem::path& dir);

/// Exact file contents write_fixtures() produces for one polynomial.
std::string fixture_file_text(const BigradedPolynomial& p);

}  // namespace leray
