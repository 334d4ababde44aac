#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace leray {

/// Position (p, q) on a first-quadrant page.
struct Cell {
  int p = 0;
  int q = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Target of d_r: E_r^{p,q} -> E_r^{p+r, q-r+1}.
constexpr Cell differential_target(Cell source, int r) { return {source.p + r, source.q - r + 1}; }

class SpectralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimensions of E_r^{p,q} over Q. Zero cells are not stored.
class SpectralGrid {
 public:
  explicit SpectralGrid(int page = 2);

  int page() const { return page_; }
  std::int64_t dim(Cell c) const;
  /// Throws SpectralError for negative dims or cells outside the first quadrant.
  void set(Cell c, std::int64_t dim);
  const std::map<Cell, std::int64_t>& cells() const { return dims_; }
  bool is_zero() const { return dims_.empty(); }

  friend bool operator==(const SpectralGrid&, const SpectralGrid&) = default;

 private:
  int page_;
  std::map<Cell, std::int64_t> dims_;
};

/// Ranks of d_r keyed by source cell.
struct DifferentialPlan {
  int page = 2;
  std::map<Cell, std::int64_t> ranks;

  bool is_zero() const;
};

/// E_2^{p,q} = base[p] * fiber[q] (constant coefficients).
SpectralGrid build_e2(const std::vector<std::int64_t>& base_betti, const std::vector<std::int64_t>& fiber_betti);

/// E_{r+1}^{p,q} = E_r^{p,q} - rank(outgoing) - rank(incoming). Throws
/// SpectralError naming the first violating cell when the plan is on the
/// wrong page, has a negative rank, exceeds a source/target dimension,
/// points out of the first quadrant, or overdraws a cell.
SpectralGrid turn_page(const SpectralGrid& grid, const DifferentialPlan& plan);

/// b_k = sum_{p+q=k} dim E^{p,q}; empty for the zero grid.
std::vector<std::int64_t> total_dimensions(const SpectralGrid& grid);

/// True iff total_dimensions(e2) equals total_betti after zero padding.
bool check_degeneration(const SpectralGrid& e2, const std::vector<std::int64_t>& total_betti);

}  // namespace leray
