#include "leray/spectral.hpp"

#include <algorithm>
#include <string>

namespace leray {

namespace {

std::string cell_name(Cell c) { return "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")"; }

}  // namespace

SpectralGrid::SpectralGrid(int page) : page_(page) {
  if (page < 2) throw SpectralError("page must be >= 2, got " + std::to_string(page));
}

std::int64_t SpectralGrid::dim(Cell c) const {
  auto it = dims_.find(c);
  return it == dims_.end() ? 0 : it->second;
}

void SpectralGrid::set(Cell c, std::int64_t dim) {
  if (c.p < 0 || c.q < 0) throw SpectralError("cell " + cell_name(c) + " lies outside the first quadrant");
  if (dim < 0) throw SpectralError("negative dimension at " + cell_name(c));
  if (dim == 0)
    dims_.erase(c);
  else
    dims_[c] = dim;
}

bool DifferentialPlan::is_zero() const {
  return std::all_of(ranks.begin(), ranks.end(), [](const auto& kv) { return kv.second == 0; });
}

SpectralGrid build_e2(const std::vector<std::int64_t>& base_betti, const std::vector<std::int64_t>& fiber_betti) {
  SpectralGrid grid(2);
  for (std::size_t p = 0; p < base_betti.size(); ++p) {
    if (base_betti[p] < 0) throw SpectralError("negative base Betti number");
    for (std::size_t q = 0; q < fiber_betti.size(); ++q) {
      if (fiber_betti[q] < 0) throw SpectralError("negative fiber Betti number");
      grid.set({static_cast<int>(p), static_cast<int>(q)}, base_betti[p] * fiber_betti[q]);
    }
  }
  return grid;
}

SpectralGrid turn_page(const SpectralGrid& grid, const DifferentialPlan& plan) {
  const int r = grid.page();
  if (plan.page != r)
    throw SpectralError("plan is for page " + std::to_string(plan.page) + " but grid is on page " + std::to_string(r));

  std::map<Cell, std::int64_t> lost;
  for (const auto& [source, rank] : plan.ranks) {
    if (rank == 0) continue;
    if (rank < 0) throw SpectralError("negative rank at " + cell_name(source));
    const Cell target = differential_target(source, r);
    if (source.p < 0 || source.q < 0 || target.q < 0)
      throw SpectralError("differential from " + cell_name(source) + " leaves the first quadrant");
    if (rank > std::min(grid.dim(source), grid.dim(target)))
      throw SpectralError("rank " + std::to_string(rank) + " at " + cell_name(source) + " exceeds min(dim source " +
                          std::to_string(grid.dim(source)) + ", dim target " + std::to_string(grid.dim(target)) + ")");
    lost[source] += rank;
    lost[target] += rank;
  }

  SpectralGrid next(r + 1);
  for (const auto& [cell, dim] : grid.cells()) next.set(cell, dim);
  for (const auto& [cell, amount] : lost) {
    const std::int64_t remaining = grid.dim(cell) - amount;
    if (remaining < 0)
      throw SpectralError("plan overdraws cell " + cell_name(cell) + ": dim " + std::to_string(grid.dim(cell)) +
                          ", outgoing+incoming rank " + std::to_string(amount));
    next.set(cell, remaining);
  }
  return next;
}

std::vector<std::int64_t> total_dimensions(const SpectralGrid& grid) {
  std::vector<std::int64_t> totals;
  for (const auto& [cell, dim] : grid.cells()) {
    const auto k = static_cast<std::size_t>(cell.p + cell.q);
    if (totals.size() <= k) totals.resize(k + 1, 0);
    totals[k] += dim;
  }
  return totals;
}

bool check_degeneration(const SpectralGrid& e2, const std::vector<std::int64_t>& total_betti) {
  if (std::any_of(total_betti.begin(), total_betti.end(), [](std::int64_t b) { return b < 0; }))
    throw SpectralError("negative total Betti number");
  auto sums = total_dimensions(e2);
  auto expected = total_betti;
  const std::size_t len = std::max(sums.size(), expected.size());
  sums.resize(len, 0);
  expected.resize(len, 0);
  return sums == expected;
}

}  // namespace leray
