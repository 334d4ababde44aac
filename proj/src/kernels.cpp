#include "leray/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>
#include <utility>

#include "leray/spectral.hpp"

namespace leray {

bool expected_nonvanishing(const ModuliInstance& inst) { return inst.d >= 3 || inst.n % 2 == 0; }

namespace {

SweepRow sweep_one(const ModuliInstance& inst) {
  SweepRow row;
  row.instance = inst;
  try {
    row.report = verify_instance(inst);
    row.violation = row.report->nonvanishing != expected_nonvanishing(inst);
    if (row.violation) row.error = "unexpected nonvanishing verdict";
  } catch (const std::exception& e) {
    row.error = e.what();
    row.violation = true;
  }
  return row;
}

void check_sweep_bounds(int n_max, int d_max) {
  if (n_max < 1 || d_max < 2) throw std::invalid_argument("sweep needs n_max >= 1 and d_max >= 2");
}

}  // namespace

SweepResult sweep(int n_max, int d_max) {
  check_sweep_bounds(n_max, d_max);
  const int d_count = d_max - 1;
  const long total = static_cast<long>(n_max) * d_count;
  SweepResult result;
  result.rows.resize(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < total; ++i) {
    const int n = static_cast<int>(i / d_count) + 1;
    const int d = static_cast<int>(i % d_count) + 2;
    result.rows[static_cast<std::size_t>(i)] = sweep_one(ModuliInstance{n, d});
  }

  result.violations = static_cast<std::size_t>(
      std::count_if(result.rows.begin(), result.rows.end(), [](const SweepRow& r) { return r.violation; }));
  return result;
}

SweepResult sweep_reference(int n_max, int d_max) {
  check_sweep_bounds(n_max, d_max);
  SweepResult result;
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 2; d <= d_max; ++d) {
      result.rows.push_back(sweep_one(ModuliInstance::make(n, d)));
      if (result.rows.back().violation) ++result.violations;
    }
  }
  return result;
}

namespace {

constexpr int kMaxBoxCells = 24;
constexpr int kMaxDiagonals = 2 * kMaxBoxCells;

using DenseGrid = std::array<int, kMaxBoxCells>;
using Totals = std::array<long, kMaxDiagonals>;

void validate(const SoundnessDomain& dom) {
  if (dom.p_extent < 1 || dom.q_extent < 1) throw std::invalid_argument("box extents must be positive");
  if (dom.p_extent * dom.q_extent > kMaxBoxCells)
    throw std::invalid_argument("box has more than " + std::to_string(kMaxBoxCells) + " cells");
  if (dom.max_cells < 0 || dom.max_entry < 1) throw std::invalid_argument("max_cells >= 0 and max_entry >= 1 required");
}

struct Arrow {
  int source;
  int target;
};

// Box geometry shared by all grids of one domain.
struct Box {
  int p_extent;
  int q_extent;
  int cells;
  int first_page = 2;
  int last_page;
  std::vector<std::vector<Arrow>> arrows;  // indexed by page - first_page
  std::array<int, kMaxBoxCells> diagonal{};

  explicit Box(const SoundnessDomain& dom)
      : p_extent(dom.p_extent), q_extent(dom.q_extent), cells(dom.p_extent * dom.q_extent), last_page(dom.last_page()) {
    for (int p = 0; p < p_extent; ++p)
      for (int q = 0; q < q_extent; ++q) diagonal[static_cast<std::size_t>(index(p, q))] = p + q;
    for (int r = first_page; r <= last_page; ++r) {
      std::vector<Arrow> page;
      for (int p = 0; p < p_extent; ++p) {
        for (int q = 0; q < q_extent; ++q) {
          const Cell t = differential_target({p, q}, r);
          if (t.p < p_extent && t.q >= 0) page.push_back({index(p, q), index(t.p, t.q)});
        }
      }
      arrows.push_back(std::move(page));
    }
  }

  int index(int p, int q) const { return p * q_extent + q; }

  Totals totals(const DenseGrid& g) const {
    Totals t{};
    for (int i = 0; i < cells; ++i) t[static_cast<std::size_t>(diagonal[static_cast<std::size_t>(i)])] += g[static_cast<std::size_t>(i)];
    return t;
  }
};

// (grew, unchanged) of `after` relative to `before`.
template <class Seq>
std::pair<bool, bool> compare_totals(const Seq& before, const Seq& after) {
  bool grew = false;
  bool unchanged = true;
  for (std::size_t k = 0; k < before.size(); ++k) {
    if (after[k] > before[k]) grew = true;
    if (after[k] != before[k]) unchanged = false;
  }
  return {grew, unchanged};
}

class DenseWalker {
 public:
  DenseWalker(const Box& box, SoundnessStats& stats) : box_(box), stats_(stats) {}

  void run(const DenseGrid& e2) {
    e2_totals_ = box_.totals(e2);
    descend(e2, box_.first_page, false);
  }

 private:
  void descend(const DenseGrid& grid, int page, bool any_nonzero) {
    if (page > box_.last_page) {
      ++stats_.plan_sequences;
      if (any_nonzero) ++stats_.nonzero_sequences;
      const auto [grew, unchanged] = compare_totals(e2_totals_, box_.totals(grid));
      if (grew || unchanged == any_nonzero) ++stats_.violations;
      return;
    }
    std::vector<Arrow> active;
    for (const Arrow& a : box_.arrows[static_cast<std::size_t>(page - box_.first_page)])
      if (grid[static_cast<std::size_t>(a.source)] > 0 && grid[static_cast<std::size_t>(a.target)] > 0)
        active.push_back(a);
    DenseGrid available = grid;
    assign(grid, page, any_nonzero, active, 0, available, false);
  }

  // `available` holds dims minus ranks assigned so far, which is exactly the
  // feasibility budget dim - outgoing - incoming.
  void assign(const DenseGrid& grid, int page, bool any_nonzero, const std::vector<Arrow>& active, std::size_t next,
              DenseGrid& available, bool plan_nonzero) {
    if (next == active.size()) {
      ++stats_.page_turns;
      const auto [grew, unchanged] = compare_totals(box_.totals(grid), box_.totals(available));
      if (grew || unchanged == plan_nonzero) ++stats_.violations;
      descend(available, page + 1, any_nonzero || plan_nonzero);
      return;
    }
    const auto s = static_cast<std::size_t>(active[next].source);
    const auto t = static_cast<std::size_t>(active[next].target);
    const int max_rank = std::min(available[s], available[t]);
    for (int rank = 0; rank <= max_rank; ++rank) {
      available[s] -= rank;
      available[t] -= rank;
      assign(grid, page, any_nonzero, active, next + 1, available, plan_nonzero || rank > 0);
      available[s] += rank;
      available[t] += rank;
    }
  }

  const Box& box_;
  SoundnessStats& stats_;
  Totals e2_totals_{};
};

// Calls visit(values) for every assignment of 1..max_entry to the set bits
// of `support`.
template <class Visit>
void for_each_filling(std::uint32_t support, int cells, int max_entry, Visit&& visit) {
  std::vector<int> positions;
  for (int i = 0; i < cells; ++i)
    if (support & (1u << i)) positions.push_back(i);
  DenseGrid grid{};
  for (int i : positions) grid[static_cast<std::size_t>(i)] = 1;
  while (true) {
    visit(grid);
    std::size_t k = 0;
    for (; k < positions.size(); ++k) {
      auto& v = grid[static_cast<std::size_t>(positions[k])];
      if (v < max_entry) {
        ++v;
        break;
      }
      v = 1;
    }
    if (k == positions.size()) return;
  }
}

void merge(SoundnessStats& into, const SoundnessStats& from) {
  into.grids += from.grids;
  into.plan_sequences += from.plan_sequences;
  into.nonzero_sequences += from.nonzero_sequences;
  into.page_turns += from.page_turns;
  into.violations += from.violations;
}

}  // namespace

SoundnessStats exhaustive_soundness(const SoundnessDomain& domain) {
  validate(domain);
  const Box box(domain);
  const long supports = 1L << box.cells;
  SoundnessStats total;

#pragma omp parallel
  {
    SoundnessStats local;
    DenseWalker walker(box, local);
#pragma omp for schedule(dynamic, 256)
    for (long mask = 0; mask < supports; ++mask) {
      const auto support = static_cast<std::uint32_t>(mask);
      if (std::popcount(support) > domain.max_cells) continue;
      for_each_filling(support, box.cells, domain.max_entry, [&](const DenseGrid& g) {
        ++local.grids;
        walker.run(g);
      });
    }
#pragma omp critical
    merge(total, local);
  }
  return total;
}

namespace {

class ReferenceWalker {
 public:
  ReferenceWalker(int last_page, SoundnessStats& stats) : last_page_(last_page), stats_(stats) {}

  void run(const SpectralGrid& e2) {
    e2_totals_ = total_dimensions(e2);
    descend(e2, false);
  }

 private:
  std::pair<bool, bool> against(const std::vector<std::int64_t>& before, const SpectralGrid& after) const {
    auto b = before;
    auto a = total_dimensions(after);
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    return compare_totals(b, a);
  }

  void descend(const SpectralGrid& grid, bool any_nonzero) {
    if (grid.page() > last_page_) {
      ++stats_.plan_sequences;
      if (any_nonzero) ++stats_.nonzero_sequences;
      const auto [grew, unchanged] = against(e2_totals_, grid);
      if (grew || unchanged == any_nonzero) ++stats_.violations;
      return;
    }
    std::vector<std::pair<Cell, std::int64_t>> arrows;  // source, max rank
    for (const auto& [cell, dim] : grid.cells()) {
      const std::int64_t cap = std::min(dim, grid.dim(differential_target(cell, grid.page())));
      if (differential_target(cell, grid.page()).q >= 0 && cap > 0) arrows.emplace_back(cell, cap);
    }
    DifferentialPlan plan{grid.page(), {}};
    enumerate(grid, arrows, 0, plan, any_nonzero);
  }

  void enumerate(const SpectralGrid& grid, const std::vector<std::pair<Cell, std::int64_t>>& arrows, std::size_t next,
                 DifferentialPlan& plan, bool any_nonzero) {
    if (next == arrows.size()) {
      std::optional<SpectralGrid> turned;
      try {
        turned = turn_page(grid, plan);
      } catch (const SpectralError&) {
        return;  // infeasible plan
      }
      ++stats_.page_turns;
      const auto [grew, unchanged] = against(total_dimensions(grid), *turned);
      if (grew || unchanged == !plan.is_zero()) ++stats_.violations;
      descend(*turned, any_nonzero || !plan.is_zero());
      return;
    }
    const auto& [source, cap] = arrows[next];
    for (std::int64_t rank = 0; rank <= cap; ++rank) {
      plan.ranks[source] = rank;
      enumerate(grid, arrows, next + 1, plan, any_nonzero);
    }
    plan.ranks.erase(source);
  }

  int last_page_;
  SoundnessStats& stats_;
  std::vector<std::int64_t> e2_totals_;
};

}  // namespace

SoundnessStats exhaustive_soundness_reference(const SoundnessDomain& domain) {
  validate(domain);
  const int cells = domain.p_extent * domain.q_extent;
  SoundnessStats stats;
  ReferenceWalker walker(domain.last_page(), stats);
  for (std::uint32_t support = 0; support < (1u << cells); ++support) {
    if (std::popcount(support) > domain.max_cells) continue;
    for_each_filling(support, cells, domain.max_entry, [&](const DenseGrid& dense) {
      SpectralGrid e2(2);
      for (int i = 0; i < cells; ++i)
        if (dense[static_cast<std::size_t>(i)] > 0)
          e2.set({i / domain.q_extent, i % domain.q_extent}, dense[static_cast<std::size_t>(i)]);
      ++stats.grids;
      walker.run(e2);
    });
  }
  return stats;
}

}  // namespace leray
