#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leray/hypersurface.hpp"

namespace leray {

// Data-parallel drivers. Each OpenMP kernel has a serial reference built
// directly on the public single-instance API; the two must agree exactly.

struct SweepRow {
  ModuliInstance instance;
  std::optional<VerifierReport> report;  // empty when a cross-check threw
  std::string error;
  bool violation = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (n, d)
  std::size_t violations = 0;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// A row is a violation when a cross-check throws, or when nonvanishing
/// differs from the expected pattern: true for d >= 3, and for d == 2 true
/// exactly when n is even.
bool expected_nonvanishing(const ModuliInstance& inst);

/// verify_instance over 1 <= n <= n_max, 2 <= d <= d_max.
SweepResult sweep(int n_max, int d_max);
SweepResult sweep_reference(int n_max, int d_max);

/// Every grid supported in the box [0, p_extent) x [0, q_extent) with at most
/// max_cells nonzero cells, each of dimension 1..max_entry. For each grid all
/// sequences of feasible differential plans on pages 2..last_page() are
/// enumerated; past last_page() every d_r leaves the box.
struct SoundnessDomain {
  int p_extent = 4;
  int q_extent = 4;
  int max_cells = 6;
  int max_entry = 3;

  int last_page() const { return p_extent - 1 < q_extent ? p_extent - 1 : q_extent; }
};

struct SoundnessStats {
  std::uint64_t grids = 0;
  std::uint64_t plan_sequences = 0;      // leaves: one E_infinity each
  std::uint64_t nonzero_sequences = 0;   // leaves with some nonzero rank
  std::uint64_t page_turns = 0;
  /// Leaves or single turns where the antidiagonal totals grew, or where
  /// "totals unchanged" and "all ranks zero" disagreed.
  std::uint64_t violations = 0;

  friend bool operator==(const SoundnessStats&, const SoundnessStats&) = default;
};

/// OpenMP over grid supports; dense small-array page arithmetic.
SoundnessStats exhaustive_soundness(const SoundnessDomain& domain);
/// Serial; uses SpectralGrid, DifferentialPlan and turn_page.
SoundnessStats exhaustive_soundness_reference(const SoundnessDomain& domain);

}  // namespace leray
