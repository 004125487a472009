#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pnsup/marking.hpp"

namespace pnsup {

inline constexpr std::size_t kDefaultClosureLimit = std::size_t{1} << 20;
inline constexpr std::size_t kExactCoverMaxRows = 20;

/// Every nonzero sub-marking v <= M for each M in states (M included).
/// A state with counts k_i contributes prod(k_i + 1) - 1 elements before
/// deduplication. Throws ClosureLimitExceeded past max_elements.
MarkingSet closure(std::span<const Marking> states,
                   std::size_t max_elements = kDefaultClosureLimit);

/// critical_closure \ sound_closure. No survivor covers a sound state.
MarkingSet subtract_sound(const MarkingSet& critical_closure, const MarkingSet& sound_closure);

/// Minimal elements under the componentwise order: drops every candidate
/// that has another candidate strictly below it.
MarkingSet minimize(const MarkingSet& candidates);

/// Prime-implicant style chart: rows are candidate over-states, columns are
/// the states to cover, hits[r][c] = covers(rows[r], columns[c]).
struct CoverChart {
  std::vector<SubMarking> rows;
  std::vector<Marking> columns;
  std::vector<std::vector<bool>> hits;

  static CoverChart build(std::vector<SubMarking> rows, std::vector<Marking> columns);
  std::size_t hit_count(std::size_t row) const;
  /// Every column has at least one hitting row.
  bool feasible() const;
};

/// Essential rows first (sole hitter of some column), then greedily the row
/// covering the most uncovered columns, ties going to the canonically
/// smallest row. Result is in canonical order. Throws InfeasibleCover.
std::vector<SubMarking> select_cover(const CoverChart& chart);

/// Minimum-cardinality cover by exhaustive search; among equal-size covers
/// the fewest threshold literals wins. Throws SearchLimitExceeded when the
/// chart has more than max_rows rows, InfeasibleCover when no cover exists.
std::vector<SubMarking> exact_cover(const CoverChart& chart,
                                    std::size_t max_rows = kExactCoverMaxRows);

enum class CoverStrategy { kGreedy, kExact };

struct ReductionOptions {
  std::size_t max_closure = kDefaultClosureLimit;
  CoverStrategy strategy = CoverStrategy::kGreedy;
};

/// Stage outputs of one reduction. For the forbidding side these are
/// C1, S1, C2, C3, C4; for the enabling side S1, C1, S2, S3, S4.
struct Reduction {
  MarkingSet target_closure;
  MarkingSet opposite_closure;
  MarkingSet difference;
  MarkingSet minimized;
  /// nullopt when no candidate set covers every target state.
  std::optional<std::vector<SubMarking>> cover;

  bool empty() const { return !cover.has_value(); }
};

/// Over-states that block exactly the critical states. critical must be
/// nonempty.
Reduction reduce_forbidding(std::span<const Marking> critical, std::span<const Marking> sound,
                            const ReductionOptions& options = {});

/// Dual form: over-states that permit exactly the sound states. sound must be
/// nonempty.
Reduction reduce_enabling(std::span<const Marking> critical, std::span<const Marking> sound,
                          const ReductionOptions& options = {});

}  // namespace pnsup
