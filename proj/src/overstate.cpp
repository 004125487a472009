#include "pnsup/overstate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "pnsup/errors.hpp"

namespace pnsup {

namespace {

std::size_t literal_count(const std::vector<SubMarking>& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.marked_places();
  return n;
}

std::vector<SubMarking> canonical(std::vector<SubMarking> rows) {
  std::sort(rows.begin(), rows.end(), CanonicalLess{});
  return rows;
}

Reduction reduce(std::span<const Marking> target, std::span<const Marking> opposite,
                 const ReductionOptions& options) {
  Reduction r;
  r.target_closure = closure(target, options.max_closure);
  r.opposite_closure = closure(opposite, options.max_closure);
  r.difference = subtract_sound(r.target_closure, r.opposite_closure);
  r.minimized = minimize(r.difference);
  if (r.minimized.empty()) return r;

  CoverChart chart = CoverChart::build(std::vector<SubMarking>(r.minimized.begin(), r.minimized.end()),
                                       std::vector<Marking>(target.begin(), target.end()));
  if (!chart.feasible()) return r;
  r.cover = options.strategy == CoverStrategy::kExact ? exact_cover(chart) : select_cover(chart);
  return r;
}

}  // namespace

MarkingSet closure(std::span<const Marking> states, std::size_t max_elements) {
  MarkingSet out;
  for (const Marking& m : states) {
    // prod(k_i + 1) - 1 sub-markings, checked before enumerating.
    std::size_t product = 1;
    for (const TokenCount k : m.counts()) {
      if (k == 0) continue;
      const std::size_t factor = static_cast<std::size_t>(k) + 1;
      if (product > (max_elements + 1) / factor + 1 || product * factor - 1 > max_elements) {
        throw ClosureLimitExceeded("over-state closure would exceed " +
                                   std::to_string(max_elements) +
                                   " elements; use the unreduced per-state guard instead");
      }
      product *= factor;
    }
    // Odometer over 0..k_i on each place.
    Marking v(m.size());
    for (;;) {
      std::size_t p = 0;
      while (p < m.size() && v[p] == m[p]) {
        v[p] = 0;
        ++p;
      }
      if (p == m.size()) break;
      ++v[p];
      out.insert(v);
      if (out.size() > max_elements) {
        throw ClosureLimitExceeded("over-state closure exceeds " + std::to_string(max_elements) +
                                   " elements");
      }
    }
  }
  return out;
}

MarkingSet subtract_sound(const MarkingSet& critical_closure, const MarkingSet& sound_closure) {
  MarkingSet out;
  for (const auto& v : critical_closure) {
    if (!sound_closure.contains(v)) out.insert(v);
  }
  return out;
}

MarkingSet minimize(const MarkingSet& candidates) {
  MarkingSet out;
  for (const auto& v : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const Marking& w) { return is_overstate(w, v); });
    if (!dominated) out.insert(v);
  }
  return out;
}

CoverChart CoverChart::build(std::vector<SubMarking> rows, std::vector<Marking> columns) {
  CoverChart chart;
  chart.hits.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<bool> line;
    line.reserve(columns.size());
    for (const auto& c : columns) line.push_back(covers(r, c));
    chart.hits.push_back(std::move(line));
  }
  chart.rows = std::move(rows);
  chart.columns = std::move(columns);
  return chart;
}

std::size_t CoverChart::hit_count(std::size_t row) const {
  return static_cast<std::size_t>(std::count(hits[row].begin(), hits[row].end(), true));
}

bool CoverChart::feasible() const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    bool hit = false;
    for (std::size_t r = 0; r < rows.size() && !hit; ++r) hit = hits[r][c];
    if (!hit) return false;
  }
  return true;
}

std::vector<SubMarking> select_cover(const CoverChart& chart) {
  if (!chart.feasible()) throw InfeasibleCover("some column has no covering over-state");
  const std::size_t num_rows = chart.rows.size(), num_cols = chart.columns.size();
  std::vector<bool> selected(num_rows, false), covered(num_cols, false);

  auto take = [&](std::size_t r) {
    selected[r] = true;
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (chart.hits[r][c]) covered[c] = true;
    }
  };

  // Essential rows.
  for (std::size_t c = 0; c < num_cols; ++c) {
    std::size_t hitters = 0, last = 0;
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (chart.hits[r][c]) {
        ++hitters;
        last = r;
      }
    }
    if (hitters == 1 && !selected[last]) take(last);
  }

  // Greedy completion.
  for (;;) {
    std::size_t best = num_rows, best_gain = 0;
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (selected[r]) continue;
      std::size_t gain = 0;
      for (std::size_t c = 0; c < num_cols; ++c) {
        if (chart.hits[r][c] && !covered[c]) ++gain;
      }
      if (gain == 0) continue;
      if (gain > best_gain ||
          (gain == best_gain && CanonicalLess{}(chart.rows[r], chart.rows[best]))) {
        best = r;
        best_gain = gain;
      }
    }
    if (best == num_rows) break;
    take(best);
  }

  std::vector<SubMarking> out;
  for (std::size_t r = 0; r < num_rows; ++r) {
    if (selected[r]) out.push_back(chart.rows[r]);
  }
  return canonical(std::move(out));
}

std::vector<SubMarking> exact_cover(const CoverChart& chart, std::size_t max_rows) {
  const std::size_t num_rows = chart.rows.size(), num_cols = chart.columns.size();
  if (num_rows > max_rows) {
    throw SearchLimitExceeded("exact cover limited to " + std::to_string(max_rows) +
                              " rows, chart has " + std::to_string(num_rows));
  }
  if (!chart.feasible()) throw InfeasibleCover("some column has no covering over-state");
  if (num_cols == 0) return {};

  std::vector<std::uint64_t> row_bits(num_rows, 0);
  for (std::size_t r = 0; r < num_rows; ++r) {
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (chart.hits[r][c]) row_bits[r] |= std::uint64_t{1} << (c % 64);
    }
  }
  // Columns beyond 64 share bits; verify such candidates directly.
  auto is_cover = [&](const std::vector<std::size_t>& pick) {
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (std::none_of(pick.begin(), pick.end(), [&](std::size_t r) { return chart.hits[r][c]; })) {
        return false;
      }
    }
    return true;
  };

  std::vector<SubMarking> ordered = canonical(chart.rows);
  for (std::size_t k = 1; k <= num_rows; ++k) {
    std::vector<SubMarking> best;
    std::size_t best_literals = std::numeric_limits<std::size_t>::max();
    // Combinations of k rows in lexicographic index order.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      if (is_cover(pick)) {
        std::vector<SubMarking> rows;
        for (const std::size_t r : pick) rows.push_back(chart.rows[r]);
        rows = canonical(std::move(rows));
        const std::size_t lits = literal_count(rows);
        if (lits < best_literals ||
            (lits == best_literals &&
             std::lexicographical_compare(rows.begin(), rows.end(), best.begin(), best.end(),
                                          CanonicalLess{}))) {
          best = std::move(rows);
          best_literals = lits;
        }
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == num_rows - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!best.empty()) return best;
  }
  throw InfeasibleCover("no cover found");
}

Reduction reduce_forbidding(std::span<const Marking> critical, std::span<const Marking> sound,
                            const ReductionOptions& options) {
  if (critical.empty()) throw std::invalid_argument("reduce_forbidding needs critical states");
  return reduce(critical, sound, options);
}

Reduction reduce_enabling(std::span<const Marking> critical, std::span<const Marking> sound,
                          const ReductionOptions& options) {
  if (sound.empty()) throw std::invalid_argument("reduce_enabling needs sound states");
  return reduce(sound, critical, options);
}

}  // namespace pnsup
