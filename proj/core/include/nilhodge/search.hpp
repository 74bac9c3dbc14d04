#pragma once

#include "nilhodge/bigrading.hpp"
#include "nilhodge/lie_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace nilhodge {

enum class SearchMode { FirstHit, Exhaustive };

struct SearchConfig {
  // Max |p|+|q| (or |w|) per basis vector; 0 means max(dim L, 2) so that a
  // single vector can sit at (-1,-1) or weight -2.
  int bound = 0;
  SearchMode mode = SearchMode::FirstHit;
  bool require_symmetry = false;  // also demand check_hodge_symmetry when L has a conjugation
  unsigned threads = 0;           // 0 means hardware concurrency
};

template <class G>
struct SearchOutcome {
  std::vector<G> found;
  bool exhausted = false;
  std::uint64_t candidates_checked = 0;
  std::uint64_t candidates_pruned = 0;
  int bound = 0;
  bool symmetry_skipped = false;  // require_symmetry set but L has no conjugation
};

using BigradingSearchOutcome = SearchOutcome<Bigrading>;
using GradingSearchOutcome = SearchOutcome<Grading>;

/// Basis indices that never occur in a bracket. Their weights are free; all
/// other weights are forced by additivity.
std::vector<std::size_t> generator_indices(const LieAlgebra& L);

/// Completes a generator assignment by propagation along the brackets. Returns
/// nullopt on a conflict, an unreachable index, a weight outside the range or
/// (when bound > 0) a weight deeper than bound.
std::optional<Bigrading> propagate_weights(const LieAlgebra& L,
                                           const std::map<std::size_t, Weight>& partial,
                                           int bound = 0);
std::optional<Grading> propagate_grading(const LieAlgebra& L,
                                         const std::map<std::size_t, int>& partial,
                                         int bound = 0);

/// Bigradings compatible with L, with symmetric graded dimensions (and Hodge
/// symmetry when asked), satisfying (W). Enumeration is lexicographic in the
/// generator weights; output is independent of the thread count.
BigradingSearchOutcome search_w_bigrading(const LieAlgebra& L, const SearchConfig& cfg);

/// Gradings compatible with L satisfying (W) and (H).
GradingSearchOutcome search_w_grading(const LieAlgebra& L, const SearchConfig& cfg);

} // namespace nilhodge
