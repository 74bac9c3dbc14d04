#include "nilhodge/search.hpp"

#include "nilhodge/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace nilhodge {

namespace {

bool in_range(Weight w) { return weight_in_range(w); }
bool in_range(int w) { return w <= -1; }
int depth_of(Weight w) { return -w.total(); }
int depth_of(int w) { return -w; }

template <class W>
std::optional<std::vector<W>> propagate(const LieAlgebra& L,
                                        const std::map<std::size_t, W>& partial, int bound) {
  const std::size_t n = L.dim();
  std::vector<std::optional<W>> w(n);
  for (const auto& [i, x] : partial) {
    if (i >= n) return std::nullopt;
    w[i] = x;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!w[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!w[j]) continue;
        const Vector& b = L.upper_bracket(i, j);
        const W target = *w[i] + *w[j];
        for (std::size_t k = 0; k < n; ++k) {
          if (b[k].is_zero()) continue;
          if (!w[k]) {
            w[k] = target;
            changed = true;
          } else if (!(*w[k] == target)) {
            return std::nullopt;
          }
        }
      }
    }
  }
  std::vector<W> out;
  for (const auto& x : w) {
    if (!x || !in_range(*x)) return std::nullopt;
    if (bound > 0 && depth_of(*x) > bound) return std::nullopt;
    out.push_back(*x);
  }
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Mixed-radix decode, first generator most significant.
template <class W>
std::map<std::size_t, W> decode(std::uint64_t index, const std::vector<std::size_t>& gens,
                                const std::vector<W>& options) {
  std::map<std::size_t, W> out;
  const std::uint64_t radix = options.size();
  for (std::size_t g = gens.size(); g-- > 0;) {
    out[gens[g]] = options[static_cast<std::size_t>(index % radix)];
    index /= radix;
  }
  return out;
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Evaluates candidates [0, total) in parallel. Results are collected by
// index, so the merged order never depends on scheduling.
template <class G, class Eval>
void run(std::uint64_t total, const SearchConfig& cfg, Eval eval, SearchOutcome<G>& out) {
  const unsigned threads = thread_count(cfg.threads);
  const bool first_hit = cfg.mode == SearchMode::FirstHit;
  const std::uint64_t round = first_hit ? std::uint64_t{threads} * 32 : total;
  for (std::uint64_t begin = 0; begin < total; begin += round) {
    const std::uint64_t end = std::min(total, begin + round);
    std::vector<std::optional<G>> slots(static_cast<std::size_t>(end - begin));
    std::atomic<std::uint64_t> next{begin};
    auto worker = [&] {
      constexpr std::uint64_t chunk = 8;
      for (;;) {
        const std::uint64_t lo = next.fetch_add(chunk);
        if (lo >= end) break;
        for (std::uint64_t i = lo; i < std::min(end, lo + chunk); ++i)
          slots[static_cast<std::size_t>(i - begin)] = eval(i);
      }
    };
    const unsigned used = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, (end - begin + 7) / 8));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < used; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!slots[s]) continue;
      out.found.push_back(std::move(*slots[s]));
      if (first_hit) {
        out.candidates_checked = begin + s + 1;
        out.exhausted = false;
        return;
      }
    }
  }
  out.candidates_checked = total;
  out.exhausted = true;
}

} // namespace

std::vector<std::size_t> generator_indices(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& b = L.upper_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) hit[k] = true;
    }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (!hit[k]) out.push_back(k);
  return out;
}

std::optional<Bigrading> propagate_weights(const LieAlgebra& L,
                                           const std::map<std::size_t, Weight>& partial,
                                           int bound) {
  auto w = propagate(L, partial, bound);
  if (!w) return std::nullopt;
  return Bigrading(std::move(*w));
}

std::optional<Grading> propagate_grading(const LieAlgebra& L,
                                         const std::map<std::size_t, int>& partial,
                                         int bound) {
  auto w = propagate(L, partial, bound);
  if (!w) return std::nullopt;
  return Grading(std::move(*w));
}

BigradingSearchOutcome search_w_bigrading(const LieAlgebra& L, const SearchConfig& cfg) {
  BigradingSearchOutcome out;
  const int D = cfg.bound > 0 ? cfg.bound : std::max(2, static_cast<int>(L.dim()));
  out.bound = D;
  const auto gens = generator_indices(L);

  std::vector<Weight> all;
  for (int p = -D; p <= 0; ++p)
    for (int q = -D; q <= 0; ++q)
      if (weight_in_range({p, q}) && -(p + q) <= D) all.push_back({p, q});
  // A generator's dual is a nonzero class in H^1 of weight -(p,q).
  std::vector<Weight> options;
  for (const auto& w : all)
    if (allowed_h1(-w)) options.push_back(w);

  const std::uint64_t total = saturating_pow(options.size(), gens.size());
  out.candidates_pruned = saturating_pow(all.size(), gens.size()) - total;

  const bool want_symmetry = cfg.require_symmetry && L.conjugation().has_value();
  out.symmetry_skipped = cfg.require_symmetry && !L.conjugation();
  const ChevalleyEilenberg ce(L);
  auto eval = [&](std::uint64_t index) -> std::optional<Bigrading> {
    auto B = propagate_weights(L, decode(index, gens, options), D);
    if (!B || !graded_dims_symmetric(*B)) return std::nullopt;
    if (want_symmetry && check_hodge_symmetry(L, *B).status != SymmetryStatus::Pass)
      return std::nullopt;
    if (!check_condition_w(ce, L, *B).pass) return std::nullopt;
    return B;
  };
  run(total, cfg, eval, out);
  return out;
}

GradingSearchOutcome search_w_grading(const LieAlgebra& L, const SearchConfig& cfg) {
  GradingSearchOutcome out;
  const int D = cfg.bound > 0 ? cfg.bound : std::max(2, static_cast<int>(L.dim()));
  out.bound = D;
  const auto gens = generator_indices(L);

  std::vector<int> options;
  for (int w = -std::min(D, 2); w <= -1; ++w) options.push_back(w);
  const std::uint64_t total = saturating_pow(options.size(), gens.size());
  out.candidates_pruned =
      saturating_pow(static_cast<std::uint64_t>(D), gens.size()) - total;

  const ChevalleyEilenberg ce(L);
  auto eval = [&](std::uint64_t index) -> std::optional<Grading> {
    auto G = propagate_grading(L, decode(index, gens, options), D);
    if (!G || !check_grading_wh(ce, L, *G).pass) return std::nullopt;
    return G;
  };
  run(total, cfg, eval, out);
  return out;
}

} // namespace nilhodge
