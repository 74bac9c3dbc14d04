#include "nilhodge/bigrading.hpp"

#include "nilhodge/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace nilhodge {

std::string Weight::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool weight_in_range(Weight w) noexcept { return w.p <= 0 && w.q <= 0 && w.p + w.q <= -1; }

Bigrading::Bigrading(std::vector<Weight> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (!weight_in_range(weights_[i]))
      throw std::invalid_argument("bigrading weight " + weights_[i].to_string() +
                                  " of basis vector " + std::to_string(i + 1) +
                                  " is outside p,q <= 0, p+q <= -1");
}

int Bigrading::depth() const {
  int d = 0;
  for (const auto& w : weights_) d = std::max(d, -w.total());
  return d;
}

Grading::Grading(std::vector<int> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] > -1)
      throw std::invalid_argument("grading weight " + std::to_string(weights_[i]) +
                                  " of basis vector " + std::to_string(i + 1) +
                                  " is not <= -1");
}

int Grading::depth() const {
  int d = 0;
  for (int w : weights_) d = std::max(d, -w);
  return d;
}

Grading total_grading(const Bigrading& B) {
  std::vector<int> w;
  for (const auto& x : B.weights()) w.push_back(x.total());
  return Grading(std::move(w));
}

namespace {

template <class W>
CompatibilityReport compatibility(const LieAlgebra& L, const std::vector<W>& w) {
  CompatibilityReport r;
  const std::size_t n = L.dim();
  if (w.size() != n) {
    r.size_ok = false;
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& b = L.upper_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero() && !(w[k] == w[i] + w[j])) r.bracket_violations.push_back({i, j, k});
    }
  return r;
}

} // namespace

CompatibilityReport check_bigrading_compatible(const LieAlgebra& L, const Bigrading& B) {
  auto r = compatibility(L, B.weights());
  if (r.size_ok)
    for (std::size_t i = 0; i < B.size(); ++i)
      if (!weight_in_range(B[i])) r.range_violations.push_back(i);
  return r;
}

CompatibilityReport check_grading_compatible(const LieAlgebra& L, const Grading& G) {
  auto r = compatibility(L, G.weights());
  if (r.size_ok)
    for (std::size_t i = 0; i < G.size(); ++i)
      if (G[i] > -1) r.range_violations.push_back(i);
  return r;
}

std::string to_string(SymmetryStatus s) {
  switch (s) {
  case SymmetryStatus::Pass: return "pass";
  case SymmetryStatus::Fail: return "fail";
  case SymmetryStatus::Skipped: return "skipped";
  }
  return "?";
}

SymmetryReport check_hodge_symmetry(const LieAlgebra& L, const Bigrading& B) {
  return check_hodge_symmetry(L, B, L.conjugation());
}

SymmetryReport check_hodge_symmetry(const LieAlgebra& L, const Bigrading& B,
                                    const std::optional<Conjugation>& S) {
  SymmetryReport r;
  if (!S) return r;
  const std::size_t n = L.dim();
  if (B.size() != n) throw IncompatibleBigradingError("bigrading size differs from dim");
  r.status = SymmetryStatus::Pass;
  for (std::size_t v = 0; v < n; ++v) {
    const Weight target = B[v].swapped();
    std::vector<Vector> allowed;
    for (std::size_t k = 0; k < n; ++k)
      if (B[k] == target || B[k].total() < B[v].total()) allowed.push_back(unit_vector(n, k));
    // e_v is real, so S(conj e_v) is column v of S.
    if (!in_span(S->matrix.column(v), allowed)) r.failing.push_back(v);
  }
  if (!r.failing.empty()) r.status = SymmetryStatus::Fail;
  return r;
}

bool graded_dims_symmetric(const Bigrading& B) {
  std::map<Weight, int> count;
  for (const auto& w : B.weights()) ++count[w];
  for (const auto& [w, c] : count) {
    const auto it = count.find(w.swapped());
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

bool check_weight_filtration(const LieAlgebra& L, const Bigrading& B) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& b = L.upper_bracket(i, j);
      const int bound = B[i].total() + B[j].total();
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero() && B[k].total() > bound) return false;
    }
  return true;
}

Weight monomial_weight(const Bigrading& B, Mask m) {
  Weight w;
  while (m) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    w = w + B[i];
    m &= m - 1;
  }
  return -w;
}

int monomial_weight(const Grading& G, Mask m) {
  int w = 0;
  while (m) {
    w += G[static_cast<std::size_t>(std::countr_zero(m))];
    m &= m - 1;
  }
  return -w;
}

namespace {

// Positions of each key within a degree.
template <class K, class KeyFn>
std::map<K, std::vector<std::size_t>> partition(const CochainBasis& basis, KeyFn key) {
  std::map<K, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out[key(basis.mask(i))].push_back(i);
  return out;
}

template <class K>
struct BlockResult {
  std::size_t dim = 0;
  std::vector<Vector> reps;  // full-length degree-j vectors
};

// Cohomology of the weight-K block in degree j. d preserves the key, so the
// blocks of d_j and d_{j-1} are the submatrices on matching rows and columns.
template <class K, class KeyFn>
std::map<K, BlockResult<K>> block_cohomology(const ChevalleyEilenberg& ce, std::size_t j,
                                             KeyFn key, std::size_t rep_limit) {
  std::map<K, BlockResult<K>> out;
  if (j > ce.dim()) return out;
  const auto here = partition<K>(ce.basis(j), key);
  const auto up = partition<K>(ce.basis(j + 1), key);
  std::map<K, std::vector<std::size_t>> down;
  if (j > 0) down = partition<K>(ce.basis(j - 1), key);
  static const std::vector<std::size_t> none;
  for (const auto& [k, cols] : here) {
    const auto u = up.find(k);
    const auto& rows_up = u == up.end() ? none : u->second;
    const auto dn = down.find(k);
    const auto& cols_down = dn == down.end() ? none : dn->second;
    const Matrix dj = ce.d(j).select(rows_up, cols);
    const Matrix dprev = j ? ce.d(j - 1).select(cols, cols_down) : Matrix(cols.size(), 0);
    const std::size_t r_here = rows_up.empty() ? 0 : rank(dj);
    const std::size_t r_prev = cols_down.empty() ? 0 : rank(dprev);
    BlockResult<K> res;
    res.dim = cols.size() - r_here - r_prev;
    if (res.dim > 0 && rep_limit > 0) {
      std::vector<Vector> ker;
      if (rows_up.empty()) {
        for (std::size_t c = 0; c < cols.size(); ++c) ker.push_back(unit_vector(cols.size(), c));
      } else {
        ker = kernel_basis(dj);
      }
      for (const auto& v : complement_in(ker, dprev, rep_limit)) {
        Vector full(ce.basis(j).size());
        for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
        res.reps.push_back(std::move(full));
      }
    }
    if (res.dim > 0) out.emplace(k, std::move(res));
  }
  return out;
}

void require_compatible(const LieAlgebra& L, const Bigrading& B) {
  const auto r = check_bigrading_compatible(L, B);
  if (!r.size_ok)
    throw IncompatibleBigradingError("bigrading has " + std::to_string(B.size()) +
                                     " weights for an algebra of dimension " +
                                     std::to_string(L.dim()));
  if (!r.ok()) {
    const auto& v = r.bracket_violations.front();
    throw IncompatibleBigradingError(
        "bigrading not additive on [" + L.labels()[v.i] + "," + L.labels()[v.j] + "]: " +
        L.labels()[v.k] + " has weight " + B[v.k].to_string() + ", expected " +
        (B[v.i] + B[v.j]).to_string());
  }
}

void require_compatible(const LieAlgebra& L, const Grading& G) {
  const auto r = check_grading_compatible(L, G);
  if (!r.size_ok)
    throw IncompatibleGradingError("grading has " + std::to_string(G.size()) +
                                   " weights for an algebra of dimension " +
                                   std::to_string(L.dim()));
  if (!r.ok()) {
    const auto& v = r.bracket_violations.front();
    throw IncompatibleGradingError("grading not additive on [" + L.labels()[v.i] + "," +
                                   L.labels()[v.j] + "]: " + L.labels()[v.k] +
                                   " has weight " + std::to_string(G[v.k]) + ", expected " +
                                   std::to_string(G[v.i] + G[v.j]));
  }
}

} // namespace

BigradedTable bigraded_cohomology(const ChevalleyEilenberg& ce, const Bigrading& B,
                                  std::size_t j) {
  BigradedTable t;
  auto key = [&B](Mask m) { return monomial_weight(B, m); };
  for (const auto& [w, res] : block_cohomology<Weight>(ce, j, key, 0)) t[w] = res.dim;
  return t;
}

GradedTable graded_cohomology(const ChevalleyEilenberg& ce, const Grading& G,
                              std::size_t j) {
  GradedTable t;
  auto key = [&G](Mask m) { return monomial_weight(G, m); };
  for (const auto& [w, res] : block_cohomology<int>(ce, j, key, 0)) t[w] = res.dim;
  return t;
}

BigradedTable bigraded_cohomology(const LieAlgebra& L, const Bigrading& B, std::size_t j) {
  require_compatible(L, B);
  return bigraded_cohomology(ChevalleyEilenberg(L), B, j);
}

BigradedBetti bigraded_betti(const LieAlgebra& L, const Bigrading& B) {
  require_compatible(L, B);
  const ChevalleyEilenberg ce(L);
  BigradedBetti out;
  for (std::size_t j = 0; j <= L.dim(); ++j) out.degrees.push_back(bigraded_cohomology(ce, B, j));
  return out;
}

bool allowed_h1(Weight w) noexcept {
  return w == Weight{1, 0} || w == Weight{0, 1} || w == Weight{1, 1};
}

bool allowed_h2(Weight w) noexcept {
  return w == Weight{2, 0} || w == Weight{1, 1} || w == Weight{0, 2} ||
         w == Weight{2, 1} || w == Weight{1, 2} || w == Weight{2, 2};
}

WReport check_condition_w(const LieAlgebra& L, const Bigrading& B) {
  require_compatible(L, B);
  return check_condition_w(ChevalleyEilenberg(L), L, B);
}

WReport check_condition_w(const ChevalleyEilenberg& ce, const LieAlgebra& L,
                          const Bigrading& B) {
  require_compatible(L, B);
  WReport r;
  r.pass = true;
  auto key = [&B](Mask m) { return monomial_weight(B, m); };
  for (std::size_t j : {std::size_t{1}, std::size_t{2}}) {
    if (j > ce.dim()) break;
    auto& table = j == 1 ? r.h1 : r.h2;
    for (auto& [w, res] : block_cohomology<Weight>(ce, j, key, kMaxWitnessesPerSlot)) {
      table[w] = res.dim;
      const bool ok = j == 1 ? allowed_h1(w) : allowed_h2(w);
      if (ok) continue;
      r.pass = false;
      for (const auto& v : res.reps)
        r.witnesses.push_back({j, w, Cochain::from_vector(ce.basis(j), v)});
    }
  }
  return r;
}

GradingReport check_grading_wh(const LieAlgebra& L, const Grading& G) {
  require_compatible(L, G);
  return check_grading_wh(ChevalleyEilenberg(L), L, G);
}

GradingReport check_grading_wh(const ChevalleyEilenberg& ce, const LieAlgebra& L,
                               const Grading& G) {
  require_compatible(L, G);
  GradingReport r;
  r.w_ok = true;
  r.h_ok = true;
  for (int w : G.weights()) ++r.algebra[-w];
  for (const auto& [k, dim] : r.algebra)
    if (k % 2 != 0 && dim % 2 != 0) {
      r.h_ok = false;
      r.failures.push_back("(H): g_" + std::to_string(-k) + " has odd dimension " +
                           std::to_string(dim));
    }
  auto key = [&G](Mask m) { return monomial_weight(G, m); };
  for (std::size_t j = 0; j <= ce.dim(); ++j) {
    GradedTable table;
    const std::size_t limit = (j == 1 || j == 2) ? kMaxWitnessesPerSlot : 0;
    for (auto& [w, res] : block_cohomology<int>(ce, j, key, limit)) {
      table[w] = res.dim;
      bool w_bad = false;
      if (j == 1 && w != 1 && w != 2) w_bad = true;
      if (j == 2 && (w < 2 || w > 4)) w_bad = true;
      if (w_bad) {
        r.w_ok = false;
        r.failures.push_back("(W): H^" + std::to_string(j) + "_" + std::to_string(w) +
                             " has dimension " + std::to_string(res.dim));
        for (const auto& v : res.reps)
          r.witnesses.push_back({j, Weight{w, 0}, Cochain::from_vector(ce.basis(j), v)});
      }
      if (w % 2 != 0 && res.dim % 2 != 0) {
        r.h_ok = false;
        r.failures.push_back("(H): H^" + std::to_string(j) + "_" + std::to_string(w) +
                             " has odd dimension " + std::to_string(res.dim));
      }
    }
    r.degrees.push_back(std::move(table));
  }
  r.pass = r.w_ok && r.h_ok;
  return r;
}

Bigrading extend_bigrading(const Bigrading& B, std::size_t m) {
  auto w = B.weights();
  w.insert(w.end(), m, Weight{-1, -1});
  return Bigrading(std::move(w));
}

} // namespace nilhodge
