#pragma once

#include "nilhodge/cohomology.hpp"
#include "nilhodge/lie_algebra.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilhodge {

struct Weight {
  int p = 0;
  int q = 0;

  int total() const noexcept { return p + q; }
  Weight operator+(Weight o) const noexcept { return {p + o.p, q + o.q}; }
  Weight operator-() const noexcept { return {-p, -q}; }
  Weight swapped() const noexcept { return {q, p}; }
  auto operator<=>(const Weight&) const = default;
  std::string to_string() const;
};

/// Diagonal bigrading: one weight (p,q) per basis vector with p,q <= 0 and
/// p+q <= -1.
class Bigrading {
public:
  Bigrading() = default;
  /// Throws std::invalid_argument on a weight outside the range.
  explicit Bigrading(std::vector<Weight> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  /// Largest |p|+|q| over the basis.
  int depth() const;

  friend bool operator==(const Bigrading&, const Bigrading&) = default;
  friend auto operator<=>(const Bigrading& a, const Bigrading& b) {
    return a.weights_ <=> b.weights_;
  }

private:
  std::vector<Weight> weights_;
};

bool weight_in_range(Weight w) noexcept;

/// Single grading: one weight <= -1 per basis vector.
class Grading {
public:
  Grading() = default;
  explicit Grading(std::vector<int> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  int operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  int depth() const;

  friend bool operator==(const Grading&, const Grading&) = default;
  friend auto operator<=>(const Grading& a, const Grading& b) {
    return a.weights_ <=> b.weights_;
  }

private:
  std::vector<int> weights_;
};

/// p+q of every basis vector.
Grading total_grading(const Bigrading& B);

/// Per degree j, dim H^j_{p,q} for every (p,q) with a nonzero value.
using BigradedTable = std::map<Weight, std::size_t>;
using GradedTable = std::map<int, std::size_t>;

struct BigradedBetti {
  std::vector<BigradedTable> degrees;  // index j = 0..dim
};

struct BracketViolation {
  std::size_t i, j, k;  // e_k appears in [e_i,e_j] with the wrong weight
};

struct CompatibilityReport {
  bool size_ok = true;
  std::vector<std::size_t> range_violations;
  std::vector<BracketViolation> bracket_violations;
  bool ok() const noexcept {
    return size_ok && range_violations.empty() && bracket_violations.empty();
  }
};

CompatibilityReport check_bigrading_compatible(const LieAlgebra& L, const Bigrading& B);
CompatibilityReport check_grading_compatible(const LieAlgebra& L, const Grading& G);

enum class SymmetryStatus { Pass, Fail, Skipped };
std::string to_string(SymmetryStatus s);

struct SymmetryReport {
  SymmetryStatus status = SymmetryStatus::Skipped;
  std::vector<std::size_t> failing;  // basis indices whose image leaves the allowed span
};

/// S(conj e_v) must lie in g_{q,p} plus everything of total weight below p+q.
/// Skipped when L carries no conjugation.
SymmetryReport check_hodge_symmetry(const LieAlgebra& L, const Bigrading& B);
SymmetryReport check_hodge_symmetry(const LieAlgebra& L, const Bigrading& B,
                                    const std::optional<Conjugation>& S);

/// dim g_{p,q} == dim g_{q,p} for all (p,q).
bool graded_dims_symmetric(const Bigrading& B);

/// [W_k, W_l] ⊆ W_{k+l} with W_k spanned by basis vectors of total weight <= k.
bool check_weight_filtration(const LieAlgebra& L, const Bigrading& B);

/// Weight of a cochain monomial: the negated sum of its vectors' weights.
Weight monomial_weight(const Bigrading& B, Mask m);
int monomial_weight(const Grading& G, Mask m);

/// dim H^j_{p,q} per block. Throws IncompatibleBigradingError when B is not
/// compatible with L.
BigradedTable bigraded_cohomology(const LieAlgebra& L, const Bigrading& B, std::size_t j);
BigradedBetti bigraded_betti(const LieAlgebra& L, const Bigrading& B);
BigradedTable bigraded_cohomology(const ChevalleyEilenberg& ce, const Bigrading& B,
                                  std::size_t j);
GradedTable graded_cohomology(const ChevalleyEilenberg& ce, const Grading& G,
                              std::size_t j);

struct Witness {
  std::size_t degree = 0;
  Weight weight;  // for gradings only p is used
  Cochain cocycle;
};

inline constexpr std::size_t kMaxWitnessesPerSlot = 5;

bool allowed_h1(Weight w) noexcept;
bool allowed_h2(Weight w) noexcept;

struct WReport {
  bool pass = false;
  BigradedTable h1;
  BigradedTable h2;
  std::vector<Witness> witnesses;
};

/// Condition (W). Throws IncompatibleBigradingError when B is not compatible.
WReport check_condition_w(const LieAlgebra& L, const Bigrading& B);
WReport check_condition_w(const ChevalleyEilenberg& ce, const LieAlgebra& L,
                          const Bigrading& B);

struct GradingReport {
  bool pass = false;
  bool w_ok = false;
  bool h_ok = false;
  std::vector<GradedTable> degrees;     // dim H^j_k, j = 0..dim
  std::map<int, std::size_t> algebra;   // dim g_{-k}, keyed by k
  std::vector<std::string> failures;    // human-readable reasons
  std::vector<Witness> witnesses;
};

/// Conditions (W) and (H) for a single grading: H^1 in weights {1,2}, H^2 in
/// {2,3,4}, odd-weight pieces of g and of every H^j even-dimensional.
/// Throws IncompatibleGradingError when G is not compatible.
GradingReport check_grading_wh(const LieAlgebra& L, const Grading& G);
GradingReport check_grading_wh(const ChevalleyEilenberg& ce, const LieAlgebra& L,
                               const Grading& G);

/// B extended by m vectors at (-1,-1), matching direct_sum(L, abelian(m)).
Bigrading extend_bigrading(const Bigrading& B, std::size_t m);

} // namespace nilhodge
