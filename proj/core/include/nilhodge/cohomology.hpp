#pragma once

#include "nilhodge/lie_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nilhodge {

using Mask = std::uint32_t;

/// Basis of Λ^k g^*: the k-subsets of {0..n-1} in lexicographic order of their
/// sorted index tuples. Subsets are stored as bitmasks.
class CochainBasis {
public:
  CochainBasis(std::size_t n, std::size_t degree);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return masks_.size(); }
  Mask mask(std::size_t pos) const { return masks_[pos]; }
  const std::vector<Mask>& masks() const noexcept { return masks_; }
  /// Position of `m`, or size() if m is not a degree-k subset.
  std::size_t position(Mask m) const;
  std::vector<std::size_t> tuple(std::size_t pos) const;

private:
  std::size_t n_;
  std::size_t degree_;
  std::vector<Mask> masks_;
  std::map<Mask, std::size_t> index_;
};

/// Sparse degree-k cochain keyed by strictly increasing 0-based index tuples.
struct Cochain {
  std::size_t degree = 0;
  std::map<std::vector<std::size_t>, Scalar> coefficients;

  static Cochain from_vector(const CochainBasis& basis, const Vector& v);
  Vector to_vector(const CochainBasis& basis) const;
  bool is_zero() const noexcept { return coefficients.empty(); }
  /// e.g. "x1^x3 - 1/2 x2^x4"; dual labels are the lowercased basis labels.
  std::string to_string(const std::vector<std::string>& labels) const;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Dual basis label: the basis label with its first letter lowercased.
std::string dual_label(const std::string& label);

/// Matrix of d: Λ^k -> Λ^{k+1} in the canonical bases, with the convention
/// d e^m = -Σ_{a<b} C_{ab}^m e^a ^ e^b extended as a graded derivation.
Matrix differential(const LieAlgebra& L, std::size_t k);

/// Whole Chevalley-Eilenberg complex of L, all differentials precomputed.
class ChevalleyEilenberg {
public:
  explicit ChevalleyEilenberg(const LieAlgebra& L);

  std::size_t dim() const noexcept { return n_; }
  const CochainBasis& basis(std::size_t k) const { return bases_.at(k); }
  /// d_k : Λ^k -> Λ^{k+1}; for k == dim() this is the empty map.
  const Matrix& d(std::size_t k) const { return d_.at(k); }
  std::size_t rank_d(std::size_t k) const;

  std::size_t betti(std::size_t k) const;
  std::vector<std::size_t> betti_numbers() const;
  /// betti(k) cocycles whose classes form a basis of H^k: the kernel basis in
  /// canonical order, greedily kept when independent of the coboundaries and
  /// of the classes kept before.
  std::vector<Vector> representatives(std::size_t k) const;

private:
  std::size_t n_;
  std::vector<CochainBasis> bases_;
  std::vector<Matrix> d_;
  mutable std::vector<long> rank_cache_;
};

std::size_t betti(const LieAlgebra& L, std::size_t k);
std::vector<std::size_t> betti_numbers(const LieAlgebra& L);
std::vector<Cochain> cohomology_representatives(const LieAlgebra& L, std::size_t k);

struct CohomologyDegree {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Cochain> representatives;
};

struct CohomologyReport {
  std::vector<CohomologyDegree> degrees;
};

/// Degrees 0..max_degree (clamped to dim L). Representatives only when asked.
CohomologyReport cohomology_report(const LieAlgebra& L, std::size_t max_degree,
                                   bool with_representatives);

/// Greedy complement of span(image) inside span(kernel), in kernel order.
std::vector<Vector> complement_in(const std::vector<Vector>& kernel,
                                  const Matrix& image_columns, std::size_t limit);

} // namespace nilhodge
