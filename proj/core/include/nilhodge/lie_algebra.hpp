#pragma once

#include "nilhodge/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilhodge {

/// Antilinear real structure v -> S * conj(v) on the complexified algebra.
struct Conjugation {
  Matrix matrix;

  Vector apply(const Vector& v) const { return matrix * nilhodge::conj(v); }
  friend bool operator==(const Conjugation&, const Conjugation&) = default;
};

/// Finite-dimensional Lie algebra over Q(i) given by structure constants in a
/// fixed basis e_0..e_{n-1}. Only brackets [e_i, e_j] with i < j are stored;
/// the rest follow from antisymmetry.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> basis_labels);
  /// Basis labelled X1..Xn.
  LieAlgebra(std::string name, std::size_t dim);

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Sets [e_i, e_j] = value; i > j stores the negation. i == j is rejected.
  void set_bracket(std::size_t i, std::size_t j, Vector value);
  /// Adds c * e_k to [e_i, e_j].
  void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  /// [e_i, e_j] for any ordering of i and j.
  Vector bracket(std::size_t i, std::size_t j) const;
  /// Stored [e_i, e_j] for i < j.
  const Vector& upper_bracket(std::size_t i, std::size_t j) const;
  bool bracket_is_zero(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  Vector bracket(const Vector& u, const Vector& v) const;
  /// C_{ij}^k with antisymmetry applied.
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  bool is_abelian() const;

  const std::optional<Conjugation>& conjugation() const noexcept { return conj_; }
  void set_conjugation(std::optional<Conjugation> c);

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Vector> upper_;  // [e_i, e_j], i < j, row-major over pairs
  std::optional<Conjugation> conj_;
};

/// Subspace of an ambient coordinate space, stored as its canonical RREF basis.
class Subspace {
public:
  Subspace() = default;
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  bool contains(const Vector& v) const { return in_span(v, basis_); }
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

struct JacobiViolation {
  std::array<std::size_t, 3> triple;  // i < j < k, 0-based
  Vector value;                       // the nonzero cyclic sum
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Evaluates [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] on every
/// triple i < j < k.
JacobiReport check_jacobi(const LieAlgebra& L);

/// C^1 = g, C^{i+1} = [g, C^i], ending with the zero subspace.
/// Throws NonNilpotentError if the series stalls above zero.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

/// Number of nonzero terms of the lower central series.
std::size_t step_length(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
Subspace derived(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

struct LatticeRank {
  std::size_t total = 0;
  std::vector<std::size_t> layers;  // dim C^i / C^{i+1}
};

/// Rank of a lattice in the simply connected group: the sum of the
/// dimensions of the lower central quotients.
LatticeRank lattice_rank(const LieAlgebra& L);

/// Block-diagonal sum. Labels of the second summand that collide with the
/// first get a "_2" suffix. Conjugations combine only when both exist.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b,
                      std::string name = {});

/// Abelian algebra of dimension n, labels X1..Xn.
LieAlgebra abelian(std::size_t n, std::string name = {});

struct ConjugationReport {
  bool involutive = false;
  std::vector<std::pair<std::size_t, std::size_t>> bracket_failures;
  bool ok() const noexcept { return involutive && bracket_failures.empty(); }
};

/// Checks S * conj(S) = I and S(conj [e_i,e_j]) = [S conj e_i, S conj e_j].
ConjugationReport check_conjugation(const LieAlgebra& L, const Conjugation& S);

/// Re-expresses L in the basis given by the columns of `basis` (coordinates in
/// the old basis). A conjugation S becomes P^{-1} S conj(P).
/// Throws std::invalid_argument if `basis` is singular.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& basis,
                        std::vector<std::string> new_labels = {});

} // namespace nilhodge
