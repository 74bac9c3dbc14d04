#include "nilhodge/lie_algebra.hpp"

#include "nilhodge/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nilhodge {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("X" + std::to_string(i + 1));
  return out;
}

} // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)), labels_(std::move(basis_labels)) {
  const std::size_t n = labels_.size();
  upper_.assign(n * (n - (n ? 1 : 0)) / 2, Vector(n));
}

LieAlgebra::LieAlgebra(std::string name, std::size_t dim)
    : LieAlgebra(std::move(name), default_labels(dim)) {}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // i < j; rows of the strict upper triangle laid end to end
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, Vector value) {
  if (i == j) throw std::invalid_argument("set_bracket: i == j");
  if (i >= dim() || j >= dim()) throw std::out_of_range("set_bracket: index");
  if (value.size() != dim()) throw std::invalid_argument("set_bracket: length");
  if (i > j) {
    for (auto& s : value) s = -s;
    std::swap(i, j);
  }
  upper_[pair_index(i, j)] = std::move(value);
}

void LieAlgebra::add_bracket_term(std::size_t i, std::size_t j, std::size_t k,
                                  const Scalar& c) {
  if (i == j) throw std::invalid_argument("add_bracket_term: i == j");
  if (i >= dim() || j >= dim() || k >= dim())
    throw std::out_of_range("add_bracket_term: index");
  if (i < j)
    upper_[pair_index(i, j)][k] += c;
  else
    upper_[pair_index(j, i)][k] -= c;
}

const Vector& LieAlgebra::upper_bracket(std::size_t i, std::size_t j) const {
  return upper_.at(pair_index(i, j));
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return Vector(dim());
  if (i < j) return upper_bracket(i, j);
  Vector v = upper_bracket(j, i);
  for (auto& s : v) s = -s;
  return v;
}

bool LieAlgebra::bracket_is_zero(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  return is_zero(i < j ? upper_bracket(i, j) : upper_bracket(j, i));
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("bracket: length");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Vector& b = i < j ? upper_bracket(i, j) : upper_bracket(j, i);
      if (is_zero(b)) continue;
      Scalar f = u[i] * v[j];
      if (i > j) f = -f;
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) out[k] += f * b[k];
    }
  }
  return out;
}

Scalar LieAlgebra::structure_constant(std::size_t i, std::size_t j,
                                      std::size_t k) const {
  if (i == j) return Scalar();
  if (i < j) return upper_bracket(i, j).at(k);
  return -upper_bracket(j, i).at(k);
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(upper_.begin(), upper_.end(),
                     [](const Vector& v) { return is_zero(v); });
}

void LieAlgebra::set_conjugation(std::optional<Conjugation> c) {
  if (c && (c->matrix.rows() != dim() || c->matrix.cols() != dim()))
    throw std::invalid_argument("conjugation must be dim x dim");
  conj_ = std::move(c);
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = span_basis(vectors, ambient_dim);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, units);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

JacobiReport check_jacobi(const LieAlgebra& L) {
  JacobiReport report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i);
        const Vector ej = unit_vector(n, j);
        const Vector ek = unit_vector(n, k);
        Vector sum = L.bracket(ei, L.bracket(j, k));
        sum = sum + L.bracket(ej, L.bracket(k, i));
        sum = sum + L.bracket(ek, L.bracket(i, j));
        if (!is_zero(sum)) report.violations.push_back({{i, j, k}, std::move(sum)});
      }
  return report;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Subspace> series{Subspace::whole(n)};
  while (series.back().dim() > 0) {
    std::vector<Vector> gens;
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& v : series.back().basis()) {
        Vector w = L.bracket(unit_vector(n, a), v);
        if (!is_zero(w)) gens.push_back(std::move(w));
      }
    Subspace next = Subspace::span(n, gens);
    if (next.dim() == series.back().dim())
      throw NonNilpotentError("lower central series of '" + L.name() +
                              "' stabilises at dimension " +
                              std::to_string(next.dim()));
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t step_length(const LieAlgebra& L) {
  return lower_central_series(L).size() - 1;
}

Subspace derived(const LieAlgebra& L) {
  std::vector<Vector> gens;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!L.bracket_is_zero(i, j)) gens.push_back(L.upper_bracket(i, j));
  return Subspace::span(n, gens);
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // Row block a, column b holds [e_b, e_a]; the kernel is the center.
  Matrix m(n * n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector v = L.bracket(b, a);
      for (std::size_t k = 0; k < n; ++k) m(a * n + k, b) = v[k];
    }
  const auto ker = kernel_basis(m);
  return Subspace::span(n, ker);
}

bool is_nilpotent(const LieAlgebra& L) {
  try {
    lower_central_series(L);
    return true;
  } catch (const NonNilpotentError&) {
    return false;
  }
}

LatticeRank lattice_rank(const LieAlgebra& L) {
  const auto series = lower_central_series(L);
  LatticeRank r;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    r.layers.push_back(series[i].dim() - series[i + 1].dim());
    r.total += r.layers.back();
  }
  return r;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<std::string> labels = a.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (const auto& l : b.labels()) {
    std::string fresh = l;
    for (int s = 2; taken.count(fresh); ++s) fresh = l + "_" + std::to_string(s);
    taken.insert(fresh);
    labels.push_back(fresh);
  }
  if (name.empty()) name = a.name() + "+" + b.name();
  LieAlgebra out(std::move(name), std::move(labels));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) {
        const Scalar& c = a.upper_bracket(i, j)[k];
        if (!c.is_zero()) out.add_bracket_term(i, j, k, c);
      }
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) {
        const Scalar& c = b.upper_bracket(i, j)[k];
        if (!c.is_zero()) out.add_bracket_term(na + i, na + j, na + k, c);
      }
  if (a.conjugation() && b.conjugation()) {
    Matrix s(na + nb, na + nb);
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t c = 0; c < na; ++c) s(r, c) = a.conjugation()->matrix(r, c);
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t c = 0; c < nb; ++c)
        s(na + r, na + c) = b.conjugation()->matrix(r, c);
    out.set_conjugation(Conjugation{std::move(s)});
  }
  return out;
}

LieAlgebra abelian(std::size_t n, std::string name) {
  if (name.empty()) name = "abelian_" + std::to_string(n);
  return LieAlgebra(std::move(name), n);
}

ConjugationReport check_conjugation(const LieAlgebra& L, const Conjugation& S) {
  const std::size_t n = L.dim();
  ConjugationReport report;
  if (S.matrix.rows() != n || S.matrix.cols() != n) return report;
  report.involutive = S.matrix * S.matrix.conj() == Matrix::identity(n);
  // Basis vectors are real, so the action on e_i is column i of S.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = S.apply(L.upper_bracket(i, j));
      const Vector rhs = L.bracket(S.matrix.column(i), S.matrix.column(j));
      if (lhs != rhs) report.bracket_failures.emplace_back(i, j);
    }
  return report;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& basis,
                        std::vector<std::string> new_labels) {
  const std::size_t n = L.dim();
  if (basis.rows() != n || basis.cols() != n)
    throw std::invalid_argument("change_basis: basis must be dim x dim");
  const auto inv = inverse(basis);
  if (!inv) throw std::invalid_argument("change_basis: basis matrix is singular");
  if (new_labels.empty()) new_labels = L.labels();
  if (new_labels.size() != n) throw std::invalid_argument("change_basis: labels");
  LieAlgebra out(L.name(), std::move(new_labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = L.bracket(basis.column(i), basis.column(j));
      if (!is_zero(b)) out.set_bracket(i, j, (*inv) * b);
    }
  if (L.conjugation())
    out.set_conjugation(
        Conjugation{(*inv) * L.conjugation()->matrix * basis.conj()});
  return out;
}

} // namespace nilhodge
