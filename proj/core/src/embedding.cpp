#include "nilhodge/embedding.hpp"

#include <stdexcept>

namespace nilhodge {

Matrix elementary(std::size_t m, std::size_t r, std::size_t s) {
  if (r < 1 || s < 1 || r > m || s > m) throw std::out_of_range("elementary: index");
  Matrix e(m, m);
  e(r - 1, s - 1) = 1;
  return e;
}

MatrixEmbedding campana_embedding() {
  struct Term {
    int c;
    std::size_t r, s;
  };
  const std::vector<std::vector<Term>> table{
      {{1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 8, 9}},    // X1
      {{1, 2, 3}, {1, 3, 6}, {1, 4, 5}, {1, 7, 9}},    // X2
      {{1, 1, 4}, {-1, 3, 7}, {-1, 4, 8}, {1, 6, 9}},  // Y1
      {{1, 1, 3}, {-1, 3, 8}, {-1, 4, 7}, {1, 5, 9}},  // Y2
      {{-1, 1, 6}, {-1, 2, 8}, {2, 4, 9}},             // Z1
      {{-1, 1, 5}, {-1, 2, 7}, {2, 3, 9}},             // Z2
      {{3, 2, 9}},                                     // A
      {{3, 1, 9}},                                     // B
  };
  MatrixEmbedding phi{9, {}};
  for (const auto& terms : table) {
    Matrix m(9, 9);
    for (const auto& t : terms) m = m + Scalar(t.c) * elementary(9, t.r, t.s);
    phi.images.push_back(std::move(m));
  }
  return phi;
}

EmbeddingReport verify_matrix_embedding(const LieAlgebra& L, const MatrixEmbedding& phi) {
  const std::size_t n = L.dim();
  if (phi.images.size() != n)
    throw std::invalid_argument("embedding must give one image per basis vector");
  for (const auto& m : phi.images)
    if (m.rows() != phi.size || m.cols() != phi.size)
      throw std::invalid_argument("embedding image has the wrong size");

  EmbeddingReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ++r.pairs_checked;
      const Matrix lhs = phi.images[i] * phi.images[j] - phi.images[j] * phi.images[i];
      Matrix rhs(phi.size, phi.size);
      const Vector& b = L.upper_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) rhs = rhs + b[k] * phi.images[k];
      if (!(lhs == rhs)) r.failures.emplace_back(i, j);
    }
  std::vector<Vector> flat;
  for (const auto& m : phi.images) flat.push_back(m.entries());
  r.injective = n == 0 || rank(Matrix::from_rows(flat, phi.size * phi.size)) == n;
  return r;
}

} // namespace nilhodge
