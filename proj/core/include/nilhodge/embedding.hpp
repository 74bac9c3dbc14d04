#pragma once

#include "nilhodge/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace nilhodge {

/// Linear map from a Lie algebra into gl_m, given on the basis.
struct MatrixEmbedding {
  std::size_t size = 0;        // m
  std::vector<Matrix> images;  // one m x m matrix per basis vector
};

/// Elementary matrix e_{r,s} (1-based) of size m.
Matrix elementary(std::size_t m, std::size_t r, std::size_t s);

/// The realisation of n8_campana in gl_9 (basis X1, X2, Y1, Y2, Z1, Z2, A, B).
MatrixEmbedding campana_embedding();

struct EmbeddingReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // i < j, 0-based
  bool injective = false;
  bool ok() const noexcept { return injective && failures.empty(); }
};

/// Checks [phi(e_i), phi(e_j)] = phi([e_i, e_j]) for every i < j and that the
/// images are linearly independent.
EmbeddingReport verify_matrix_embedding(const LieAlgebra& L, const MatrixEmbedding& phi);

} // namespace nilhodge
