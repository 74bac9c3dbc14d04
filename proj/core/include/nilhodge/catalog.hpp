#pragma once

#include "nilhodge/bigrading.hpp"
#include "nilhodge/format.hpp"
#include "nilhodge/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilhodge {

/// Invariants an entry is expected to have, as stated by its source.
struct ExpectedInvariants {
  std::optional<std::vector<std::size_t>> betti;
  std::optional<std::pair<std::size_t, std::size_t>> b2_b3;
  std::optional<std::size_t> step;
  std::optional<std::vector<std::size_t>> layers;
};

/// The algebra rewritten in another basis, where a diagonal bigrading exists.
/// Columns of `basis_change` are the new basis vectors in old coordinates.
struct GradedForm {
  Matrix basis_change;
  LieAlgebra algebra;
  Bigrading bigrading;
};

struct CatalogEntry {
  LieAlgebra algebra;
  std::optional<Bigrading> known_bigrading;  // on `algebra` itself
  std::optional<Grading> known_grading;
  std::optional<GradedForm> graded_form;
  std::string provenance;
  std::vector<std::string> notes;
  ExpectedInvariants expected;

  const std::string& name() const noexcept { return algebra.name(); }
  /// The presentation carrying a bigrading: the graded form when present,
  /// otherwise `algebra` with known_bigrading.
  std::optional<std::pair<LieAlgebra, Bigrading>> bigraded() const;
};

/// Names of the built-in entries (family_abc and sums are built on demand).
std::vector<std::string> catalog_names();

/// Looks up a built-in name, "family_abc(a,b,c)" with rational parameters,
/// "abelian_m" for any m >= 1, or a sum "n3+n3+abelian_1".
/// Throws UnknownNameError.
CatalogEntry catalog_get(const std::string& name);

/// g(a,b,c): basis X1, X1bar, X2bar, X2, Z1, Z2, Z3 with
/// [X1,X1bar]=Z1, [X1,X2bar]=Z2, [X2,X1bar]=Z3, [X2,X2bar]=a Z1 + b Z2 + c Z3.
CatalogEntry family_abc(const Rational& a, const Rational& b, const Rational& c);

/// Block sum of two entries; bigradings and graded forms combine when both
/// sides have one.
CatalogEntry direct_sum(const CatalogEntry& a, const CatalogEntry& b);

/// entry + C^m with the new vectors at (-1,-1) (weight -2 for a single
/// grading) and fixed by the conjugation.
CatalogEntry trivial_extension(const CatalogEntry& entry, std::size_t m);

/// Definition file for an entry: the graded form with its bigrading when one
/// is shipped, otherwise the presentation with its known (bi)grading.
AlgebraFile to_algebra_file(const CatalogEntry& entry);

} // namespace nilhodge
