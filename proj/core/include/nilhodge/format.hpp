#pragma once

#include "nilhodge/bigrading.hpp"
#include "nilhodge/lie_algebra.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace nilhodge {

/// Contents of an algebra definition file.
struct AlgebraFile {
  LieAlgebra algebra;
  std::optional<Bigrading> bigrading;
  std::optional<Grading> grading;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

enum class Validation { Full, None };

/// Parses the JSON algebra format (1-based indices, coefficient strings).
/// Throws ParseError on malformed input (line/column of the offending token)
/// and, unless `validation` is None, ValidationError when the Jacobi
/// identity, nilpotency, the conjugation or a grading is invalid.
AlgebraFile parse_algebra(std::string_view text, Validation validation = Validation::Full);
AlgebraFile load_algebra(const std::filesystem::path& path,
                         Validation validation = Validation::Full);

/// Deterministic, 2-space indented JSON ending in a newline.
std::string serialize_algebra(const AlgebraFile& file);
void save_algebra(const AlgebraFile& file, const std::filesystem::path& path);

/// Runs the checks parse_algebra applies under Validation::Full.
void validate_algebra(const AlgebraFile& file);

} // namespace nilhodge
