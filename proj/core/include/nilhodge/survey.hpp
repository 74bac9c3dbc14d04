#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nilhodge {

struct SurveyRow {
  std::string name;
  std::size_t rank = 0;
  std::size_t b1 = 0;
  std::size_t step = 0;
  std::vector<std::size_t> layers;
  bool has_known = false;        // entry ships a bigrading (possibly after a basis change)
  bool known_verified = false;   // ... and it passes compatibility, symmetry and (W)
  bool search_found = false;     // diagonal search in the given presentation
  bool search_exhausted = false;
  int search_bound = 0;
  bool grading_found = false;
  bool admissible = false;       // known_verified || search_found
  std::vector<std::string> notes;
};

struct SurveyGroup {
  std::size_t rank = 0;
  std::size_t b1 = 0;
  std::vector<SurveyRow> rows;
  std::vector<std::string> notes;
};

struct SurveyReport {
  std::size_t max_rank = 0;
  std::vector<SurveyGroup> groups;  // rank ascending, b1 descending
};

/// Catalog names (including sums) examined by the survey, in report order.
std::vector<std::string> survey_roster();

/// Every roster entry with lattice rank <= max_rank (max_rank <= 8).
SurveyReport rank_survey(std::size_t max_rank, unsigned threads = 0);

} // namespace nilhodge
