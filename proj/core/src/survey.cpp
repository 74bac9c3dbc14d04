#include "nilhodge/survey.hpp"

#include "nilhodge/catalog.hpp"
#include "nilhodge/cohomology.hpp"
#include "nilhodge/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilhodge {

std::vector<std::string> survey_roster() {
  std::vector<std::string> r;
  for (int n = 1; n <= 8; ++n) r.push_back("abelian_" + std::to_string(n));
  r.push_back("n3");
  for (int m = 1; m <= 4; ++m) r.push_back("n3+abelian_" + std::to_string(m));
  r.push_back("L5_4");
  for (int m = 1; m <= 2; ++m) r.push_back("L5_4+abelian_" + std::to_string(m));
  r.push_back("n3+n3");
  r.push_back("n3+n3+abelian_1");
  for (const char* name : {"filiform_4", "filiform_5", "L5_9", "L6_9", "L6_21_m1", "L6_22_0",
                           "L6_24_0", "L6_24_1", "n7_142", "n7_143", "n7_144", "n7_145",
                           "n7_152", "n7_154", "n8_campana"})
    r.emplace_back(name);
  return r;
}

namespace {

bool known_passes(const CatalogEntry& e) {
  const auto bg = e.bigraded();
  if (!bg) return false;
  const auto& [L, B] = *bg;
  if (!check_bigrading_compatible(L, B).ok()) return false;
  if (check_hodge_symmetry(L, B).status == SymmetryStatus::Fail) return false;
  return check_condition_w(L, B).pass;
}

} // namespace

SurveyReport rank_survey(std::size_t max_rank, unsigned threads) {
  if (max_rank > 8) throw std::invalid_argument("rank_survey: max_rank must be <= 8");
  SurveyReport report;
  report.max_rank = max_rank;
  std::map<std::pair<std::size_t, std::size_t>, SurveyGroup> groups;

  for (const auto& name : survey_roster()) {
    const CatalogEntry e = catalog_get(name);
    const LatticeRank lr = lattice_rank(e.algebra);
    if (lr.total > max_rank) continue;
    SurveyRow row;
    row.name = name;
    row.rank = lr.total;
    row.layers = lr.layers;
    row.step = lr.layers.size();
    row.b1 = ChevalleyEilenberg(e.algebra).betti(1);
    row.has_known = e.bigraded().has_value();
    row.known_verified = row.has_known && known_passes(e);

    SearchConfig cfg;
    cfg.threads = threads;
    const auto bs = search_w_bigrading(e.algebra, cfg);
    row.search_found = !bs.found.empty();
    row.search_bound = bs.bound;
    // First-hit mode only proves exhaustion when nothing was found.
    row.search_exhausted = bs.exhausted;
    row.grading_found = !search_w_grading(e.algebra, cfg).found.empty();
    row.admissible = row.known_verified || row.search_found;
    if (!row.search_found)
      row.notes.push_back("no diagonal bigrading within bound " + std::to_string(bs.bound) +
                          " in this presentation");
    if (row.has_known && !row.search_found && row.known_verified)
      row.notes.push_back("admissible through the shipped change of basis");
    row.notes.insert(row.notes.end(), e.notes.begin(), e.notes.end());

    auto& g = groups[{row.rank, row.b1}];
    g.rank = row.rank;
    g.b1 = row.b1;
    g.rows.push_back(std::move(row));
  }

  for (auto& [key, g] : groups) {
    if (g.rank == 7 && g.b1 == 5)
      g.notes.push_back("non-exhaustive: other 2-step algebras with b1 = 5 are not enumerated");
    if (g.rank == 7 && g.b1 == 6)
      g.notes.push_back("n7_152 and n7_154 carry the same constants (Heisenberg, dim 7)");
  }
  for (auto& [key, g] : groups) report.groups.push_back(std::move(g));
  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [](const SurveyGroup& a, const SurveyGroup& b) {
                     if (a.rank != b.rank) return a.rank < b.rank;
                     return a.b1 > b.b1;
                   });
  return report;
}

} // namespace nilhodge
