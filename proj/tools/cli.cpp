#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "nilhodge/nilhodge.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nilhodge::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json results = json::object();
  std::vector<std::string> warnings;
  std::string text;
  int code = kExitOk;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

// ---- rendering helpers ----

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = ",") {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

std::string vector_text(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Scalar c = v[k];
    if (!out.empty()) {
      if (c.is_real() && c.re() < 0) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    if (c.is_one())
      out += labels[k];
    else if (c == Scalar(-1))
      out += "-" + labels[k];
    else if (c.is_real())
      out += c.to_string() + " " + labels[k];
    else
      out += "(" + c.to_string() + ") " + labels[k];
  }
  return out.empty() ? "0" : out;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

json weight_json(Weight w) { return json::array({w.p, w.q}); }

json bigrading_json(const Bigrading& B) {
  json a = json::array();
  for (const auto& w : B.weights()) a.push_back(weight_json(w));
  return a;
}

json table_json(const BigradedTable& t) {
  json a = json::array();
  for (const auto& [w, d] : t) a.push_back({{"weight", weight_json(w)}, {"dim", d}});
  return a;
}

json table_json(const GradedTable& t) {
  json a = json::array();
  for (const auto& [w, d] : t) a.push_back({{"weight", w}, {"dim", d}});
  return a;
}

std::string table_text(const BigradedTable& t) {
  std::vector<std::string> parts;
  for (const auto& [w, d] : t) parts.push_back(w.to_string() + ":" + std::to_string(d));
  return "{" + join(parts, ", ") + "}";
}

std::string table_text(const GradedTable& t) {
  std::vector<std::string> parts;
  for (const auto& [w, d] : t) parts.push_back(std::to_string(w) + ":" + std::to_string(d));
  return "{" + join(parts, ", ") + "}";
}

std::string bigrading_text(const Bigrading& B, const std::vector<std::string>& labels) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < B.size(); ++i) parts.push_back(labels[i] + ":" + B[i].to_string());
  return join(parts, " ");
}

std::string grading_text(const Grading& G, const std::vector<std::string>& labels) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < G.size(); ++i)
    parts.push_back(labels[i] + ":" + std::to_string(G[i]));
  return join(parts, " ");
}

json witnesses_json(const std::vector<Witness>& ws, const std::vector<std::string>& labels,
                    bool bigraded) {
  json a = json::array();
  for (const auto& w : ws) {
    json weight = bigraded ? weight_json(w.weight) : json(w.weight.p);
    a.push_back({{"degree", w.degree},
                 {"weight", weight},
                 {"cocycle", w.cocycle.to_string(labels)}});
  }
  return a;
}

std::string witnesses_text(const std::vector<Witness>& ws, const std::vector<std::string>& labels,
                           bool bigraded) {
  std::string out;
  for (const auto& w : ws) {
    const std::string weight = bigraded ? w.weight.to_string() : std::to_string(w.weight.p);
    out += "  H^" + std::to_string(w.degree) + " " + weight + ": " + w.cocycle.to_string(labels) +
           "\n";
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---- sources ----

struct Source {
  std::string spec;
  AlgebraFile file;
  std::optional<CatalogEntry> entry;

  const LieAlgebra& algebra() const { return file.algebra; }
  std::string name() const {
    return file.algebra.name().empty() ? spec : file.algebra.name();
  }
};

constexpr std::string_view kCatalogPrefix = "catalog:";

Source load_source(const std::string& spec, Validation validation) {
  Source s{spec, {}, {}};
  if (spec.starts_with(kCatalogPrefix)) {
    s.entry = catalog_get(spec.substr(kCatalogPrefix.size()));
    s.file = AlgebraFile{s.entry->algebra, s.entry->known_bigrading, s.entry->known_grading};
    return s;
  }
  if (!std::filesystem::exists(spec))
    throw UsageError("no such file: " + spec + " (use catalog:<name> for built-in algebras)");
  try {
    s.file = load_algebra(spec, validation);
  } catch (const ParseError& e) {
    throw ParseError(spec + ": " + e.what(), e.line(), e.column());
  } catch (const ValidationError& e) {
    throw ValidationError(spec + ": " + e.what());
  }
  return s;
}

struct BigradedInput {
  LieAlgebra algebra;
  Bigrading bigrading;
};

std::optional<BigradedInput> bigraded_input(const Source& s, Outcome& o) {
  if (s.file.bigrading) return BigradedInput{s.file.algebra, *s.file.bigrading};
  if (s.entry && s.entry->graded_form) {
    o.warnings.push_back("using the shipped change of basis: the bigrading lives on " +
                         join(s.entry->graded_form->algebra.labels(), ", "));
    return BigradedInput{s.entry->graded_form->algebra, s.entry->graded_form->bigrading};
  }
  return std::nullopt;
}

BigradedInput require_bigrading(const Source& s, Outcome& o) {
  auto in = bigraded_input(s, o);
  if (!in)
    throw UsageError(s.spec + " carries no bigrading (add a \"bigrading\" array or run "
                              "search-bigrading)");
  return *in;
}

// ---- commands ----

Outcome cmd_verify(const Source& s) {
  Outcome o;
  const LieAlgebra& L = s.algebra();
  const auto& labels = L.labels();
  std::ostringstream t;
  t << "algebra " << s.name() << " (dim " << L.dim() << ")\n";

  const JacobiReport jac = check_jacobi(L);
  json violations = json::array();
  for (const auto& v : jac.violations) {
    violations.push_back({{"triple", {labels[v.triple[0]], labels[v.triple[1]], labels[v.triple[2]]}},
                          {"value", vector_json(v.value)}});
  }
  t << "jacobi: " << (jac.ok() ? "ok" : "FAILED") << "\n";
  for (const auto& v : jac.violations)
    t << "  (" << labels[v.triple[0]] << "," << labels[v.triple[1]] << ","
      << labels[v.triple[2]] << "): " << vector_text(v.value, labels) << "\n";

  const bool nilpotent = is_nilpotent(L);
  json nil = {{"nilpotent", nilpotent}};
  t << "nilpotent: " << yes_no(nilpotent) << "\n";
  if (nilpotent) {
    const auto lcs = lower_central_series(L);
    std::vector<std::size_t> dims;
    for (const auto& c : lcs) dims.push_back(c.dim());
    const LatticeRank lr = lattice_rank(L);
    nil["step"] = step_length(L);
    nil["lower_central_dims"] = dims;
    nil["layers"] = lr.layers;
    nil["rank"] = lr.total;
    t << "step: " << step_length(L) << "\n"
      << "lower central series dims: (" << join_numbers(dims) << ")\n"
      << "layers: (" << join_numbers(lr.layers) << ")\n"
      << "lattice rank: " << lr.total << "\n";
  }

  const Subspace z = center(L);
  json zb = json::array();
  std::vector<std::string> zt;
  for (const auto& v : z.basis()) {
    zb.push_back(vector_json(v));
    zt.push_back(vector_text(v, labels));
  }
  const std::size_t derived_dim = derived(L).dim();
  t << "center: dim " << z.dim() << " <" << join(zt, ", ") << ">\n"
    << "derived algebra: dim " << derived_dim << "\n";

  bool pass = jac.ok() && nilpotent;
  json conj = {{"present", L.conjugation().has_value()}};
  if (L.conjugation()) {
    const auto cr = check_conjugation(L, *L.conjugation());
    json failures = json::array();
    for (const auto& [i, j] : cr.bracket_failures) failures.push_back({labels[i], labels[j]});
    conj["involutive"] = cr.involutive;
    conj["bracket_failures"] = failures;
    conj["ok"] = cr.ok();
    pass = pass && cr.ok();
    t << "conjugation: " << (cr.ok() ? "ok" : "FAILED") << "\n";
  }

  json gradings = json::object();
  if (s.file.bigrading) {
    const auto cr = check_bigrading_compatible(L, *s.file.bigrading);
    gradings["bigrading_compatible"] = cr.ok();
    pass = pass && cr.ok();
    t << "bigrading compatible: " << yes_no(cr.ok()) << "\n";
  }
  if (s.file.grading) {
    const auto cr = check_grading_compatible(L, *s.file.grading);
    gradings["grading_compatible"] = cr.ok();
    pass = pass && cr.ok();
    t << "grading compatible: " << yes_no(cr.ok()) << "\n";
  }
  t << "verdict: " << (pass ? "pass" : "FAIL") << "\n";

  o.results = {{"name", s.name()},
               {"dim", L.dim()},
               {"basis", labels},
               {"pass", pass},
               {"jacobi", {{"ok", jac.ok()}, {"violations", violations}}},
               {"nilpotency", nil},
               {"center", {{"dim", z.dim()}, {"basis", zb}}},
               {"derived_dim", derived_dim},
               {"conjugation", conj},
               {"gradings", gradings}};
  o.text = t.str();
  o.code = pass ? kExitOk : kExitAxiom;
  return o;
}

Outcome cmd_cohomology(const Source& s, int max_degree, bool classes) {
  Outcome o;
  const LieAlgebra& L = s.algebra();
  const std::size_t top =
      max_degree < 0 ? L.dim() : std::min<std::size_t>(static_cast<std::size_t>(max_degree), L.dim());
  const CohomologyReport rep = cohomology_report(L, top, classes);
  std::ostringstream t;
  t << "cohomology of " << s.name() << " (dim " << L.dim() << ")\n";
  json degrees = json::array();
  std::vector<std::size_t> betti;
  for (const auto& d : rep.degrees) {
    betti.push_back(d.betti);
    t << "  b" << d.degree << " = " << d.betti << "\n";
    json reps = json::array();
    for (const auto& c : d.representatives) {
      reps.push_back(c.to_string(L.labels()));
      t << "      " << c.to_string(L.labels()) << "\n";
    }
    json deg = {{"degree", d.degree}, {"betti", d.betti}};
    if (classes) deg["representatives"] = reps;
    degrees.push_back(deg);
  }
  o.results = {{"name", s.name()}, {"dim", L.dim()}, {"betti", betti}, {"degrees", degrees}};
  o.text = t.str();
  return o;
}

Outcome cmd_bigraded(const Source& s) {
  Outcome o;
  const BigradedInput in = require_bigrading(s, o);
  const ChevalleyEilenberg ce(in.algebra);
  std::ostringstream t;
  t << "bigraded cohomology of " << s.name() << "\n"
    << "bigrading: " << bigrading_text(in.bigrading, in.algebra.labels()) << "\n";
  json degrees = json::array();
  for (std::size_t j = 0; j <= in.algebra.dim(); ++j) {
    const BigradedTable tab = bigraded_cohomology(ce, in.bigrading, j);
    t << "  H^" << j << " " << table_text(tab) << "  (b" << j << " = " << ce.betti(j) << ")\n";
    degrees.push_back({{"degree", j}, {"betti", ce.betti(j)}, {"table", table_json(tab)}});
  }
  o.results = {{"name", s.name()},
               {"basis", in.algebra.labels()},
               {"bigrading", bigrading_json(in.bigrading)},
               {"degrees", degrees}};
  o.text = t.str();
  return o;
}

Outcome cmd_check_w(const Source& s) {
  Outcome o;
  const BigradedInput in = require_bigrading(s, o);
  const WReport w = check_condition_w(in.algebra, in.bigrading);
  const SymmetryReport sym = check_hodge_symmetry(in.algebra, in.bigrading);
  if (sym.status == SymmetryStatus::Fail)
    o.warnings.push_back("the bigrading is not Hodge symmetric under the shipped conjugation");
  std::ostringstream t;
  t << "condition (W) for " << s.name() << ": " << (w.pass ? "pass" : "FAIL") << "\n"
    << "  H^1 " << table_text(w.h1) << "\n"
    << "  H^2 " << table_text(w.h2) << "\n"
    << "  Hodge symmetry: " << to_string(sym.status) << "\n";
  if (!w.witnesses.empty()) t << "witnesses:\n" << witnesses_text(w.witnesses, in.algebra.labels(), true);
  o.results = {{"name", s.name()},
               {"pass", w.pass},
               {"bigrading", bigrading_json(in.bigrading)},
               {"h1", table_json(w.h1)},
               {"h2", table_json(w.h2)},
               {"hodge_symmetry", to_string(sym.status)},
               {"witnesses", witnesses_json(w.witnesses, in.algebra.labels(), true)}};
  o.text = t.str();
  o.code = w.pass ? kExitOk : kExitConditionW;
  return o;
}

Outcome cmd_check_grading(const Source& s) {
  Outcome o;
  LieAlgebra L = s.algebra();
  std::optional<Grading> G = s.file.grading;
  if (!G) {
    if (auto in = bigraded_input(s, o)) {
      o.warnings.push_back("no single grading given; using the total weight p+q of the bigrading");
      L = in->algebra;
      G = total_grading(in->bigrading);
    }
  }
  if (!G) throw UsageError(s.spec + " carries no grading (add a \"grading\" array or run search-grading)");

  const GradingReport r = check_grading_wh(L, *G);
  std::ostringstream t;
  t << "conditions (W)+(H) for " << s.name() << ": " << (r.pass ? "pass" : "FAIL") << "\n"
    << "  grading: " << grading_text(*G, L.labels()) << "\n"
    << "  (W): " << (r.w_ok ? "ok" : "fails") << ", (H): " << (r.h_ok ? "ok" : "fails") << "\n";
  json degrees = json::array();
  for (std::size_t j = 0; j < r.degrees.size(); ++j) {
    t << "  H^" << j << " " << table_text(r.degrees[j]) << "\n";
    degrees.push_back({{"degree", j}, {"table", table_json(r.degrees[j])}});
  }
  for (const auto& f : r.failures) t << "  " << f << "\n";
  if (!r.witnesses.empty()) t << "witnesses:\n" << witnesses_text(r.witnesses, L.labels(), false);
  json alg = json::array();
  for (const auto& [k, d] : r.algebra) alg.push_back({{"weight", k}, {"dim", d}});
  o.results = {{"name", s.name()},
               {"pass", r.pass},
               {"w", r.w_ok},
               {"h", r.h_ok},
               {"grading", G->weights()},
               {"algebra", alg},
               {"degrees", degrees},
               {"failures", r.failures},
               {"witnesses", witnesses_json(r.witnesses, L.labels(), false)}};
  o.text = t.str();
  o.code = r.pass ? kExitOk : kExitConditionW;
  return o;
}

template <class G>
json outcome_header(const SearchOutcome<G>& r, const SearchConfig& cfg) {
  return {{"mode", cfg.mode == SearchMode::Exhaustive ? "exhaustive" : "first-hit"},
          {"bound", r.bound},
          {"found", r.found.size()},
          {"exhausted", r.exhausted},
          {"candidates_checked", r.candidates_checked},
          {"candidates_pruned", r.candidates_pruned}};
}

template <class G>
std::string outcome_line(const SearchOutcome<G>& r) {
  std::ostringstream t;
  t << "found: " << r.found.size() << ", exhausted: " << (r.exhausted ? "true" : "false")
    << " (bound " << r.bound << ", " << r.candidates_checked << " candidates checked, "
    << r.candidates_pruned << " pruned)\n";
  return t.str();
}

Outcome cmd_search_bigrading(const Source& s, const SearchConfig& cfg) {
  Outcome o;
  const LieAlgebra& L = s.algebra();
  const auto r = search_w_bigrading(L, cfg);
  if (r.symmetry_skipped)
    o.warnings.push_back("--symmetric ignored: " + s.name() + " carries no conjugation");
  std::ostringstream t;
  t << "diagonal (W)-bigradings of " << s.name() << "\n" << outcome_line(r);
  json found = json::array();
  for (const auto& B : r.found) {
    found.push_back(bigrading_json(B));
    t << "  " << bigrading_text(B, L.labels()) << "\n";
  }
  o.results = outcome_header(r, cfg);
  o.results["name"] = s.name();
  o.results["symmetric"] = cfg.require_symmetry && !r.symmetry_skipped;
  o.results["bigradings"] = found;
  o.text = t.str();
  return o;
}

Outcome cmd_search_grading(const Source& s, const SearchConfig& cfg) {
  Outcome o;
  const LieAlgebra& L = s.algebra();
  const auto r = search_w_grading(L, cfg);
  std::ostringstream t;
  t << "(W)+(H) gradings of " << s.name() << "\n" << outcome_line(r);
  json found = json::array();
  for (const auto& G : r.found) {
    found.push_back(G.weights());
    t << "  " << grading_text(G, L.labels()) << "\n";
  }
  o.results = outcome_header(r, cfg);
  o.results["name"] = s.name();
  o.results["gradings"] = found;
  o.text = t.str();
  return o;
}

CatalogEntry entry_of(const Source& s) {
  if (s.entry) return *s.entry;
  CatalogEntry e;
  e.algebra = s.file.algebra;
  e.known_bigrading = s.file.bigrading;
  e.known_grading = s.file.grading;
  return e;
}

Outcome write_definition(const AlgebraFile& file, const std::string& path) {
  Outcome o;
  const std::string text = serialize_algebra(file);
  if (path.empty() || path == "-") {
    o.text = text;
  } else {
    save_algebra(file, path);
    o.text = "wrote " + path + "\n";
    o.results["path"] = path;
  }
  o.results["name"] = file.algebra.name();
  o.results["dim"] = file.algebra.dim();
  o.results["definition"] = json::parse(text);
  return o;
}

Outcome cmd_extend(const Source& s, std::size_t m, const std::string& path) {
  if (m == 0) throw UsageError("--abelian must be at least 1");
  const CatalogEntry ext = trivial_extension(entry_of(s), m);
  Outcome o = write_definition(to_algebra_file(ext), path);
  if (ext.graded_form) o.warnings.push_back("written in the basis carrying the bigrading");
  return o;
}

Outcome cmd_catalog_list() {
  Outcome o;
  std::ostringstream t;
  json entries = json::array();
  t << std::left << std::setw(12) << "name" << std::setw(5) << "dim" << std::setw(6) << "step"
    << std::setw(11) << "bigrading" << std::setw(9) << "grading" << "provenance\n";
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    const std::size_t step = step_length(e.algebra);
    const char* bg = e.graded_form ? "basis" : (e.known_bigrading ? "yes" : "-");
    t << std::setw(12) << name << std::setw(5) << e.algebra.dim() << std::setw(6) << step
      << std::setw(11) << bg << std::setw(9) << (e.known_grading ? "yes" : "-") << e.provenance
      << "\n";
    entries.push_back({{"name", name},
                       {"dim", e.algebra.dim()},
                       {"step", step},
                       {"bigrading", e.known_bigrading.has_value()},
                       {"graded_form", e.graded_form.has_value()},
                       {"grading", e.known_grading.has_value()},
                       {"provenance", e.provenance}});
  }
  t << "also: abelian_<m>, family_abc(a,b,c), sums such as n3+abelian_2\n";
  o.results = {{"entries", entries}};
  o.text = t.str();
  return o;
}

Outcome cmd_catalog_show(const std::string& name) {
  Outcome o;
  const CatalogEntry e = catalog_get(name);
  const LieAlgebra& L = e.algebra;
  const auto& labels = L.labels();
  std::ostringstream t;
  t << e.name() << " (dim " << L.dim() << ", step " << step_length(L) << ")\n"
    << "basis: " << join(labels, " ") << "\n";
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      if (!L.bracket_is_zero(i, j))
        t << "  [" << labels[i] << "," << labels[j] << "] = " << vector_text(L.upper_bracket(i, j), labels)
          << "\n";
  if (L.conjugation()) t << "conjugation: shipped\n";
  if (e.known_bigrading) t << "bigrading: " << bigrading_text(*e.known_bigrading, labels) << "\n";
  if (e.known_grading) t << "grading: " << grading_text(*e.known_grading, labels) << "\n";
  json graded = nullptr;
  if (e.graded_form) {
    const auto& g = *e.graded_form;
    t << "graded form (new basis in old coordinates):\n";
    json cols = json::array();
    for (std::size_t c = 0; c < g.basis_change.cols(); ++c) {
      Vector col(g.basis_change.rows());
      for (std::size_t r = 0; r < col.size(); ++r) col[r] = g.basis_change(r, c);
      t << "  " << g.algebra.labels()[c] << " = " << vector_text(col, labels) << "\n";
      cols.push_back(vector_json(col));
    }
    t << "  bigrading: " << bigrading_text(g.bigrading, g.algebra.labels()) << "\n";
    graded = {{"basis_change_columns", cols},
              {"definition", json::parse(serialize_algebra(to_algebra_file(e)))}};
  }
  if (!e.provenance.empty()) t << "provenance: " << e.provenance << "\n";
  for (const auto& n : e.notes) t << "note: " << n << "\n";

  json expected = json::object();
  if (e.expected.betti) expected["betti"] = *e.expected.betti;
  if (e.expected.b2_b3) expected["b2_b3"] = {e.expected.b2_b3->first, e.expected.b2_b3->second};
  if (e.expected.step) expected["step"] = *e.expected.step;
  if (e.expected.layers) expected["layers"] = *e.expected.layers;

  o.results = {{"name", e.name()},
               {"dim", L.dim()},
               {"definition",
                json::parse(serialize_algebra(AlgebraFile{L, e.known_bigrading, e.known_grading}))},
               {"graded_form", graded},
               {"provenance", e.provenance},
               {"notes", e.notes},
               {"expected", expected}};
  o.text = t.str();
  return o;
}

Outcome cmd_verify_embedding(const Source& s) {
  if (!s.entry || s.entry->name() != "n8_campana")
    throw UsageError("a matrix realisation is shipped only for catalog:n8_campana");
  Outcome o;
  const LieAlgebra& L = s.algebra();
  const MatrixEmbedding phi = campana_embedding();
  const EmbeddingReport r = verify_matrix_embedding(L, phi);
  std::ostringstream t;
  t << "matrix realisation of " << s.name() << " in gl_" << phi.size << ": "
    << (r.ok() ? "pass" : "FAIL") << "\n"
    << "  bracket pairs checked: " << r.pairs_checked << ", failing: " << r.failures.size() << "\n"
    << "  injective: " << yes_no(r.injective) << "\n";
  json failures = json::array();
  for (const auto& [i, j] : r.failures) {
    failures.push_back({L.labels()[i], L.labels()[j]});
    t << "  fails on (" << L.labels()[i] << "," << L.labels()[j] << ")\n";
  }
  o.results = {{"name", s.name()},
               {"size", phi.size},
               {"pass", r.ok()},
               {"pairs_checked", r.pairs_checked},
               {"failures", failures},
               {"injective", r.injective}};
  o.text = t.str();
  o.code = r.ok() ? kExitOk : kExitAxiom;
  return o;
}

Outcome cmd_survey(std::size_t max_rank, unsigned threads) {
  if (max_rank > 8) throw UsageError("--max-rank must be at most 8");
  Outcome o;
  const SurveyReport rep = rank_survey(max_rank, threads);
  std::ostringstream t;
  json groups = json::array();
  std::vector<std::string> admissible;
  for (const auto& g : rep.groups) {
    t << "rank " << g.rank << ", b1 = " << g.b1 << "\n";
    for (const auto& n : g.notes) t << "  (" << n << ")\n";
    json rows = json::array();
    for (const auto& r : g.rows) {
      if (r.admissible) admissible.push_back(r.name);
      t << "  " << std::left << std::setw(18) << r.name << std::setw(15)
        << (r.admissible ? "admissible" : "not found") << "step " << r.step << ", layers ("
        << join_numbers(r.layers) << ")"
        << (r.grading_found ? ", (W)+(H) grading" : "") << "\n";
      for (const auto& n : r.notes) t << "      " << n << "\n";
      rows.push_back({{"name", r.name},
                      {"step", r.step},
                      {"layers", r.layers},
                      {"admissible", r.admissible},
                      {"known_bigrading", r.has_known},
                      {"known_verified", r.known_verified},
                      {"search_found", r.search_found},
                      {"search_exhausted", r.search_exhausted},
                      {"search_bound", r.search_bound},
                      {"grading_found", r.grading_found},
                      {"notes", r.notes}});
    }
    groups.push_back({{"rank", g.rank}, {"b1", g.b1}, {"notes", g.notes}, {"rows", rows}});
  }
  o.results = {{"max_rank", rep.max_rank}, {"admissible", admissible}, {"groups", groups}};
  o.text = t.str();
  return o;
}

// ---- driver ----

std::string digest_input(const std::vector<std::string>& args, const std::vector<Source>& sources) {
  std::string data = join(args, "\n") + "\n";
  for (const auto& s : sources) data += s.spec + "\n" + serialize_algebra(s.file);
  return data;
}

void emit(const Outcome& o, bool as_json, const std::vector<std::string>& args,
          const std::vector<Source>& sources, std::ostream& out, std::ostream& err) {
  if (as_json) {
    json report = {{"command", "nilhodge " + join(args, " ")},
                   {"inputs_digest", sha256_hex(digest_input(args, sources))},
                   {"results", o.results},
                   {"warnings", o.warnings}};
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
    for (const auto& w : o.warnings) err << "warning: " << w << "\n";
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra cohomology and (W)-bigrading tools for nilpotent Lie algebras",
               "nilhodge"};
  app.fallthrough();
  app.require_subcommand(1);

  bool as_json = false;
  std::string seed;
  unsigned threads = 0;
  app.add_flag("--json", as_json, "Print a machine-readable report");
  app.add_option("--seed", seed, "Reserved; every computation is deterministic");
  app.add_option("--threads", threads, "Worker threads for searches (0 = all cores)");

  std::string src;
  int max_degree = -1;
  bool classes = false;
  int bound = 0;
  bool all = false;
  bool symmetric = false;
  std::size_t abelian_m = 0;
  std::string output;
  std::size_t max_rank = 8;
  std::string name;
  std::string path;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("source", src, "Definition file or catalog:<name>")->required();
  };

  auto* verify = app.add_subcommand("verify", "Jacobi identity, nilpotency, step, center, rank");
  add_source(verify);
  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers");
  add_source(cohomology);
  cohomology->add_option("--max-degree", max_degree, "Highest degree to compute");
  cohomology->add_flag("--classes", classes, "Print representative cocycles");
  auto* bigraded = app.add_subcommand("bigraded", "Bigraded Betti table per degree");
  add_source(bigraded);
  auto* check_w = app.add_subcommand("check-w", "Condition (W) for the shipped bigrading");
  add_source(check_w);
  auto* check_grading = app.add_subcommand("check-grading", "Conditions (W) and (H) for a grading");
  add_source(check_grading);
  auto* search_bg = app.add_subcommand("search-bigrading", "Search diagonal (W)-bigradings");
  add_source(search_bg);
  search_bg->add_option("--bound", bound, "Maximal |p|+|q| per basis vector (default: dim)");
  search_bg->add_flag("--all", all, "Enumerate every solution instead of stopping at the first");
  search_bg->add_flag("--symmetric", symmetric, "Also require Hodge symmetry");
  auto* search_gr = app.add_subcommand("search-grading", "Search (W)+(H) gradings");
  add_source(search_gr);
  search_gr->add_option("--bound", bound, "Maximal |w| per basis vector (default: dim)");
  search_gr->add_flag("--all", all, "Enumerate every solution instead of stopping at the first");
  auto* extend = app.add_subcommand("extend", "Write the definition of L + C^m");
  add_source(extend);
  extend->add_option("--abelian", abelian_m, "Dimension m of the abelian summand")->required();
  extend->add_option("-o,--output", output, "Output file (default: standard output)");
  auto* catalog = app.add_subcommand("catalog", "Built-in algebras");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List built-in entries");
  auto* cat_show = catalog->add_subcommand("show", "Show one entry");
  cat_show->add_option("name", name, "Catalog name")->required();
  auto* cat_export = catalog->add_subcommand("export", "Write an entry as a definition file");
  cat_export->add_option("name", name, "Catalog name")->required();
  cat_export->add_option("path", path, "Output file")->required();
  auto* embed = app.add_subcommand("verify-embedding", "Check the shipped matrix realisation");
  add_source(embed);
  auto* survey = app.add_subcommand("survey", "Admissibility survey by lattice rank");
  survey->add_option("--max-rank", max_rank, "Largest lattice rank (at most 8)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!seed.empty() || app.count("--seed") > 0) {
    err << "error: --seed is reserved; every computation is deterministic\n";
    return kExitUsage;
  }

  std::vector<Source> sources;
  try {
    SearchConfig cfg;
    cfg.bound = bound;
    cfg.mode = all ? SearchMode::Exhaustive : SearchMode::FirstHit;
    cfg.require_symmetry = symmetric;
    cfg.threads = threads;
    if (bound < 0) throw UsageError("--bound must be non-negative");

    Outcome o;
    if (app.got_subcommand(catalog)) {
      if (catalog->got_subcommand(cat_list)) {
        o = cmd_catalog_list();
      } else if (catalog->got_subcommand(cat_show)) {
        o = cmd_catalog_show(name);
      } else {
        const CatalogEntry e = catalog_get(name);
        o = write_definition(to_algebra_file(e), path);
        if (e.graded_form) o.warnings.push_back("written in the basis carrying the bigrading");
      }
    } else if (app.got_subcommand(survey)) {
      o = cmd_survey(max_rank, threads);
    } else {
      const Validation v = app.got_subcommand(verify) ? Validation::None : Validation::Full;
      sources.push_back(load_source(src, v));
      const Source& s = sources.front();
      if (app.got_subcommand(verify)) o = cmd_verify(s);
      else if (app.got_subcommand(cohomology)) o = cmd_cohomology(s, max_degree, classes);
      else if (app.got_subcommand(bigraded)) o = cmd_bigraded(s);
      else if (app.got_subcommand(check_w)) o = cmd_check_w(s);
      else if (app.got_subcommand(check_grading)) o = cmd_check_grading(s);
      else if (app.got_subcommand(search_bg)) o = cmd_search_bigrading(s, cfg);
      else if (app.got_subcommand(search_gr)) o = cmd_search_grading(s, cfg);
      else if (app.got_subcommand(extend)) o = cmd_extend(s, abelian_m, output);
      else o = cmd_verify_embedding(s);
    }
    emit(o, as_json, args, sources, out, err);
    return o.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownNameError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const NonNilpotentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const IncompatibleBigradingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const IncompatibleGradingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAxiom;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

} // namespace nilhodge::cli
