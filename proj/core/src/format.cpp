#include "nilhodge/format.hpp"

#include "nilhodge/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <variant>

namespace nilhodge {

namespace {

using json = nlohmann::ordered_json;
using PathElem = std::variant<std::string, std::size_t>;
using Path = std::vector<PathElem>;

std::string path_string(const Path& path) {
  std::string out;
  for (const auto& e : path) {
    out += '/';
    if (const auto* s = std::get_if<std::string>(&e))
      out += *s;
    else
      out += std::to_string(std::get<std::size_t>(e));
  }
  return out.empty() ? "/" : out;
}

// Finds the byte offset of the value at `path` in text that is already known
// to be valid JSON.
class Locator {
public:
  explicit Locator(std::string_view text) : t_(text) {}

  std::size_t find(const Path& path) const {
    std::size_t pos = ws(0);
    for (const auto& e : path) {
      if (pos >= t_.size()) return pos;
      if (const auto* key = std::get_if<std::string>(&e)) {
        if (t_[pos] != '{') return pos;
        const std::size_t start = pos;
        pos = ws(pos + 1);
        bool found = false;
        while (pos < t_.size() && t_[pos] == '"') {
          const std::size_t key_end = skip_string(pos);
          const std::string_view k = t_.substr(pos + 1, key_end - pos - 2);
          pos = ws(ws(key_end) + 1);  // past ':'
          if (k == *key) {
            found = true;
            break;
          }
          pos = ws(skip_value(pos));
          if (pos < t_.size() && t_[pos] == ',') pos = ws(pos + 1);
        }
        if (!found) return start;
      } else {
        const std::size_t idx = std::get<std::size_t>(e);
        if (t_[pos] != '[') return pos;
        const std::size_t start = pos;
        pos = ws(pos + 1);
        for (std::size_t i = 0; i < idx; ++i) {
          if (pos >= t_.size() || t_[pos] == ']') return start;
          pos = ws(skip_value(pos));
          if (pos < t_.size() && t_[pos] == ',') pos = ws(pos + 1);
        }
      }
    }
    return pos;
  }

private:
  std::size_t ws(std::size_t pos) const {
    while (pos < t_.size() && (t_[pos] == ' ' || t_[pos] == '\n' || t_[pos] == '\r' ||
                               t_[pos] == '\t'))
      ++pos;
    return pos;
  }

  std::size_t skip_string(std::size_t pos) const {
    ++pos;
    while (pos < t_.size() && t_[pos] != '"') pos += t_[pos] == '\\' ? 2 : 1;
    return pos + 1;
  }

  std::size_t skip_value(std::size_t pos) const {
    if (pos >= t_.size()) return pos;
    const char c = t_[pos];
    if (c == '"') return skip_string(pos);
    if (c == '{' || c == '[') {
      int depth = 0;
      while (pos < t_.size()) {
        const char d = t_[pos];
        if (d == '"') {
          pos = skip_string(pos);
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') {
          if (--depth == 0) return pos + 1;
        }
        ++pos;
      }
      return pos;
    }
    while (pos < t_.size() && t_[pos] != ',' && t_[pos] != '}' && t_[pos] != ']' &&
           t_[pos] != ' ' && t_[pos] != '\n' && t_[pos] != '\r' && t_[pos] != '\t')
      ++pos;
    return pos;
  }

  std::string_view t_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Reader {
public:
  explicit Reader(std::string_view text) : text_(text), locator_(text) {}

  [[noreturn]] void fail(const std::string& msg, const Path& path,
                         std::size_t extra = 0) const {
    const auto [line, col] = line_column(text_, locator_.find(path) + extra);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + msg + " (at " + path_string(path) + ")",
                     line, col);
  }

  const json& member(const json& obj, const std::string& key, const Path& path) const {
    if (!obj.contains(key)) fail("missing key \"" + key + "\"", path);
    return obj.at(key);
  }

  std::size_t index(const json& v, std::size_t n, const Path& path) const {
    if (!v.is_number_integer()) fail("expected an integer index", path);
    const auto i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > n)
      fail("index " + std::to_string(i) + " outside 1.." + std::to_string(n), path);
    return static_cast<std::size_t>(i - 1);
  }

  int integer(const json& v, const Path& path) const {
    if (!v.is_number_integer()) fail("expected an integer", path);
    return v.get<int>();
  }

  Scalar scalar(const json& v, const Path& path) const {
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (!v.is_string()) fail("expected a coefficient string", path);
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const ScalarParseError& e) {
      fail(std::string("bad coefficient: ") + e.what(), path, 1 + e.offset());
    }
  }

  void array(const json& v, const Path& path) const {
    if (!v.is_array()) fail("expected an array", path);
  }

private:
  std::string_view text_;
  Locator locator_;
};

json to_json(const AlgebraFile& file) {
  const LieAlgebra& L = file.algebra;
  const std::size_t n = L.dim();
  json j;
  j["name"] = L.name();
  j["dim"] = n;
  j["basis"] = L.labels();
  json brackets = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (L.bracket_is_zero(a, b)) continue;
      json terms = json::array();
      const Vector& v = L.upper_bracket(a, b);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) terms.push_back({{"k", k + 1}, {"c", v[k].to_string()}});
      brackets.push_back({{"i", a + 1}, {"j", b + 1}, {"terms", std::move(terms)}});
    }
  j["brackets"] = std::move(brackets);
  if (L.conjugation()) {
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < n; ++c) row.push_back(L.conjugation()->matrix(r, c).to_string());
      rows.push_back(std::move(row));
    }
    j["conjugation"] = std::move(rows);
  }
  if (file.bigrading) {
    json w = json::array();
    for (const auto& x : file.bigrading->weights()) w.push_back({x.p, x.q});
    j["bigrading"] = std::move(w);
  }
  if (file.grading) j["grading"] = file.grading->weights();
  return j;
}

std::string label_triple(const LieAlgebra& L, const std::array<std::size_t, 3>& t) {
  return "(" + L.labels()[t[0]] + ", " + L.labels()[t[1]] + ", " + L.labels()[t[2]] + ")";
}

} // namespace

void validate_algebra(const AlgebraFile& file) {
  const LieAlgebra& L = file.algebra;
  const auto jac = check_jacobi(L);
  if (!jac.ok()) {
    const auto& v = jac.violations.front();
    throw ValidationError("Jacobi identity fails on triple " + label_triple(L, v.triple) +
                          ": cyclic sum is " + to_string(v.value));
  }
  if (!is_nilpotent(L)) throw ValidationError("algebra '" + L.name() + "' is not nilpotent");
  if (L.conjugation()) {
    const auto rep = check_conjugation(L, *L.conjugation());
    if (!rep.involutive) throw ValidationError("conjugation is not an involution");
    if (!rep.bracket_failures.empty()) {
      const auto [a, b] = rep.bracket_failures.front();
      throw ValidationError("conjugation does not preserve [" + L.labels()[a] + "," +
                            L.labels()[b] + "]");
    }
  }
  if (file.bigrading) {
    const auto rep = check_bigrading_compatible(L, *file.bigrading);
    if (!rep.ok()) {
      if (!rep.size_ok) throw ValidationError("bigrading length differs from dim");
      const auto& v = rep.bracket_violations.front();
      throw ValidationError("bigrading not additive on [" + L.labels()[v.i] + "," +
                            L.labels()[v.j] + "] at " + L.labels()[v.k]);
    }
  }
  if (file.grading) {
    const auto rep = check_grading_compatible(L, *file.grading);
    if (!rep.ok()) {
      if (!rep.size_ok) throw ValidationError("grading length differs from dim");
      const auto& v = rep.bracket_violations.front();
      throw ValidationError("grading not additive on [" + L.labels()[v.i] + "," +
                            L.labels()[v.j] + "] at " + L.labels()[v.k]);
    }
  }
}

AlgebraFile parse_algebra(std::string_view text, Validation validation) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, off);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": malformed JSON",
                     line, col);
  }
  const Reader rd(text);
  if (!root.is_object()) rd.fail("expected a JSON object", {});

  static const std::set<std::string> known{"name",        "dim",       "basis",  "brackets",
                                           "conjugation", "bigrading", "grading"};
  for (const auto& [key, _] : root.items())
    if (!known.count(key)) rd.fail("unknown key \"" + key + "\"", {key});

  const json& jname = rd.member(root, "name", {});
  if (!jname.is_string()) rd.fail("expected a string", {"name"});
  const json& jdim = rd.member(root, "dim", {});
  if (!jdim.is_number_integer() || jdim.get<long long>() < 0)
    rd.fail("expected a non-negative integer", {"dim"});
  const auto n = jdim.get<std::size_t>();
  if (n > 31) rd.fail("dimension above 31 is not supported", {"dim"});

  std::vector<std::string> labels;
  if (root.contains("basis")) {
    const json& jb = root.at("basis");
    rd.array(jb, {"basis"});
    if (jb.size() != n)
      rd.fail("basis has " + std::to_string(jb.size()) + " labels, dim is " + std::to_string(n),
              {"basis"});
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!jb[i].is_string() || jb[i].get<std::string>().empty())
        rd.fail("expected a non-empty label", {"basis", i});
      if (!seen.insert(jb[i].get<std::string>()).second)
        rd.fail("duplicate label", {"basis", i});
      labels.push_back(jb[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  }

  AlgebraFile file;
  file.algebra = LieAlgebra(jname.get<std::string>(), std::move(labels));
  LieAlgebra& L = file.algebra;

  if (root.contains("brackets")) {
    const json& jbr = root.at("brackets");
    rd.array(jbr, {"brackets"});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < jbr.size(); ++e) {
      const Path at{"brackets", e};
      if (!jbr[e].is_object()) rd.fail("expected an object", at);
      for (const auto& [key, _] : jbr[e].items())
        if (key != "i" && key != "j" && key != "terms")
          rd.fail("unknown key \"" + key + "\"", {"brackets", e, key});
      const std::size_t i = rd.index(rd.member(jbr[e], "i", at), n, {"brackets", e, "i"});
      const std::size_t j = rd.index(rd.member(jbr[e], "j", at), n, {"brackets", e, "j"});
      if (i >= j) rd.fail("bracket entries need i < j", {"brackets", e, "j"});
      if (!seen.insert({i, j}).second) rd.fail("duplicate bracket entry", at);
      const json& terms = rd.member(jbr[e], "terms", at);
      rd.array(terms, {"brackets", e, "terms"});
      std::set<std::size_t> ks;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const Path tp{"brackets", e, "terms", t};
        if (!terms[t].is_object()) rd.fail("expected an object", tp);
        const std::size_t k =
            rd.index(rd.member(terms[t], "k", tp), n, {"brackets", e, "terms", t, "k"});
        if (!ks.insert(k).second) rd.fail("duplicate term", tp);
        const Scalar c = rd.scalar(rd.member(terms[t], "c", tp), {"brackets", e, "terms", t, "c"});
        L.add_bracket_term(i, j, k, c);
      }
    }
  }

  if (root.contains("conjugation")) {
    const json& jc = root.at("conjugation");
    rd.array(jc, {"conjugation"});
    if (jc.size() != n) rd.fail("conjugation needs " + std::to_string(n) + " rows", {"conjugation"});
    Matrix S(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      rd.array(jc[r], {"conjugation", r});
      if (jc[r].size() != n)
        rd.fail("conjugation row needs " + std::to_string(n) + " entries", {"conjugation", r});
      for (std::size_t c = 0; c < n; ++c) S(r, c) = rd.scalar(jc[r][c], {"conjugation", r, c});
    }
    L.set_conjugation(Conjugation{std::move(S)});
  }

  if (root.contains("bigrading")) {
    const json& jw = root.at("bigrading");
    rd.array(jw, {"bigrading"});
    if (jw.size() != n) rd.fail("bigrading needs " + std::to_string(n) + " entries", {"bigrading"});
    std::vector<Weight> w;
    for (std::size_t i = 0; i < n; ++i) {
      if (!jw[i].is_array() || jw[i].size() != 2) rd.fail("expected [p, q]", {"bigrading", i});
      w.push_back({rd.integer(jw[i][0], {"bigrading", i, std::size_t{0}}),
                   rd.integer(jw[i][1], {"bigrading", i, std::size_t{1}})});
      if (!weight_in_range(w.back()) && validation == Validation::Full)
        throw ValidationError("bigrading weight " + w.back().to_string() + " of " +
                              L.labels()[i] + " violates p,q <= 0, p+q <= -1");
    }
    try {
      file.bigrading = Bigrading(std::move(w));
    } catch (const std::invalid_argument& e) {
      rd.fail(e.what(), {"bigrading"});
    }
  }

  if (root.contains("grading")) {
    const json& jg = root.at("grading");
    rd.array(jg, {"grading"});
    if (jg.size() != n) rd.fail("grading needs " + std::to_string(n) + " entries", {"grading"});
    std::vector<int> w;
    for (std::size_t i = 0; i < n; ++i) {
      w.push_back(rd.integer(jg[i], {"grading", i}));
      if (w.back() > -1 && validation == Validation::Full)
        throw ValidationError("grading weight " + std::to_string(w.back()) + " of " +
                              L.labels()[i] + " is not <= -1");
    }
    try {
      file.grading = Grading(std::move(w));
    } catch (const std::invalid_argument& e) {
      rd.fail(e.what(), {"grading"});
    }
  }

  if (validation == Validation::Full) validate_algebra(file);
  return file;
}

AlgebraFile load_algebra(const std::filesystem::path& path, Validation validation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), validation);
}

std::string serialize_algebra(const AlgebraFile& file) { return to_json(file).dump(2) + "\n"; }

void save_algebra(const AlgebraFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_algebra(file);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

} // namespace nilhodge
