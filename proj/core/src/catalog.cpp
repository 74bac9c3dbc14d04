#include "nilhodge/catalog.hpp"

#include "nilhodge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace nilhodge {

namespace {

struct Rel {
  std::size_t i, j, k;  // 1-based: [e_i, e_j] += c e_k
  Scalar c = 1;
};

LieAlgebra build(const std::string& name, std::vector<std::string> labels,
                 const std::vector<Rel>& rels) {
  LieAlgebra L(name, std::move(labels));
  for (const auto& r : rels) L.add_bracket_term(r.i - 1, r.j - 1, r.k - 1, r.c);
  return L;
}

LieAlgebra build(const std::string& name, std::size_t n, const std::vector<Rel>& rels) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  return build(name, std::move(labels), rels);
}

// Conjugation swapping the given 1-based pairs and negating `negated`;
// everything else is fixed.
Conjugation swap_conjugation(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& swaps,
                             const std::vector<std::size_t>& negated = {}) {
  Matrix S = Matrix::identity(n);
  for (auto [a, b] : swaps) {
    S(a - 1, a - 1) = 0;
    S(b - 1, b - 1) = 0;
    S(a - 1, b - 1) = 1;
    S(b - 1, a - 1) = 1;
  }
  for (auto v : negated) S(v - 1, v - 1) = -1;
  return Conjugation{std::move(S)};
}

std::vector<std::size_t> binomial_row(std::size_t n) {
  std::vector<std::size_t> row{1};
  for (std::size_t k = 1; k <= n; ++k) row.push_back(row.back() * (n - k + 1) / k);
  return row;
}

GradedForm graded_form(const LieAlgebra& real_presentation, const Matrix& basis,
                       std::vector<std::string> labels, std::vector<Weight> weights) {
  // The presentation has real structure constants, so its conjugation is the
  // plain entrywise one.
  LieAlgebra L = real_presentation;
  L.set_conjugation(Conjugation{Matrix::identity(L.dim())});
  LieAlgebra graded = change_basis(L, basis, std::move(labels));
  graded.set_name(real_presentation.name());
  return GradedForm{basis, std::move(graded), Bigrading(std::move(weights))};
}

const Scalar kI = Scalar::imaginary_unit();

CatalogEntry abelian_entry(std::size_t n) {
  CatalogEntry e;
  e.algebra = abelian(n);
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  std::vector<Weight> w;
  for (std::size_t i = 1; i + 1 <= n; i += 2) {
    swaps.emplace_back(i, i + 1);
    w.push_back({-1, 0});
    w.push_back({0, -1});
  }
  if (n % 2) w.push_back({-1, -1});
  e.algebra.set_conjugation(swap_conjugation(n, swaps));
  e.known_bigrading = Bigrading(std::move(w));
  e.provenance = "standard";
  e.expected.betti = binomial_row(n);
  e.expected.step = 1;
  e.expected.layers = std::vector<std::size_t>{n};
  return e;
}

CatalogEntry n3() {
  CatalogEntry e;
  e.algebra = build("n3", 3, {{1, 2, 3}});
  e.algebra.set_conjugation(swap_conjugation(3, {{1, 2}}, {3}));
  e.known_bigrading = Bigrading({{-1, 0}, {0, -1}, {-1, -1}});
  e.known_grading = Grading({-1, -1, -2});
  e.provenance = "standard (Heisenberg, dim 3)";
  e.expected.betti = std::vector<std::size_t>{1, 2, 2, 1};
  e.expected.step = 2;
  e.expected.layers = std::vector<std::size_t>{2, 1};
  return e;
}

CatalogEntry heisenberg(const std::string& name, std::size_t k) {
  const std::size_t n = 2 * k + 1;
  std::vector<Rel> rels;
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  std::vector<Weight> w;
  for (std::size_t p = 0; p < k; ++p) {
    rels.push_back({2 * p + 1, 2 * p + 2, n});
    swaps.emplace_back(2 * p + 1, 2 * p + 2);
    w.push_back({-1, 0});
    w.push_back({0, -1});
  }
  w.push_back({-1, -1});
  CatalogEntry e;
  e.algebra = build(name, n, rels);
  e.algebra.set_conjugation(swap_conjugation(n, swaps, {n}));
  e.known_bigrading = Bigrading(std::move(w));
  e.provenance = "standard symplectic presentation of the Heisenberg algebra";
  e.expected.step = 2;
  e.expected.layers = std::vector<std::size_t>{2 * k, 1};
  return e;
}

CatalogEntry filiform(std::size_t n) {
  std::vector<Rel> rels;
  for (std::size_t k = 3; k <= n; ++k) rels.push_back({1, k - 1, k});
  CatalogEntry e;
  e.algebra = build("filiform_" + std::to_string(n), n, rels);
  e.provenance = "standard filiform chain";
  e.expected.step = n - 1;
  return e;
}

// [X1,Xi] = X_{i-1} for i = 3,5,7 plus the extra relations.
LieAlgebra n7(const std::string& name, std::vector<Rel> extra) {
  std::vector<Rel> rels{{1, 3, 2}, {1, 5, 4}, {1, 7, 6}};
  rels.insert(rels.end(), extra.begin(), extra.end());
  return build(name, 7, rels);
}

// Columns u, v, conj u, conj v, X2, X4, X6 for the 2-step algebras with
// derived algebra <X2, X4, X6>.
Matrix n7_basis(const Vector& u, const Vector& v) {
  std::vector<Vector> cols{u, v, conj(u), conj(v), unit_vector(7, 1), unit_vector(7, 3),
                           unit_vector(7, 5)};
  return Matrix::from_columns(cols, 7);
}

const std::vector<Weight> kN7Weights{{-1, 0}, {-1, 0}, {0, -1}, {0, -1},
                                     {-1, -1}, {-1, -1}, {-1, -1}};
const std::vector<std::string> kN7Labels{"U", "V", "Ubar", "Vbar", "X2", "X4", "X6"};

CatalogEntry n7_142() {
  CatalogEntry e;
  e.algebra = n7("n7_142", {{3, 5, 4}, {5, 7, 2}});
  Vector u(7), v(7);
  u[2] = 1;
  u[4] = kI;
  v[0] = 1;
  v[4] = kI;
  v[6] = -kI;
  e.graded_form = graded_form(e.algebra, n7_basis(u, v), kN7Labels, kN7Weights);
  e.provenance = "transcribed presentation";
  e.expected.b2_b3 = std::pair<std::size_t, std::size_t>{11, 14};
  return e;
}

CatalogEntry n7_143() {
  CatalogEntry e;
  e.algebra = n7("n7_143", {{3, 5, 6}, {5, 7, 2}});
  Vector u(7), v(7);
  u[2] = 1;
  u[6] = kI;
  v[0] = 1;
  v[4] = kI;
  e.graded_form = graded_form(e.algebra, n7_basis(u, v), kN7Labels, kN7Weights);
  e.provenance = "transcribed presentation";
  e.expected.b2_b3 = std::pair<std::size_t, std::size_t>{11, 16};
  return e;
}

CatalogEntry n7_144() {
  CatalogEntry e;
  e.algebra = n7("n7_144", {{5, 7, 2}});
  e.provenance = "transcribed presentation";
  e.expected.b2_b3 = std::pair<std::size_t, std::size_t>{11, 16};
  return e;
}

CatalogEntry n7_145() {
  CatalogEntry e;
  e.algebra = n7("n7_145", {});
  e.provenance = "external classification, dimension 7 (2-step, b1 = 4, centre of dim 4); "
                 "unverified against a printed table";
  e.expected.b2_b3 = std::pair<std::size_t, std::size_t>{12, 18};
  return e;
}

CatalogEntry n8_campana() {
  // Basis X1, X2, Y1, Y2, Z1, Z2, A, B.
  CatalogEntry e;
  e.algebra = build("n8_campana", {"X1", "X2", "Y1", "Y2", "Z1", "Z2", "A", "B"},
                    {{1, 3, 5}, {2, 4, 5}, {2, 3, 6}, {1, 4, 6},
                     {1, 5, 7}, {2, 6, 7}, {3, 5, 8}, {4, 6, 8}});
  std::vector<Vector> cols(8, Vector(8));
  cols[0][0] = 1; cols[0][2] = kI;           // A1 = X1 + iY1
  cols[1][1] = 1; cols[1][3] = kI;           // A2 = X2 + iY2
  cols[2][0] = 1; cols[2][2] = -kI;          // conj A1
  cols[3][1] = 1; cols[3][3] = -kI;          // conj A2
  cols[4][4] = Scalar(-2) * kI;              // B1 = -2i Z1
  cols[5][5] = Scalar(-2) * kI;              // B2 = -2i Z2
  cols[6][6] = Scalar(-2) * kI; cols[6][7] = 2;  // C1 = -2i(A + iB)
  cols[7][6] = Scalar(2) * kI; cols[7][7] = 2;   // conj C1
  e.graded_form = graded_form(e.algebra, Matrix::from_columns(cols, 8),
                              {"A1", "A2", "A1bar", "A2bar", "B1", "B2", "C1", "C1bar"},
                              {{-1, 0}, {-1, 0}, {0, -1}, {0, -1},
                               {-1, -1}, {-1, -1}, {-2, -1}, {-1, -2}});
  e.provenance = "8-dimensional 3-step example with explicit gl(9) realisation";
  e.expected.step = 3;
  e.expected.layers = std::vector<std::size_t>{4, 2, 2};
  return e;
}

CatalogEntry standard_list_entry(const std::string& name, std::size_t n, std::vector<Rel> rels,
                          std::optional<Grading> grading) {
  CatalogEntry e;
  e.algebra = build(name, n, rels);
  e.known_grading = std::move(grading);
  e.provenance = "standard list of 5- and 6-dimensional nilpotent algebras";
  return e;
}

CatalogEntry L6_22_0() {
  auto e = standard_list_entry("L6_22_0", 6, {{2, 4, 5}, {4, 1, 6}, {2, 3, 6}},
                        Grading({-1, -1, -1, -1, -2, -2}));
  // A real structure whose fixed algebra has the same constants up to a real
  // change of basis (the real form of this complex type is unique).
  e.algebra.set_conjugation(swap_conjugation(6, {{1, 3}, {2, 4}}, {5}));
  e.notes.push_back("conjugation X1<->X3, X2<->X4, X5->-X5, X6->X6");
  return e;
}

using Builder = std::function<CatalogEntry()>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = [] {
    std::map<std::string, Builder> t;
    for (std::size_t n = 1; n <= 7; ++n)
      t["abelian_" + std::to_string(n)] = [n] { return abelian_entry(n); };
    t["n3"] = n3;
    t["filiform_4"] = [] { return filiform(4); };
    t["filiform_5"] = [] { return filiform(5); };
    t["L5_4"] = [] {
      auto e = heisenberg("L5_4", 2);
      e.expected.betti = std::vector<std::size_t>{1, 4, 5, 5, 4, 1};
      return e;
    };
    t["h7"] = [] {
      auto e = heisenberg("h7", 3);
      e.notes.push_back("same algebra as n7_154");
      return e;
    };
    t["n7_154"] = [] {
      auto e = heisenberg("n7_154", 3);
      e.notes.push_back("Heisenberg algebra of dimension 7; see also n7_152");
      return e;
    };
    t["n7_152"] = [] {
      auto e = heisenberg("n7_152", 3);
      e.provenance = "external, unverified against a printed table";
      e.notes.push_back(
          "listed for b1 = 6 without constants; b1 = 6 in dimension 7 forces a "
          "one-dimensional derived algebra, so the only indecomposable candidate is the "
          "Heisenberg algebra, identical to n7_154");
      return e;
    };
    t["n7_142"] = n7_142;
    t["n7_143"] = n7_143;
    t["n7_144"] = n7_144;
    t["n7_145"] = n7_145;
    t["n8_campana"] = n8_campana;
    t["L5_9"] = [] {
      return standard_list_entry("L5_9", 5, {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}},
                          Grading({-1, -1, -2, -3, -3}));
    };
    t["L6_9"] = [] {
      return standard_list_entry("L6_9", 6, {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}},
                          Grading({-1, -1, -2, -3, -3, -2}));
    };
    t["L6_21_m1"] = [] {
      return standard_list_entry("L6_21_m1", 6,
                          {{1, 2, 3}, {2, 3, 4}, {1, 3, 5}, {1, 4, 6}, {2, 5, 6}},
                          std::nullopt);
    };
    t["L6_22_0"] = L6_22_0;
    t["L6_24_0"] = [] {
      return standard_list_entry("L6_24_0", 6, {{1, 3, 4}, {3, 4, 5}, {1, 4, 6}, {3, 2, 6}},
                          Grading({-1, -2, -1, -2, -3, -3}));
    };
    t["L6_24_1"] = [] {
      return standard_list_entry("L6_24_1", 6, {{1, 2, 3}, {2, 3, 5}, {2, 4, 5}, {1, 3, 6}},
                          Grading({-1, -1, -2, -2, -3, -3}));
    };
    return t;
  }();
  return table;
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

// Splits on '+' outside parentheses.
std::vector<std::string> split_sum(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : name) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

Rational parse_rational(const std::string& text, const std::string& name) {
  try {
    const Scalar s = Scalar::parse(trim(text));
    if (!s.is_real()) throw UnknownNameError("family parameters must be rational: " + name);
    return s.re();
  } catch (const ScalarParseError&) {
    throw UnknownNameError("bad family parameter '" + trim(text) + "' in " + name);
  }
}

CatalogEntry single(const std::string& name) {
  const auto& t = builders();
  if (const auto it = t.find(name); it != t.end()) return it->second();
  if (name.rfind("abelian_", 0) == 0) {
    const std::string digits = name.substr(8);
    if (!digits.empty() && digits.size() <= 2 &&
        std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const auto n = static_cast<std::size_t>(std::stoul(digits));
      if (n >= 1 && n <= 31) return abelian_entry(n);
    }
  }
  const std::string prefix = "family_abc(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::vector<std::string> args;
    std::string cur;
    for (char c : inner) {
      if (c == ',') {
        args.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    args.push_back(cur);
    if (args.size() == 3)
      return family_abc(parse_rational(args[0], name), parse_rational(args[1], name),
                        parse_rational(args[2], name));
  }
  throw UnknownNameError("unknown catalog name '" + name + "'");
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

Bigrading concat(const Bigrading& a, const Bigrading& b) {
  auto w = a.weights();
  w.insert(w.end(), b.weights().begin(), b.weights().end());
  return Bigrading(std::move(w));
}

} // namespace

std::optional<std::pair<LieAlgebra, Bigrading>> CatalogEntry::bigraded() const {
  if (graded_form) return std::make_pair(graded_form->algebra, graded_form->bigrading);
  if (known_bigrading) return std::make_pair(algebra, *known_bigrading);
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : builders()) out.push_back(name);
  return out;
}

CatalogEntry family_abc(const Rational& a, const Rational& b, const Rational& c) {
  const std::string name = "family_abc(" + rational_to_string(a) + "," +
                           rational_to_string(b) + "," + rational_to_string(c) + ")";
  CatalogEntry e;
  // e1 = X1, e2 = X1bar, e3 = X2bar, e4 = X2, e5..e7 = Z1..Z3
  e.algebra = build(name, {"X1", "X1bar", "X2bar", "X2", "Z1", "Z2", "Z3"},
                    {{1, 2, 5}, {1, 3, 6}, {4, 2, 7}, {4, 3, 5, Scalar(a)},
                     {4, 3, 6, Scalar(b)}, {4, 3, 7, Scalar(c)}});
  // conj Z1 = -Z1, conj Z2 = -Z3; only a real structure when it preserves the
  // last bracket.
  const Conjugation S = swap_conjugation(7, {{1, 2}, {3, 4}}, {5});
  Conjugation T = S;
  T.matrix(5, 5) = 0;
  T.matrix(6, 6) = 0;
  T.matrix(5, 6) = -1;
  T.matrix(6, 5) = -1;
  if (check_conjugation(e.algebra, T).ok()) e.algebra.set_conjugation(T);
  e.known_bigrading =
      Bigrading({{-1, 0}, {0, -1}, {0, -1}, {-1, 0}, {-1, -1}, {-1, -1}, {-1, -1}});
  e.provenance = "seven-dimensional family with b1 = 4 and a three-dimensional centre";
  const bool first_case = a != 0 || b != 0;
  e.expected.b2_b3 = first_case ? std::pair<std::size_t, std::size_t>{11, 14}
                                : std::pair<std::size_t, std::size_t>{11, 16};
  return e;
}

CatalogEntry direct_sum(const CatalogEntry& a, const CatalogEntry& b) {
  CatalogEntry e;
  e.algebra = direct_sum(a.algebra, b.algebra);
  if (a.known_bigrading && b.known_bigrading)
    e.known_bigrading = concat(*a.known_bigrading, *b.known_bigrading);
  if (a.known_grading && b.known_grading) {
    auto w = a.known_grading->weights();
    w.insert(w.end(), b.known_grading->weights().begin(), b.known_grading->weights().end());
    e.known_grading = Grading(std::move(w));
  }
  if ((a.graded_form || b.graded_form) && a.bigraded() && b.bigraded()) {
    auto side = [](const CatalogEntry& x) {
      if (x.graded_form) return *x.graded_form;
      return GradedForm{Matrix::identity(x.algebra.dim()), x.algebra, *x.known_bigrading};
    };
    const GradedForm ga = side(a);
    const GradedForm gb = side(b);
    LieAlgebra alg = direct_sum(ga.algebra, gb.algebra, e.algebra.name());
    e.graded_form = GradedForm{block_diag(ga.basis_change, gb.basis_change), std::move(alg),
                               concat(ga.bigrading, gb.bigrading)};
  }
  e.provenance = "direct sum";
  if (a.expected.betti && b.expected.betti) {
    // Künneth
    const auto& x = *a.expected.betti;
    const auto& y = *b.expected.betti;
    std::vector<std::size_t> z(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
    e.expected.betti = std::move(z);
  }
  return e;
}

CatalogEntry trivial_extension(const CatalogEntry& entry, std::size_t m) {
  CatalogEntry ext;
  ext.algebra = abelian(m);
  ext.algebra.set_conjugation(Conjugation{Matrix::identity(m)});
  ext.known_bigrading = Bigrading(std::vector<Weight>(m, Weight{-1, -1}));
  ext.known_grading = Grading(std::vector<int>(m, -2));
  ext.expected.betti = binomial_row(m);
  CatalogEntry e = direct_sum(entry, ext);
  e.algebra.set_name(entry.name() + "+C^" + std::to_string(m));
  if (e.graded_form) e.graded_form->algebra.set_name(e.algebra.name());
  e.provenance = "trivial extension of " + entry.name();
  return e;
}

AlgebraFile to_algebra_file(const CatalogEntry& entry) {
  if (entry.graded_form)
    return AlgebraFile{entry.graded_form->algebra, entry.graded_form->bigrading, std::nullopt};
  return AlgebraFile{entry.algebra, entry.known_bigrading, entry.known_grading};
}

CatalogEntry catalog_get(const std::string& raw) {
  const std::string name = trim(raw);
  const auto parts = split_sum(name);
  CatalogEntry e = single(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) e = direct_sum(e, single(parts[i]));
  if (parts.size() > 1) {
    e.algebra.set_name(name);
    if (e.graded_form) e.graded_form->algebra.set_name(name);
  }
  return e;
}

} // namespace nilhodge
