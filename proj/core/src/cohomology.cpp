#include "nilhodge/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace nilhodge {

namespace {

struct Term {
  std::size_t a;
  std::size_t b;
  Scalar c;
};

// For each m, the nonzero C_{ab}^m with a < b.
std::vector<std::vector<Term>> dual_brackets(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Term>> out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector& v = L.upper_bracket(a, b);
      for (std::size_t m = 0; m < n; ++m)
        if (!v[m].is_zero()) out[m].push_back({a, b, v[m]});
    }
  return out;
}

void lex_subsets(std::size_t n, std::size_t k, std::size_t start, Mask acc,
                 std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i)
    lex_subsets(n, k - 1, i + 1, acc | (Mask{1} << i), out);
}

Matrix differential_impl(const std::vector<std::vector<Term>>& dual,
                         const CochainBasis& from, const CochainBasis& to) {
  Matrix d(to.size(), from.size());
  for (std::size_t col = 0; col < from.size(); ++col) {
    const Mask mask = from.mask(col);
    const auto idx = from.tuple(col);
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const std::size_t m = idx[s];
      const Mask rest = mask & ~(Mask{1} << m);
      for (const auto& t : dual[m]) {
        const Mask ab = (Mask{1} << t.a) | (Mask{1} << t.b);
        if (rest & ab) continue;
        // Inversions from moving a^b into sorted position among the others.
        std::size_t inv = s;
        for (std::size_t u = 0; u < idx.size(); ++u) {
          if (u == s) continue;
          const std::size_t x = idx[u];
          if (u < s) inv += (x > t.a) + (x > t.b);
          else inv += (x < t.a) + (x < t.b);
        }
        const std::size_t row = to.position(rest | ab);
        if (inv % 2 == 0)
          d(row, col) -= t.c;
        else
          d(row, col) += t.c;
      }
    }
  }
  return d;
}

} // namespace

CochainBasis::CochainBasis(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  if (n > 31) throw std::invalid_argument("CochainBasis: dimension above 31");
  if (degree <= n) lex_subsets(n, degree, 0, 0, masks_);
  for (std::size_t i = 0; i < masks_.size(); ++i) index_.emplace(masks_[i], i);
}

std::size_t CochainBasis::position(Mask m) const {
  const auto it = index_.find(m);
  return it == index_.end() ? masks_.size() : it->second;
}

std::vector<std::size_t> CochainBasis::tuple(std::size_t pos) const {
  std::vector<std::size_t> out;
  Mask m = masks_.at(pos);
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Cochain Cochain::from_vector(const CochainBasis& basis, const Vector& v) {
  if (v.size() != basis.size()) throw std::invalid_argument("Cochain: length");
  Cochain c;
  c.degree = basis.degree();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) c.coefficients.emplace(basis.tuple(i), v[i]);
  return c;
}

Vector Cochain::to_vector(const CochainBasis& basis) const {
  Vector v(basis.size());
  for (const auto& [tup, c] : coefficients) {
    Mask m = 0;
    for (auto i : tup) m |= Mask{1} << i;
    const std::size_t pos = basis.position(m);
    if (pos == basis.size() || tup.size() != basis.degree())
      throw std::invalid_argument("Cochain: tuple not in basis");
    v[pos] = c;
  }
  return v;
}

std::string dual_label(const std::string& label) {
  std::string out = label;
  if (!out.empty())
    out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

std::string Cochain::to_string(const std::vector<std::string>& labels) const {
  if (coefficients.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [tup, c] : coefficients) {
    std::string mono;
    for (std::size_t t = 0; t < tup.size(); ++t) {
      if (t) mono += '^';
      mono += dual_label(labels.at(tup[t]));
    }
    if (tup.empty()) mono = "1";
    Scalar coef = c;
    if (!first) {
      if (coef.is_real() && coef.re() < 0) {
        out += " - ";
        coef = -coef;
      } else {
        out += " + ";
      }
    }
    if (coef.is_one()) {
      out += mono;
    } else if (coef == Scalar(-1)) {
      out += "-" + mono;
    } else if (coef.is_real()) {
      out += coef.to_string() + " " + mono;
    } else {
      out += "(" + coef.to_string() + ") " + mono;
    }
    first = false;
  }
  return out;
}

Matrix differential(const LieAlgebra& L, std::size_t k) {
  const std::size_t n = L.dim();
  if (k > n) throw std::out_of_range("differential: degree above dim");
  return differential_impl(dual_brackets(L), CochainBasis(n, k), CochainBasis(n, k + 1));
}

ChevalleyEilenberg::ChevalleyEilenberg(const LieAlgebra& L) : n_(L.dim()) {
  const auto dual = dual_brackets(L);
  for (std::size_t k = 0; k <= n_ + 1; ++k) bases_.emplace_back(n_, k);
  for (std::size_t k = 0; k <= n_; ++k)
    d_.push_back(differential_impl(dual, bases_[k], bases_[k + 1]));
  rank_cache_.assign(n_ + 1, -1);
}

std::size_t ChevalleyEilenberg::rank_d(std::size_t k) const {
  if (k > n_) return 0;
  if (rank_cache_[k] < 0) rank_cache_[k] = static_cast<long>(rank(d_[k]));
  return static_cast<std::size_t>(rank_cache_[k]);
}

std::size_t ChevalleyEilenberg::betti(std::size_t k) const {
  if (k > n_) return 0;
  const std::size_t ker = bases_[k].size() - rank_d(k);
  return ker - (k ? rank_d(k - 1) : 0);
}

std::vector<std::size_t> ChevalleyEilenberg::betti_numbers() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n_; ++k) out.push_back(betti(k));
  return out;
}

std::vector<Vector> complement_in(const std::vector<Vector>& kernel,
                                  const Matrix& image_columns, std::size_t limit) {
  std::vector<Vector> out;
  if (kernel.empty()) return out;
  SpanBuilder span(kernel.front().size());
  for (std::size_t c = 0; c < image_columns.cols(); ++c) span.add(image_columns.column(c));
  for (const auto& v : kernel) {
    if (out.size() >= limit) break;
    if (span.add(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vector> ChevalleyEilenberg::representatives(std::size_t k) const {
  if (k > n_) return {};
  const auto ker = kernel_basis(d_[k]);
  const Matrix image = k ? d_[k - 1] : Matrix(bases_[0].size(), 0);
  return complement_in(ker, image, ker.size());
}

std::size_t betti(const LieAlgebra& L, std::size_t k) {
  if (k > L.dim()) return 0;
  const std::size_t ker = CochainBasis(L.dim(), k).size() - rank(differential(L, k));
  return ker - (k ? rank(differential(L, k - 1)) : 0);
}

std::vector<std::size_t> betti_numbers(const LieAlgebra& L) {
  return ChevalleyEilenberg(L).betti_numbers();
}

std::vector<Cochain> cohomology_representatives(const LieAlgebra& L, std::size_t k) {
  const ChevalleyEilenberg ce(L);
  std::vector<Cochain> out;
  for (const auto& v : ce.representatives(k)) out.push_back(Cochain::from_vector(ce.basis(k), v));
  return out;
}

CohomologyReport cohomology_report(const LieAlgebra& L, std::size_t max_degree,
                                   bool with_representatives) {
  const ChevalleyEilenberg ce(L);
  CohomologyReport report;
  const std::size_t top = std::min(max_degree, L.dim());
  for (std::size_t k = 0; k <= top; ++k) {
    CohomologyDegree deg{k, ce.betti(k), {}};
    if (with_representatives)
      for (const auto& v : ce.representatives(k))
        deg.representatives.push_back(Cochain::from_vector(ce.basis(k), v));
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

} // namespace nilhodge
