#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

namespace {

// e^S(e_{args}) for sorted S: sign of the permutation sorting args into S,
// zero unless args is a rearrangement of S.
int evaluate_monomial(const std::vector<std::size_t>& S, std::vector<std::size_t> args) {
  if (args.size() != S.size()) return 0;
  int sign = 1;
  // bubble sort, counting swaps
  for (std::size_t a = 0; a < args.size(); ++a)
    for (std::size_t b = 0; b + 1 < args.size() - a; ++b)
      if (args[b] > args[b + 1]) {
        std::swap(args[b], args[b + 1]);
        sign = -sign;
      } else if (args[b] == args[b + 1]) {
        return 0;
      }
  return args == S ? sign : 0;
}

} // namespace

Matrix differential(const LieAlgebra& L, std::size_t k) {
  const std::size_t n = L.dim();
  const auto src = combinations(n, k);
  const auto dst = combinations(n, k + 1);
  Matrix d(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto& S = src[col];
    for (std::size_t row = 0; row < dst.size(); ++row) {
      const auto& T = dst[row];
      Scalar value;
      for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = i + 1; j < T.size(); ++j) {
          std::vector<std::size_t> rest;
          for (std::size_t t = 0; t < T.size(); ++t)
            if (t != i && t != j) rest.push_back(T[t]);
          const Scalar sign((i + j) % 2 == 0 ? 1 : -1);
          for (std::size_t m = 0; m < n; ++m) {
            const Scalar c = L.structure_constant(T[i], T[j], m);
            if (c.is_zero()) continue;
            std::vector<std::size_t> args{m};
            args.insert(args.end(), rest.begin(), rest.end());
            const int e = evaluate_monomial(S, args);
            if (e != 0) value = value + sign * c * Scalar(e);
          }
        }
      d(row, col) = value;
    }
  }
  return d;
}

Scalar determinant(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t x = 0; x < n; ++x)
      if (x != c) cols.push_back(x);
    const Scalar term = m(0, c) * determinant(m.select(rows, cols));
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

std::size_t minor_rank(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k)
    for (const auto& rows : combinations(m.rows(), k))
      for (const auto& cols : combinations(m.cols(), k))
        if (!determinant(m.select(rows, cols)).is_zero()) return k;
  return 0;
}

Vector jacobi_sum(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = L.dim();
  Vector out(n);
  // [a,[b,c]] = Σ_l C_bc^l [a, e_l] = Σ_l Σ_m C_bc^l C_al^m e_m
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (std::size_t l = 0; l < n; ++l) {
      const Scalar x = L.structure_constant(b, c, l);
      if (x.is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m) out[m] = out[m] + x * L.structure_constant(a, l, m);
    }
  };
  nested(i, j, k);
  nested(j, k, i);
  nested(k, i, j);
  return out;
}

bool jacobi_holds(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!nilhodge::is_zero(jacobi_sum(L, i, j, k))) return false;
  return true;
}

std::vector<std::size_t> betti_numbers(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::size_t> rk(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) rk[k] = nilhodge::rank(oracle::differential(L, k));
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t dim_k = combinations(n, k).size();
    const std::size_t incoming = k == 0 ? 0 : rk[k - 1];
    b.push_back(dim_k - rk[k] - incoming);
  }
  return b;
}

std::map<std::pair<int, int>, std::size_t> bigraded_table(
    const LieAlgebra& L, const std::vector<std::pair<int, int>>& weights, std::size_t j) {
  const std::size_t n = L.dim();
  auto weight_of = [&](const std::vector<std::size_t>& tuple) {
    std::pair<int, int> w{0, 0};
    for (std::size_t t : tuple) {
      w.first -= weights[t].first;
      w.second -= weights[t].second;
    }
    return w;
  };
  const auto cj = combinations(n, j);
  const Matrix out = j < n ? oracle::differential(L, j) : Matrix(0, cj.size());
  const Matrix in = j > 0 ? oracle::differential(L, j - 1) : Matrix(cj.size(), 0);
  const auto prev = j > 0 ? combinations(n, j - 1) : std::vector<std::vector<std::size_t>>{};
  const auto next = combinations(n, j + 1);

  std::map<std::pair<int, int>, std::size_t> table;
  std::map<std::pair<int, int>, std::vector<std::size_t>> here;
  for (std::size_t c = 0; c < cj.size(); ++c) here[weight_of(cj[c])].push_back(c);
  for (const auto& [w, cols] : here) {
    std::vector<std::size_t> out_rows, in_cols;
    for (std::size_t r = 0; r < next.size(); ++r)
      if (weight_of(next[r]) == w) out_rows.push_back(r);
    for (std::size_t c = 0; c < prev.size(); ++c)
      if (weight_of(prev[c]) == w) in_cols.push_back(c);
    const std::size_t r_out = out_rows.empty() ? 0 : nilhodge::rank(out.select(out_rows, cols));
    const std::size_t r_in = in_cols.empty() ? 0 : nilhodge::rank(in.select(cols, in_cols));
    const std::size_t d = cols.size() - r_out - r_in;
    if (d > 0) table[w] = d;
  }
  return table;
}

std::vector<std::size_t> lower_central_dims(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(nilhodge::unit_vector(n, i));
  std::vector<std::size_t> dims{nilhodge::rank(Matrix::from_rows(current, n))};
  while (dims.back() > 0) {
    std::vector<Vector> next;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : current) next.push_back(L.bracket(nilhodge::unit_vector(n, i), v));
    const std::size_t d = next.empty() ? 0 : nilhodge::rank(Matrix::from_rows(next, n));
    if (d == dims.back()) break;  // stalled: not nilpotent
    dims.push_back(d);
    current = std::move(next);
  }
  return dims;
}

Scalar random_scalar(std::mt19937& rng, int range, bool gaussian) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  nilhodge::Rational re(num(rng), den(rng));
  nilhodge::Rational im(0);
  if (gaussian) im = nilhodge::Rational(num(rng), den(rng));
  return Scalar(re, im);
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range,
                     bool gaussian, double zero_fraction) {
  std::bernoulli_distribution zero(zero_fraction);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!zero(rng)) m(r, c) = random_scalar(rng, range, gaussian);
  return m;
}

Matrix random_unimodular(std::mt19937& rng, std::size_t n, std::size_t moves) {
  Matrix p = Matrix::identity(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t s = 0; s < moves; ++s) {
    const std::size_t a = idx(rng);
    std::size_t b = idx(rng);
    if (a == b) b = (a + 1) % n;
    const int c = coef(rng);
    // column a += c * column b
    for (std::size_t r = 0; r < n; ++r) p(r, a) = p(r, a) + Scalar(c) * p(r, b);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return p.select(all, perm);
}

} // namespace oracle
