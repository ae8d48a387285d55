#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mf/composition.hpp"
#include "mf/errors.hpp"

namespace mf {

/// Strictly increasing r-tuple from [n].
struct RSubset {
  std::vector<int> elems;

  int r() const { return static_cast<int>(elems.size()); }
  bool operator==(const RSubset& o) const { return elems == o.elems; }
  bool operator<(const RSubset& o) const { return elems < o.elems; }

  std::string to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < elems.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(elems[i]);
    }
    return out + "}";
  }
};

inline void validate_subset(const RSubset& I, int n) {
  if (I.elems.empty()) throw std::invalid_argument("empty subset");
  for (size_t k = 0; k < I.elems.size(); ++k) {
    if (I.elems[k] < 1 || I.elems[k] > n) throw std::invalid_argument("subset element outside [n]");
    if (k > 0 && I.elems[k - 1] >= I.elems[k]) throw std::invalid_argument("subset not strictly increasing");
  }
}

/// All r-subsets of [n] in lexicographic order.
inline std::vector<RSubset> all_r_subsets(int r, int n) {
  std::vector<RSubset> out;
  std::vector<int> cur(static_cast<size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(RSubset{cur});
    int k = r - 1;
    while (k >= 0 && cur[static_cast<size_t>(k)] == n - (r - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<size_t>(k)];
    for (int t = k + 1; t < r; ++t) cur[static_cast<size_t>(t)] = cur[static_cast<size_t>(t - 1)] + 1;
  }
  return out;
}

enum class PermTag { id, swap_first_two };

/// The block diagonal matching field: swap exactly when the smallest block
/// meeting I contains exactly one of its elements.
inline PermTag lambda_eval(const Composition& a, const RSubset& I) {
  validate_subset(I, a.n());
  if (I.r() < 2) throw std::invalid_argument("lambda_eval needs r >= 2");
  const int q = a.block_of(I.elems.front());
  int hits = 0;
  for (int e : I.elems)
    if (a.block_of(e) == q) ++hits;
  return hits == 1 ? PermTag::swap_first_two : PermTag::id;
}

/// A Plucker variable in column form: entries 3..r strictly increasing above
/// both of the first two; the first two are out of order exactly when the
/// matching field swaps.
struct BracketVariable {
  std::vector<int> column;
  bool swapped = false;

  RSubset underlying() const {
    std::vector<int> e = column;
    std::sort(e.begin(), e.end());
    return RSubset{std::move(e)};
  }

  bool operator==(const BracketVariable& o) const { return column == o.column; }

  std::string to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < column.size(); ++i) {
      if (i) out += ";";
      out += std::to_string(column[i]);
    }
    return out + "]";
  }
};

inline BracketVariable bracket_of(const Composition& a, const RSubset& I) {
  BracketVariable b;
  b.swapped = lambda_eval(a, I) == PermTag::swap_first_two;
  b.column = I.elems;
  if (b.swapped) std::swap(b.column[0], b.column[1]);
  return b;
}

/// Exponent vector over the r x n grid of variables x_{ij}.
struct GridMonomial {
  int rows = 0, cols = 0;
  std::vector<uint8_t> exp;  // exp[(i-1)*cols + (j-1)]

  static GridMonomial one(int rows, int cols) {
    GridMonomial m;
    m.rows = rows;
    m.cols = cols;
    m.exp.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
    return m;
  }

  static GridMonomial from_factors(int rows, int cols, const std::vector<std::pair<int, int>>& factors) {
    GridMonomial m = one(rows, cols);
    for (auto [i, j] : factors) m.bump(i, j);
    return m;
  }

  uint8_t at(int i, int j) const { return exp[static_cast<size_t>((i - 1) * cols + (j - 1))]; }
  void bump(int i, int j) { ++exp[static_cast<size_t>((i - 1) * cols + (j - 1))]; }

  int degree() const {
    int d = 0;
    for (uint8_t e : exp) d += e;
    return d;
  }

  GridMonomial operator*(const GridMonomial& o) const {
    GridMonomial m = *this;
    for (size_t k = 0; k < exp.size(); ++k) m.exp[k] = static_cast<uint8_t>(m.exp[k] + o.exp[k]);
    return m;
  }

  bool operator==(const GridMonomial& o) const { return rows == o.rows && cols == o.cols && exp == o.exp; }
  bool operator<(const GridMonomial& o) const { return exp < o.exp; }

  std::string to_string() const {
    std::string out;
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= cols; ++j)
        for (int e = 0; e < at(i, j); ++e) {
          if (!out.empty()) out += "*";
          out += "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        }
    return out.empty() ? "1" : out;
  }
};

/// Image of P_I under the monomial map: one variable per row, columns I,
/// with the first two rows swapped when the matching field says so.
inline GridMonomial pi_lambda(const Composition& a, const RSubset& I) {
  const int r = I.r();
  const bool swap = lambda_eval(a, I) == PermTag::swap_first_two;
  GridMonomial m = GridMonomial::one(r, a.n());
  for (int k = 1; k <= r; ++k) {
    int row = k;
    if (swap && k <= 2) row = 3 - k;
    m.bump(row, I.elems[static_cast<size_t>(k - 1)]);
  }
  return m;
}

/// Weight of a grid monomial as a tuple over powers of the symbolic large
/// parameter: (c_{r-2}, ..., c_1, c_w), compared lexicographically from the
/// highest power down.  Row 1 contributes nothing, row 2 contributes the
/// weight vector entry, row t >= 3 contributes (n+1-j) on the (t-2)-nd power.
struct SymbolicWeight {
  std::vector<long long> c;

  bool operator==(const SymbolicWeight& o) const { return c == o.c; }
  bool operator<(const SymbolicWeight& o) const { return c < o.c; }

  SymbolicWeight& operator+=(const SymbolicWeight& o) {
    for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
};

inline SymbolicWeight monomial_weight(const GridMonomial& m, const Composition& a) {
  const int r = m.rows, n = a.n();
  const WeightData wd = weight_vector(a);
  SymbolicWeight w;
  w.c.assign(static_cast<size_t>(r - 1), 0);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= n; ++j) {
      const int e = m.at(i, j);
      if (e == 0 || i == 1) continue;
      if (i == 2)
        w.c[static_cast<size_t>(r - 2)] += static_cast<long long>(e) * wd.at(j);
      else
        w.c[static_cast<size_t>(r - i)] += static_cast<long long>(e) * (n + 1 - j);
    }
  return w;
}

/// The unique lowest-weight term of det(x_I), by enumeration of all r! terms.
/// Throws NonUniqueMinimum if the minimum is tied (never for block diagonal
/// weights; coherence tests assert equality with pi_lambda).
inline GridMonomial initial_form_det(const Composition& a, int r, const RSubset& I) {
  validate_subset(I, a.n());
  if (I.r() != r) throw std::invalid_argument("|I| must equal r");
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 1);
  bool have = false;
  GridMonomial best;
  SymbolicWeight best_w;
  bool tied = false;
  do {
    GridMonomial term = GridMonomial::one(r, a.n());
    for (int k = 0; k < r; ++k) term.bump(perm[static_cast<size_t>(k)], I.elems[static_cast<size_t>(k)]);
    SymbolicWeight tw = monomial_weight(term, a);
    if (!have || tw < best_w) {
      best = term;
      best_w = tw;
      have = true;
      tied = false;
    } else if (tw == best_w) {
      tied = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (tied)
    throw NonUniqueMinimum("det(x_" + I.to_string() + ") has a tied minimum weight under a=" + a.to_string());
  return best;
}

}  // namespace mf
