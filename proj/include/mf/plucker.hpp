#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mf/bracket_ring.hpp"
#include "mf/composition.hpp"
#include "mf/errors.hpp"
#include "mf/matching_field.hpp"

namespace mf {

using Rational = boost::multiprecision::cpp_rational;
using SparseVec = std::map<int, Rational>;  // coordinate index -> coefficient

/// Polynomial in the grid variables with exact rational coefficients.
struct XPolynomial {
  std::map<GridMonomial, Rational> terms;

  void add(const GridMonomial& m, const Rational& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (c != 0) terms.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
};

/// Signed expansion of the r x r minor on columns I: r! terms, coefficients
/// +-1.
inline XPolynomial det_polynomial(int r, const RSubset& I, int n) {
  if (I.r() != r) throw std::invalid_argument("|I| must equal r");
  XPolynomial out;
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    int inversions = 0;
    for (int x = 0; x < r; ++x)
      for (int y = x + 1; y < r; ++y)
        if (perm[static_cast<size_t>(x)] > perm[static_cast<size_t>(y)]) ++inversions;
    GridMonomial m = GridMonomial::one(r, n);
    for (int k = 0; k < r; ++k) m.bump(perm[static_cast<size_t>(k)], I.elems[static_cast<size_t>(k)]);
    out.add(m, (inversions % 2 == 0) ? Rational(1) : Rational(-1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline XPolynomial xpoly_mul(const XPolynomial& a, const XPolynomial& b) {
  XPolynomial out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) out.add(ma * mb, ca * cb);
  return out;
}

/// The degree-2 monomial basis of the bracket polynomial ring: subsets in
/// lexicographic order, unordered pairs (i <= j) of subset indices.
struct DegreeTwoBasis {
  int r = 0, n = 0;
  std::vector<RSubset> subsets;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_index;

  DegreeTwoBasis(int r_, int n_) : r(r_), n(n_), subsets(all_r_subsets(r_, n_)) {
    const int N = static_cast<int>(subsets.size());
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) {
        pair_index[{i, j}] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
  }

  int subset_index(const RSubset& I) const {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), I);
    if (it == subsets.end() || !(*it == I)) throw std::invalid_argument("not an r-subset of [n]");
    return static_cast<int>(it - subsets.begin());
  }

  int index_of(int i, int j) const { return pair_index.at({std::min(i, j), std::max(i, j)}); }
};

/// Row-reduced rational span with sparse rows; pivots taken at the smallest
/// coordinate, or at the smallest position of a supplied coordinate order.
class SpanQ {
 public:
  SpanQ() = default;
  explicit SpanQ(std::vector<int> coord_position) : position_(std::move(coord_position)) {}

  /// Reduce v against the span; returns the residue (empty if contained).
  SparseVec residue(SparseVec v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Rational c = it->second;
      for (const auto& [k, coeff] : row) {
        auto jt = v.find(k);
        if (jt == v.end())
          v.emplace(k, -c * coeff);
        else {
          jt->second -= c * coeff;
          if (jt->second == 0) v.erase(jt);
        }
      }
    }
    return v;
  }

  bool contains(const SparseVec& v) const { return residue(v).empty(); }

  /// Insert v (reduced first); returns true if the rank grew.
  bool insert(SparseVec v) {
    v = residue(std::move(v));
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    if (!position_.empty()) {
      for (const auto& [k, c] : v)
        if (position_[static_cast<size_t>(k)] < position_[static_cast<size_t>(pivot)]) pivot = k;
    }
    const Rational inv = v.at(pivot);
    for (auto& [k, c] : v) c /= inv;
    // back-substitute into existing rows
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational c = it->second;
      for (const auto& [k, coeff] : v) {
        auto jt = row.find(k);
        if (jt == row.end())
          row.emplace(k, -c * coeff);
        else {
          jt->second -= c * coeff;
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  std::vector<SparseVec> basis() const {
    std::vector<SparseVec> out;
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  std::map<int, SparseVec> rows_;     // pivot coordinate -> normalized row
  std::vector<int> position_;         // optional processing order of coordinates
};

/// Exact basis of the degree-2 part of the Plucker ideal: the kernel of the
/// linear map sending each quadratic bracket monomial to the product of the
/// two signed minors.  Coordinates follow DegreeTwoBasis.
struct PluckerKernel {
  DegreeTwoBasis basis;
  std::vector<SparseVec> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
};

inline PluckerKernel plucker_kernel_deg2(int r, int n, bool unsafe_bounds = false) {
  if (!unsafe_bounds && !((r == 2 && n <= 6) || (r == 3 && n <= 6)))
    throw InstanceTooLarge("exact nullspace supported for (2, n<=6) and (3, n<=6) by default");
  check_desk_scale(r, n);
  DegreeTwoBasis basis(r, n);

  std::vector<XPolynomial> minors;
  minors.reserve(basis.subsets.size());
  for (const RSubset& I : basis.subsets) minors.push_back(det_polynomial(r, I, n));

  std::map<GridMonomial, int> column_of;
  std::vector<SparseVec> rows(basis.pairs.size());      // x-monomial part
  std::vector<SparseVec> tracker(basis.pairs.size());   // combination of pair monomials
  for (size_t p = 0; p < basis.pairs.size(); ++p) {
    const XPolynomial prod =
        xpoly_mul(minors[static_cast<size_t>(basis.pairs[p].first)], minors[static_cast<size_t>(basis.pairs[p].second)]);
    for (const auto& [m, c] : prod.terms) {
      auto [it, ignored] = column_of.try_emplace(m, static_cast<int>(column_of.size()));
      rows[p][it->second] = c;
    }
    tracker[p][static_cast<int>(p)] = 1;
  }

  // Gaussian elimination on the x-part; rows that vanish give kernel combos.
  std::vector<bool> used(rows.size(), false);
  for (int col = 0; col < static_cast<int>(column_of.size()); ++col) {
    int pivot = -1;
    for (size_t p = 0; p < rows.size(); ++p)
      if (!used[p] && rows[p].count(col)) {
        if (pivot < 0 || rows[p].size() < rows[static_cast<size_t>(pivot)].size()) pivot = static_cast<int>(p);
      }
    if (pivot < 0) continue;
    used[static_cast<size_t>(pivot)] = true;
    const Rational pv = rows[static_cast<size_t>(pivot)].at(col);
    for (size_t p = 0; p < rows.size(); ++p) {
      if (used[p] && static_cast<int>(p) != pivot) continue;
      if (static_cast<int>(p) == pivot) continue;
      auto it = rows[p].find(col);
      if (it == rows[p].end()) continue;
      const Rational factor = it->second / pv;
      for (const auto& [k, c] : rows[static_cast<size_t>(pivot)]) {
        auto jt = rows[p].find(k);
        if (jt == rows[p].end())
          rows[p].emplace(k, -factor * c);
        else {
          jt->second -= factor * c;
          if (jt->second == 0) rows[p].erase(jt);
        }
      }
      for (const auto& [k, c] : tracker[static_cast<size_t>(pivot)]) {
        auto jt = tracker[p].find(k);
        if (jt == tracker[p].end())
          tracker[p].emplace(k, -factor * c);
        else {
          jt->second -= factor * c;
          if (jt->second == 0) tracker[p].erase(jt);
        }
      }
    }
  }

  PluckerKernel kernel{std::move(basis), {}};
  for (size_t p = 0; p < rows.size(); ++p)
    if (!used[p] && rows[p].empty() && !tracker[p].empty()) kernel.vectors.push_back(std::move(tracker[p]));
  return kernel;
}

/// Weight of the bracket variable of I: the symbolic weight of its image
/// monomial.
inline SymbolicWeight bracket_weight(const Composition& a, const RSubset& I) {
  return monomial_weight(pi_lambda(a, I), a);
}

/// Basis of the degree-2 initial space of the Plucker ideal under the weight
/// induced by the composition: row-reduce the kernel with coordinates taken
/// in increasing weight, then keep each row's lowest-weight terms.  Initial
/// forms need not be monomials or binomials.
inline std::vector<SparseVec> initial_space_deg2(const PluckerKernel& kernel, const Composition& a) {
  const DegreeTwoBasis& basis = kernel.basis;
  std::vector<SymbolicWeight> pair_weight(basis.pairs.size());
  for (size_t p = 0; p < basis.pairs.size(); ++p) {
    SymbolicWeight w = bracket_weight(a, basis.subsets[static_cast<size_t>(basis.pairs[p].first)]);
    w += bracket_weight(a, basis.subsets[static_cast<size_t>(basis.pairs[p].second)]);
    pair_weight[p] = std::move(w);
  }

  // processing order: weight ascending, ties broken by pair index
  std::vector<int> order(basis.pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return pair_weight[static_cast<size_t>(x)] < pair_weight[static_cast<size_t>(y)];
  });
  std::vector<int> position(basis.pairs.size());
  for (size_t k = 0; k < order.size(); ++k) position[static_cast<size_t>(order[k])] = static_cast<int>(k);

  SpanQ span(position);
  for (const SparseVec& v : kernel.vectors) span.insert(v);

  std::vector<SparseVec> out;
  for (const SparseVec& row : span.basis()) {
    const SymbolicWeight* min_w = nullptr;
    for (const auto& [k, c] : row)
      if (!min_w || pair_weight[static_cast<size_t>(k)] < *min_w) min_w = &pair_weight[static_cast<size_t>(k)];
    SparseVec init;
    for (const auto& [k, c] : row)
      if (pair_weight[static_cast<size_t>(k)] == *min_w) init.emplace(k, c);
    out.push_back(std::move(init));
  }
  return out;
}

}  // namespace mf
