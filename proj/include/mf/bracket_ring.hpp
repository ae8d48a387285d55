#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mf/binomial_engine.hpp"
#include "mf/composition.hpp"
#include "mf/errors.hpp"
#include "mf/matching_field.hpp"

namespace mf {

inline void check_desk_scale(int r, int n) {
  if (n > 9 || r > 4)
    throw InstanceTooLarge("brute-force kernels support r <= 4, n <= 9 (got r=" + std::to_string(r) +
                           ", n=" + std::to_string(n) + ")");
}

/// Polynomial ring on the bracket variables of a fixed (r, n, a), with the
/// variable ordering: P > Q exactly when at the first row where their columns
/// differ, P's entry is smaller.  Rank 0 is the largest variable, so ranks
/// follow the lexicographic order of columns.
class BracketRing {
 public:
  BracketRing(int r, Composition a) : r_(r), a_(std::move(a)), w_(weight_vector(a_)) {
    if (r_ < 2 || r_ >= a_.n()) throw std::invalid_argument("need 2 <= r < n");
    std::vector<std::vector<int>> columns;
    for (const RSubset& I : all_r_subsets(r_, a_.n())) columns.push_back(bracket_of(a_, I).column);
    std::sort(columns.begin(), columns.end());
    vars_.reserve(columns.size());
    for (size_t rank = 0; rank < columns.size(); ++rank) {
      BracketVariable v;
      v.column = columns[rank];
      v.swapped = v.column[0] > v.column[1];
      rank_by_column_[v.column] = static_cast<int>(rank);
      vars_.push_back(std::move(v));
    }
  }

  int r() const { return r_; }
  int n() const { return a_.n(); }
  const Composition& composition() const { return a_; }
  const WeightData& weights() const { return w_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  const BracketVariable& var(int rank) const { return vars_.at(static_cast<size_t>(rank)); }

  int rank_of(const RSubset& I) const { return must_rank(bracket_of(a_, I).column); }

  std::optional<int> try_rank(const std::vector<int>& column) const {
    auto it = rank_by_column_.find(column);
    if (it == rank_by_column_.end()) return std::nullopt;
    return it->second;
  }

  GridMonomial image(const Monomial& m) const {
    GridMonomial out = GridMonomial::one(r_, n());
    for (int rank : m.ranks) {
      const std::vector<int>& c = vars_[static_cast<size_t>(rank)].column;
      for (int row = 1; row <= r_; ++row) out.bump(row, c[static_cast<size_t>(row - 1)]);
    }
    return out;
  }

  std::string monomial_to_string(const Monomial& m) const {
    std::string out;
    for (int rank : m.ranks) out += vars_[static_cast<size_t>(rank)].to_string();
    return out.empty() ? "1" : out;
  }

  /// All quadratic binomials produced by the seven combination rules, with the
  /// stated first monomial as lead.  Zero binomials are dropped and duplicates
  /// merged.  Every output satisfies image(lead) == image(tail).
  std::vector<Binomial> generators() const {
    std::set<Binomial> out;
    const int N = var_count();
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        if (p == q) continue;
        try_case_i(p, q, out);
        try_case_ii(p, q, out);
        if (r_ >= 3) {
          try_case_iii(p, q, out);
          try_case_iv(p, q, out);
        }
        try_case_v(p, q, out);
        try_case_vi(p, q, out);
        try_case_vii(p, q, out);
      }
    return {out.begin(), out.end()};
  }

  /// Degree-2 kernel by brute force: group all quadratic monomials by image
  /// and span each collision class against its revlex-largest member.
  std::vector<Binomial> kernel_binomials_deg2() const {
    check_desk_scale(r_, n());
    std::map<GridMonomial, std::vector<Monomial>> classes;
    for_each_pair([&](const Monomial& m) { classes[image(m)].push_back(m); });
    std::vector<Binomial> out;
    for (auto& [img, monos] : classes) {
      if (monos.size() < 2) continue;
      std::sort(monos.begin(), monos.end(),
                [](const Monomial& x, const Monomial& y) { return compare_revlex(x, y) > 0; });
      for (size_t k = 1; k < monos.size(); ++k) out.push_back(Binomial{monos.front(), monos[k]});
    }
    return out;
  }

  /// Number of distinct images of quadratic monomials; the degree-2 dimension
  /// of the toric ring.
  int dim2_image() const {
    check_desk_scale(r_, n());
    std::set<GridMonomial> images;
    for_each_pair([&](const Monomial& m) { images.insert(image(m)); });
    return static_cast<int>(images.size());
  }

  /// Quadratic monomials not divisible by any lead of generators().
  std::vector<Monomial> std_monomials_deg2() const {
    std::set<Monomial> leads;
    for (const Binomial& g : generators()) leads.insert(g.lead);
    std::vector<Monomial> out;
    for_each_pair([&](const Monomial& m) {
      if (!leads.count(m)) out.push_back(m);
    });
    return out;
  }

  /// Classification key of a standard quadratic monomial: the case label (by
  /// how many distinct entries sit in the top two rows), the sorted top-entry
  /// set, and the tail tuple under the canonical column order (smaller tail
  /// first).  The per-key counts are independent of the composition.
  struct StdKey {
    int case_label = 0;  // 1, 2 or 3
    std::vector<int> tops;
    std::vector<int> tails;

    bool operator<(const StdKey& o) const {
      if (case_label != o.case_label) return case_label < o.case_label;
      if (tops != o.tops) return tops < o.tops;
      return tails < o.tails;
    }
    bool operator==(const StdKey& o) const = default;
  };

  StdKey classify_std_monomial(const Monomial& m) const {
    if (m.degree() != 2) throw std::invalid_argument("classification is for degree-2 monomials");
    for (const Binomial& g : generators())
      if (g.lead == m) throw NotStandard("monomial " + monomial_to_string(m) + " is an initial monomial");
    std::vector<int> cl = vars_[static_cast<size_t>(m.ranks[0])].column;
    std::vector<int> cm = vars_[static_cast<size_t>(m.ranks[1])].column;
    const auto tail = [&](const std::vector<int>& c) { return std::vector<int>(c.begin() + 2, c.end()); };
    if (std::make_pair(tail(cl), cl) > std::make_pair(tail(cm), cm)) std::swap(cl, cm);
    StdKey key;
    std::set<int> tops{cl[0], cl[1], cm[0], cm[1]};
    key.tops.assign(tops.begin(), tops.end());
    key.case_label = static_cast<int>(tops.size()) - 1;  // |set| in {2,3,4} -> case 1,2,3
    key.tails = tail(cl);
    for (int t : tail(cm)) key.tails.push_back(t);
    return key;
  }

  /// Per-key counts of the standard quadratic monomials.
  std::map<StdKey, int> std_monomial_table() const {
    std::map<StdKey, int> table;
    for (const Monomial& m : std_monomials_deg2()) ++table[classify_std_monomial(m)];
    return table;
  }

 private:
  template <typename F>
  void for_each_pair(F&& f) const {
    const int N = var_count();
    for (int p = 0; p < N; ++p)
      for (int q = p; q < N; ++q) f(Monomial{{p, q}});
  }

  int must_rank(const std::vector<int>& column) const {
    auto it = rank_by_column_.find(column);
    if (it == rank_by_column_.end())
      throw std::logic_error("combination rule produced a column that is not a bracket variable");
    return it->second;
  }

  static std::pair<std::vector<int>, std::vector<int>> minmax_merge(const std::vector<int>& x,
                                                                    const std::vector<int>& y) {
    std::vector<int> lo(x.size()), hi(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
      lo[k] = std::min(x[k], y[k]);
      hi[k] = std::max(x[k], y[k]);
    }
    return {lo, hi};
  }

  void emit(int p, int q, const std::vector<int>& c1, const std::vector<int>& c2, std::set<Binomial>& out) const {
    const int rp = must_rank(c1), rq = must_rank(c2);
    Monomial first{{std::min(p, q), std::max(p, q)}};
    Monomial second{{std::min(rp, rq), std::max(rp, rq)}};
    if (first == second) return;
    if (!(image(first) == image(second)))
      throw std::logic_error("combination rule produced a binomial outside the kernel");
    if (compare_revlex(first, second) <= 0)
      throw std::logic_error("combination rule produced a binomial whose first monomial is not initial");
    out.insert(Binomial{std::move(first), std::move(second)});
  }

  // Both columns unswapped, i_1 < j_1: full entrywise min/max merge.
  void try_case_i(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    if (P.swapped || Q.swapped) return;
    if (!(P.column[0] < Q.column[0])) return;
    auto [lo, hi] = minmax_merge(P.column, Q.column);
    emit(p, q, lo, hi, out);
  }

  // First swapped, second not, with the whole first column below j_1:
  // merge the tails, keep both heads.
  void try_case_ii(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    if (!P.swapped || Q.swapped) return;
    if (!(P.column[0] < Q.column[0])) return;
    merge_tails_keep_heads(p, q, out);
  }

  // First unswapped, second swapped, i_1 < j_2 and i_2 < j_3: tails merge.
  void try_case_iii(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    if (P.swapped || !Q.swapped) return;
    if (!(P.column[0] < Q.column[0])) return;       // i_1 < j_2
    if (!(P.column[1] < Q.column[2])) return;       // i_2 < j_3
    merge_tails_keep_heads(p, q, out);
  }

  // First unswapped, second swapped, i_1 < j_2 and j_3 <= i_2: the second-row
  // entries trade places.
  void try_case_iv(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    if (P.swapped || !Q.swapped) return;
    if (!(P.column[0] < Q.column[0])) return;       // i_1 < j_2
    if (!(Q.column[2] <= P.column[1])) return;      // j_3 <= i_2
    auto [lt, ht] = minmax_merge(std::vector<int>(P.column.begin() + 2, P.column.end()),
                                 std::vector<int>(Q.column.begin() + 2, Q.column.end()));
    std::vector<int> c1{P.column[0], Q.column[1]};
    c1.insert(c1.end(), lt.begin(), lt.end());
    std::vector<int> c2{Q.column[0], P.column[1]};
    c2.insert(c2.end(), ht.begin(), ht.end());
    emit(p, q, c1, c2, out);
  }

  // Both swapped, i_2 < j_2: tails merge.
  void try_case_v(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    if (!P.swapped || !Q.swapped) return;
    if (!(P.column[0] < Q.column[0])) return;       // i_2 < j_2
    merge_tails_keep_heads(p, q, out);
  }

  // Equal first entries: min/max merge of rows 2..r.
  void try_case_vi(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    if (P.column[0] != Q.column[0]) return;
    auto [lo, hi] = minmax_merge(std::vector<int>(P.column.begin() + 1, P.column.end()),
                                 std::vector<int>(Q.column.begin() + 1, Q.column.end()));
    std::vector<int> c1{P.column[0]};
    c1.insert(c1.end(), lo.begin(), lo.end());
    std::vector<int> c2{Q.column[0]};
    c2.insert(c2.end(), hi.begin(), hi.end());
    emit(p, q, c1, c2, out);
  }

  // Crossed second-row entries under the weight conditions: trade them.
  void try_case_vii(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    const std::vector<int>&l = P.column, &m = Q.column;
    if (!(w_.at(l[0]) > w_.at(m[1]))) return;
    if (!(w_.at(m[0]) > w_.at(l[1]))) return;
    if (!(l[0] < m[0])) return;
    if (!(m[1] < l[1])) return;
    for (size_t k = 2; k < l.size(); ++k)
      if (!(l[k] <= m[k])) return;
    std::vector<int> c1 = l, c2 = m;
    std::swap(c1[1], c2[1]);
    emit(p, q, c1, c2, out);
  }

  void merge_tails_keep_heads(int p, int q, std::set<Binomial>& out) const {
    const BracketVariable &P = var(p), &Q = var(q);
    auto [lt, ht] = minmax_merge(std::vector<int>(P.column.begin() + 2, P.column.end()),
                                 std::vector<int>(Q.column.begin() + 2, Q.column.end()));
    std::vector<int> c1(P.column.begin(), P.column.begin() + 2);
    c1.insert(c1.end(), lt.begin(), lt.end());
    std::vector<int> c2(Q.column.begin(), Q.column.begin() + 2);
    c2.insert(c2.end(), ht.begin(), ht.end());
    emit(p, q, c1, c2, out);
  }

  int r_;
  Composition a_;
  WeightData w_;
  std::vector<BracketVariable> vars_;
  std::map<std::vector<int>, int> rank_by_column_;
};

}  // namespace mf
