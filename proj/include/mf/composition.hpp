#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mf {

/// Ordered tuple of positive integers a_1,...,a_s summing to n.  Block k is
/// the interval of columns (alpha_{k-1}, alpha_k], where alpha_k is the k-th
/// partial sum.
class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw std::invalid_argument("composition needs at least one part");
    alphas_.reserve(parts_.size() + 1);
    alphas_.push_back(0);
    for (int p : parts_) {
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
      alphas_.push_back(alphas_.back() + p);
    }
  }

  int n() const { return alphas_.back(); }
  int s() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int alpha(int k) const { return alphas_.at(static_cast<size_t>(k)); }

  /// 1-based closed intervals partitioning [n], in block order.
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(parts_.size());
    for (int k = 1; k <= s(); ++k) out.emplace_back(alpha(k - 1) + 1, alpha(k));
    return out;
  }

  /// 1-based index of the block containing column j.
  int block_of(int j) const {
    for (int k = 1; k <= s(); ++k)
      if (j <= alpha(k)) return k;
    throw std::out_of_range("column outside [n]");
  }

  /// Interior parts all lie in {1, 2}; vacuously true when s <= 2.
  bool eligible() const {
    for (int k = 1; k + 1 < s(); ++k)
      if (parts_[static_cast<size_t>(k)] > 2) return false;
    return true;
  }

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> parts_;
  std::vector<int> alphas_;
};

/// All 2^(n-1) compositions of n, in lexicographic order of cut sets.
inline std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  return out;
}

/// Second row of the block diagonal weight matrix: a permutation of {1,...,n},
/// strictly decreasing within each block.
struct WeightData {
  std::vector<int> w;

  int n() const { return static_cast<int>(w.size()); }
  int at(int i) const { return w.at(static_cast<size_t>(i - 1)); }  // 1-based
};

inline WeightData weight_vector(const Composition& a) {
  WeightData wd;
  wd.w.resize(static_cast<size_t>(a.n()));
  for (int k = 1; k <= a.s(); ++k)
    for (int j = a.alpha(k - 1) + 1; j <= a.alpha(k); ++j)
      wd.w[static_cast<size_t>(j - 1)] = a.alpha(k) - (j - a.alpha(k - 1) - 1);
  return wd;
}

/// i < j and w_i > w_j imply w strictly decreasing on [i, j].
inline bool weights_decrease_on_inversions(const WeightData& wd) {
  const int n = wd.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (wd.at(i) <= wd.at(j)) continue;
      for (int t = i; t < j; ++t)
        if (wd.at(t) <= wd.at(t + 1)) return false;
    }
  return true;
}

/// i < j, w_i < w_j > w_{j+1} > w_{j+2} imply w strictly decreasing from j on.
/// Holds exactly when all interior parts of the generating composition are 1
/// or 2.
inline bool peak_forces_decreasing_tail(const WeightData& wd) {
  const int n = wd.n();
  for (int j = 2; j + 2 <= n; ++j) {
    bool has_smaller_before = false;
    for (int i = 1; i < j; ++i)
      if (wd.at(i) < wd.at(j)) has_smaller_before = true;
    if (!has_smaller_before) continue;
    if (!(wd.at(j) > wd.at(j + 1) && wd.at(j + 1) > wd.at(j + 2))) continue;
    for (int t = j; t < n; ++t)
      if (wd.at(t) <= wd.at(t + 1)) return false;
  }
  return true;
}

}  // namespace mf
