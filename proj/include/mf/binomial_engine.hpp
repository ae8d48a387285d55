#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mf {

/// Monomial over an abstract variable set ordered by rank: rank 0 is the
/// LARGEST variable.  Stored as the sorted (ascending) multiset of ranks.
struct Monomial {
  std::vector<int> ranks;

  int degree() const { return static_cast<int>(ranks.size()); }
  bool operator==(const Monomial& o) const { return ranks == o.ranks; }
  bool operator<(const Monomial& o) const { return ranks < o.ranks; }
};

/// Graded reverse lexicographic comparison; returns <0, 0, >0 for a < b,
/// a == b, a > b.  Among equal degrees, the monomial with the smaller
/// exponent on the smallest variable (largest rank) is bigger.
inline int compare_revlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  size_t i = a.ranks.size(), j = b.ranks.size();
  while (i > 0 && j > 0) {
    const int ra = a.ranks[i - 1], rb = b.ranks[j - 1];
    if (ra == rb) {
      --i;
      --j;
      continue;
    }
    return ra > rb ? -1 : 1;
  }
  return 0;
}

/// Multiset inclusion.
inline bool divides(const Monomial& d, const Monomial& m) {
  size_t j = 0;
  for (int r : d.ranks) {
    while (j < m.ranks.size() && m.ranks[j] < r) ++j;
    if (j == m.ranks.size() || m.ranks[j] != r) return false;
    ++j;
  }
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.ranks.resize(a.ranks.size() + b.ranks.size());
  std::merge(a.ranks.begin(), a.ranks.end(), b.ranks.begin(), b.ranks.end(), out.ranks.begin());
  return out;
}

/// m / num, assuming num divides m.
inline Monomial mono_div(const Monomial& m, const Monomial& num) {
  Monomial out;
  size_t j = 0;
  for (int r : m.ranks) {
    if (j < num.ranks.size() && num.ranks[j] == r)
      ++j;
    else
      out.ranks.push_back(r);
  }
  return out;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  // multiset max: merge keeping max multiplicity per rank
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.ranks.size() || j < b.ranks.size()) {
    if (j == b.ranks.size() || (i < a.ranks.size() && a.ranks[i] < b.ranks[j])) {
      out.ranks.push_back(a.ranks[i++]);
    } else if (i == a.ranks.size() || b.ranks[j] < a.ranks[i]) {
      out.ranks.push_back(b.ranks[j++]);
    } else {
      out.ranks.push_back(a.ranks[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  size_t i = 0, j = 0;
  while (i < a.ranks.size() && j < b.ranks.size()) {
    if (a.ranks[i] == b.ranks[j]) return false;
    if (a.ranks[i] < b.ranks[j])
      ++i;
    else
      ++j;
  }
  return true;
}

/// Difference of two equal-degree monomials, oriented so that lead > tail.
struct Binomial {
  Monomial lead, tail;

  bool operator==(const Binomial& o) const { return lead == o.lead && tail == o.tail; }
  bool operator<(const Binomial& o) const { return lead < o.lead || (lead == o.lead && tail < o.tail); }
};

inline Binomial oriented(Monomial u, Monomial v) {
  if (compare_revlex(u, v) < 0) std::swap(u, v);
  return Binomial{std::move(u), std::move(v)};
}

/// Rewrite m by the leads of G until no lead divides it.  Terminates because
/// every rewrite strictly decreases the monomial in the revlex well-order.
inline Monomial reduce_monomial(Monomial m, const std::vector<Binomial>& G, size_t* steps = nullptr) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : G) {
      if (compare_revlex(g.lead, g.tail) <= 0)
        throw std::invalid_argument("generator not oriented (lead must exceed tail)");
      if (divides(g.lead, m)) {
        m = mono_mul(mono_div(m, g.lead), g.tail);
        if (steps) ++*steps;
        changed = true;
        break;
      }
    }
  }
  return m;
}

/// Normal form of a binomial: both monomials rewritten to irreducible form.
/// Zero exactly when the two sides meet.
struct ReducedBinomial {
  Monomial left, right;
  bool zero() const { return left == right; }
};

inline ReducedBinomial normal_form(const Binomial& f, const std::vector<Binomial>& G, size_t* steps = nullptr) {
  return ReducedBinomial{reduce_monomial(f.lead, G, steps), reduce_monomial(f.tail, G, steps)};
}

struct GbReport {
  bool pass = true;
  size_t pairs = 0;
  size_t skipped_coprime = 0;
  size_t reductions = 0;

  struct Witness {
    Binomial f, g;
    Monomial left_nf, right_nf;
  };
  std::optional<Witness> witness;
};

/// Buchberger's criterion on a finite set of oriented binomials: every S-pair
/// must reduce to zero.  Pairs with relatively prime leads are skipped; the
/// rest are processed in increasing lcm degree.
inline GbReport buchberger_check(const std::vector<Binomial>& G) {
  GbReport report;
  std::vector<std::pair<int, std::pair<size_t, size_t>>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      if (coprime(G[i].lead, G[j].lead)) {
        ++report.skipped_coprime;
        continue;
      }
      pairs.push_back({mono_lcm(G[i].lead, G[j].lead).degree(), {i, j}});
    }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [deg, ij] : pairs) {
    (void)deg;
    const Binomial& f = G[ij.first];
    const Binomial& g = G[ij.second];
    const Monomial l = mono_lcm(f.lead, g.lead);
    // S(f,g) = (l/lead_g)*tail_g - (l/lead_f)*tail_f
    const Binomial spoly{mono_mul(mono_div(l, f.lead), f.tail), mono_mul(mono_div(l, g.lead), g.tail)};
    ++report.pairs;
    const ReducedBinomial nf = normal_form(spoly, G, &report.reductions);
    if (!nf.zero()) {
      report.pass = false;
      report.witness = GbReport::Witness{f, g, nf.left, nf.right};
      return report;
    }
  }
  return report;
}

}  // namespace mf
