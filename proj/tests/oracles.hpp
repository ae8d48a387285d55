// Independent oracles used only by the test suite.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "mf/bracket_ring.hpp"

namespace oracles {

// Number of semistandard Young tableaux of shape (2,2,...,2) (r rows) with
// entries in {1..n}, by the hook content formula.  This equals the dimension
// of the degree-2 graded piece of the Pluecker algebra of Gr(r,n).
inline long long ssyt_two_columns(int r, int n) {
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= 2; ++j) {
            num *= n + j - i;
            den *= (2 - j) + (r - i) + 1;
        }
    }
    boost::multiprecision::cpp_int q = num / den;
    return q.convert_to<long long>();
}

// Partition of the degree-2 monomials of a bracket ring into connected
// components, where each binomial in `gens` joins its two monomials.  Two
// sets of pure-difference binomials span the same lattice (and hence the
// same Q-vector space) iff they induce the same partition.
inline std::vector<int> component_labels(const mf::BracketRing& ring,
                                         const std::vector<mf::Binomial>& gens) {
    const int nv = ring.var_count();
    std::map<std::pair<int, int>, int> idx;
    int count = 0;
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) idx[{i, j}] = count++;

    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& b : gens) {
        int u = idx.at({b.lead.ranks[0], b.lead.ranks[1]});
        int v = idx.at({b.tail.ranks[0], b.tail.ranks[1]});
        parent[find(u)] = find(v);
    }
    // canonical labels: smallest member of each component
    std::vector<int> label(count);
    for (int i = 0; i < count; ++i) label[i] = -1;
    for (int i = 0; i < count; ++i) {
        int root = find(i);
        if (label[root] < 0) label[root] = i;
        label[i] = label[root];
    }
    return label;
}

}  // namespace oracles
