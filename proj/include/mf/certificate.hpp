#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mf/bracket_ring.hpp"
#include "mf/plucker.hpp"

namespace mf {

/// Degree-2 SAGBI certificate: quadratic generation (Buchberger pass for the
/// combination-rule generators), degree-2 equality of the matching field
/// ideal with the initial space of the Plucker ideal, and the dimension match
/// with the diagonal matching field.
struct SagbiCertificate {
  int r = 0, n = 0;
  std::vector<int> a;
  bool eligible = false;

  int dim_plucker2 = 0;        // dim of the degree-2 Plucker kernel
  int dim_initial2 = 0;        // dim of its initial space (always equal)
  int dim_matching2 = 0;       // dim of the degree-2 matching field kernel
  bool containment = false;    // matching field kernel inside the initial space
  bool gb_pass = false;        // Buchberger pass for the generator set
  int generator_count = 0;

  bool ok() const {
    return gb_pass && containment && dim_plucker2 == dim_initial2 && dim_initial2 == dim_matching2;
  }
};

/// Translate a degree-2 bracket binomial into a +1/-1 vector over the
/// pair-monomial coordinates of the kernel basis.  The kernel lives in the
/// signed world (P_I maps to det with its signs), while J_Lambda is its image
/// under P_I -> sgn(Lambda(I)) P_I; each coordinate carries that sign so the
/// two sides are directly comparable.
inline SparseVec binomial_as_vector(const BracketRing& ring, const DegreeTwoBasis& basis, const Binomial& b) {
  const auto idx = [&](const Monomial& m) {
    const int i = basis.subset_index(ring.var(m.ranks[0]).underlying());
    const int j = basis.subset_index(ring.var(m.ranks[1]).underlying());
    return basis.index_of(i, j);
  };
  const auto sign = [&](const Monomial& m) {
    int s = 1;
    for (int rank : m.ranks)
      if (ring.var(rank).swapped) s = -s;
    return s;
  };
  SparseVec v;
  v[idx(b.lead)] += sign(b.lead);
  v[idx(b.tail)] -= sign(b.tail);
  return v;
}

/// Assemble the certificate; a precomputed kernel for the same (r, n) may be
/// supplied to amortize the nullspace across a sweep.
inline SagbiCertificate sagbi_certificate(int r, const Composition& a, const PluckerKernel* cached = nullptr,
                                          bool unsafe_bounds = false) {
  std::optional<PluckerKernel> local;
  if (!cached) {
    local = plucker_kernel_deg2(r, a.n(), unsafe_bounds);
    cached = &*local;
  }
  if (cached->basis.r != r || cached->basis.n != a.n())
    throw std::invalid_argument("cached kernel does not match (r, n)");

  BracketRing ring(r, a);
  SagbiCertificate cert;
  cert.r = r;
  cert.n = a.n();
  cert.a = a.parts();
  cert.eligible = a.eligible();

  const std::vector<Binomial> gens = ring.generators();
  cert.generator_count = static_cast<int>(gens.size());
  cert.gb_pass = buchberger_check(gens).pass;

  cert.dim_plucker2 = cached->dim();

  const std::vector<SparseVec> initial = initial_space_deg2(*cached, a);
  SpanQ initial_span;
  for (const SparseVec& v : initial) initial_span.insert(v);
  cert.dim_initial2 = initial_span.rank();

  const std::vector<Binomial> kernel2 = ring.kernel_binomials_deg2();
  cert.dim_matching2 = static_cast<int>(kernel2.size());
  cert.containment = true;
  for (const Binomial& b : kernel2)
    if (!initial_span.contains(binomial_as_vector(ring, cached->basis, b))) {
      cert.containment = false;
      break;
    }
  return cert;
}

}  // namespace mf
