#pragma once

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "mf/bracket_ring.hpp"
#include "mf/certificate.hpp"
#include "mf/composition.hpp"
#include "mf/graph_toric.hpp"
#include "mf/version.hpp"

namespace mf {

enum class Check { coherence, gb, dim2, sagbi };

inline std::string check_name(Check c) {
  switch (c) {
    case Check::coherence: return "coherence";
    case Check::gb: return "gb";
    case Check::dim2: return "dim2";
    case Check::sagbi: return "sagbi";
  }
  return "?";
}

struct RunOptions {
  int r = 0;
  Composition a{std::vector<int>{1}};
  std::set<Check> checks;
  bool unsafe_bounds = false;
  const PluckerKernel* kernel_cache = nullptr;  // optional, must match (r, n)
};

/// One verification record: per-check status plus counts.  Statuses are
/// "pass", "fail", "skipped" or "outside-hypotheses"; theorem-level checks
/// (gb, sagbi) are only asserted for eligible compositions, otherwise the
/// observed outcome is recorded without affecting the verdict.
struct CertificateRecord {
  int r = 0, n = 0;
  std::vector<int> a;
  bool eligible = false;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  nlohmann::ordered_json timing_ms = nlohmann::ordered_json::object();

  /// true when every asserted check passed
  bool ok() const {
    for (const auto& [name, body] : checks.items()) {
      (void)name;
      if (body.at("status") == "fail") return false;
    }
    return true;
  }

  nlohmann::ordered_json to_json(bool include_timing = true) const {
    nlohmann::ordered_json j;
    j["schema"] = "matchfield-certificate/1";
    j["tool_version"] = kVersion;
    j["instance"] = {{"r", r}, {"n", n}, {"a", a}, {"eligible", eligible}};
    j["checks"] = checks;
    if (include_timing) j["timing_ms"] = timing_ms;
    return j;
  }
};

/// Canonical fixture bytes: stable key order, two-space indentation, LF line
/// endings, no timing data.  Byte-identical across runs for the same inputs
/// and tool version.
inline std::string emit_fixture(const CertificateRecord& record) {
  return record.to_json(false).dump(2) + "\n";
}

inline nlohmann::ordered_json witness_json(const BracketRing& ring, const GbReport::Witness& w) {
  nlohmann::ordered_json j;
  j["f"] = {ring.monomial_to_string(w.f.lead), ring.monomial_to_string(w.f.tail)};
  j["g"] = {ring.monomial_to_string(w.g.lead), ring.monomial_to_string(w.g.tail)};
  j["normal_form"] = {ring.monomial_to_string(w.left_nf), ring.monomial_to_string(w.right_nf)};
  return j;
}

/// Run the requested checks in dependency order and assemble the record.
inline CertificateRecord run_checks(const RunOptions& opt) {
  const Composition& a = opt.a;
  CertificateRecord rec;
  rec.r = opt.r;
  rec.n = a.n();
  rec.a = a.parts();
  rec.eligible = a.eligible();

  using clock = std::chrono::steady_clock;
  const auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    rec.timing_ms[name] =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  };

  if (opt.checks.count(Check::coherence)) {
    timed("coherence", [&] {
      nlohmann::ordered_json body;
      bool pass = true;
      int count = 0;
      for (const RSubset& I : all_r_subsets(opt.r, a.n())) {
        ++count;
        if (!(initial_form_det(a, opt.r, I) == pi_lambda(a, I))) {
          pass = false;
          body["counterexample"] = I.to_string();
          break;
        }
      }
      body["status"] = pass ? "pass" : "fail";
      body["subsets"] = count;
      rec.checks["coherence"] = body;
    });
  }

  if (opt.checks.count(Check::gb)) {
    timed("gb", [&] {
      BracketRing ring(opt.r, a);
      const std::vector<Binomial> gens = ring.generators();
      const GbReport report = buchberger_check(gens);
      nlohmann::ordered_json body;
      body["status"] = rec.eligible ? (report.pass ? "pass" : "fail") : "outside-hypotheses";
      body["observed"] = report.pass ? "pass" : "fail";
      body["generators"] = gens.size();
      body["spairs"] = report.pairs;
      body["spairs_coprime_skipped"] = report.skipped_coprime;
      body["reductions"] = report.reductions;
      if (report.witness) body["witness"] = witness_json(ring, *report.witness);
      rec.checks["gb"] = body;
    });
  }

  if (opt.checks.count(Check::dim2)) {
    timed("dim2", [&] {
      BracketRing ring(opt.r, a);
      BracketRing diagonal(opt.r, Composition(std::vector<int>{a.n()}));
      const int std_count = static_cast<int>(ring.std_monomials_deg2().size());
      const int image_dim = ring.dim2_image();
      const int diagonal_dim = diagonal.dim2_image();
      nlohmann::ordered_json body;
      body["status"] = (std_count == image_dim && image_dim == diagonal_dim) ? "pass" : "fail";
      body["std_monomials"] = std_count;
      body["image_dim"] = image_dim;
      body["diagonal_dim"] = diagonal_dim;
      rec.checks["dim2"] = body;
    });
  }

  if (opt.checks.count(Check::sagbi)) {
    timed("sagbi", [&] {
      const SagbiCertificate cert = sagbi_certificate(opt.r, a, opt.kernel_cache, opt.unsafe_bounds);
      nlohmann::ordered_json body;
      body["status"] = rec.eligible ? (cert.ok() ? "pass" : "fail") : "outside-hypotheses";
      body["verdict"] = cert.ok() ? "OK" : "NOT-OK";
      body["dim_plucker2"] = cert.dim_plucker2;
      body["dim_initial2"] = cert.dim_initial2;
      body["dim_matching2"] = cert.dim_matching2;
      body["containment"] = cert.containment;
      body["gb_pass"] = cert.gb_pass;
      body["generators"] = cert.generator_count;
      rec.checks["sagbi"] = body;
    });
  }

  return rec;
}

}  // namespace mf
