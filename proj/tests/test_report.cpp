#include <doctest.h>

#include "mf/report.hpp"

using namespace mf;

namespace {
Composition comp(std::initializer_list<int> parts) { return Composition(std::vector<int>(parts)); }
}  // namespace

TEST_CASE("run_checks assembles a passing record for (2,4,(4))") {
    RunOptions opt;
    opt.r = 2;
    opt.a = comp({4});
    opt.checks = {Check::coherence, Check::gb, Check::dim2, Check::sagbi};
    const CertificateRecord rec = run_checks(opt);
    CHECK(rec.ok());
    CHECK(rec.checks.at("coherence").at("status") == "pass");
    CHECK(rec.checks.at("gb").at("status") == "pass");
    CHECK(rec.checks.at("gb").at("generators") == 1);
    CHECK(rec.checks.at("dim2").at("image_dim") == 20);
    CHECK(rec.checks.at("sagbi").at("verdict") == "OK");
    CHECK(rec.checks.at("sagbi").at("dim_plucker2") == 1);
}

TEST_CASE("fixture bytes are deterministic and carry the schema") {
    RunOptions opt;
    opt.r = 2;
    opt.a = comp({2, 2});
    opt.checks = {Check::gb, Check::dim2};
    const std::string once = emit_fixture(run_checks(opt));
    const std::string again = emit_fixture(run_checks(opt));
    CHECK(once == again);
    CHECK(once.find("\"schema\": \"matchfield-certificate/1\"") != std::string::npos);
    CHECK(once.find("timing") == std::string::npos);
    CHECK(once.back() == '\n');
}

TEST_CASE("outside-hypotheses results never fail the record") {
    RunOptions opt;
    opt.r = 3;
    opt.a = comp({1, 3, 2});  // ineligible: interior part 3
    opt.checks = {Check::gb, Check::dim2};
    const CertificateRecord rec = run_checks(opt);
    CHECK(!rec.eligible);
    CHECK(rec.checks.at("gb").at("status") == "outside-hypotheses");
    CHECK(rec.checks.at("gb").contains("observed"));
    CHECK(rec.checks.at("dim2").at("status") == "pass");  // dimension equality holds for all a
    CHECK(rec.checks.at("dim2").at("image_dim") == 175);
    CHECK(rec.ok());
}

TEST_CASE("witness serialization uses bracket notation") {
    const BracketRing ring(2, comp({5}));
    const auto rk = [&](int p, int q) { return *ring.try_rank({p, q}); };
    const std::vector<Binomial> cut = {
        {Monomial{{rk(1, 4), rk(2, 3)}}, Monomial{{rk(1, 3), rk(2, 4)}}},
        {Monomial{{rk(1, 5), rk(2, 3)}}, Monomial{{rk(1, 3), rk(2, 5)}}}};
    const GbReport rep = buchberger_check(cut);
    REQUIRE(!rep.pass);
    const nlohmann::ordered_json w = witness_json(ring, *rep.witness);
    CHECK(w.at("f").at(0) == "[1;4][2;3]");
    CHECK(w.at("g").at(0) == "[1;5][2;3]");
    CHECK(w.at("normal_form").at(0) != w.at("normal_form").at(1));
}

TEST_CASE("record json carries instance and version") {
    RunOptions opt;
    opt.r = 2;
    opt.a = comp({1, 1, 2});
    opt.checks = {Check::coherence};
    const auto j = run_checks(opt).to_json();
    CHECK(j.at("instance").at("r") == 2);
    CHECK(j.at("instance").at("n") == 4);
    CHECK(j.at("instance").at("a") == std::vector<int>{1, 1, 2});
    CHECK(j.at("tool_version") == kVersion);
    CHECK(j.contains("timing_ms"));
}
