// mf: certificates for block diagonal matching fields of Grassmannians.
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mf/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIo = 4;

bool logging_enabled() {
    const char* v = std::getenv("MF_LOG");
    return v && *v;
}

void log(const std::string& msg) {
    if (logging_enabled()) std::cerr << "mf: " << msg << "\n";
}

struct Config {
    int r = 0;
    int n = 0;
    std::string a_text;
    std::string check = "all";
    bool only_eligible = false;
    std::string out;
    std::string golden;
    unsigned jobs = 1;
    bool unsafe_bounds = false;
};

std::set<mf::Check> parse_checks(const std::string& name) {
    using mf::Check;
    if (name == "all") return {Check::coherence, Check::gb, Check::dim2, Check::sagbi};
    if (name == "coherence") return {Check::coherence};
    if (name == "gb") return {Check::gb};
    if (name == "dim2") return {Check::dim2};
    if (name == "sagbi") return {Check::sagbi};
    throw CLI::ValidationError("--check", "must be one of coherence|gb|dim2|sagbi|all");
}

mf::Composition parse_composition(const std::string& text, int n) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--a", "'" + tok + "' is not an integer");
        }
        if (used != tok.size()) throw CLI::ValidationError("--a", "'" + tok + "' is not an integer");
        if (v < 1) throw CLI::ValidationError("--a", "parts must be positive, got " + tok);
        parts.push_back(v);
    }
    if (parts.empty()) throw CLI::ValidationError("--a", "composition must have at least one part");
    mf::Composition a(parts);
    if (n != 0 && a.n() != n)
        throw CLI::ValidationError("--a", "parts sum to " + std::to_string(a.n()) +
                                              ", but --n is " + std::to_string(n));
    return a;
}

void validate_bounds(const Config& cfg, int n) {
    if (cfg.r < 2) throw CLI::ValidationError("--r", "need r >= 2");
    if (cfg.r >= n) throw CLI::ValidationError("--r", "need r < n");
    if (!cfg.unsafe_bounds && (n > 9 || cfg.r > 4))
        throw CLI::ValidationError("instance",
                                   "hard bounds are n <= 9, r <= 4 (override with --unsafe-bounds)");
}

// sagbi needs the exact nullspace, which is bounded more tightly
void validate_sagbi_bounds(const Config& cfg, int r, int n) {
    if (cfg.unsafe_bounds) return;
    if (!((r == 2 && n <= 6) || (r == 3 && n <= 6)))
        throw CLI::ValidationError(
            "--check", "sagbi supports (r,n) in {(2,<=6),(3,<=6)} (override with --unsafe-bounds)");
}

int write_output(const std::string& out, const std::string& body) {
    if (out.empty()) {
        std::cout << body;
        return kExitPass;
    }
    std::ofstream f(out, std::ios::binary);
    f << body;
    f.flush();
    if (!f) {
        std::cerr << "mf: cannot write " << out << "\n";
        return kExitIo;
    }
    return kExitPass;
}

int run_verify(const Config& cfg) {
    const mf::Composition a = parse_composition(cfg.a_text, cfg.n);
    validate_bounds(cfg, a.n());

    mf::RunOptions opt;
    opt.r = cfg.r;
    opt.a = a;
    opt.checks = parse_checks(cfg.check);
    opt.unsafe_bounds = cfg.unsafe_bounds;
    if (opt.checks.count(mf::Check::sagbi)) validate_sagbi_bounds(cfg, cfg.r, a.n());

    log("verify r=" + std::to_string(cfg.r) + " a=" + a.to_string());
    const mf::CertificateRecord rec = mf::run_checks(opt);
    const int io = write_output(cfg.out, rec.to_json().dump(2) + "\n");
    if (io != kExitPass) return io;
    return rec.ok() ? kExitPass : kExitFail;
}

int run_sweep(const Config& cfg) {
    if (cfg.n == 0) throw CLI::ValidationError("--n", "sweep requires --n");
    validate_bounds(cfg, cfg.n);
    const std::set<mf::Check> checks = parse_checks(cfg.check);
    if (checks.count(mf::Check::sagbi)) validate_sagbi_bounds(cfg, cfg.r, cfg.n);

    std::vector<mf::Composition> all;
    for (const mf::Composition& a : mf::compositions_of(cfg.n))
        if (!cfg.only_eligible || a.eligible()) all.push_back(a);

    std::optional<mf::PluckerKernel> kernel;
    if (checks.count(mf::Check::sagbi))
        kernel = mf::plucker_kernel_deg2(cfg.r, cfg.n, cfg.unsafe_bounds);

    std::vector<std::optional<mf::CertificateRecord>> records(all.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> internal_error{false};
    std::string internal_what;
    std::mutex note_mutex;

    const auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < all.size(); i = next.fetch_add(1)) {
            try {
                mf::RunOptions opt;
                opt.r = cfg.r;
                opt.a = all[i];
                opt.checks = checks;
                opt.unsafe_bounds = cfg.unsafe_bounds;
                opt.kernel_cache = kernel ? &*kernel : nullptr;
                log("sweep " + all[i].to_string());
                records[i] = mf::run_checks(opt);
            } catch (const std::exception& e) {
                internal_error = true;
                std::lock_guard<std::mutex> hold(note_mutex);
                internal_what = e.what();
            }
        }
    };
    const unsigned width = std::max(1u, cfg.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < width; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    if (internal_error) {
        std::cerr << "mf: " << internal_what << "\n";
        return kExitInternal;
    }

    nlohmann::ordered_json doc;
    doc["schema"] = "matchfield-sweep/1";
    doc["tool_version"] = mf::kVersion;
    doc["instance"] = {{"r", cfg.r}, {"n", cfg.n}, {"check", cfg.check},
                       {"only_eligible", cfg.only_eligible}};
    doc["records"] = nlohmann::ordered_json::array();
    bool all_pass = true;
    int eligible_count = 0;
    std::set<int> dim2_values;
    for (const auto& rec : records) {
        all_pass = all_pass && rec->ok();
        if (rec->eligible) ++eligible_count;
        if (rec->checks.contains("dim2")) dim2_values.insert(rec->checks["dim2"]["image_dim"].get<int>());
        doc["records"].push_back(rec->to_json());
    }
    doc["summary"] = {{"compositions", records.size()},
                      {"eligible", eligible_count},
                      {"all_asserted_pass", all_pass}};
    if (!dim2_values.empty())
        doc["summary"]["dim2_values"] = dim2_values;

    const int io = write_output(cfg.out, doc.dump(2) + "\n");
    if (io != kExitPass) return io;
    return all_pass ? kExitPass : kExitFail;
}

int run_fixture_check(const Config& cfg) {
    const mf::Composition a = parse_composition(cfg.a_text, cfg.n);
    validate_bounds(cfg, a.n());
    mf::RunOptions opt;
    opt.r = cfg.r;
    opt.a = a;
    opt.checks = parse_checks(cfg.check);
    opt.unsafe_bounds = cfg.unsafe_bounds;
    if (opt.checks.count(mf::Check::sagbi)) validate_sagbi_bounds(cfg, cfg.r, a.n());

    const std::string fresh = mf::emit_fixture(mf::run_checks(opt));
    std::ifstream in(cfg.golden, std::ios::binary);
    if (!in) {
        std::cerr << "mf: cannot read " << cfg.golden << "\n";
        return kExitIo;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (ss.str() != fresh) {
        std::cerr << "mf: fixture mismatch against " << cfg.golden << "\n";
        if (!cfg.out.empty()) write_output(cfg.out, fresh);
        return kExitFail;
    }
    std::cout << "fixture matches " << cfg.golden << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for s-block diagonal matching fields of Gr(r,n)"};
    app.require_subcommand(1);

    Config cfg;
    const auto add_common = [&](CLI::App* cmd, bool needs_a) {
        cmd->add_option("--r", cfg.r, "rank r of the Grassmannian")->required();
        cmd->add_option("--n", cfg.n, "number of columns (optional when --a is given)");
        auto* a_opt = cmd->add_option("--a", cfg.a_text, "composition, comma separated (e.g. 2,2,2)");
        if (needs_a) a_opt->required();
        cmd->add_option("--check", cfg.check, "coherence|gb|dim2|sagbi|all")->capture_default_str();
        cmd->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
        cmd->add_flag("--unsafe-bounds", cfg.unsafe_bounds, "lift the desk-scale instance bounds");
        return cmd;
    };

    CLI::App* verify = add_common(app.add_subcommand("verify", "verify one composition"), true);
    CLI::App* sweep = add_common(app.add_subcommand("sweep", "verify every composition of n"), false);
    sweep->add_flag("--only-eligible", cfg.only_eligible, "restrict to eligible compositions");
    sweep->add_option("--jobs", cfg.jobs, "concurrent instances")->capture_default_str();
    CLI::App* fixture =
        add_common(app.add_subcommand("fixture-check", "recompute and compare against a golden fixture"), true);
    fixture->add_option("--golden", cfg.golden, "path of the golden fixture")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(cfg);
        if (app.got_subcommand(sweep)) return run_sweep(cfg);
        if (app.got_subcommand(fixture)) return run_fixture_check(cfg);
    } catch (const CLI::ParseError& e) {
        std::cerr << "mf: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const mf::InstanceTooLarge& e) {
        std::cerr << "mf: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const mf::NonUniqueMinimum& e) {
        std::cerr << "mf: internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mf: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::logic_error& e) {
        std::cerr << "mf: internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "mf: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitBadArgs;
}
