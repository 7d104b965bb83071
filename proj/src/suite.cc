// Copyright 2026 The declab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "declab/suite.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace declab {

std::optional<Suite> parse_suite(const std::string &s) {
    static const std::pair<const char *, Suite> table[] = {
        {"all", Suite::all},   {"ch2", Suite::ch2},       {"ch3", Suite::ch3},         {"ch5", Suite::ch5},
        {"ch6", Suite::ch6},   {"ch7", Suite::ch7},       {"groups", Suite::groups},   {"entropy", Suite::entropy},
    };
    for (const auto &[name, v] : table) {
        if (s == name) {
            return v;
        }
    }
    return std::nullopt;
}

std::optional<OutputFormat> parse_output(const std::string &s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    return std::nullopt;
}

const char *suite_name(Suite s) {
    switch (s) {
        case Suite::all: return "all";
        case Suite::ch2: return "ch2";
        case Suite::ch3: return "ch3";
        case Suite::ch5: return "ch5";
        case Suite::ch6: return "ch6";
        case Suite::ch7: return "ch7";
        case Suite::groups: return "groups";
        case Suite::entropy: return "entropy";
    }
    return "?";
}

void SuiteConfig::validate() const {
    if (samples < 1) {
        throw ConfigError("samples must be >= 1");
    }
    if (instances < 1) {
        throw ConfigError("instances must be >= 1");
    }
    if (!(tolerance > 0) || !std::isfinite(tolerance)) {
        throw ConfigError("tolerance must be a positive number");
    }
    if (workers < 0) {
        throw ConfigError("workers must be >= 0");
    }
    int hi = suite == Suite::ch2 ? 8 : 6;
    for (int d : dims) {
        if (d < 2 || d > hi) {
            throw ConfigError("dimension " + std::to_string(d) + " outside [2, " + std::to_string(hi) + "]");
        }
    }
    if (suite == Suite::ch7 && !dims.empty() && std::none_of(dims.begin(), dims.end(), [](int d) { return d >= 4; })) {
        throw ConfigError("ch7 needs at least one dimension >= 4");
    }
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Task {
    std::string suite;
    std::string label;  // record name if the verifier throws
    std::uint64_t seed;
    std::function<std::vector<VerificationReport>(std::uint64_t)> run;
};

class Planner {
   public:
    explicit Planner(const SuiteConfig &cfg) : cfg_(cfg) {}

    void add(const std::string &suite, const std::string &label,
             std::function<std::vector<VerificationReport>(std::uint64_t)> run) {
        std::uint64_t s = splitmix(cfg_.seed ^ splitmix(tasks_.size() + 1));
        tasks_.push_back({suite, label, s, std::move(run)});
    }

    void add1(const std::string &suite, const std::string &label,
              std::function<VerificationReport(std::uint64_t)> run) {
        add(suite, label, [run](std::uint64_t s) { return std::vector<VerificationReport>{run(s)}; });
    }

    std::vector<Task> tasks_;

   private:
    const SuiteConfig &cfg_;
};

std::string dims_of(const VerificationReport &r) {
    std::string out;
    for (const auto &[k, v] : r.meta) {
        if (k.empty() || k[0] != 'd') {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += k + "=" + std::to_string((long long)std::llround(v));
    }
    return out;
}

// Picks the split A = A1 ⊗ A2 with the smallest nontrivial A1, or (d, 1) for prime d.
std::pair<int, int> split_of(int d) {
    for (int a = 2; a * a <= d; a++) {
        if (d % a == 0) {
            return {a, d / a};
        }
    }
    return {d, 1};
}

std::vector<int> twirl_dims(const SuiteConfig &cfg) {
    return cfg.dims.empty() ? std::vector<int>{2, 3, 4} : cfg.dims;
}

std::vector<int> brute_dims(const SuiteConfig &cfg) {
    return cfg.dims.empty() ? std::vector<int>{4} : cfg.dims;
}

VerifyOptions options_of(const SuiteConfig &cfg) {
    VerifyOptions opt;
    opt.eq_tol = cfg.tolerance;
    opt.bound_tol = cfg.tolerance;
    opt.h2.optimize = cfg.optimize_sigma;
    opt.h2.restarts = 2;
    return opt;
}

void plan_ch2(Planner &p, const SuiteConfig &cfg) {
    VerifyOptions opt = options_of(cfg);
    const std::string s = "ch2";
    for (int d : twirl_dims(cfg)) {
        for (int k = 0; k < cfg.instances; k++) {
            p.add(s, "decoupling_lemma", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                int dr = 2 + k % 2, de = 2 + (k / 2) % 2;
                Mat rho = k % 3 == 2 ? random_hermitian(d * dr, rng) : random_density({d, dr}, d * dr, rng).mat;
                ChoiChannel ch = random_channel(d, de, k % 2 == 0, rng);
                return verify_decoupling_lemma(HermitianOp(rho, {d, dr}), ch, opt);
            });
        }
    }
    auto td = twirl_dims(cfg);
    if (std::find(td.begin(), td.end(), 2) != td.end()) {
        int n = std::max(cfg.samples, 100000);
        p.add1(s, "decoupling_lemma_mc", [=](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            DensityOp rho = random_density({2, 2}, 4, rng);
            ChoiChannel ch = random_channel(2, 2, true, rng);
            auto r = decoupling_lemma_mc(rho.hermitian(), ch, n, rng());
            return r;
        });
    }
    int m = std::min(cfg.instances, 10);
    for (int d : td) {
        for (int k = 0; k < m; k++) {
            p.add(s, "decoupling_theorem", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                int dr = 2 + k % 2, de = 2 + (k / 2) % 2;
                DensityOp rho = random_density({d, dr}, 1 + k % (d * dr), rng);
                ChoiChannel ch = random_channel(d, de, k % 2 == 0, rng);
                return verify_decoupling_theorem(rho, ch, cfg.samples, rng(), opt);
            });
            p.add(s, "improved_decoupling", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                int dr = 2 + k % 2, de = 2 + (k / 2) % 2;
                DensityOp rho = random_density({d, dr}, 1 + k % (d * dr), rng);
                ChoiChannel ch = random_channel(d, de, true, rng);
                return verify_improved_decoupling(rho, ch, cfg.samples, rng(), opt);
            });
        }
    }
}

void plan_ch3(Planner &p, const SuiteConfig &cfg) {
    VerifyOptions opt = options_of(cfg);
    const std::string s = "ch3";
    auto cliff = std::make_shared<UnitaryEnsemble>(clifford_1q());
    p.add1(s, "clifford.size", [=](std::uint64_t) {
        return equality_report("clifford.size", (double)cliff->size(), 24, 0);
    });
    p.add1(s, "clifford.epsilon", [=](std::uint64_t) {
        auto r = equality_report("clifford.epsilon", design_epsilon_bound(*cliff, 2), 0, cfg.tolerance);
        r.meta = {{"d", 2}};
        return r;
    });
    for (int k = 0; k < cfg.instances; k++) {
        p.add(s, "design_decoupling.clifford", [=](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            int dr = 1 + k % 3, de = 2 + k % 2;
            DensityOp rho = random_density({2, dr}, 1 + k % (2 * dr), rng);
            ChoiChannel ch = random_channel(2, de, k % 2 == 0, rng);
            auto out = verify_design_decoupling(*cliff, rho, ch, 0.0, opt);
            for (auto &r : out) {
                r.name += ".clifford";
            }
            return out;
        });
    }
    // Circuit ensemble: one ensemble from the suite seed, ε from the Choi bound, shared by all instances.
    const int depth = 30;
    auto ens = std::make_shared<UnitaryEnsemble>(
        circuit_ensemble(2, depth, cfg.samples, splitmix(cfg.seed ^ 0xc1c1), GateSet::local_cnot));
    auto eps = std::make_shared<double>(-1);
    auto eps_once = std::make_shared<std::once_flag>();
    auto get_eps = [=] {
        std::call_once(*eps_once, [&] { *eps = design_epsilon_bound(*ens, 4); });
        return *eps;
    };
    int m = std::min(cfg.instances, 10);
    for (int k = 0; k < m; k++) {
        p.add(s, "design_decoupling.circuit", [=](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            int dr = 1 + k % 3, de = 2 + k % 3;
            DensityOp rho = random_density({4, dr}, 1 + k % (4 * dr), rng);
            ChoiChannel ch = random_channel(4, de, k % 2 == 0, rng);
            auto out = verify_design_decoupling(*ens, rho, ch, get_eps(), opt);
            for (auto &r : out) {
                r.name += ".circuit";
                r.meta.push_back({"depth", depth});
            }
            return out;
        });
    }
    p.add1(s, "circuit.convergence", [=](std::uint64_t seed) {
        auto pts = run_circuit_study(2, {2, 30}, cfg.samples, seed, 5);
        VerificationReport r;
        r.name = "circuit.convergence";
        r.kind = CheckKind::upper_bound;
        r.lhs = pts[1].eps_bound;
        r.rhs = pts[0].eps_bound;
        r.pass = r.strict_pass = r.lhs < r.rhs;
        r.meta = {{"n_qubits", 2}, {"trials", cfg.samples}, {"seeds", 5}};
        return r;
    });
    p.add(s, "circuit.time", [=](std::uint64_t) {
        std::vector<VerificationReport> out;
        for (int n : {1, 2, 3, 5, 8}) {
            for (double e : {1.0, 1e-3, 1e-9}) {
                auto r = bound_report("circuit.time", decoupling_time(1, n, e), 5 * design_time(1, n, e), 0);
                r.meta = {{"n_qubits", n}, {"eps", e}};
                out.push_back(r);
            }
        }
        return out;
    });
}

void plan_ch5(Planner &p, const SuiteConfig &cfg) {
    VerifyOptions opt = options_of(cfg);
    const std::string s = "ch5";
    for (int d : {2, 3, 4, 5}) {
        p.add1(s, "claim_counting", [=](std::uint64_t) { return verify_claim_counting(d); });
        p.add1(s, "claim_cq_square", [=](std::uint64_t) { return verify_claim_cq_square(d); });
    }
    for (int d : brute_dims(cfg)) {
        auto [d1, d2] = split_of(d);
        for (int k = 0; k < cfg.instances; k++) {
            int dr = 1 + k % 3, de = 2 + k % 2;
            p.add(s, "cq_decoupling_lemma", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                DensityOp rho = random_cq_state(d, dr, rng);
                ChoiChannel ch = random_channel(d, de, k % 2 == 0, rng);
                return verify_cq_decoupling_lemma(rho, ch, opt);
            });
            p.add(s, "cq_hash", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                return verify_cq_hash(random_cq_state(d, dr, rng), d1, d2, opt);
            });
            p.add(s, "cq_tpcp", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                DensityOp rho = random_cq_state(d, dr, rng);
                return verify_cq_tpcp(rho, random_channel(d, de, true, rng), opt);
            });
            p.add(s, "cq_general", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                DensityOp rho = random_cq_state(d, dr, rng);
                return verify_cq_general(rho, random_channel(d, de, k % 2 == 0, rng), opt);
            });
        }
    }
}

void plan_ch6(Planner &p, const SuiteConfig &cfg) {
    VerifyOptions opt = options_of(cfg);
    const std::string s = "ch6";
    for (int n : {1, 2, 3}) {
        p.add(s, "affine_family", [=](std::uint64_t) { return verify_affine_family(n); });
    }
    auto fam = std::make_shared<PermFamily>(affine_family(2));
    for (int k = 0; k < cfg.instances; k++) {
        p.add(s, "family_hash", [=](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return verify_family_hash(*fam, random_cq_state(4, 1 + k % 3, rng), 2, 2, 0.0, opt);
        });
    }
    auto full = std::make_shared<PermFamily>(PermFamily::uniform(all_perms(4)));
    for (int k = 0; k < 3; k++) {
        p.add(s, "family_hash", [=](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            auto out = verify_family_hash(*full, random_cq_state(4, 2, rng), 2, 2, -1, opt);
            for (auto &r : out) {
                r.name += ".full_group";
            }
            return out;
        });
    }
}

void plan_ch7(Planner &p, const SuiteConfig &cfg) {
    VerifyOptions opt = options_of(cfg);
    const std::string s = "ch7";
    for (int d = 4; d <= 8; d++) {
        p.add(s, "gramian", [=](std::uint64_t) { return verify_gramian(d); });
    }
    p.add1(s, "gramian.singular", [](std::uint64_t) {
        bool threw = false;
        try {
            commutant_basis(3);
        } catch (const DimensionError &) {
            threw = true;
        }
        auto r = equality_report("gramian.singular", threw ? 1 : 0, 1, 0);
        r.meta = {{"d", 3}};
        return r;
    });
    for (int d = 4; d <= 6; d++) {
        p.add1(s, "commutant_dim", [=](std::uint64_t) { return verify_commutant_dim(d); });
    }
    int m = std::min(cfg.instances, 20);
    for (int d : {4, 5}) {
        auto basis = std::make_shared<CommutantBasis>(commutant_basis(d));
        for (int k = 0; k < m; k++) {
            p.add1(s, "perm_twirl", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                Mat f = swap_operator(d);
                Mat m = random_hermitian(d * d, rng);
                return verify_perm_twirl_projection(*basis, 0.5 * (m + f * m * f), cfg.tolerance);
            });
        }
    }
    for (int d : brute_dims(cfg)) {
        if (d < 4) {
            continue;
        }
        auto [d1, d2] = split_of(d);
        for (int k = 0; k < cfg.instances; k++) {
            int dr = 1 + k % d, de = 2 + k % 2;
            p.add(s, "distance_from_classicality", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                return verify_distance_from_classicality(random_channel(d, de, k % 2 == 0, rng), dr, opt);
            });
            p.add(s, "perm_decoupling_lemma", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                return verify_perm_decoupling_lemma(random_channel(d, de, k % 2 == 0, rng), dr, opt);
            });
            p.add(s, "quantum_hash", [=](std::uint64_t seed) {
                std::mt19937_64 rng(seed);
                int r = 1 + k % 3;
                return verify_quantum_hash(random_density({d, r}, 1 + k % (d * r), rng), d1, d2, opt);
            });
        }
    }
}

void plan_groups(Planner &p, const SuiteConfig &) {
    const std::string s = "groups";
    for (int d = 4; d <= 7; d++) {
        p.add1(s, "characters.closed_forms", [=](std::uint64_t) { return verify_character_closed_forms(d); });
    }
    for (int d = 4; d <= 6; d++) {
        p.add1(s, "characters.chi_R", [=](std::uint64_t) { return verify_chi_r_decomposition(d); });
    }
    for (int d : {4, 5}) {
        p.add1(s, "characters.orthogonality", [=](std::uint64_t) { return verify_character_orthogonality(d); });
    }
}

void plan_entropy(Planner &p, const SuiteConfig &) {
    const std::string s = "entropy";
    // Split the 500-state sweep so a worker pool can share it.
    for (int k = 0; k < 5; k++) {
        p.add1(s, "entropy.hmin_le_h2", [](std::uint64_t seed) { return check_min_vs_collision_entropy(100, seed); });
    }
    p.add(s, "fuchs_van_de_graaf", [](std::uint64_t seed) { return check_fuchs_van_de_graaf(1000, seed); });
    p.add(s, "norms", [](std::uint64_t seed) { return check_norm_inequalities(500, seed); });
}

}  // namespace

std::vector<Record> run_suite(const SuiteConfig &cfg) {
    cfg.validate();
    Planner p(cfg);
    using Plan = void (*)(Planner &, const SuiteConfig &);
    const std::pair<Suite, Plan> order[] = {
        {Suite::ch2, plan_ch2},       {Suite::ch3, plan_ch3},         {Suite::ch5, plan_ch5},
        {Suite::ch6, plan_ch6},       {Suite::ch7, plan_ch7},         {Suite::groups, plan_groups},
        {Suite::entropy, plan_entropy},
    };
    for (const auto &[suite, plan] : order) {
        if (cfg.suite == Suite::all || cfg.suite == suite) {
            plan(p, cfg);
        }
    }

    const auto &tasks = p.tasks_;
    std::vector<std::vector<Record>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < tasks.size(); i = next++) {
            const Task &t = tasks[i];
            auto t0 = std::chrono::steady_clock::now();
            std::vector<VerificationReport> reps;
            try {
                reps = t.run(t.seed);
            } catch (const std::exception &e) {
                VerificationReport r;
                r.name = t.label + ".error";
                r.lhs = r.rhs = std::nan("");
                r.meta = {};
                reps.push_back(r);
                std::fprintf(stderr, "%s: %s\n", t.label.c_str(), e.what());
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            for (auto &r : reps) {
                Record rec{t.suite, r, dims_of(r), t.seed, cfg.timing ? ms : 0.0};
                results[i].push_back(std::move(rec));
            }
        }
    };
    int n = cfg.workers > 0 ? cfg.workers : (int)std::max(1u, std::thread::hardware_concurrency());
    n = std::min<int>(n, (int)std::max<size_t>(1, tasks.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; i++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }

    std::vector<Record> out;
    for (auto &v : results) {
        for (auto &r : v) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

bool all_pass(const std::vector<Record> &records) {
    return std::all_of(records.begin(), records.end(), [](const Record &r) { return r.report.pass; });
}

namespace {

nlohmann::json json_number(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return std::stod(format_number(x));
}

const char *kind_name(CheckKind k) {
    return k == CheckKind::equality ? "equality" : "upper_bound";
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_records(const std::vector<Record> &records, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &rec : records) {
                const auto &r = rec.report;
                nlohmann::json j;
                j["suite"] = rec.suite;
                j["name"] = r.name;
                j["kind"] = kind_name(r.kind);
                j["lhs"] = json_number(r.lhs);
                j["rhs"] = json_number(r.rhs);
                j["gap"] = json_number(r.gap());
                j["pass"] = r.pass;
                j["dims"] = rec.dims;
                j["seed"] = rec.seed;
                j["runtime_ms"] = json_number(rec.runtime_ms);
                arr.push_back(std::move(j));
            }
            os << arr.dump(1) << "\n";
            break;
        }
        case OutputFormat::csv:
            os << "suite,name,kind,lhs,rhs,gap,pass,dims,seed,runtime_ms\n";
            for (const auto &rec : records) {
                const auto &r = rec.report;
                os << rec.suite << ',' << csv_field(r.name) << ',' << kind_name(r.kind) << ','
                   << format_number(r.lhs) << ',' << format_number(r.rhs) << ',' << format_number(r.gap()) << ','
                   << (r.pass ? "true" : "false") << ',' << csv_field(rec.dims) << ',' << rec.seed << ','
                   << format_number(rec.runtime_ms) << '\n';
            }
            break;
        case OutputFormat::text: {
            size_t failed = 0;
            for (const auto &rec : records) {
                const auto &r = rec.report;
                failed += !r.pass;
                char line[512];
                std::snprintf(line, sizeof line, "%s  %-8s %-44s %-22s lhs=%-20s rhs=%-20s gap=%s\n",
                              r.pass ? "PASS" : "FAIL", rec.suite.c_str(), r.name.c_str(), rec.dims.c_str(),
                              format_number(r.lhs).c_str(), format_number(r.rhs).c_str(),
                              format_number(r.gap()).c_str());
                os << line;
            }
            os << records.size() << " checks, " << failed << " failed\n";
            break;
        }
    }
    return os.str();
}

std::vector<CircuitPoint> run_circuit_study(int n_qubits, const std::vector<int> &depths, int trials,
                                            std::uint64_t seed, int n_seeds, GateSet gates) {
    if (n_qubits != 2 && n_qubits != 3) {
        throw ConfigError("circuit study supports 2 or 3 qubits");
    }
    if (trials < 1 || n_seeds < 1) {
        throw ConfigError("trials and seeds must be >= 1");
    }
    if (depths.empty() || std::any_of(depths.begin(), depths.end(), [](int t) { return t < 0; })) {
        throw ConfigError("depths must be a non-empty list of non-negative integers");
    }
    int d = 1 << n_qubits;
    std::vector<CircuitPoint> out;
    for (int t : depths) {
        CircuitPoint pt;
        pt.depth = t;
        for (int s = 0; s < n_seeds; s++) {
            std::uint64_t sd = splitmix(seed + 0x51ed * (std::uint64_t)s) ^ (std::uint64_t)t;
            pt.per_seed.push_back(design_epsilon_bound(circuit_ensemble(n_qubits, t, trials, sd, gates), d));
        }
        double sum = 0;
        for (double e : pt.per_seed) {
            sum += e;
        }
        pt.eps_bound = sum / n_seeds;
        out.push_back(pt);
    }
    return out;
}

std::string format_circuit_study(const std::vector<CircuitPoint> &points, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto &pt : points) {
                nlohmann::json j;
                j["depth"] = pt.depth;
                j["eps_bound"] = json_number(pt.eps_bound);
                nlohmann::json per = nlohmann::json::array();
                for (double e : pt.per_seed) {
                    per.push_back(json_number(e));
                }
                j["per_seed"] = per;
                arr.push_back(j);
            }
            os << arr.dump(1) << "\n";
            break;
        }
        case OutputFormat::csv:
            os << "depth,eps_bound\n";
            for (const auto &pt : points) {
                os << pt.depth << ',' << format_number(pt.eps_bound) << '\n';
            }
            break;
        case OutputFormat::text:
            for (const auto &pt : points) {
                os << "t=" << pt.depth << "  eps_bound=" << format_number(pt.eps_bound) << '\n';
            }
            break;
    }
    return os.str();
}

}  // namespace declab
