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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "declab/suite.h"

namespace {

using namespace declab;

int emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

OutputFormat output_or_throw(const std::string &s) {
    auto o = parse_output(s);
    if (!o) {
        throw ConfigError("unknown output format '" + s + "'");
    }
    return *o;
}

int cmd_gram(int d) {
    CommutantBasis b = commutant_basis(d);
    for (int i = 0; i < 11; i++) {
        for (int j = 0; j < 11; j++) {
            std::printf("%s%lld", j ? " " : "", (long long)std::llround(b.G(i, j)));
        }
        std::printf("\n");
    }
    return 0;
}

int cmd_characters(int d) {
    if (d > 8) {
        throw DimensionError("characters supports d <= 8");
    }
    const Partition irreps[4] = {Partition({d}), Partition({d - 1, 1}), Partition({d - 2, 1, 1}),
                                 Partition({d - 2, 2})};
    std::printf("%-16s %8s %3s %3s %10s %10s %12s %10s  %s\n", "class", "size", "k1", "k2", "chi(d)", "chi(d-1,1)",
                "chi(d-2,1,1)", "chi(d-2,2)", "MN");
    int bad = 0;
    for (const auto &p : partitions(d)) {
        CycleType c = CycleType::from_lengths(d, p.parts);
        auto cf = char_closed_forms(d, c);
        bool ok = true;
        for (int i = 0; i < 4; i++) {
            ok = ok && cf[i] == mn_character(irreps[i], c);
        }
        bad += !ok;
        std::string name = "(";
        for (size_t i = 0; i < p.parts.size(); i++) {
            name += (i ? "," : "") + std::to_string(p.parts[i]);
        }
        name += ")";
        std::printf("%-16s %8lld %3d %3d %10lld %10lld %12lld %10lld  %s\n", name.c_str(),
                    (long long)class_size(c), c.k1(), c.k2(), (long long)cf[0], (long long)cf[1], (long long)cf[2],
                    (long long)cf[3], ok ? "ok" : "MISMATCH");
    }
    return bad ? 1 : 0;
}

int cmd_twirl(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Swap-invariant, like the operators (T†)^⊗2[F] the expansion is built for.
    Mat f = swap_operator(d);
    Mat m = random_hermitian(d * d, rng);
    m = 0.5 * (m + f * m * f);
    TwirlResult h = haar_twirl2_exact(m, d);
    std::printf("haar: alpha=%s beta=%s\n", format_number(h.alpha).c_str(), format_number(h.beta).c_str());
    if (d < 4) {
        return 0;
    }
    TwirlResult p = perm_twirl2_exact(m, d);
    for (size_t j = 0; j < p.coeffs.size(); j++) {
        std::printf("perm: c%zu=%s\n", j + 1, format_number(p.coeffs[j]).c_str());
    }
    if (d <= 7) {
        double dev = (p.reconstructed - perm_twirl2_brute(m, d)).norm() / m.norm();
        std::printf("perm: relative deviation from exhaustive average %s\n", format_number(dev).c_str());
        return dev <= 1e-9 ? 0 : 1;
    }
    return 0;
}

int cmd_family(int n) {
    PermFamily fam = affine_family(n);
    int d = 1 << n;
    for (const auto &p : fam.members) {
        std::printf("[");
        for (int i = 0; i < d; i++) {
            std::printf("%s%d", i ? " " : "", p(i));
        }
        std::printf("]\n");
    }
    std::printf("size %zu\n", fam.members.size());
    std::printf("pairwise_dependence %s\n", format_number(pairwise_dependence(fam, d)).c_str());
    if (d <= 7) {
        std::printf("epsilon %s\n", format_number(classical_diamond_distance(fam, d)).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"declab: numerical checks of decoupling identities and bounds"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string suite = "all", output = "text", out_path;
    bool no_timing = false;
    auto *verify = app.add_subcommand("verify", "run verifier suites");
    verify->add_option("--suite", suite, "all, ch2, ch3, ch5, ch6, ch7, groups or entropy");
    verify->add_option("--dims", cfg.dims, "dimensions for dimension-dependent checks")->delimiter(',');
    verify->add_option("--seed", cfg.seed, "base seed");
    verify->add_option("--samples", cfg.samples, "Monte Carlo samples and circuit trials");
    verify->add_option("--instances", cfg.instances, "random instances per verifier and dimension");
    verify->add_option("--tol", cfg.tolerance, "equality and bound tolerance");
    verify->add_flag("--optimize-sigma", cfg.optimize_sigma, "optimize σ in the collision entropy");
    verify->add_option("--output", output, "text, json or csv");
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_flag("--no-timing", no_timing, "write runtime_ms as 0 for reproducible output");
    verify->add_option("--workers", cfg.workers, "worker threads, 0 for one per core");

    int gram_d = 4;
    auto *gram = app.add_subcommand("gram", "print the 11x11 integer Gramian");
    gram->add_option("--d", gram_d)->required();

    int char_d = 4;
    auto *chars = app.add_subcommand("characters", "closed-form characters of S_d cross-checked against MN");
    chars->add_option("--d", char_d)->required();

    int twirl_d = 4;
    std::uint64_t twirl_seed = 1;
    auto *twirl = app.add_subcommand("twirl", "Haar and permutation twirl of a random Hermitian M");
    twirl->add_option("--d", twirl_d)->required();
    twirl->add_option("--seed", twirl_seed);

    int qubits = 2, trials = 200, n_seeds = 1;
    std::uint64_t circ_seed = 1;
    std::vector<int> depths{2, 30};
    std::string gates = "local-cnot", circ_output = "text", circ_out;
    auto *circ = app.add_subcommand("circuit-study", "epsilon bound of random circuit ensembles against depth");
    circ->add_option("--qubits", qubits, "2 or 3");
    circ->add_option("--depths", depths)->delimiter(',');
    circ->add_option("--trials", trials);
    circ->add_option("--seed", circ_seed);
    circ->add_option("--seeds", n_seeds, "independent ensembles per depth");
    circ->add_option("--gates", gates, "local-cnot or haar");
    circ->add_option("--output", circ_output, "text, json or csv");
    circ->add_option("--out", circ_out);

    int fam_n = 2;
    auto *family = app.add_subcommand("family", "affine family on GF(2^n) and its epsilon");
    family->add_option("--n", fam_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*verify) {
            auto s = parse_suite(suite);
            if (!s) {
                throw ConfigError("unknown suite '" + suite + "'");
            }
            cfg.suite = *s;
            cfg.output = output_or_throw(output);
            cfg.timing = !no_timing;
            if (!out_path.empty()) {
                cfg.out_path = out_path;
            }
            auto records = run_suite(cfg);
            int rc = emit(format_records(records, cfg.output), out_path);
            return rc ? rc : (all_pass(records) ? 0 : 1);
        }
        if (*gram) {
            return cmd_gram(gram_d);
        }
        if (*chars) {
            return cmd_characters(char_d);
        }
        if (*twirl) {
            return cmd_twirl(twirl_d, twirl_seed);
        }
        if (*circ) {
            GateSet gs;
            if (gates == "local-cnot") {
                gs = GateSet::local_cnot;
            } else if (gates == "haar") {
                gs = GateSet::haar_two_qubit;
            } else {
                throw ConfigError("unknown gate set '" + gates + "'");
            }
            OutputFormat fmt = output_or_throw(circ_output);
            auto pts = run_circuit_study(qubits, depths, trials, circ_seed, n_seeds, gs);
            return emit(format_circuit_study(pts, fmt), circ_out);
        }
        if (*family) {
            return cmd_family(fam_n);
        }
    } catch (const std::invalid_argument &e) {
        // ConfigError, DimensionError and other guard violations.
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
