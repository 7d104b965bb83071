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

#ifndef DECLAB_SUITE_H
#define DECLAB_SUITE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "declab/twirl.h"
#include "declab/verify.h"

namespace declab {

enum class Suite { all, ch2, ch3, ch5, ch6, ch7, groups, entropy };
enum class OutputFormat { text, json, csv };

std::optional<Suite> parse_suite(const std::string &s);
std::optional<OutputFormat> parse_output(const std::string &s);
const char *suite_name(Suite s);

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    Suite suite = Suite::all;
    std::vector<int> dims;  // empty: {2,3,4} for twirl equalities, {4} for exhaustive checks
    std::uint64_t seed = 1;
    int samples = 200;      // Monte Carlo samples and circuit trials
    int instances = 30;     // random instances per verifier and dimension
    double tolerance = 1e-9;
    bool optimize_sigma = false;
    OutputFormat output = OutputFormat::text;
    std::optional<std::string> out_path;
    bool timing = true;     // false: runtime_ms is written as 0
    int workers = 0;        // 0: hardware concurrency

    /// Throws ConfigError.
    void validate() const;
};

struct Record {
    std::string suite;
    VerificationReport report;
    std::string dims;
    std::uint64_t seed = 0;
    double runtime_ms = 0;
};

/// Runs the selected verifiers. Records come out in declaration order whatever the worker count.
std::vector<Record> run_suite(const SuiteConfig &cfg);
bool all_pass(const std::vector<Record> &records);

std::string format_records(const std::vector<Record> &records, OutputFormat fmt);

struct CircuitPoint {
    int depth = 0;
    double eps_bound = 0;             // mean over seeds
    std::vector<double> per_seed;
};

/// design_epsilon_bound of `trials`-circuit ensembles for each depth, averaged over `n_seeds` seeds.
/// Throws ConfigError unless n_qubits ∈ {2, 3}, trials ≥ 1 and depths are non-negative.
std::vector<CircuitPoint> run_circuit_study(int n_qubits, const std::vector<int> &depths, int trials,
                                            std::uint64_t seed, int n_seeds = 1,
                                            GateSet gates = GateSet::local_cnot);

std::string format_circuit_study(const std::vector<CircuitPoint> &points, OutputFormat fmt);

/// Decimal with 12 significant digits.
std::string format_number(double x);

}  // namespace declab

#endif
