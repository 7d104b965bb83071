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

#ifndef DECLAB_ENTRO_H
#define DECLAB_ENTRO_H

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "declab/qstate.h"

namespace declab {

/// All logarithms are base 2.
enum class EntropyMethod { closed_form, fixed_sigma, optimized };

struct EntropyResult {
    double value = 0;
    DensityOp optimizer;  // normalized σ_B (H2) or ζ_B / tr ζ_B (H_min)
    EntropyMethod method = EntropyMethod::closed_form;
    double gap = 0;       // certified primal-dual gap of the SDP (H_min only)
    double residual = 0;  // most negative eigenvalue of I⊗ζ - ρ, clipped at zero (H_min only)
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SupportError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// -log2 λ_max(ρ).
double h_min(const Mat &rho);

/// Conditional min-entropy of A given B for ρ on A⊗B, via min{tr ζ : ρ ≤ I⊗ζ}.
EntropyResult h_min_cond(const Mat &rho_ab, const Dims &dims);
EntropyResult h_min_cond(const DensityOp &rho_ab);

/// Value of (1/tr ρ)·tr(((I⊗σ)^{-1/2} ρ)²) for a fixed σ on B.
double collision_term(const Mat &rho_ab, const Dims &dims, const Mat &sigma_b);

struct H2Options {
    bool optimize = false;
    int restarts = 5;
    std::uint64_t seed = 1;
};

/// Conditional 2-entropy. With `sigma` it evaluates the expression at that σ; without,
/// σ = ρ_B / tr ρ_B, optionally refined by a derivative-free local search over σ = LL^†/tr(LL^†).
EntropyResult h2_cond(const Mat &rho_ab, const Dims &dims, const std::optional<Mat> &sigma = std::nullopt,
                      const H2Options &opts = {});
EntropyResult h2_cond(const DensityOp &rho_ab, const std::optional<Mat> &sigma = std::nullopt,
                      const H2Options &opts = {});

/// ‖ρ - σ‖₁ (no factor one half).
double trace_distance(const Mat &rho, const Mat &sigma);
/// ‖ρ - σ‖₁ + |tr ρ - tr σ|.
double generalized_trace_distance(const Mat &rho, const Mat &sigma);

/// ‖√ρ √σ‖₁.
double fidelity(const Mat &rho, const Mat &sigma);
/// F + √((1 - tr ρ)(1 - tr σ)).
double generalized_fidelity(const Mat &rho, const Mat &sigma);
/// √(1 - F̄²).
double purified_distance(const Mat &rho, const Mat &sigma);

/// P̄(σ, ρ) ≤ ε, with slack 1e-10 on P̄². Requires √(tr ρ) > ε.
bool in_epsilon_ball(const Mat &rho, const Mat &sigma, double eps);

}  // namespace declab

#endif
