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

#ifndef DECLAB_QSTATE_H
#define DECLAB_QSTATE_H

#include <cstdint>
#include <functional>
#include <random>

#include "declab/matca.h"

namespace declab {

/// Positive semidefinite operator with trace at most one.
struct DensityOp {
    Mat mat;
    Dims dims;

    DensityOp() = default;
    /// Validates min eigenvalue >= -1e-10 and trace <= 1 + 1e-10.
    DensityOp(Mat m, Dims d);

    double trace() const { return trace_real(mat); }
    HermitianOp hermitian() const { return HermitianOp(mat, dims); }
};

/// A CP map stored through its Choi operator ω on A'⊗E (factor order A' first).
/// T(X) = d_in · tr_A'[ω (X^T ⊗ I_E)].
struct ChoiChannel {
    Mat choi;
    int d_in = 1;
    int d_out = 1;
    bool tp = false;

    ChoiChannel() = default;
    /// Validates positivity of the Choi operator and, when `tp` is set, tr_E ω = I/d_in.
    ChoiChannel(Mat choi, int d_in, int d_out, bool tp);

    Dims dims() const { return {d_in, d_out}; }
    /// ω_E = tr_A' ω, which equals T(π).
    Mat output_marginal() const;
};

DensityOp max_entangled(int d);

/// T = (1/d) Σ_i |ii><ii|.
DensityOp classical_correlated(int d);

/// ξ = Φ - π⊗π.
HermitianOp decoupling_state(int d);

/// λ = T - π⊗π.
HermitianOp cq_decoupling_state(int d);

/// Maximally mixed state I/d.
Mat maximally_mixed(int d);

/// Applies the channel (through its Choi operator) to subsystem `k` of `x`; other factors see the identity.
/// Works on any operator with a matching layout; the output layout replaces dims[k] with d_out.
Mat apply_channel(const ChoiChannel &ch, const Mat &x, const Dims &dims, int k);
DensityOp apply_channel(const ChoiChannel &ch, const DensityOp &rho, int k);

/// Adjoint map T^†, characterised by tr(Y T(X)) = tr(T^†(Y) X).
Mat apply_adjoint(const ChoiChannel &ch, const Mat &y);

/// The map E_{Ã→R} with (id ⊗ E)(Φ_{AÃ}) = ρ_AR.
ChoiChannel choi_of_state(const DensityOp &rho_ar);

/// Builds the Choi operator of an arbitrary linear map given as a function on d_in×d_in matrices.
ChoiChannel choi_of_map(int d_in, int d_out, const std::function<Mat(const Mat &)> &map, bool tp);

ChoiChannel identity_channel(int d);

/// tr_{A2} on A = A1⊗A2.
ChoiChannel partial_trace_channel(int d1, int d2);

/// X ↦ tr(X)·σ.
ChoiChannel constant_channel(int d_in, const Mat &sigma);

/// T^cl: the input is dephased in the computational basis first. Its Choi is T(T_AA').
ChoiChannel classicalize_channel(const ChoiChannel &ch);

/// Zeroes every block off-diagonal in the computational basis of subsystem `k`.
Mat classicalize(const Mat &m, const Dims &dims, int k);
DensityOp classicalize_state(const DensityOp &rho, int k);

bool is_cq(const Mat &m, const Dims &dims, int k, double tol = 1e-10);
bool is_cq(const DensityOp &rho, int k, double tol = 1e-10);

/// Ginibre-type random state GG^†/tr with G of shape n×rank.
DensityOp random_density(const Dims &dims, int rank, std::uint64_t seed);
DensityOp random_density(const Dims &dims, int rank, std::mt19937_64 &rng);

/// Random CP map from a Ginibre Choi operator; unit trace, or projected to trace preserving.
ChoiChannel random_channel(int d_in, int d_out, bool tp, std::uint64_t seed);
ChoiChannel random_channel(int d_in, int d_out, bool tp, std::mt19937_64 &rng);

/// Random state Σ_i p_i |i><i| ⊗ ρ_i, classical on the first factor.
DensityOp random_cq_state(int d_a, int d_r, std::mt19937_64 &rng);

/// Complex Gaussian matrix with unit-variance entries.
Mat gaussian_matrix(int rows, int cols, std::mt19937_64 &rng);

/// Random Hermitian matrix (G + G^†)/2.
Mat random_hermitian(int n, std::mt19937_64 &rng);

}  // namespace declab

#endif
