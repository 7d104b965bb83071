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

#ifndef DECLAB_TWIRL_H
#define DECLAB_TWIRL_H

#include <cstdint>
#include <random>
#include <vector>

#include "declab/matca.h"

namespace declab {

struct UnitaryEnsemble {
    std::vector<double> weights;
    std::vector<Mat> unitaries;

    UnitaryEnsemble() = default;
    UnitaryEnsemble(std::vector<double> w, std::vector<Mat> u);  // validates
    static UnitaryEnsemble uniform(std::vector<Mat> u);
    int dim() const { return unitaries.empty() ? 0 : (int)unitaries[0].rows(); }
    size_t size() const { return unitaries.size(); }
};

/// Haar case: reconstructed = alpha·I + beta·F. Permutation case: reconstructed = Σ coeffs[j]·A_j.
struct TwirlResult {
    double alpha = 0;
    double beta = 0;
    std::vector<double> coeffs;
    Mat reconstructed;
};

/// A[0..10] hold A_1..A_11 on C^d ⊗ C^d.
struct CommutantBasis {
    int d = 0;
    std::vector<Mat> A;
    Eigen::MatrixXd G;
    Eigen::MatrixXd G_inv;
};

/// ∫ U^⊗2† M U^⊗2 dU = α·I + β·F.
TwirlResult haar_twirl2_exact(const Mat &m, int d);

/// Haar unitary from the QR decomposition of a complex Gaussian matrix, with the phases of R's diagonal removed.
Mat haar_sample(int d, std::mt19937_64 &rng);
Mat haar_sample(int d, std::uint64_t seed);

struct MonteCarloTwirl {
    Mat mean;
    Eigen::MatrixXd std_err;  // entrywise standard error of |mean| components, real and imaginary combined
};

MonteCarloTwirl haar_twirl2_mc_stats(const Mat &m, int d, int n, std::uint64_t seed);
/// (1/N) Σ U_k^⊗2† M U_k^⊗2.
Mat haar_twirl2_mc(const Mat &m, int d, int n, std::uint64_t seed);

/// The 24 single-qubit Clifford unitaries modulo global phase, uniformly weighted.
UnitaryEnsemble clifford_1q();

/// Σ p_i U_i^⊗2 M U_i^⊗2†.
Mat design_twirl2(const UnitaryEnsemble &ens, const Mat &m);

/// Upper bound d²·‖Choi(G_W) − Choi(G_H)‖₁ on the diamond distance between the ensemble's and Haar's
/// second-moment maps. Requires d² ≤ 64.
double design_epsilon_bound(const UnitaryEnsemble &ens, int d);

enum class GateSet {
    haar_two_qubit,  // Haar element of U(4) on a random qubit pair
    local_cnot,      // on a random ordered pair (c, t): Haar U(2) on c, or CNOT c→t, with probability 1/2 each
};

/// Product of t random gates on n qubits, 2 ≤ n ≤ 4. Qubit 0 is the most significant bit.
Mat random_circuit(int n_qubits, int t, std::mt19937_64 &rng, GateSet gates = GateSet::haar_two_qubit);
Mat random_circuit(int n_qubits, int t, std::uint64_t seed, GateSet gates = GateSet::haar_two_qubit);

/// `trials` independent circuits of depth t, uniformly weighted.
UnitaryEnsemble circuit_ensemble(int n_qubits, int t, int trials, std::uint64_t seed,
                                 GateSet gates = GateSet::local_cnot);

/// Embeds a gate on the listed qubits (in order) into the n-qubit register.
Mat embed_gate(const Mat &gate, int n_qubits, const std::vector<int> &qubits);

/// Time steps C(n² + n·log2(1/ε)) for an ε-almost 2-design on n qubits.
double design_time(double c, int n_qubits, double eps);
/// Time steps to reach an ε/d⁴-almost 2-design, d = 2^n.
double decoupling_time(double c, int n_qubits, double eps);

/// Basis A_1..A_11 of the commutant of {P⊗P} ∪ {F} with closed-form Gramian and inverse. Requires d ≥ 4.
CommutantBasis commutant_basis(int d);

/// Nullspace dimension of the commutation constraints with all transpositions P⊗P and F. Requires d ≤ 6.
int commutant_dim_brute(int d);

/// Σ_{i,j} G⁻¹_{ij} tr(M A_i) A_j with coeffs[j] = Σ_i G⁻¹_{ji} tr(M A_i). Requires d ≥ 4. Equals (1/d!)Σ_P P^⊗2 M P^⊗2†
/// for swap-invariant M (FMF = M); otherwise it is that average followed by the projection onto FMF = M.
TwirlResult perm_twirl2_exact(const Mat &m, int d);
TwirlResult perm_twirl2_exact(const CommutantBasis &basis, const Mat &m);

/// Exhaustive average over all d! permutations. Requires d ≤ 7.
Mat perm_twirl2_brute(const Mat &m, int d);

}  // namespace declab

#endif
