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

#ifndef DECLAB_VERIFY_H
#define DECLAB_VERIFY_H

#include <string>
#include <utility>
#include <vector>

#include "declab/entro.h"
#include "declab/qstate.h"
#include "declab/symgrp.h"
#include "declab/twirl.h"

namespace declab {

enum class CheckKind { equality, upper_bound };

struct VerificationReport {
    std::string name;
    CheckKind kind = CheckKind::equality;
    double lhs = 0;
    double rhs = 0;
    double tolerance = 0;
    double std_err = 0;        // nonzero only for sampled left-hand sides
    bool pass = false;         // equality: |lhs - rhs| <= tol·max(1, |rhs|); bound: lhs <= rhs + tol + 3·SE
    bool strict_pass = false;  // bound without the statistical margin; same as pass otherwise
    std::vector<std::pair<std::string, double>> meta;

    /// rhs - lhs for bounds, |lhs - rhs| for equalities.
    double gap() const;
};

VerificationReport equality_report(std::string name, double lhs, double rhs, double tol);
VerificationReport bound_report(std::string name, double lhs, double rhs, double tol, double std_err = 0);

struct VerifyOptions {
    double eq_tol = 1e-9;
    double bound_tol = 1e-9;
    H2Options h2;
    int max_perm_dim = 6;  // exhaustive permutation sums; may be raised to 7
};

// Each verifier returns its headline check first, followed by any auxiliary checks.

/// Haar average of ‖T(UρU†) − ω_E⊗ρ_R‖₂², exact through the two-copy twirl, against
/// d²/(d²−1)·‖ρ−π⊗ρ_R‖₂²·‖ω−π⊗ω_E‖₂². ρ only needs to be Hermitian.
std::vector<VerificationReport> verify_decoupling_lemma(const HermitianOp &rho_ar, const ChoiChannel &ch,
                                                        const VerifyOptions &opt = {});

/// Monte Carlo estimate of the same average; passes when within 3 standard errors of the exact value.
VerificationReport decoupling_lemma_mc(const HermitianOp &rho_ar, const ChoiChannel &ch, int n_samples,
                                       std::uint64_t seed);

std::vector<VerificationReport> verify_decoupling_theorem(const DensityOp &rho, const ChoiChannel &ch,
                                                          int n_samples, std::uint64_t seed,
                                                          const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_improved_decoupling(const DensityOp &rho, const ChoiChannel &ch,
                                                           int n_samples, std::uint64_t seed,
                                                           const VerifyOptions &opt = {});

/// Exact ensemble average. A negative `eps` means design_epsilon_bound is computed here.
std::vector<VerificationReport> verify_design_decoupling(const UnitaryEnsemble &ens, const DensityOp &rho,
                                                         const ChoiChannel &ch, double eps = -1,
                                                         const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_cq_decoupling_lemma(const DensityOp &rho_cq, const ChoiChannel &ch,
                                                           const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_cq_hash(const DensityOp &rho_cq, int d_a1, int d_a2,
                                               const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_cq_tpcp(const DensityOp &rho_cq, const ChoiChannel &ch,
                                               const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_cq_general(const DensityOp &rho_cq, const ChoiChannel &ch,
                                                  const VerifyOptions &opt = {});

/// A negative `eps` means classical_diamond_distance is computed here.
std::vector<VerificationReport> verify_family_hash(const PermFamily &fam, const DensityOp &rho_cq, int d_a1,
                                                   int d_a2, double eps = -1, const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_distance_from_classicality(const ChoiChannel &ch, int d_r,
                                                                  const VerifyOptions &opt = {});

/// Headline: Π-average of ‖T(P(Φ_AR − π_AR)P†)‖₂² with π_AR maximally mixed on the d_R-level block of A
/// and on R. At d_R = d_A the averaged ‖T(PΦP†) − ω_E⊗π_R‖₂² and the Haar value are checked as well.
std::vector<VerificationReport> verify_perm_decoupling_lemma(const ChoiChannel &ch, int d_r,
                                                             const VerifyOptions &opt = {});

std::vector<VerificationReport> verify_quantum_hash(const DensityOp &rho, int d_a1, int d_a2,
                                                    const VerifyOptions &opt = {});

// Structural checks. Each reports a deviation or violation measure as lhs against rhs = 0.

/// Permutation average of (P⊗P)(|i><i|⊗|j><j|)(P⊗P)† against its closed form, max entrywise deviation over (i, j).
VerificationReport verify_claim_counting(int d, double tol = 1e-12);
/// Permutation average of (P⊗I)^⊗2 λ^⊗2 (P⊗I)^⊗2† against λ⊗λ/(d−1), λ the CQ decoupling state.
VerificationReport verify_claim_cq_square(int d, double tol = 1e-12);

/// MN characters against the closed forms on every class of S_d (lhs = number of mismatches).
VerificationReport verify_character_closed_forms(int d);
/// χ_R against its expansion into irreducible characters of S_d × S_2 on every class (lhs = number of mismatches).
VerificationReport verify_chi_r_decomposition(int d);
/// max |Σ_c |c| χ_λ(c) χ_μ(c) − d!·δ_λμ| over all pairs of partitions.
VerificationReport verify_character_orthogonality(int d);

/// Numerical tr(A_i A_j) against the closed-form Gramian, then G·G⁻¹ against I.
std::vector<VerificationReport> verify_gramian(int d, double tol = 1e-9);
VerificationReport verify_commutant_dim(int d);
/// ‖exact − brute‖₂ / ‖M‖₂ for the permutation twirl. The expansion only reproduces the exhaustive average
/// when FMF = M, as for M = (T†)^⊗2[F_E]; a generic M also has components outside the 11-dimensional span.
VerificationReport verify_perm_twirl_projection(const CommutantBasis &basis, const Mat &m, double tol = 1e-9);

/// Pairwise dependence, classical diamond distance (n ≤ 2) and family size for the affine family on GF(2^n).
std::vector<VerificationReport> verify_affine_family(int n);

/// max (H_min − H₂) over random bipartite states with d_A, d_B ≤ 4, H₂ optimized.
VerificationReport check_min_vs_collision_entropy(int n_states, std::uint64_t seed, double tol = 1e-8,
                                                  int restarts = 1);
/// Generalized Fuchs-van de Graaf on sub-normalized pairs and the plain version on normalized pairs.
std::vector<VerificationReport> check_fuchs_van_de_graaf(int n_pairs, std::uint64_t seed, double tol = 1e-8);
/// Three-matrix norm inequalities and the Hölder inequality with r = t = 4, s = 2, relative violations.
std::vector<VerificationReport> check_norm_inequalities(int n_triples, std::uint64_t seed, double tol = 1e-8);

// Building blocks shared with tests.

/// (P⊗I) X (P⊗I)† with P acting on the first factor of dimension d_a.
Mat conjugate_first(const Mat &x, const Permutation &p, int d_a);
/// (U⊗I) X (U⊗I)†.
Mat conjugate_first(const Mat &x, const Mat &u);

/// Φ_AR on C^{d_a} ⊗ C^{d_r}, supported on the first d_r levels of A.
Mat embedded_max_entangled(int d_a, int d_r);
/// (1/d_r)Σ_{i<d_r} |ii><ii| on C^{d_a} ⊗ C^{d_r}.
Mat embedded_classical_correlated(int d_a, int d_r);

}  // namespace declab

#endif
