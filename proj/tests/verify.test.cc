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

#include "declab/verify.h"

#include <random>

#include "gtest/gtest.h"

using namespace declab;

static ChoiChannel full_trace(int d) {
    return choi_of_map(d, 1, [](const Mat &x) { return Mat::Constant(1, 1, x.trace()); }, true);
}

static DensityOp product_with_mixed(int d_a, const Mat &rho_r) {
    return DensityOp(tensor(maximally_mixed(d_a), rho_r), {d_a, (int)rho_r.rows()});
}

static void expect_all_pass(const std::vector<VerificationReport> &reps) {
    for (const auto &r : reps) {
        EXPECT_TRUE(r.pass) << r.name << " lhs=" << r.lhs << " rhs=" << r.rhs;
    }
}

TEST(verify, report_semantics) {
    auto e = equality_report("x", 1.0 + 5e-10, 1.0, 1e-9);
    EXPECT_TRUE(e.pass);
    EXPECT_FALSE(equality_report("x", 1.0 + 5e-9, 1.0, 1e-9).pass);
    EXPECT_TRUE(equality_report("x", 1000 + 5e-7, 1000, 1e-9).pass);
    auto b = bound_report("y", 1.05, 1.0, 0, 0.02);
    EXPECT_TRUE(b.pass);
    EXPECT_FALSE(b.strict_pass);
    EXPECT_NEAR(b.gap(), -0.05, 1e-15);
    EXPECT_FALSE(bound_report("y", 1.07, 1.0, 0, 0.02).pass);
}

TEST(verify, decoupling_lemma_trivial) {
    std::mt19937_64 rng(71);
    DensityOp rho = random_density({3, 2}, 6, rng);
    auto r = verify_decoupling_lemma(rho.hermitian(), full_trace(3))[0];
    EXPECT_NEAR(r.lhs, 0, 1e-14);
    EXPECT_NEAR(r.rhs, 0, 1e-14);
    DensityOp prod = product_with_mixed(3, random_density({2}, 2, rng).mat);
    auto p = verify_decoupling_lemma(prod.hermitian(), random_channel(3, 2, true, rng))[0];
    EXPECT_NEAR(p.lhs, 0, 1e-14);
    EXPECT_NEAR(p.rhs, 0, 1e-14);
}

TEST(verify, decoupling_lemma_random) {
    std::mt19937_64 rng(72);
    for (int k = 0; k < 50; k++) {
        int da = 2 + k % 3, dr = 2 + (k / 3) % 2, de = 2 + (k / 6) % 2;
        Mat rho = k % 4 == 3 ? random_hermitian(da * dr, rng) : random_density({da, dr}, da * dr, rng).mat;
        auto reps = verify_decoupling_lemma(HermitianOp(rho, {da, dr}), random_channel(da, de, k % 2 == 0, rng),
                                            VerifyOptions{1e-10});
        expect_all_pass(reps);
    }
}

TEST(verify, decoupling_lemma_degree_two_scaling) {
    std::mt19937_64 rng(73);
    DensityOp rho = random_density({3, 2}, 6, rng);
    ChoiChannel ch = random_channel(3, 2, true, rng);
    auto a = verify_decoupling_lemma(rho.hermitian(), ch)[0];
    auto b = verify_decoupling_lemma(HermitianOp(0.5 * rho.mat, rho.dims), ch)[0];
    EXPECT_NEAR(b.lhs, 0.25 * a.lhs, 1e-12);
    EXPECT_NEAR(b.rhs, 0.25 * a.rhs, 1e-12);
}

TEST(verify, decoupling_lemma_monte_carlo) {
    std::mt19937_64 rng(74);
    DensityOp rho = random_density({2, 2}, 4, rng);
    ChoiChannel ch = random_channel(2, 3, true, rng);
    auto r = decoupling_lemma_mc(rho.hermitian(), ch, 100000, 75);
    EXPECT_TRUE(r.pass) << r.lhs << " vs " << r.rhs << " se " << r.std_err;
}

TEST(verify, decoupling_theorem) {
    std::mt19937_64 rng(76);
    DensityOp rho = random_density({4, 2}, 3, rng);
    auto t = verify_decoupling_theorem(rho, full_trace(4), 50, 1);
    EXPECT_NEAR(t[0].lhs, 0, 1e-12);
    EXPECT_TRUE(t[0].pass);
    for (int k = 0; k < 5; k++) {
        DensityOp r = random_density({4, 2}, 1 + k, rng);
        expect_all_pass(verify_decoupling_theorem(r, random_channel(4, 2, true, rng), 200, 100 + k));
    }
}

TEST(verify, improved_decoupling) {
    std::mt19937_64 rng(77);
    Mat rr = random_density({2}, 2, rng).mat;
    ChoiChannel constant = constant_channel(4, random_density({2}, 2, rng).mat);
    auto z = verify_improved_decoupling(product_with_mixed(4, rr), constant, 20, 1);
    EXPECT_NEAR(z[0].lhs, 0, 1e-10);
    EXPECT_NEAR(z[0].rhs, 0, 1e-6);
    for (int k = 0; k < 5; k++) {
        DensityOp r = random_density({4, 2}, 1 + k, rng);
        expect_all_pass(verify_improved_decoupling(r, random_channel(4, 2, true, rng), 200, 200 + k));
    }
}

TEST(verify, design_decoupling) {
    std::mt19937_64 rng(78);
    UnitaryEnsemble c = clifford_1q();
    for (int k = 0; k < 10; k++) {
        DensityOp r = random_density({2, 2}, 1 + k % 4, rng);
        auto reps = verify_design_decoupling(c, r, random_channel(2, 2, k % 2 == 0, rng), 0.0);
        EXPECT_TRUE(reps[0].strict_pass);
    }
    auto single = UnitaryEnsemble::uniform({Mat::Identity(2, 2)});
    DensityOp r = random_density({2, 2}, 4, rng);
    auto s = verify_design_decoupling(single, r, random_channel(2, 2, true, rng));
    EXPECT_GT(s[0].meta.back().second, 0.1);
    EXPECT_TRUE(s[0].pass);
    UnitaryEnsemble circ = circuit_ensemble(2, 30, 200, 79);
    double eps = design_epsilon_bound(circ, 4);
    for (int k = 0; k < 5; k++) {
        DensityOp q = random_density({4, 2}, 1 + k, rng);
        expect_all_pass(verify_design_decoupling(circ, q, random_channel(4, 2, true, rng), eps));
    }
}

TEST(verify, cq_decoupling_lemma) {
    std::mt19937_64 rng(80);
    auto z = verify_cq_decoupling_lemma(product_with_mixed(3, random_density({2}, 2, rng).mat),
                                        random_channel(3, 2, true, rng))[0];
    EXPECT_NEAR(z.lhs, 0, 1e-14);
    EXPECT_NEAR(z.rhs, 0, 1e-14);
    for (int d = 2; d <= 5; d++) {
        for (int k = 0; k < 6; k++) {
            DensityOp rho = random_cq_state(d, 1 + k % 3, rng);
            expect_all_pass(verify_cq_decoupling_lemma(rho, random_channel(d, 2 + k % 2, k % 2 == 0, rng)));
        }
    }
    EXPECT_THROW(verify_cq_decoupling_lemma(max_entangled(2), identity_channel(2)), std::invalid_argument);
}

// d_A = 2 by hand: the average over the two permutations of ‖T(PρP†) − ω_E⊗ρ_R‖₂².
TEST(verify, cq_decoupling_lemma_two_permutations) {
    std::mt19937_64 rng(81);
    DensityOp rho = random_cq_state(2, 2, rng);
    ChoiChannel ch = random_channel(2, 3, true, rng);
    Mat target = tensor(ch.output_marginal(), partial_trace(rho.mat, rho.dims, {1}));
    double avg = 0;
    for (const auto &p : all_perms(2)) {
        Mat out = apply_channel(ch, conjugate_first(rho.mat, p, 2), rho.dims, 0);
        avg += 0.5 * (out - target).squaredNorm();
    }
    auto r = verify_cq_decoupling_lemma(rho, ch)[0];
    EXPECT_NEAR(r.lhs, avg, 1e-14);
    EXPECT_TRUE(r.pass);
}

TEST(verify, cq_hash) {
    std::mt19937_64 rng(82);
    auto z = verify_cq_hash(product_with_mixed(4, random_density({2}, 2, rng).mat), 2, 2)[0];
    EXPECT_NEAR(z.lhs, 0, 1e-12);
    for (int k = 0; k < 30; k++) {
        expect_all_pass(verify_cq_hash(random_cq_state(4, 1 + k % 3, rng), 2, 2));
    }
    for (int k = 0; k < 5; k++) {
        DensityOp cc = classicalize_state(random_density({4, 2}, 8, rng), 1);
        cc = classicalize_state(cc, 0);
        expect_all_pass(verify_cq_hash(cc, 2, 2));
    }
    EXPECT_THROW(verify_cq_hash(random_cq_state(4, 2, rng), 3, 2), DimensionError);
}

TEST(verify, cq_tpcp) {
    std::mt19937_64 rng(83);
    Mat sigma = random_density({2}, 2, rng).mat;
    auto c = verify_cq_tpcp(random_cq_state(4, 2, rng), constant_channel(4, sigma))[0];
    EXPECT_NEAR(c.lhs, 0, 1e-12);
    EXPECT_TRUE(c.pass);
    Mat diag = Mat::Zero(16, 16);
    for (int i = 0; i < 4; i++) {
        diag(i * 4 + i, i * 4 + i) = 0.25;
    }
    expect_all_pass(verify_cq_tpcp(DensityOp(diag, {4, 4}), identity_channel(4)));
    for (int k = 0; k < 30; k++) {
        expect_all_pass(verify_cq_tpcp(random_cq_state(4, 1 + k % 3, rng), random_channel(4, 2, true, rng)));
    }
    EXPECT_THROW(verify_cq_tpcp(random_cq_state(4, 2, rng), random_channel(4, 2, false, rng)), std::invalid_argument);
}

TEST(verify, cq_general) {
    std::mt19937_64 rng(84);
    auto z = verify_cq_general(product_with_mixed(4, random_density({2}, 2, rng).mat), random_channel(4, 2, true, rng));
    EXPECT_NEAR(z[0].lhs, 0, 1e-12);
    for (int k = 0; k < 30; k++) {
        expect_all_pass(verify_cq_general(random_cq_state(4, 1 + k % 3, rng), random_channel(4, 2, k % 2 == 0, rng)));
    }
    // Partial trace channel: the general bound holds and is looser than the hash bound on the same input.
    for (int k = 0; k < 5; k++) {
        DensityOp rho = random_cq_state(4, 2, rng);
        auto g = verify_cq_general(rho, partial_trace_channel(2, 2))[0];
        auto h = verify_cq_hash(rho, 2, 2)[0];
        EXPECT_NEAR(g.lhs, h.lhs, 1e-12);
        EXPECT_GE(g.rhs, h.lhs);
        EXPECT_TRUE(g.pass);
    }
}

TEST(verify, family_hash) {
    std::mt19937_64 rng(85);
    PermFamily aff = affine_family(2);
    for (int k = 0; k < 30; k++) {
        expect_all_pass(verify_family_hash(aff, random_cq_state(4, 1 + k % 3, rng), 2, 2));
    }
    PermFamily full = PermFamily::uniform(all_perms(4));
    DensityOp rho = random_cq_state(4, 2, rng);
    auto f = verify_family_hash(full, rho, 2, 2);
    expect_all_pass(f);
    EXPECT_NEAR(f[0].lhs, verify_cq_hash(rho, 2, 2)[0].lhs, 1e-12);
    auto s = verify_family_hash(PermFamily::uniform({Permutation::identity(4)}), rho, 2, 2);
    expect_all_pass(s);
}

TEST(verify, distance_from_classicality) {
    std::mt19937_64 rng(86);
    auto z = verify_distance_from_classicality(classicalize_channel(random_channel(4, 2, true, rng)), 3);
    EXPECT_NEAR(z[0].lhs, 0, 1e-12);
    EXPECT_NEAR(z[0].rhs, 0, 1e-12);
    auto one = verify_distance_from_classicality(random_channel(4, 2, true, rng), 1);
    EXPECT_NEAR(one[0].lhs, 0, 1e-12);
    EXPECT_NEAR(one[0].rhs, 0, 1e-12);
    for (int d = 4; d <= 5; d++) {
        for (int k = 0; k < 8; k++) {
            expect_all_pass(verify_distance_from_classicality(random_channel(d, 2, k % 2 == 0, rng), 2 + k % (d - 1)));
        }
    }
}

TEST(verify, perm_decoupling_lemma) {
    std::mt19937_64 rng(87);
    auto c = verify_perm_decoupling_lemma(constant_channel(4, random_density({2}, 2, rng).mat), 4);
    EXPECT_NEAR(c[0].lhs, 0, 1e-12);
    expect_all_pass(c);
    for (int d = 4; d <= 5; d++) {
        for (int k = 0; k < 8; k++) {
            auto reps = verify_perm_decoupling_lemma(random_channel(d, 2, k % 2 == 0, rng), 1 + k % d);
            expect_all_pass(reps);
        }
        // At d_R = d_A the closed form equals the unitary lemma's right-hand side on Φ.
        ChoiChannel ch = random_channel(d, 2, true, rng);
        auto p = verify_perm_decoupling_lemma(ch, d);
        auto u = verify_decoupling_lemma(max_entangled(d).hermitian(), ch)[0];
        EXPECT_NEAR(p[0].rhs, u.rhs, 1e-12);
        ASSERT_EQ(p.size(), 3u);
    }
}

TEST(verify, quantum_hash) {
    std::mt19937_64 rng(88);
    auto z = verify_quantum_hash(product_with_mixed(4, random_density({2}, 2, rng).mat), 2, 2);
    EXPECT_NEAR(z[0].lhs, 0, 1e-12);
    for (int k = 0; k < 30; k++) {
        expect_all_pass(verify_quantum_hash(random_density({4, 2}, 1 + k % 8, rng), 2, 2));
    }
    DensityOp cq = random_cq_state(4, 2, rng);
    EXPECT_NEAR(verify_quantum_hash(cq, 2, 2)[0].lhs, verify_cq_hash(cq, 2, 2)[0].lhs, 1e-12);
}

TEST(verify, degenerate_dimensions) {
    std::mt19937_64 rng(89);
    DensityOp rho = random_density({3, 1}, 3, rng);
    expect_all_pass(verify_decoupling_lemma(rho.hermitian(), random_channel(3, 1, false, rng)));
    expect_all_pass(verify_cq_decoupling_lemma(random_cq_state(3, 1, rng), random_channel(3, 1, true, rng)));
}

TEST(verify, norm_inequalities) {
    expect_all_pass(check_norm_inequalities(200, 90));
}
