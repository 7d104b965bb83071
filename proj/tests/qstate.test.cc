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

#include "declab/qstate.h"

#include <random>

#include "gtest/gtest.h"

#include "declab/symgrp.h"

using namespace declab;

TEST(qstate, density_op_validates) {
    EXPECT_THROW(DensityOp(-Mat::Identity(2, 2) * 0.1, {2}), NotPositiveError);
    EXPECT_THROW(DensityOp(Mat::Identity(2, 2), {2}), std::invalid_argument);
    EXPECT_NO_THROW(DensityOp(0.3 * Mat::Identity(2, 2), {2}));
}

TEST(qstate, max_entangled) {
    EXPECT_TRUE(max_entangled(1).mat.isApprox(Mat::Identity(1, 1)));
    Mat phi = max_entangled(2).mat;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            double expect = (r == 0 || r == 3) && (c == 0 || c == 3) ? 0.5 : 0;
            EXPECT_NEAR(std::abs(phi(r, c) - expect), 0, 1e-15);
        }
    }
    for (int d = 2; d <= 4; d++) {
        Mat m = max_entangled(d).mat;
        EXPECT_TRUE(partial_trace(m, {d, d}, {0}).isApprox(maximally_mixed(d)));
        EXPECT_TRUE(partial_trace(m, {d, d}, {1}).isApprox(maximally_mixed(d)));
    }
}

TEST(qstate, classical_correlated) {
    Mat t = classical_correlated(2).mat;
    Mat expect = Mat::Zero(4, 4);
    expect(0, 0) = expect(3, 3) = 0.5;
    EXPECT_TRUE(t.isApprox(expect));
    for (int d = 2; d <= 4; d++) {
        EXPECT_TRUE(classicalize_state(max_entangled(d), 0).mat.isApprox(classical_correlated(d).mat));
        EXPECT_TRUE(partial_trace(classical_correlated(d).mat, {d, d}, {1}).isApprox(maximally_mixed(d)));
    }
}

TEST(qstate, decoupling_states) {
    for (int d = 2; d <= 4; d++) {
        Mat xi = decoupling_state(d).mat;
        EXPECT_NEAR(std::abs(xi.trace()), 0, 1e-14);
        EXPECT_NEAR(xi.squaredNorm(), 1 - 1.0 / (d * d), 1e-12);
        EXPECT_NEAR(partial_trace(xi, {d, d}, {0}).norm(), 0, 1e-14);
        Mat lam = cq_decoupling_state(d).mat;
        EXPECT_NEAR(partial_trace(lam, {d, d}, {0}).norm(), 0, 1e-14);
        EXPECT_NEAR(partial_trace(lam, {d, d}, {1}).norm(), 0, 1e-14);
        EXPECT_NEAR(lam.squaredNorm(), (d - 1.0) / (d * d), 1e-12);
    }
    Mat lam2 = cq_decoupling_state(2).mat;
    EXPECT_NEAR(lam2(0, 0).real(), 0.25, 1e-15);
    EXPECT_NEAR(lam2(1, 1).real(), -0.25, 1e-15);
    EXPECT_NEAR(lam2(2, 2).real(), -0.25, 1e-15);
    EXPECT_NEAR(lam2(3, 3).real(), 0.25, 1e-15);
    EXPECT_NEAR((lam2 - Mat(lam2.diagonal().asDiagonal())).norm(), 0, 1e-15);
}

TEST(qstate, apply_channel_identity_and_trace) {
    std::mt19937_64 rng(21);
    DensityOp rho = random_density({3, 2}, 4, rng);
    EXPECT_TRUE(apply_channel(identity_channel(3), rho, 0).mat.isApprox(rho.mat, 1e-12));
    ChoiChannel tr = choi_of_map(3, 1, [](const Mat &x) { return Mat::Constant(1, 1, x.trace()); }, true);
    EXPECT_TRUE(apply_channel(tr, rho, 0).mat.isApprox(partial_trace(rho.mat, rho.dims, {1}), 1e-12));
}

TEST(qstate, partial_trace_channel_matches_partial_trace) {
    std::mt19937_64 rng(22);
    ChoiChannel ch = partial_trace_channel(2, 3);
    EXPECT_TRUE(ch.tp);
    for (int k = 0; k < 5; k++) {
        DensityOp rho = random_density({6}, 6, rng);
        EXPECT_TRUE(apply_channel(ch, rho, 0).mat.isApprox(partial_trace(rho.mat, {2, 3}, {0}), 1e-12));
    }
}

TEST(qstate, choi_round_trip) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 50; k++) {
        int da = 1 + k % 4, dr = 1 + (k / 4) % 4;
        DensityOp rho = random_density({da, dr}, 1 + k % (da * dr), rng);
        ChoiChannel e = choi_of_state(rho);
        // E maps Ã → R; applying it to the Ã half of Φ_AÃ gives back ρ_AR.
        Mat got = apply_channel(e, max_entangled(da).mat, {da, da}, 1);
        EXPECT_TRUE(got.isApprox(rho.mat, 1e-10)) << k;
        EXPECT_TRUE(apply_channel(e, maximally_mixed(da), {da}, 0)
                        .isApprox(partial_trace(rho.mat, rho.dims, {1}), 1e-10));
    }
}

TEST(qstate, choi_of_state_special_cases) {
    EXPECT_TRUE(choi_of_state(max_entangled(3)).choi.isApprox(identity_channel(3).choi));
    std::mt19937_64 rng(24);
    DensityOp s = random_density({2}, 2, rng);
    ChoiChannel c = choi_of_state(DensityOp(tensor(maximally_mixed(3), s.mat), {3, 2}));
    Mat x = random_density({3}, 3, rng).mat;
    EXPECT_TRUE(apply_channel(c, x, {3}, 0).isApprox(trace_real(x) * s.mat, 1e-12));
}

TEST(qstate, classicalize_channel) {
    for (int d = 2; d <= 4; d++) {
        EXPECT_TRUE(classicalize_channel(identity_channel(d)).choi.isApprox(classical_correlated(d).mat));
    }
    std::mt19937_64 rng(25);
    for (int k = 0; k < 10; k++) {
        ChoiChannel ch = random_channel(3, 2, k % 2 == 0, rng);
        ChoiChannel cl = classicalize_channel(ch);
        EXPECT_TRUE(cl.output_marginal().isApprox(ch.output_marginal(), 1e-12));
        DensityOp rho = random_cq_state(3, 2, rng);
        EXPECT_TRUE(apply_channel(cl, rho.mat, rho.dims, 0).isApprox(apply_channel(ch, rho.mat, rho.dims, 0), 1e-12));
    }
}

TEST(qstate, classicalize_state) {
    std::mt19937_64 rng(26);
    Mat d = Mat::Zero(4, 4);
    d(0, 0) = 0.1;
    d(2, 2) = 0.9;
    EXPECT_TRUE(classicalize_state(DensityOp(d, {2, 2}), 0).mat.isApprox(d));
    for (int k = 0; k < 100; k++) {
        DensityOp rho = random_density({2 + k % 3, 2}, 1 + k % 4, rng);
        DensityOp cl = classicalize_state(rho, 0);
        EXPECT_LE(cl.mat.squaredNorm(), rho.mat.squaredNorm() + 1e-12);
        EXPECT_TRUE(is_cq(cl, 0));
    }
}

TEST(qstate, is_cq) {
    EXPECT_TRUE(is_cq(classical_correlated(3), 0));
    EXPECT_FALSE(is_cq(max_entangled(2), 0));
    std::mt19937_64 rng(27);
    DensityOp rho = random_cq_state(4, 3, rng);
    EXPECT_TRUE(is_cq(rho, 0));
    for (int k = 0; k < 10; k++) {
        Mat p = perm_operator(random_permutation(4, rng));
        Mat pi = tensor(p, Mat::Identity(3, 3));
        EXPECT_TRUE(is_cq(pi * rho.mat * pi.adjoint(), rho.dims, 0));
    }
}

TEST(qstate, random_generators) {
    DensityOp a = random_density({3, 2}, 3, 99), b = random_density({3, 2}, 3, 99);
    EXPECT_EQ(a.mat, b.mat);
    ChoiChannel c = random_channel(3, 2, true, 5), e = random_channel(3, 2, true, 5);
    EXPECT_EQ(c.choi, e.choi);
    EXPECT_NO_THROW(ChoiChannel(c.choi, 3, 2, true));
    EXPECT_TRUE(partial_trace(c.choi, {3, 2}, {0}).isApprox(maximally_mixed(3), 1e-10));
    for (int rank = 1; rank <= 6; rank++) {
        DensityOp r = random_density({3, 2}, rank, rank);
        auto ev = eig_hermitian(r.mat).values;
        EXPECT_EQ((ev.array() > 1e-10).count(), rank);
        EXPECT_NEAR(r.trace(), 1, 1e-12);
    }
    ChoiChannel sub = random_channel(2, 3, false, 6);
    EXPECT_NO_THROW(ChoiChannel(sub.choi, 2, 3, false));
}
