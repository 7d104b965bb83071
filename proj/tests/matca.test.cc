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

#include "declab/matca.h"

#include <random>

#include "gtest/gtest.h"

#include "declab/qstate.h"

using namespace declab;

static Mat diag(std::initializer_list<double> v) {
    Mat m = Mat::Zero(v.size(), v.size());
    int i = 0;
    for (double x : v) {
        m(i, i) = x;
        i++;
    }
    return m;
}

TEST(matca, tensor_identity_and_diagonal) {
    EXPECT_TRUE(tensor(Mat::Identity(2, 2), Mat::Identity(2, 2)).isApprox(Mat::Identity(4, 4)));
    EXPECT_TRUE(tensor(diag({1, 2}), diag({3, 4})).isApprox(diag({3, 4, 6, 8})));
}

TEST(matca, tensor_trace_factorizes) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; k++) {
        Mat a = gaussian_matrix(2, 2, rng), b = gaussian_matrix(2, 2, rng);
        EXPECT_NEAR(std::abs(tensor(a, b).trace() - a.trace() * b.trace()), 0, 1e-12);
    }
}

TEST(matca, hermitian_op_validates) {
    Mat m(2, 2);
    m << 1, cplx(0, 1), cplx(0, 1), 1;
    EXPECT_THROW(HermitianOp(m, {2}), NotHermitianError);
    EXPECT_THROW(HermitianOp(Mat::Identity(4, 4), {2, 3}), DimensionError);
    EXPECT_NO_THROW(HermitianOp(Mat::Identity(6, 6), {2, 3}));
}

TEST(matca, partial_trace_product_state) {
    std::mt19937_64 rng(5);
    Mat a = random_density({3}, 3, rng).mat;
    Mat b = 0.7 * random_density({2}, 2, rng).mat;
    Mat ab = tensor(a, b);
    EXPECT_TRUE(partial_trace(ab, {3, 2}, {0}).isApprox(trace_real(b) * a, 1e-12));
    EXPECT_TRUE(partial_trace(ab, {3, 2}, {1}).isApprox(b, 1e-12));
    EXPECT_THROW(partial_trace(ab, {3, 2}, {}), DimensionError);
}

TEST(matca, partial_trace_max_entangled_marginal) {
    Mat phi = max_entangled(2).mat;
    EXPECT_TRUE(partial_trace(phi, {2, 2}, {0}).isApprox(0.5 * Mat::Identity(2, 2)));
    EXPECT_TRUE(partial_trace(phi, {2, 2}, {1}).isApprox(0.5 * Mat::Identity(2, 2)));
}

TEST(matca, partial_trace_index_sum) {
    std::mt19937_64 rng(7);
    Mat m = random_hermitian(4, rng);
    Mat got = partial_trace(m, {2, 2}, {0});
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            cplx s = 0;
            for (int k = 0; k < 2; k++) {
                s += m(i * 2 + k, j * 2 + k);
            }
            EXPECT_NEAR(std::abs(got(i, j) - s), 0, 1e-14);
        }
    }
}

TEST(matca, partial_trace_linear_three_factors) {
    std::mt19937_64 rng(8);
    Mat x = gaussian_matrix(12, 12, rng), y = gaussian_matrix(12, 12, rng);
    Dims dims{2, 3, 2};
    Mat lhs = partial_trace(2.0 * x - y, dims, {0, 2});
    Mat rhs = 2.0 * partial_trace(x, dims, {0, 2}) - partial_trace(y, dims, {0, 2});
    EXPECT_TRUE(lhs.isApprox(rhs, 1e-12));
    EXPECT_NEAR(std::abs(lhs.trace() - x.trace() * 2.0 + y.trace()), 0, 1e-10);
}

TEST(matca, permute_subsystems_swaps_factors) {
    std::mt19937_64 rng(9);
    Mat a = gaussian_matrix(2, 2, rng), b = gaussian_matrix(3, 3, rng);
    EXPECT_TRUE(permute_subsystems(tensor(a, b), {2, 3}, {1, 0}).isApprox(tensor(b, a), 1e-12));
}

TEST(matca, schatten_norms_identity) {
    for (int d = 1; d <= 5; d++) {
        Mat id = Mat::Identity(d, d);
        EXPECT_NEAR(schatten_norm(id, Schatten::one), d, 1e-12);
        EXPECT_NEAR(schatten_norm(id, Schatten::two), std::sqrt((double)d), 1e-12);
        EXPECT_NEAR(schatten_norm(id, Schatten::inf), 1, 1e-12);
    }
}

TEST(matca, decoupling_state_norms) {
    for (int d = 2; d <= 5; d++) {
        Mat xi = decoupling_state(d).mat;
        double dd = d;
        EXPECT_NEAR(std::pow(schatten_norm(xi, Schatten::two), 2), 1 - 1 / (dd * dd), 1e-12);
        EXPECT_NEAR(schatten_norm(xi, Schatten::one), 2 * (1 - 1 / (dd * dd)), 1e-12);
    }
    EXPECT_NEAR(std::pow(schatten_norm(decoupling_state(2).mat, Schatten::two), 2), 0.75, 1e-12);
}

TEST(matca, swap_operator_small) {
    EXPECT_TRUE(swap_operator(1).isApprox(Mat::Identity(1, 1)));
    Mat f = swap_operator(2);
    Mat expect = Mat::Zero(4, 4);
    expect(0, 0) = expect(3, 3) = 1;
    expect(1, 2) = expect(2, 1) = 1;
    EXPECT_TRUE(f.isApprox(expect));
}

TEST(matca, swap_trick) {
    std::mt19937_64 rng(11);
    for (int d = 1; d <= 5; d++) {
        for (int k = 0; k < 5; k++) {
            Mat m = gaussian_matrix(d, d, rng), n = gaussian_matrix(d, d, rng);
            cplx lhs = (m * n).trace();
            cplx rhs = (tensor(m, n) * swap_operator(d)).trace();
            EXPECT_LE(std::abs(lhs - rhs), 1e-10);
        }
    }
}

TEST(matca, eig_hermitian_examples) {
    auto e = eig_hermitian(diag({3, 1, 2}));
    EXPECT_NEAR(e.values(0), 1, 1e-14);
    EXPECT_NEAR(e.values(1), 2, 1e-14);
    EXPECT_NEAR(e.values(2), 3, 1e-14);
    auto f = eig_hermitian(swap_operator(2));
    EXPECT_NEAR(f.values(0), -1, 1e-14);
    for (int i = 1; i < 4; i++) {
        EXPECT_NEAR(f.values(i), 1, 1e-14);
    }
    std::mt19937_64 rng(12);
    Mat m = random_hermitian(5, rng);
    auto g = eig_hermitian(m);
    EXPECT_TRUE((g.vectors * g.values.cast<cplx>().asDiagonal() * g.vectors.adjoint()).isApprox(m, 1e-12));
    EXPECT_THROW(eig_hermitian(gaussian_matrix(3, 3, rng)), NotHermitianError);
}

TEST(matca, mpow_examples) {
    EXPECT_TRUE(mpow(Mat::Identity(3, 3), -0.5).isApprox(Mat::Identity(3, 3)));
    EXPECT_TRUE(mpow(diag({4, 9}), 0.5).isApprox(diag({2, 3}), 1e-12));
    std::mt19937_64 rng(13);
    Mat rho = random_density({4}, 2, rng).mat;
    Mat s = mpow(rho, -0.5);
    EXPECT_TRUE((s * rho * s).isApprox(support_projector(rho), 1e-9));
    EXPECT_NEAR(trace_real(support_projector(rho)), 2, 1e-9);
    EXPECT_THROW(mpow(diag({1, -1}), 0.5), NotPositiveError);
}

TEST(matca, three_matrix_norm_inequalities) {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 100; k++) {
        int d = 2 + k % 4;
        Mat a = gaussian_matrix(d, d, rng), b = gaussian_matrix(d, d, rng), c = gaussian_matrix(d, d, rng);
        Mat abc = a * b * c;
        double ac = schatten_norm(a, Schatten::inf) * schatten_norm(c, Schatten::inf);
        for (Schatten p : {Schatten::one, Schatten::two, Schatten::inf}) {
            EXPECT_LE(schatten_norm(abc, p), ac * schatten_norm(b, p) * (1 + 1e-10));
        }
    }
}
