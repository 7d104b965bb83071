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

#include <cmath>

namespace declab {

namespace {

void check_psd(const Mat &m, const char *what) {
    if (!is_hermitian(m)) {
        throw NotHermitianError(std::string(what) + " is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
    if (es.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, lmax)) {
        throw NotPositiveError(std::string(what) + " has a negative eigenvalue");
    }
}

}  // namespace

DensityOp::DensityOp(Mat m, Dims d) : mat(std::move(m)), dims(std::move(d)) {
    check_dims(mat, dims);
    check_psd(mat, "density operator");
    if (trace_real(mat) > 1 + 1e-10) {
        throw std::invalid_argument("density operator has trace above one");
    }
}

ChoiChannel::ChoiChannel(Mat c, int din, int dout, bool is_tp) : choi(std::move(c)), d_in(din), d_out(dout), tp(is_tp) {
    check_dims(choi, {d_in, d_out});
    check_psd(choi, "Choi operator");
    if (tp) {
        Mat m = partial_trace(choi, {d_in, d_out}, {0});
        if ((m - maximally_mixed(d_in)).cwiseAbs().maxCoeff() > 1e-10) {
            throw std::invalid_argument("Choi operator is not trace preserving");
        }
    }
}

Mat ChoiChannel::output_marginal() const {
    return partial_trace(choi, {d_in, d_out}, {1});
}

Mat maximally_mixed(int d) {
    return Mat::Identity(d, d) / (double)d;
}

DensityOp max_entangled(int d) {
    Mat m = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            m(i * d + i, j * d + j) = 1.0 / d;
        }
    }
    return DensityOp(m, {d, d});
}

DensityOp classical_correlated(int d) {
    Mat m = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; i++) {
        m(i * d + i, i * d + i) = 1.0 / d;
    }
    return DensityOp(m, {d, d});
}

HermitianOp decoupling_state(int d) {
    if (d < 2) {
        throw DimensionError("decoupling_state needs d >= 2");
    }
    Mat pi = maximally_mixed(d);
    return HermitianOp(max_entangled(d).mat - tensor(pi, pi), {d, d});
}

HermitianOp cq_decoupling_state(int d) {
    if (d < 2) {
        throw DimensionError("cq_decoupling_state needs d >= 2");
    }
    Mat pi = maximally_mixed(d);
    return HermitianOp(classical_correlated(d).mat - tensor(pi, pi), {d, d});
}

Mat apply_channel(const ChoiChannel &ch, const Mat &x, const Dims &dims, int k) {
    check_dims(x, dims);
    if (k < 0 || k >= (int)dims.size() || dims[k] != ch.d_in) {
        throw DimensionError("channel input dimension does not match the subsystem");
    }
    int din = ch.d_in, dout = ch.d_out;
    int left = 1, right = 1;
    for (int s = 0; s < k; s++) {
        left *= dims[s];
    }
    for (int s = k + 1; s < (int)dims.size(); s++) {
        right *= dims[s];
    }
    int n_out = left * dout * right;
    Mat out = Mat::Zero(n_out, n_out);
    auto in_idx = [&](int l, int a, int r) { return (l * din + a) * right + r; };
    auto out_idx = [&](int l, int e, int r) { return (l * dout + e) * right + r; };
    for (int a = 0; a < din; a++) {
        for (int b = 0; b < din; b++) {
            // T(|a><b|) = d_in · <a|ω|b>_{A'}
            Mat tab = (double)din * ch.choi.block(a * dout, b * dout, dout, dout);
            for (int l = 0; l < left; l++) {
                for (int r = 0; r < right; r++) {
                    for (int l2 = 0; l2 < left; l2++) {
                        for (int r2 = 0; r2 < right; r2++) {
                            cplx v = x(in_idx(l, a, r), in_idx(l2, b, r2));
                            if (v == cplx(0)) {
                                continue;
                            }
                            for (int e = 0; e < dout; e++) {
                                for (int f = 0; f < dout; f++) {
                                    out(out_idx(l, e, r), out_idx(l2, f, r2)) += v * tab(e, f);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

DensityOp apply_channel(const ChoiChannel &ch, const DensityOp &rho, int k) {
    Dims out_dims = rho.dims;
    Mat out = apply_channel(ch, rho.mat, rho.dims, k);
    out_dims[k] = ch.d_out;
    return DensityOp(0.5 * (out + out.adjoint()), out_dims);
}

Mat apply_adjoint(const ChoiChannel &ch, const Mat &y) {
    if (y.rows() != ch.d_out || y.cols() != ch.d_out) {
        throw DimensionError("adjoint map input must live on the output space");
    }
    int din = ch.d_in, dout = ch.d_out;
    Mat out(din, din);
    for (int a = 0; a < din; a++) {
        for (int b = 0; b < din; b++) {
            auto blk = ch.choi.block(a * dout, b * dout, dout, dout);
            out(b, a) = (double)din * (y * blk).trace();
        }
    }
    return out;
}

ChoiChannel choi_of_state(const DensityOp &rho_ar) {
    if (rho_ar.dims.size() != 2) {
        throw DimensionError("choi_of_state expects a bipartite state");
    }
    Mat c = rho_ar.mat;
    int da = rho_ar.dims[0];
    Mat marg = partial_trace(c, rho_ar.dims, {0});
    bool tp = (marg - maximally_mixed(da)).cwiseAbs().maxCoeff() <= 1e-10;
    return ChoiChannel(c, da, rho_ar.dims[1], tp);
}

ChoiChannel choi_of_map(int d_in, int d_out, const std::function<Mat(const Mat &)> &map, bool tp) {
    Mat c = Mat::Zero(d_in * d_out, d_in * d_out);
    for (int i = 0; i < d_in; i++) {
        for (int j = 0; j < d_in; j++) {
            Mat eij = Mat::Zero(d_in, d_in);
            eij(i, j) = 1;
            c.block(i * d_out, j * d_out, d_out, d_out) = map(eij) / (double)d_in;
        }
    }
    return ChoiChannel(c, d_in, d_out, tp);
}

ChoiChannel identity_channel(int d) {
    return ChoiChannel(max_entangled(d).mat, d, d, true);
}

ChoiChannel partial_trace_channel(int d1, int d2) {
    return choi_of_map(d1 * d2, d1, [=](const Mat &x) { return partial_trace(x, {d1, d2}, {0}); }, true);
}

ChoiChannel constant_channel(int d_in, const Mat &sigma) {
    bool tp = std::abs(trace_real(sigma) - 1) <= 1e-12;
    return ChoiChannel(tensor(maximally_mixed(d_in), sigma), d_in, (int)sigma.rows(), tp);
}

Mat classicalize(const Mat &m, const Dims &dims, int k) {
    check_dims(m, dims);
    if (k < 0 || k >= (int)dims.size()) {
        throw DimensionError("invalid subsystem index");
    }
    int dk = dims[k];
    int right = 1;
    for (int s = k + 1; s < (int)dims.size(); s++) {
        right *= dims[s];
    }
    Mat r = m;
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            if ((i / right) % dk != (j / right) % dk) {
                r(i, j) = 0;
            }
        }
    }
    return r;
}

DensityOp classicalize_state(const DensityOp &rho, int k) {
    return DensityOp(classicalize(rho.mat, rho.dims, k), rho.dims);
}

ChoiChannel classicalize_channel(const ChoiChannel &ch) {
    // T(T_AA') is the Choi operator dephased on A'.
    return ChoiChannel(classicalize(ch.choi, ch.dims(), 0), ch.d_in, ch.d_out, ch.tp);
}

bool is_cq(const Mat &m, const Dims &dims, int k, double tol) {
    return (m - classicalize(m, dims, k)).cwiseAbs().maxCoeff() <= tol;
}

bool is_cq(const DensityOp &rho, int k, double tol) {
    return is_cq(rho.mat, rho.dims, k, tol);
}

Mat gaussian_matrix(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Mat g(rows, cols);
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            double re = n(rng);
            double im = n(rng);
            g(i, j) = cplx(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

Mat random_hermitian(int n, std::mt19937_64 &rng) {
    Mat g = gaussian_matrix(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

DensityOp random_density(const Dims &dims, int rank, std::mt19937_64 &rng) {
    int n = dims_product(dims);
    if (rank < 1 || rank > n) {
        throw DimensionError("rank must lie in [1, dimension]");
    }
    Mat g = gaussian_matrix(n, rank, rng);
    Mat rho = g * g.adjoint();
    rho /= trace_real(rho);
    return DensityOp(0.5 * (rho + rho.adjoint()), dims);
}

DensityOp random_density(const Dims &dims, int rank, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_density(dims, rank, rng);
}

ChoiChannel random_channel(int d_in, int d_out, bool tp, std::mt19937_64 &rng) {
    int n = d_in * d_out;
    Mat g = gaussian_matrix(n, n, rng);
    Mat w = g * g.adjoint();
    if (tp) {
        Mat m = partial_trace(w, {d_in, d_out}, {0});
        Mat k = tensor(mpow((double)d_in * m, -0.5), Mat::Identity(d_out, d_out));
        w = k * w * k.adjoint();
    } else {
        w /= trace_real(w);
    }
    return ChoiChannel(0.5 * (w + w.adjoint()), d_in, d_out, tp);
}

ChoiChannel random_channel(int d_in, int d_out, bool tp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_channel(d_in, d_out, tp, rng);
}

DensityOp random_cq_state(int d_a, int d_r, std::mt19937_64 &rng) {
    Mat rho = Mat::Zero(d_a * d_r, d_a * d_r);
    for (int i = 0; i < d_a; i++) {
        Mat g = gaussian_matrix(d_r, d_r, rng);
        rho.block(i * d_r, i * d_r, d_r, d_r) = g * g.adjoint();
    }
    rho /= trace_real(rho);
    return DensityOp(0.5 * (rho + rho.adjoint()), {d_a, d_r});
}

}  // namespace declab
