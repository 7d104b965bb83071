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

#include <algorithm>
#include <cmath>
#include <string>

namespace declab {

namespace {

std::vector<int> strides_of(const Dims &dims) {
    std::vector<int> s(dims.size(), 1);
    for (int k = (int)dims.size() - 2; k >= 0; k--) {
        s[k] = s[k + 1] * dims[k + 1];
    }
    return s;
}

// Offsets of all multi-indices over the listed subsystems, enumerated in row-major order.
std::vector<int> offsets_over(const Dims &dims, const std::vector<int> &subs) {
    auto strides = strides_of(dims);
    std::vector<int> offs{0};
    for (int s : subs) {
        std::vector<int> next;
        next.reserve(offs.size() * dims[s]);
        for (int o : offs) {
            for (int i = 0; i < dims[s]; i++) {
                next.push_back(o + i * strides[s]);
            }
        }
        offs.swap(next);
    }
    return offs;
}

}  // namespace

int dims_product(const Dims &dims) {
    int p = 1;
    for (int d : dims) {
        if (d < 1) {
            throw DimensionError("subsystem dimension must be at least 1");
        }
        p *= d;
    }
    return p;
}

void check_dims(const Mat &m, const Dims &dims) {
    int n = dims_product(dims);
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             " but subsystem dimensions multiply to " + std::to_string(n));
    }
}

HermitianOp::HermitianOp(Mat m, Dims d) : mat(std::move(m)), dims(std::move(d)) {
    check_dims(mat, dims);
    if (!is_hermitian(mat)) {
        throw NotHermitianError("operator is not Hermitian");
    }
}

Mat tensor(const Mat &a, const Mat &b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return r;
}

Mat tensor(const std::vector<Mat> &factors) {
    Mat r = Mat::Identity(1, 1);
    for (const auto &f : factors) {
        r = tensor(r, f);
    }
    return r;
}

Mat partial_trace(const Mat &m, const Dims &dims, const std::vector<int> &keep) {
    check_dims(m, dims);
    if (keep.empty()) {
        throw DimensionError("partial_trace needs at least one kept subsystem");
    }
    std::vector<bool> kept(dims.size(), false);
    for (int k : keep) {
        if (k < 0 || k >= (int)dims.size() || kept[k]) {
            throw DimensionError("invalid kept subsystem index");
        }
        kept[k] = true;
    }
    std::vector<int> ks, ts;
    for (int s = 0; s < (int)dims.size(); s++) {
        (kept[s] ? ks : ts).push_back(s);
    }
    auto ok = offsets_over(dims, ks);
    auto ot = offsets_over(dims, ts);
    int n = (int)ok.size();
    Mat r = Mat::Zero(n, n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            cplx acc = 0;
            for (int t : ot) {
                acc += m(ok[i] + t, ok[j] + t);
            }
            r(i, j) = acc;
        }
    }
    return r;
}

Mat permute_subsystems(const Mat &m, const Dims &dims, const std::vector<int> &order) {
    check_dims(m, dims);
    if (order.size() != dims.size()) {
        throw DimensionError("subsystem order has the wrong length");
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < (int)sorted.size(); k++) {
        if (sorted[k] != k) {
            throw DimensionError("subsystem order is not a permutation");
        }
    }
    auto src = offsets_over(dims, order);
    int n = (int)src.size();
    Mat r(n, n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            r(i, j) = m(src[i], src[j]);
        }
    }
    return r;
}

Mat embed(const Mat &op, const Dims &dims, int k) {
    if (k < 0 || k >= (int)dims.size() || op.rows() != dims[k] || op.cols() != dims[k]) {
        throw DimensionError("embedded operator does not match its subsystem");
    }
    int left = 1, right = 1;
    for (int s = 0; s < k; s++) {
        left *= dims[s];
    }
    for (int s = k + 1; s < (int)dims.size(); s++) {
        right *= dims[s];
    }
    return tensor({Mat::Identity(left, left), op, Mat::Identity(right, right)});
}

RealVec singular_values(const Mat &m) {
    Eigen::BDCSVD<Mat> svd(m);
    return svd.singularValues();
}

double schatten_norm(const Mat &m, Schatten p) {
    if (m.rows() != m.cols()) {
        throw DimensionError("schatten_norm expects a square matrix");
    }
    if (p == Schatten::two) {
        return m.norm();
    }
    RealVec s;
    if (is_hermitian(m, 1e-12)) {
        Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
        s = es.eigenvalues().cwiseAbs();
    } else {
        s = singular_values(m);
    }
    return p == Schatten::one ? s.sum() : s.maxCoeff();
}

Mat swap_operator(int d) {
    if (d < 1) {
        throw DimensionError("swap_operator needs d >= 1");
    }
    Mat f = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            f(i * d + j, j * d + i) = 1;
        }
    }
    return f;
}

double hermiticity_error(const Mat &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Mat hermitian_part(const Mat &m) {
    Mat r = 0.5 * (m + m.adjoint());
    return r;
}

bool is_hermitian(const Mat &m, double tol) {
    return hermiticity_error(m) <= tol;
}

EigResult eig_hermitian(const Mat &m) {
    if (!is_hermitian(m)) {
        throw NotHermitianError("eig_hermitian: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
    return {es.eigenvalues(), es.eigenvectors()};
}

Mat mpow(const Mat &m, double exponent) {
    auto e = eig_hermitian(m);
    double lmax = e.values.cwiseAbs().maxCoeff();
    if (e.values.minCoeff() < -1e-10 * std::max(1.0, lmax)) {
        throw NotPositiveError("mpow: matrix has a negative eigenvalue");
    }
    // Positive powers are continuous at zero; only inverse-type powers need the support cutoff.
    double cut = exponent > 0 ? 0.0 : 1e-12 * lmax;
    RealVec v(e.values.size());
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double x = e.values(i);
        v(i) = x <= cut ? 0.0 : std::pow(x, exponent);
    }
    return e.vectors * v.asDiagonal() * e.vectors.adjoint();
}

Mat support_projector(const Mat &m) {
    auto e = eig_hermitian(m);
    double cut = 1e-12 * e.values.cwiseAbs().maxCoeff();
    RealVec v(e.values.size());
    for (Eigen::Index i = 0; i < v.size(); i++) {
        v(i) = e.values(i) > cut ? 1.0 : 0.0;
    }
    return e.vectors * v.asDiagonal() * e.vectors.adjoint();
}

double trace_real(const Mat &m) {
    return m.trace().real();
}

}  // namespace declab
