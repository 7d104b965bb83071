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

#ifndef DECLAB_MATCA_H
#define DECLAB_MATCA_H

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace declab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Ordered subsystem dimensions of a tensor-product space.
using Dims = std::vector<int>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositiveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int dims_product(const Dims &dims);

/// Throws DimensionError unless `m` is square with side equal to the product of `dims`.
void check_dims(const Mat &m, const Dims &dims);

/// A Hermitian operator together with its subsystem layout.
struct HermitianOp {
    Mat mat;
    Dims dims;

    HermitianOp() = default;
    /// Validates Hermiticity (relative 1e-10) and the dimension layout.
    HermitianOp(Mat m, Dims d);
};

/// Kronecker product, (A⊗B)[i*rB+k, j*cB+l] = A[i,j]*B[k,l].
Mat tensor(const Mat &a, const Mat &b);
Mat tensor(const std::vector<Mat> &factors);

/// Traces out every subsystem not listed in `keep`. Kept subsystems stay in their original order.
Mat partial_trace(const Mat &m, const Dims &dims, const std::vector<int> &keep);

/// Reorders tensor factors: output factor k is input factor order[k].
Mat permute_subsystems(const Mat &m, const Dims &dims, const std::vector<int> &order);

/// I ⊗ ... ⊗ op ⊗ ... ⊗ I with `op` on subsystem `k`.
Mat embed(const Mat &op, const Dims &dims, int k);

enum class Schatten { one, two, inf };

double schatten_norm(const Mat &m, Schatten p);

/// Singular values in descending order.
RealVec singular_values(const Mat &m);

/// F = Σ_ij |i><j| ⊗ |j><i| on C^d ⊗ C^d.
Mat swap_operator(int d);

struct EigResult {
    RealVec values;  // ascending
    Mat vectors;     // columns are eigenvectors
};

/// Largest |M - M^†| entry, relative to max(1, max |M|).
double hermiticity_error(const Mat &m);

/// (M + M†)/2.
Mat hermitian_part(const Mat &m);

bool is_hermitian(const Mat &m, double tol = 1e-10);

EigResult eig_hermitian(const Mat &m);

/// Spectral power of a PSD matrix. Negative exponents act on the support only
/// (eigenvalues below 1e-12 * λ_max are mapped to zero).
Mat mpow(const Mat &m, double exponent);

/// Projector onto the eigenvectors whose eigenvalues exceed 1e-12 * λ_max.
Mat support_projector(const Mat &m);

double trace_real(const Mat &m);

}  // namespace declab

#endif
