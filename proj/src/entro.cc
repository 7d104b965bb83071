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

#include "declab/entro.h"

#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace declab {

namespace {

// Orthonormal (Hilbert-Schmidt) basis of d×d Hermitian matrices.
std::vector<Mat> hermitian_basis(int d) {
    std::vector<Mat> basis;
    for (int i = 0; i < d; i++) {
        Mat h = Mat::Zero(d, d);
        h(i, i) = 1;
        basis.push_back(h);
    }
    double s = 1 / std::sqrt(2.0);
    for (int i = 0; i < d; i++) {
        for (int j = i + 1; j < d; j++) {
            Mat h = Mat::Zero(d, d);
            h(i, j) = s;
            h(j, i) = s;
            basis.push_back(h);
            Mat g = Mat::Zero(d, d);
            g(i, j) = cplx(0, -s);
            g(j, i) = cplx(0, s);
            basis.push_back(g);
        }
    }
    return basis;
}

Mat zeta_of(const std::vector<Mat> &basis, const RealVec &x) {
    Mat z = Mat::Zero(basis[0].rows(), basis[0].cols());
    for (size_t k = 0; k < basis.size(); k++) {
        z += x((Eigen::Index)k) * basis[k];
    }
    return z;
}

struct Barrier {
    const Mat &rho;
    int da, db;
    const std::vector<Mat> &basis;

    Mat slack(const RealVec &x) const {
        return tensor(Mat::Identity(da, da), zeta_of(basis, x)) - rho;
    }

    // t·tr ζ - log det S, or +inf outside the feasible cone.
    double value(const RealVec &x, double t) const {
        Mat s = slack(x);
        Eigen::LLT<Mat> llt(0.5 * (s + s.adjoint()));
        if (llt.info() != Eigen::Success) {
            return std::numeric_limits<double>::infinity();
        }
        double logdet = 0;
        for (Eigen::Index i = 0; i < s.rows(); i++) {
            double diag = llt.matrixL()(i, i).real();
            if (!(diag > 0)) {
                return std::numeric_limits<double>::infinity();
            }
            logdet += 2 * std::log(diag);
        }
        return t * trace_real(zeta_of(basis, x)) - logdet;
    }
};

double min_eigenvalue(const Mat &m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace

double h_min(const Mat &rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().maxCoeff();
    if (!(lmax > 0)) {
        throw std::invalid_argument("h_min of a zero operator");
    }
    return -std::log2(lmax);
}

EntropyResult h_min_cond(const Mat &rho, const Dims &dims) {
    check_dims(rho, dims);
    if (dims.size() != 2) {
        throw DimensionError("h_min_cond expects a bipartite operator");
    }
    int da = dims[0], db = dims[1];
    int n = da * db;
    auto basis = hermitian_basis(db);
    int nv = (int)basis.size();
    Barrier bar{rho, da, db, basis};

    Eigen::SelfAdjointEigenSolver<Mat> es0(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    double lmax = es0.eigenvalues().maxCoeff();
    if (!(lmax > 0)) {
        throw std::invalid_argument("h_min_cond of a zero operator");
    }
    // Start at ζ = c·I with c above λ_max(ρ), strictly feasible.
    RealVec x = RealVec::Zero(nv);
    for (int i = 0; i < db; i++) {
        x(i) = 2 * lmax;
    }

    double t = (double)n / trace_real(zeta_of(basis, x));
    const double mu = 8;
    const double rel_gap = 1e-10;
    Mat sinv;
    for (int outer = 0; outer < 200; outer++) {
        for (int it = 0; it < 100; it++) {
            Mat s = bar.slack(x);
            Eigen::LLT<Mat> llt(0.5 * (s + s.adjoint()));
            sinv = llt.solve(Mat::Identity(n, n));
            sinv = hermitian_part(sinv);
            Mat w = partial_trace(sinv, dims, {1});
            RealVec grad(nv);
            std::vector<Mat> y(nv);
            for (int k = 0; k < nv; k++) {
                grad(k) = t * basis[k].trace().real() - (w * basis[k]).trace().real();
                y[k] = sinv * tensor(Mat::Identity(da, da), basis[k]);
            }
            Eigen::MatrixXd hess(nv, nv);
            for (int k = 0; k < nv; k++) {
                for (int l = k; l < nv; l++) {
                    double v = (y[k].cwiseProduct(y[l].transpose())).sum().real();
                    hess(k, l) = v;
                    hess(l, k) = v;
                }
            }
            RealVec dx = hess.ldlt().solve(-grad);
            double dec2 = -grad.dot(dx);
            if (!(dec2 > 1e-20)) {
                break;
            }
            // Damped Newton step for a self-concordant barrier; needs no function values,
            // which lose all precision once t·tr ζ is large.
            double step = dec2 > 0.25 ? 1 / (1 + std::sqrt(dec2)) : 1.0;
            while (step > 1e-14 && !std::isfinite(bar.value(x + step * dx, t))) {
                step *= 0.5;
            }
            if (step <= 1e-14) {
                break;
            }
            x += step * dx;
            if (dec2 < 1e-18) {
                break;
            }
        }
        double tr = trace_real(zeta_of(basis, x));
        if ((double)n / t <= rel_gap * tr) {
            break;
        }
        t *= mu;
    }

    Mat zeta = zeta_of(basis, x);
    zeta = hermitian_part(zeta);
    double tr = trace_real(zeta);

    // Dual certificate: Y = S^{-1}/t, rescaled so that tr_A Y = I holds exactly.
    Mat sfin = bar.slack(x);
    Mat y = sfin.inverse() / t;
    y = hermitian_part(y);
    Mat m = partial_trace(y, dims, {1});
    Mat k = tensor(Mat::Identity(da, da), mpow(m, -0.5));
    Mat yc = k * y * k.adjoint();
    double dual = (rho * yc).trace().real();
    double gap = tr - dual;
    double resid = std::max(0.0, -min_eigenvalue(sfin));
    if (!(gap <= 1e-7 * std::max(1.0, tr)) || resid > 1e-8) {
        throw SolverError("h_min_cond: SDP did not converge (gap " + std::to_string(gap) + ", residual " +
                          std::to_string(resid) + ")");
    }

    EntropyResult r;
    r.value = -std::log2(tr);
    r.optimizer = DensityOp(zeta / tr, {db});
    r.method = EntropyMethod::optimized;
    r.gap = gap;
    r.residual = resid;
    return r;
}

EntropyResult h_min_cond(const DensityOp &rho_ab) {
    return h_min_cond(rho_ab.mat, rho_ab.dims);
}

double collision_term(const Mat &rho, const Dims &dims, const Mat &sigma) {
    check_dims(rho, dims);
    if (dims.size() != 2 || sigma.rows() != dims[1]) {
        throw DimensionError("collision_term: σ must live on the conditioning system");
    }
    int da = dims[0];
    double tr = trace_real(rho);
    Mat rho_b = partial_trace(rho, dims, {1});
    Mat outside = Mat::Identity(sigma.rows(), sigma.cols()) - support_projector(sigma);
    if ((outside * rho_b * outside).trace().real() > 1e-10 * std::max(tr, 1e-300)) {
        throw SupportError("supp(σ_B) does not contain supp(ρ_B)");
    }
    Mat k = tensor(Mat::Identity(da, da), mpow(sigma, -0.5)) * rho;
    return (k * k).trace().real() / tr;
}

namespace {

struct NmContext {
    const Mat *rho;
    const Dims *dims;
    int db;
    double tr;
};

Mat sigma_from_params(const gsl_vector *v, int db) {
    Mat l = Mat::Zero(db, db);
    size_t p = 0;
    for (int i = 0; i < db; i++) {
        l(i, i) = gsl_vector_get(v, p++);
    }
    for (int i = 0; i < db; i++) {
        for (int j = 0; j < i; j++) {
            double re = gsl_vector_get(v, p++);
            double im = gsl_vector_get(v, p++);
            l(i, j) = cplx(re, im);
        }
    }
    Mat s = l * l.adjoint();
    double tr = trace_real(s);
    if (!(tr > 0)) {
        return Mat::Zero(db, db);
    }
    return s / tr;
}

double nm_objective(const gsl_vector *v, void *params) {
    auto *ctx = static_cast<NmContext *>(params);
    Mat s = sigma_from_params(v, ctx->db);
    try {
        if (s.cwiseAbs().maxCoeff() == 0) {
            return 1e300;
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(s);
        const RealVec &ev = es.eigenvalues();
        if (ev.minCoeff() > 1e-12 * ev.maxCoeff()) {
            // Full-rank σ: skip the support test and evaluate directly.
            Mat sm = es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
            Mat k = tensor(Mat::Identity((*ctx->dims)[0], (*ctx->dims)[0]), sm) * (*ctx->rho);
            double val = (k * k).trace().real() / ctx->tr;
            return std::isfinite(val) ? val : 1e300;
        }
        double val = collision_term(*ctx->rho, *ctx->dims, s);
        return std::isfinite(val) ? val : 1e300;
    } catch (const std::exception &) {
        return 1e300;
    }
}

void params_from_lower(const Mat &l, gsl_vector *v) {
    int db = (int)l.rows();
    size_t p = 0;
    for (int i = 0; i < db; i++) {
        gsl_vector_set(v, p++, l(i, i).real());
    }
    for (int i = 0; i < db; i++) {
        for (int j = 0; j < i; j++) {
            gsl_vector_set(v, p++, l(i, j).real());
            gsl_vector_set(v, p++, l(i, j).imag());
        }
    }
}

// Nelder-Mead from a starting Cholesky factor; returns the best objective value and σ.
std::pair<double, Mat> nm_search(NmContext &ctx, const Mat &l0) {
    int db = ctx.db;
    size_t n = (size_t)db * db;
    gsl_vector *x = gsl_vector_alloc(n);
    gsl_vector *step = gsl_vector_alloc(n);
    params_from_lower(l0, x);
    double scale = l0.cwiseAbs().maxCoeff();
    gsl_vector_set_all(step, 0.2 * (scale > 0 ? scale : 1.0));
    gsl_multimin_function fn{&nm_objective, n, &ctx};
    gsl_multimin_fminimizer *mm = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
    gsl_multimin_fminimizer_set(mm, &fn, x, step);
    int max_iter = 200 * (int)n;
    for (int it = 0; it < max_iter; it++) {
        if (gsl_multimin_fminimizer_iterate(mm) != GSL_SUCCESS) {
            break;
        }
        double size = gsl_multimin_fminimizer_size(mm);
        if (gsl_multimin_test_size(size, 1e-7 * (scale > 0 ? scale : 1.0)) == GSL_SUCCESS) {
            break;
        }
    }
    double best = mm->fval;
    Mat sigma = sigma_from_params(mm->x, db);
    gsl_multimin_fminimizer_free(mm);
    gsl_vector_free(step);
    gsl_vector_free(x);
    return {best, sigma};
}

}  // namespace

EntropyResult h2_cond(const Mat &rho, const Dims &dims, const std::optional<Mat> &sigma, const H2Options &opts) {
    check_dims(rho, dims);
    if (dims.size() != 2) {
        throw DimensionError("h2_cond expects a bipartite operator");
    }
    int db = dims[1];
    EntropyResult r;
    if (sigma.has_value()) {
        r.value = -std::log2(collision_term(rho, dims, *sigma));
        r.optimizer = DensityOp(*sigma / trace_real(*sigma), {db});
        r.method = EntropyMethod::fixed_sigma;
        return r;
    }
    Mat rho_b = partial_trace(rho, dims, {1});
    Mat s0 = rho_b / trace_real(rho_b);
    s0 = hermitian_part(s0);
    double best = collision_term(rho, dims, s0);
    Mat best_sigma = s0;
    r.method = EntropyMethod::fixed_sigma;
    if (opts.optimize) {
        static std::once_flag gsl_quiet;
        std::call_once(gsl_quiet, [] { gsl_set_error_handler_off(); });
        NmContext ctx{&rho, &dims, db, trace_real(rho)};
        std::mt19937_64 rng(opts.seed);
        for (int k = 0; k < opts.restarts; k++) {
            Mat l0;
            if (k == 0) {
                Eigen::LLT<Mat> llt(s0 + 1e-9 * Mat::Identity(db, db));
                l0 = llt.matrixL();
            } else {
                Mat g = gaussian_matrix(db, db, rng);
                l0 = g.triangularView<Eigen::Lower>();
                for (int i = 0; i < db; i++) {
                    l0(i, i) = std::abs(l0(i, i)) + 0.1;
                }
            }
            auto [val, sig] = nm_search(ctx, l0);
            if (val < best) {
                best = val;
                best_sigma = sig;
            }
        }
        r.method = EntropyMethod::optimized;
    }
    r.value = -std::log2(best);
    best_sigma = hermitian_part(best_sigma);
    r.optimizer = DensityOp(best_sigma / trace_real(best_sigma), {db});
    return r;
}

EntropyResult h2_cond(const DensityOp &rho_ab, const std::optional<Mat> &sigma, const H2Options &opts) {
    return h2_cond(rho_ab.mat, rho_ab.dims, sigma, opts);
}

double trace_distance(const Mat &rho, const Mat &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw DimensionError("trace_distance: shape mismatch");
    }
    return schatten_norm(rho - sigma, Schatten::one);
}

double generalized_trace_distance(const Mat &rho, const Mat &sigma) {
    return trace_distance(rho, sigma) + std::abs(trace_real(rho) - trace_real(sigma));
}

double fidelity(const Mat &rho, const Mat &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw DimensionError("fidelity: shape mismatch");
    }
    return singular_values(mpow(rho, 0.5) * mpow(sigma, 0.5)).sum();
}

double generalized_fidelity(const Mat &rho, const Mat &sigma) {
    double a = 1 - trace_real(rho);
    double b = 1 - trace_real(sigma);
    return fidelity(rho, sigma) + std::sqrt(std::max(0.0, a * b));
}

double purified_distance(const Mat &rho, const Mat &sigma) {
    double f = generalized_fidelity(rho, sigma);
    return std::sqrt(std::max(0.0, 1 - f * f));
}

bool in_epsilon_ball(const Mat &rho, const Mat &sigma, double eps) {
    if (!(std::sqrt(std::max(0.0, trace_real(rho))) > eps)) {
        throw std::invalid_argument("in_epsilon_ball requires sqrt(tr rho) > eps");
    }
    // Compared as P̄² so that P̄(ρ, ρ) = 0 survives rounding in F̄ (the square root would magnify it to ~1e-6).
    double f = generalized_fidelity(sigma, rho);
    return 1 - f * f <= eps * eps + 1e-10;
}

}  // namespace declab
