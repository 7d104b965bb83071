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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace declab {

double VerificationReport::gap() const {
    return kind == CheckKind::equality ? std::abs(lhs - rhs) : rhs - lhs;
}

VerificationReport equality_report(std::string name, double lhs, double rhs, double tol) {
    VerificationReport r;
    r.name = std::move(name);
    r.kind = CheckKind::equality;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.pass = std::isfinite(lhs) && std::isfinite(rhs) && std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
    r.strict_pass = r.pass;
    return r;
}

VerificationReport bound_report(std::string name, double lhs, double rhs, double tol, double std_err) {
    VerificationReport r;
    r.name = std::move(name);
    r.kind = CheckKind::upper_bound;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.std_err = std_err;
    bool finite = std::isfinite(lhs) && std::isfinite(rhs);
    r.pass = finite && lhs <= rhs + tol + 3 * std_err;
    r.strict_pass = finite && lhs <= rhs + tol;
    return r;
}

Mat conjugate_first(const Mat &x, const Permutation &p, int d_a) {
    int n = (int)x.rows();
    if (n % d_a != 0 || p.size() != d_a) {
        throw DimensionError("permutation does not match the first factor");
    }
    int rest = n / d_a;
    std::vector<int> img(n);
    for (int a = 0; a < d_a; a++) {
        for (int r = 0; r < rest; r++) {
            img[a * rest + r] = p(a) * rest + r;
        }
    }
    Mat out(n, n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            out(img[i], img[j]) = x(i, j);
        }
    }
    return out;
}

Mat conjugate_first(const Mat &x, const Mat &u) {
    int n = (int)x.rows();
    int d_a = (int)u.rows();
    if (n % d_a != 0) {
        throw DimensionError("unitary does not match the first factor");
    }
    Mat v = tensor(u, Mat::Identity(n / d_a, n / d_a));
    return v * x * v.adjoint();
}

Mat embedded_max_entangled(int d_a, int d_r) {
    if (d_r < 1 || d_r > d_a) {
        throw DimensionError("need 1 <= d_r <= d_a");
    }
    int n = d_a * d_r;
    Mat m = Mat::Zero(n, n);
    for (int i = 0; i < d_r; i++) {
        for (int j = 0; j < d_r; j++) {
            m(i * d_r + i, j * d_r + j) = 1.0 / d_r;
        }
    }
    return m;
}

Mat embedded_classical_correlated(int d_a, int d_r) {
    if (d_r < 1 || d_r > d_a) {
        throw DimensionError("need 1 <= d_r <= d_a");
    }
    int n = d_a * d_r;
    Mat m = Mat::Zero(n, n);
    for (int i = 0; i < d_r; i++) {
        m(i * d_r + i, i * d_r + i) = 1.0 / d_r;
    }
    return m;
}

namespace {

struct Moments {
    double mean = 0;
    double std_err = 0;
};

Moments moments(const std::vector<double> &v) {
    Moments m;
    double n = (double)v.size();
    for (double x : v) {
        m.mean += x;
    }
    m.mean /= n;
    if (v.size() > 1) {
        double s = 0;
        for (double x : v) {
            s += (x - m.mean) * (x - m.mean);
        }
        m.std_err = std::sqrt(s / (n - 1) / n);
    }
    return m;
}

void check_bipartite(const Dims &dims, const ChoiChannel &ch) {
    if (dims.size() != 2) {
        throw DimensionError("expected a state on A ⊗ R");
    }
    if (dims[0] != ch.d_in) {
        throw DimensionError("channel input dimension differs from d_A");
    }
}

void check_perm_dim(int d_a, const VerifyOptions &opt) {
    if (d_a < 2 || d_a > std::min(opt.max_perm_dim, 7)) {
        throw DimensionError("exhaustive permutation sum needs 2 <= d_A <= " + std::to_string(opt.max_perm_dim));
    }
}

void require_cq(const DensityOp &rho) {
    if (!is_cq(rho, 0)) {
        throw std::invalid_argument("state is not classical on A");
    }
}

double sq2(const Mat &m) {
    return m.squaredNorm();
}

double h2_of(const Mat &m, const Dims &dims, const VerifyOptions &opt) {
    return h2_cond(m, dims, std::nullopt, opt.h2).value;
}

// ‖x - π_{A1} ⊗ ρ_R‖ after tracing out A₂ on A = A₁A₂.
Mat hashed_difference(const Mat &y, int d_a1, int d_a2, int d_r, const Mat &rho_r) {
    Mat z = partial_trace(y, {d_a1, d_a2, d_r}, {0, 2});
    return z - tensor(maximally_mixed(d_a1), rho_r);
}

}  // namespace

std::vector<VerificationReport> verify_decoupling_lemma(const HermitianOp &rho_ar, const ChoiChannel &ch,
                                                        const VerifyOptions &opt) {
    check_bipartite(rho_ar.dims, ch);
    int da = ch.d_in, de = ch.d_out;
    Mat rho_r = partial_trace(rho_ar.mat, rho_ar.dims, {1});
    Mat lam = rho_ar.mat - tensor(maximally_mixed(da), rho_r);
    Mat lam_r = partial_trace(lam, rho_ar.dims, {1});
    // M = (T†)^⊗2[F_E] = Σ_ef T†(|e><f|) ⊗ T†(|f><e|).
    Mat m = Mat::Zero(da * da, da * da);
    for (int e = 0; e < de; e++) {
        for (int f = 0; f < de; f++) {
            Mat ef = Mat::Zero(de, de), fe = Mat::Zero(de, de);
            ef(e, f) = 1;
            fe(f, e) = 1;
            m += tensor(apply_adjoint(ch, ef), apply_adjoint(ch, fe));
        }
    }
    TwirlResult tw = haar_twirl2_exact(m, da);
    // tr[λ^⊗2 (αI + βF_A) ⊗ F_R] = α tr λ_R² + β tr λ².
    double lhs = tw.alpha * (lam_r * lam_r).trace().real() + tw.beta * (lam * lam).trace().real();
    double d2 = (double)da * da;
    Mat omega_diff = ch.choi - tensor(maximally_mixed(da), ch.output_marginal());
    double rhs = d2 / (d2 - 1) * sq2(lam) * sq2(omega_diff);
    auto r = equality_report("decoupling_lemma", lhs, rhs, opt.eq_tol);
    r.meta = {{"d_A", da}, {"d_R", rho_ar.dims[1]}, {"d_E", de}, {"alpha", tw.alpha}, {"beta", tw.beta}};
    return {r};
}

VerificationReport decoupling_lemma_mc(const HermitianOp &rho_ar, const ChoiChannel &ch, int n_samples,
                                       std::uint64_t seed) {
    if (n_samples < 2) {
        throw std::invalid_argument("Monte Carlo check needs at least two samples");
    }
    double exact = verify_decoupling_lemma(rho_ar, ch)[0].lhs;
    int da = ch.d_in;
    Mat rho_r = partial_trace(rho_ar.mat, rho_ar.dims, {1});
    Mat target = tensor(ch.output_marginal(), rho_r);
    std::mt19937_64 rng(seed);
    std::vector<double> vals(n_samples);
    for (int k = 0; k < n_samples; k++) {
        Mat u = haar_sample(da, rng);
        Mat out = apply_channel(ch, conjugate_first(rho_ar.mat, u), rho_ar.dims, 0);
        vals[k] = sq2(out - target);
    }
    Moments mo = moments(vals);
    auto r = equality_report("decoupling_lemma_mc", mo.mean, exact, 3 * mo.std_err / std::max(1.0, std::abs(exact)));
    r.std_err = mo.std_err;
    r.meta = {{"samples", n_samples}, {"seed", (double)seed}};
    return r;
}

namespace {

std::vector<double> haar_one_norms(const Mat &rho, const Dims &dims, const ChoiChannel &ch, int n,
                                   std::uint64_t seed) {
    Mat rho_r = partial_trace(rho, dims, {1});
    Mat target = tensor(ch.output_marginal(), rho_r);
    std::mt19937_64 rng(seed);
    std::vector<double> vals(n);
    for (int k = 0; k < n; k++) {
        Mat u = haar_sample(ch.d_in, rng);
        Mat out = apply_channel(ch, conjugate_first(rho, u), dims, 0);
        vals[k] = schatten_norm(out - target, Schatten::one);
    }
    return vals;
}

}  // namespace

std::vector<VerificationReport> verify_decoupling_theorem(const DensityOp &rho, const ChoiChannel &ch,
                                                          int n_samples, std::uint64_t seed,
                                                          const VerifyOptions &opt) {
    check_bipartite(rho.dims, ch);
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    Moments mo = moments(haar_one_norms(rho.mat, rho.dims, ch, n_samples, seed));
    double h2w = h2_of(ch.choi, ch.dims(), opt);
    double h2r = h2_of(rho.mat, rho.dims, opt);
    double rhs = std::exp2(-0.5 * h2w - 0.5 * h2r);
    auto r = bound_report("decoupling_theorem", mo.mean, rhs, opt.bound_tol, mo.std_err);
    r.meta = {{"d_A", ch.d_in}, {"d_R", rho.dims[1]}, {"d_E", ch.d_out}, {"samples", n_samples},
              {"seed", (double)seed}, {"H2_channel", h2w}, {"H2_state", h2r}};
    return {r};
}

std::vector<VerificationReport> verify_improved_decoupling(const DensityOp &rho, const ChoiChannel &ch,
                                                           int n_samples, std::uint64_t seed,
                                                           const VerifyOptions &opt) {
    check_bipartite(rho.dims, ch);
    if (n_samples < 1) {
        throw std::invalid_argument("n_samples must be at least 1");
    }
    int da = ch.d_in;
    double dd = da;
    Moments mo = moments(haar_one_norms(rho.mat, rho.dims, ch, n_samples, seed));
    double hw = h_min_cond(ch.choi, ch.dims()).value;
    double hr = h_min_cond(rho.mat, rho.dims).value;
    Mat rho_r = partial_trace(rho.mat, rho.dims, {1});
    double b1 = std::exp2(-hw) - trace_real(ch.choi) / dd;
    double b2 = std::exp2(-hr) - trace_real(rho_r) / dd;
    double n1 = schatten_norm(ch.choi - tensor(maximally_mixed(da), ch.output_marginal()), Schatten::one);
    double n2 = schatten_norm(rho.mat - tensor(maximally_mixed(da), rho_r), Schatten::one);
    double rhs = std::sqrt(std::max(0.0, b1 * b2) / (1 - 1 / (dd * dd))) * std::sqrt(n1 * n2);
    auto r = bound_report("improved_decoupling", mo.mean, rhs, opt.bound_tol, mo.std_err);
    r.meta = {{"d_A", da}, {"d_R", rho.dims[1]}, {"d_E", ch.d_out}, {"samples", n_samples},
              {"seed", (double)seed}, {"Hmin_channel", hw}, {"Hmin_state", hr}};
    std::vector<VerificationReport> out{r};
    out.push_back(bound_report("improved_decoupling.bracket_channel", trace_real(ch.choi) / dd, std::exp2(-hw),
                               opt.bound_tol));
    out.push_back(bound_report("improved_decoupling.bracket_state", trace_real(rho_r) / dd, std::exp2(-hr),
                               opt.bound_tol));
    double h2rhs = std::exp2(-0.5 * h2_of(ch.choi, ch.dims(), opt) - 0.5 * h2_of(rho.mat, rho.dims, opt));
    out.push_back(bound_report("improved_decoupling.h2_theorem", mo.mean, h2rhs, opt.bound_tol, mo.std_err));
    return out;
}

std::vector<VerificationReport> verify_design_decoupling(const UnitaryEnsemble &ens, const DensityOp &rho,
                                                         const ChoiChannel &ch, double eps,
                                                         const VerifyOptions &opt) {
    check_bipartite(rho.dims, ch);
    int da = ch.d_in;
    if (ens.dim() != da) {
        throw DimensionError("ensemble dimension differs from d_A");
    }
    if (eps < 0) {
        eps = design_epsilon_bound(ens, da);
    }
    Mat rho_r = partial_trace(rho.mat, rho.dims, {1});
    Mat target = tensor(ch.output_marginal(), rho_r);
    double lhs = 0;
    for (size_t i = 0; i < ens.size(); i++) {
        Mat out = apply_channel(ch, conjugate_first(rho.mat, ens.unitaries[i]), rho.dims, 0);
        lhs += ens.weights[i] * schatten_norm(out - target, Schatten::one);
    }
    double h2w = h2_of(ch.choi, ch.dims(), opt);
    double h2r = h2_of(rho.mat, rho.dims, opt);
    double d4 = std::pow((double)da, 4);
    double rhs = std::sqrt(1 + 4 * eps * d4) * std::exp2(-0.5 * (h2w + h2r));
    auto r = bound_report("design_decoupling", lhs, rhs, opt.bound_tol);
    r.meta = {{"d_A", da}, {"d_R", rho.dims[1]}, {"d_E", ch.d_out}, {"ensemble_size", (double)ens.size()},
              {"epsilon", eps}};
    return {r};
}

std::vector<VerificationReport> verify_cq_decoupling_lemma(const DensityOp &rho_cq, const ChoiChannel &ch,
                                                           const VerifyOptions &opt) {
    check_bipartite(rho_cq.dims, ch);
    require_cq(rho_cq);
    int da = ch.d_in;
    check_perm_dim(da, opt);
    Mat rho_r = partial_trace(rho_cq.mat, rho_cq.dims, {1});
    Mat target = tensor(ch.output_marginal(), rho_r);
    auto perms = all_perms(da);
    double lhs = 0;
    for (const auto &p : perms) {
        Mat out = apply_channel(ch, conjugate_first(rho_cq.mat, p, da), rho_cq.dims, 0);
        lhs += sq2(out - target);
    }
    lhs /= (double)perms.size();
    Mat pi = maximally_mixed(da);
    Mat wcl = classicalize(ch.choi, ch.dims(), 0);
    Mat wcl_e = partial_trace(wcl, ch.dims(), {1});
    double dd = da;
    double rhs = dd * dd / (dd - 1) * sq2(rho_cq.mat - tensor(pi, rho_r)) * sq2(wcl - tensor(pi, wcl_e));
    auto r = equality_report("cq_decoupling_lemma", lhs, rhs, opt.eq_tol);
    r.meta = {{"d_A", da}, {"d_R", rho_cq.dims[1]}, {"d_E", ch.d_out}};
    return {r};
}

namespace {

struct HashSums {
    double one = 0;
    double two_sq = 0;
};

HashSums hash_sums(const std::vector<Permutation> &perms, const std::vector<double> &weights, const DensityOp &rho,
                   int d_a1, int d_a2) {
    int da = rho.dims[0], dr = rho.dims[1];
    Mat rho_r = partial_trace(rho.mat, rho.dims, {1});
    HashSums s;
    for (size_t k = 0; k < perms.size(); k++) {
        Mat z = hashed_difference(conjugate_first(rho.mat, perms[k], da), d_a1, d_a2, dr, rho_r);
        s.one += weights[k] * schatten_norm(z, Schatten::one);
        s.two_sq += weights[k] * sq2(z);
    }
    return s;
}

void check_split(const DensityOp &rho, int d_a1, int d_a2) {
    if (rho.dims.size() != 2) {
        throw DimensionError("expected a state on A ⊗ R");
    }
    if (d_a1 < 1 || d_a2 < 1 || d_a1 * d_a2 != rho.dims[0]) {
        throw DimensionError("d_A1 · d_A2 must equal d_A");
    }
}

}  // namespace

std::vector<VerificationReport> verify_cq_hash(const DensityOp &rho_cq, int d_a1, int d_a2,
                                               const VerifyOptions &opt) {
    check_split(rho_cq, d_a1, d_a2);
    require_cq(rho_cq);
    int da = rho_cq.dims[0];
    check_perm_dim(da, opt);
    auto perms = all_perms(da);
    std::vector<double> w(perms.size(), 1.0 / (double)perms.size());
    HashSums s = hash_sums(perms, w, rho_cq, d_a1, d_a2);
    double hmin = h_min_cond(rho_cq).value;
    double dd = da;
    double rhs = std::sqrt(d_a1 * (dd - d_a2) / (dd - 1) * std::exp2(-hmin));
    auto r = bound_report("cq_hash", s.one, rhs, opt.bound_tol);
    r.meta = {{"d_A", da}, {"d_A1", d_a1}, {"d_A2", d_a2}, {"d_R", rho_cq.dims[1]}, {"Hmin", hmin}};
    std::vector<VerificationReport> out{r};
    out.push_back(bound_report("cq_hash.weak", s.one, std::sqrt(d_a1 * std::exp2(-hmin)), opt.bound_tol));
    return out;
}

std::vector<VerificationReport> verify_cq_tpcp(const DensityOp &rho_cq, const ChoiChannel &ch,
                                               const VerifyOptions &opt) {
    check_bipartite(rho_cq.dims, ch);
    if (!ch.tp) {
        throw std::invalid_argument("channel is not trace preserving");
    }
    require_cq(rho_cq);
    int da = ch.d_in, de = ch.d_out;
    check_perm_dim(da, opt);
    Mat rho_r = partial_trace(rho_cq.mat, rho_cq.dims, {1});
    Mat target = tensor(ch.output_marginal(), rho_r);
    auto perms = all_perms(da);
    double lhs = 0;
    for (const auto &p : perms) {
        Mat out = apply_channel(ch, conjugate_first(rho_cq.mat, p, da), rho_cq.dims, 0);
        lhs += schatten_norm(out - target, Schatten::one);
    }
    lhs /= (double)perms.size();
    double h2r = h2_of(rho_cq.mat, rho_cq.dims, opt);
    double dd = da, ee = de;
    double rhs = std::sqrt(ee * (dd - dd / ee) / (dd - 1) * std::exp2(-h2r));
    auto r = bound_report("cq_tpcp", lhs, rhs, opt.bound_tol);
    r.meta = {{"d_A", da}, {"d_R", rho_cq.dims[1]}, {"d_E", de}, {"H2_state", h2r}};
    return {r};
}

std::vector<VerificationReport> verify_cq_general(const DensityOp &rho_cq, const ChoiChannel &ch,
                                                  const VerifyOptions &opt) {
    check_bipartite(rho_cq.dims, ch);
    require_cq(rho_cq);
    int da = ch.d_in;
    check_perm_dim(da, opt);
    Mat rho_r = partial_trace(rho_cq.mat, rho_cq.dims, {1});
    Mat target = tensor(ch.output_marginal(), rho_r);
    auto perms = all_perms(da);
    double lhs = 0;
    for (const auto &p : perms) {
        Mat out = apply_channel(ch, conjugate_first(rho_cq.mat, p, da), rho_cq.dims, 0);
        lhs += schatten_norm(out - target, Schatten::one);
    }
    lhs /= (double)perms.size();
    double h2r = h2_of(rho_cq.mat, rho_cq.dims, opt);
    double h2w = h2_of(classicalize(ch.choi, ch.dims(), 0), ch.dims(), opt);
    double rhs = std::sqrt((da + 1.0) * std::exp2(-h2r - h2w));
    auto r = bound_report("cq_general", lhs, rhs, opt.bound_tol);
    r.meta = {{"d_A", da}, {"d_R", rho_cq.dims[1]}, {"d_E", ch.d_out}, {"H2_state", h2r}, {"H2_channel_cl", h2w}};
    return {r};
}

std::vector<VerificationReport> verify_family_hash(const PermFamily &fam, const DensityOp &rho_cq, int d_a1,
                                                   int d_a2, double eps, const VerifyOptions &opt) {
    check_split(rho_cq, d_a1, d_a2);
    require_cq(rho_cq);
    int da = rho_cq.dims[0];
    check_perm_dim(da, opt);
    if (fam.degree() != da) {
        throw DimensionError("family degree differs from d_A");
    }
    if (eps < 0) {
        eps = classical_diamond_distance(fam, da);
    }
    HashSums s = hash_sums(fam.members, fam.weights, rho_cq, d_a1, d_a2);
    double h2r = h2_of(rho_cq.mat, rho_cq.dims, opt);
    double dd = da;
    double rhs = std::sqrt(d_a1 * ((dd - d_a2) / (dd - 1) + 4 * eps * dd) * std::exp2(-h2r));
    auto r = bound_report("family_hash", s.one, rhs, opt.bound_tol);
    r.meta = {{"d_A", da},          {"d_A1", d_a1},   {"d_A2", d_a2}, {"d_R", rho_cq.dims[1]},
              {"family_size", (double)fam.members.size()}, {"epsilon", eps}, {"H2_state", h2r}};
    return {r};
}

std::vector<VerificationReport> verify_distance_from_classicality(const ChoiChannel &ch, int d_r,
                                                                  const VerifyOptions &opt) {
    int da = ch.d_in;
    if (da < 4) {
        throw DimensionError("distance from classicality needs d_A >= 4");
    }
    check_perm_dim(da, opt);
    Mat x = embedded_max_entangled(da, d_r) - embedded_classical_correlated(da, d_r);
    Dims dims{da, d_r};
    auto perms = all_perms(da);
    double two = 0, one = 0;
    for (const auto &p : perms) {
        Mat y = apply_channel(ch, conjugate_first(x, p, da), dims, 0);
        two += sq2(y);
        one += schatten_norm(y, Schatten::one);
    }
    two /= (double)perms.size();
    one /= (double)perms.size();
    double dd = da, rr = d_r;
    double closed = dd / rr * (rr - 1) / (dd - 1) * sq2(ch.choi - classicalize(ch.choi, ch.dims(), 0));
    auto eq = equality_report("distance_from_classicality", two, closed, opt.eq_tol);
    eq.meta = {{"d_A", da}, {"d_R", d_r}, {"d_E", ch.d_out}};
    double h2w = h2_of(ch.choi, ch.dims(), opt);
    double rhs = std::sqrt(dd * (rr - 1) / (dd - 1)) * std::exp2(-0.5 * h2w);
    auto bd = bound_report("distance_from_classicality.one_norm", one, rhs, opt.bound_tol);
    bd.meta = {{"d_A", da}, {"d_R", d_r}, {"d_E", ch.d_out}, {"H2_channel", h2w}};
    return {eq, bd};
}

std::vector<VerificationReport> verify_perm_decoupling_lemma(const ChoiChannel &ch, int d_r,
                                                             const VerifyOptions &opt) {
    int da = ch.d_in;
    if (da < 4) {
        throw DimensionError("permutation decoupling lemma needs d_A >= 4");
    }
    check_perm_dim(da, opt);
    Mat phi = embedded_max_entangled(da, d_r);
    Mat pi_ar = Mat::Zero(da * d_r, da * d_r);
    for (int i = 0; i < d_r; i++) {
        for (int j = 0; j < d_r; j++) {
            pi_ar(i * d_r + j, i * d_r + j) = 1.0 / ((double)d_r * d_r);
        }
    }
    Dims dims{da, d_r};
    Mat x = phi - pi_ar;
    Mat printed_target = tensor(ch.output_marginal(), maximally_mixed(d_r));
    auto perms = all_perms(da);
    double lhs = 0, printed = 0;
    for (const auto &p : perms) {
        lhs += sq2(apply_channel(ch, conjugate_first(x, p, da), dims, 0));
        if (d_r == da) {
            printed += sq2(apply_channel(ch, conjugate_first(phi, p, da), dims, 0) - printed_target);
        }
    }
    lhs /= (double)perms.size();
    printed /= (double)perms.size();
    double dd = da, rr = d_r;
    Mat w_e = ch.output_marginal();
    Mat wcl = classicalize(ch.choi, ch.dims(), 0);
    double bracket = rr / dd * sq2(ch.choi) - sq2(w_e) / dd + (1 - rr / dd) * sq2(wcl);
    double rhs = dd * dd / (rr * rr) * ((rr - 1) / (dd - 1)) * bracket;
    auto r = equality_report("perm_decoupling_lemma", lhs, rhs, opt.eq_tol);
    r.meta = {{"d_A", da}, {"d_R", d_r}, {"d_E", ch.d_out}};
    std::vector<VerificationReport> out{r};
    if (d_r == da) {
        out.push_back(equality_report("perm_decoupling_lemma.printed_form", printed, rhs, opt.eq_tol));
        Mat pi = maximally_mixed(da);
        double haar = dd * dd / (dd * dd - 1) * sq2(phi - tensor(pi, pi)) * sq2(ch.choi - tensor(pi, w_e));
        out.push_back(equality_report("perm_decoupling_lemma.haar_value", rhs, haar, opt.eq_tol));
    }
    return out;
}

std::vector<VerificationReport> verify_quantum_hash(const DensityOp &rho, int d_a1, int d_a2,
                                                    const VerifyOptions &opt) {
    check_split(rho, d_a1, d_a2);
    int da = rho.dims[0];
    if (da < 4) {
        throw DimensionError("quantum hash theorem needs d_A >= 4");
    }
    check_perm_dim(da, opt);
    auto perms = all_perms(da);
    std::vector<double> w(perms.size(), 1.0 / (double)perms.size());
    HashSums s = hash_sums(perms, w, rho, d_a1, d_a2);
    double hmin = h_min_cond(rho).value;
    double rhs = std::sqrt(2.0 * d_a1 * std::exp2(-hmin));
    auto r = bound_report("quantum_hash", s.one, rhs, opt.bound_tol);
    r.meta = {{"d_A", da}, {"d_A1", d_a1}, {"d_A2", d_a2}, {"d_R", rho.dims[1]}, {"Hmin", hmin}};
    double dd = da;
    double t2 = sq2(rho.mat);
    double t2cl = sq2(classicalize(rho.mat, rho.dims, 0));
    double rhs2 = (d_a1 - 1) / (dd - 1) * t2 + (d_a1 - 1.0) * (d_a2 - 1.0) / (dd - 1) * t2cl + t2;
    std::vector<VerificationReport> out{r};
    out.push_back(bound_report("quantum_hash.two_norm", s.two_sq, rhs2, opt.bound_tol));
    return out;
}

VerificationReport verify_claim_counting(int d, double tol) {
    if (d < 2) {
        throw DimensionError("counting claim needs d >= 2");
    }
    int n = d * d;
    Mat t = classical_correlated(d).mat;
    Mat id = Mat::Identity(n, n);
    double dd = d;
    double worst = 0;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            Mat m = Mat::Zero(n, n);
            m(i * d + j, i * d + j) = 1;
            double delta = i == j ? 1 : 0;
            Mat expect = (1 - delta) / (dd * dd - dd) * id - (1 - delta) / (dd - 1) * t + delta * t;
            worst = std::max(worst, (perm_twirl2_brute(m, d) - expect).cwiseAbs().maxCoeff());
        }
    }
    auto r = equality_report("claim_counting", worst, 0, tol);
    r.meta = {{"d", d}};
    return r;
}

VerificationReport verify_claim_cq_square(int d, double tol) {
    if (d < 2 || d > 5) {
        throw DimensionError("cq square claim supports 2 <= d <= 5");
    }
    Mat lam = cq_decoupling_state(d).mat;
    Mat x = tensor(lam, lam);  // on A Ã A' Ã'
    int n = d * d * d * d;
    Mat avg = Mat::Zero(n, n);
    std::vector<int> img(n);
    auto perms = all_perms(d);
    for (const auto &p : perms) {
        for (int a = 0; a < d; a++) {
            for (int u = 0; u < d; u++) {
                for (int b = 0; b < d; b++) {
                    for (int v = 0; v < d; v++) {
                        img[((a * d + u) * d + b) * d + v] = ((p(a) * d + u) * d + p(b)) * d + v;
                    }
                }
            }
        }
        for (int r = 0; r < n; r++) {
            for (int c = 0; c < n; c++) {
                avg(img[r], img[c]) += x(r, c);
            }
        }
    }
    avg /= (double)perms.size();
    Mat reordered = permute_subsystems(avg, {d, d, d, d}, {0, 2, 1, 3});
    double dev = (reordered - tensor(lam, lam) / (d - 1.0)).cwiseAbs().maxCoeff();
    auto r = equality_report("claim_cq_square", dev, 0, tol);
    r.meta = {{"d", d}};
    return r;
}

namespace {

std::vector<CycleType> all_classes(int d) {
    std::vector<CycleType> out;
    for (const auto &p : partitions(d)) {
        out.push_back(CycleType::from_lengths(d, p.parts));
    }
    return out;
}

}  // namespace

VerificationReport verify_character_closed_forms(int d) {
    if (d < 4) {
        throw DimensionError("closed-form characters need d >= 4");
    }
    const std::array<Partition, 4> irreps{Partition({d}), Partition({d - 1, 1}), Partition({d - 2, 1, 1}),
                                          Partition({d - 2, 2})};
    int bad = 0;
    for (const auto &c : all_classes(d)) {
        auto cf = char_closed_forms(d, c);
        for (int i = 0; i < 4; i++) {
            bad += cf[i] != mn_character(irreps[i], c);
        }
    }
    auto r = equality_report("characters.closed_forms", bad, 0, 0);
    r.meta = {{"d", d}};
    return r;
}

VerificationReport verify_chi_r_decomposition(int d) {
    if (d < 4) {
        throw DimensionError("chi_R decomposition needs d >= 4");
    }
    int bad = 0;
    for (const auto &c : all_classes(d)) {
        auto x = char_closed_forms(d, c);
        for (S2Class b : {S2Class::identity, S2Class::swap}) {
            std::int64_t sgn = b == S2Class::identity ? 1 : -1;
            std::int64_t sum = 2 * x[0] + 2 * x[1] + sgn * x[1] + sgn * x[2] + x[3];
            bad += sum != chi_R(d, c, b);
        }
    }
    auto r = equality_report("characters.chi_R", bad, 0, 0);
    r.meta = {{"d", d}};
    return r;
}

VerificationReport verify_character_orthogonality(int d) {
    auto parts = partitions(d);
    auto classes = all_classes(d);
    double fact = 1;
    for (int k = 2; k <= d; k++) {
        fact *= k;
    }
    double worst = 0;
    for (size_t i = 0; i < parts.size(); i++) {
        for (size_t j = i; j < parts.size(); j++) {
            double s = 0;
            for (const auto &c : classes) {
                s += (double)class_size(c) * (double)mn_character(parts[i], c) * (double)mn_character(parts[j], c);
            }
            worst = std::max(worst, std::abs(s - (i == j ? fact : 0)));
        }
    }
    auto r = equality_report("characters.orthogonality", worst, 0, 0);
    r.meta = {{"d", d}};
    return r;
}

std::vector<VerificationReport> verify_gramian(int d, double tol) {
    CommutantBasis b = commutant_basis(d);
    double worst = 0;
    for (int i = 0; i < 11; i++) {
        for (int j = 0; j < 11; j++) {
            cplx t = (b.A[i] * b.A[j]).trace();
            worst = std::max(worst, std::abs(t - b.G(i, j)) / std::max(1.0, std::abs(b.G(i, j))));
        }
    }
    auto r = equality_report("gramian.entries", worst, 0, tol);
    r.meta = {{"d", d}};
    double inv = (b.G * b.G_inv - Eigen::MatrixXd::Identity(11, 11)).cwiseAbs().maxCoeff();
    auto r2 = equality_report("gramian.inverse", inv, 0, tol);
    r2.meta = r.meta;
    return {r, r2};
}

VerificationReport verify_commutant_dim(int d) {
    auto r = equality_report("commutant_dim", commutant_dim_brute(d), 11, 0);
    r.meta = {{"d", d}};
    return r;
}

VerificationReport verify_perm_twirl_projection(const CommutantBasis &basis, const Mat &m, double tol) {
    Mat exact = perm_twirl2_exact(basis, m).reconstructed;
    Mat brute = perm_twirl2_brute(m, basis.d);
    double scale = std::max(m.norm(), 1e-300);
    auto r = equality_report("perm_twirl", (exact - brute).norm() / scale, 0, tol);
    r.meta = {{"d", basis.d}};
    return r;
}

std::vector<VerificationReport> verify_affine_family(int n) {
    PermFamily fam = affine_family(n);
    int d = 1 << n;
    std::vector<VerificationReport> out;
    auto r = equality_report("affine_family.pairwise", pairwise_dependence(fam, d), 0, 1e-12);
    r.meta = {{"d", d}};
    out.push_back(r);
    auto sz = equality_report("affine_family.size", (double)fam.members.size(), d * (d - 1.0), 0);
    sz.meta = r.meta;
    out.push_back(sz);
    if (d <= 4) {
        auto dm = equality_report("affine_family.diamond", classical_diamond_distance(fam, d), 0, 1e-12);
        dm.meta = r.meta;
        out.push_back(dm);
    }
    return out;
}

VerificationReport check_min_vs_collision_entropy(int n_states, std::uint64_t seed, double tol, int restarts) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(2, 4);
    H2Options h2;
    h2.optimize = true;
    h2.restarts = restarts;
    double worst = -std::numeric_limits<double>::infinity();
    int violations = 0;
    for (int k = 0; k < n_states; k++) {
        int da = dim(rng), db = dim(rng);
        std::uniform_int_distribution<int> rank(1, da * db);
        DensityOp rho = random_density({da, db}, rank(rng), rng);
        h2.seed = rng();
        double diff = h_min_cond(rho).value - h2_cond(rho, std::nullopt, h2).value;
        worst = std::max(worst, diff);
        violations += diff > tol;
    }
    auto r = bound_report("entropy.hmin_le_h2", worst, 0, tol);
    r.meta = {{"states", n_states}, {"violations", violations}};
    return r;
}

std::vector<VerificationReport> check_fuchs_van_de_graaf(int n_pairs, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(2, 6);
    std::uniform_real_distribution<double> scale(0.05, 1.0);
    double low = -std::numeric_limits<double>::infinity(), high = low, plain_low = low, plain_high = low;
    for (int k = 0; k < n_pairs; k++) {
        int d = dim(rng);
        std::uniform_int_distribution<int> rank(1, d);
        Mat rho = random_density({d}, rank(rng), rng).mat;
        Mat sigma = random_density({d}, rank(rng), rng).mat;
        double p = purified_distance(rho, sigma);
        double t = 0.5 * trace_distance(rho, sigma);
        plain_low = std::max(plain_low, t - p);
        plain_high = std::max(plain_high, p - std::sqrt(std::max(0.0, t * (2 - t))));
        Mat rs = scale(rng) * rho, ss = scale(rng) * sigma;
        double pg = purified_distance(rs, ss);
        double dg = generalized_trace_distance(rs, ss);
        low = std::max(low, 0.5 * dg - pg);
        high = std::max(high, pg - std::sqrt(dg));
    }
    std::vector<VerificationReport> out{
        bound_report("fuchs_van_de_graaf.lower", low, 0, tol),
        bound_report("fuchs_van_de_graaf.upper", high, 0, tol),
        bound_report("fuchs_van_de_graaf.normalized_lower", plain_low, 0, tol),
        bound_report("fuchs_van_de_graaf.normalized_upper", plain_high, 0, tol),
    };
    for (auto &r : out) {
        r.meta = {{"pairs", n_pairs}};
    }
    return out;
}

std::vector<VerificationReport> check_norm_inequalities(int n_triples, std::uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(2, 6);
    auto rel = [](double lhs, double rhs) { return (lhs - rhs) / std::max(1.0, rhs); };
    auto schatten4 = [](const Mat &m) {
        RealVec s = singular_values(m);
        return std::pow(s.array().pow(4).sum(), 0.25);
    };
    double inf = -std::numeric_limits<double>::infinity(), one = inf, two = inf, holder = inf;
    for (int k = 0; k < n_triples; k++) {
        int d = dim(rng);
        Mat a = gaussian_matrix(d, d, rng), b = gaussian_matrix(d, d, rng), c = gaussian_matrix(d, d, rng);
        Mat abc = a * b * c;
        double na = schatten_norm(a, Schatten::inf), nc = schatten_norm(c, Schatten::inf);
        double nac = na * nc;
        inf = std::max(inf, rel(schatten_norm(abc, Schatten::inf), nac * schatten_norm(b, Schatten::inf)));
        one = std::max(one, rel(schatten_norm(abc, Schatten::one), nac * schatten_norm(b, Schatten::one)));
        two = std::max(two, rel(schatten_norm(abc, Schatten::two), nac * schatten_norm(b, Schatten::two)));
        holder = std::max(holder, rel(schatten_norm(abc, Schatten::one),
                                      schatten4(a) * schatten_norm(b, Schatten::two) * schatten4(c)));
    }
    std::vector<VerificationReport> out{
        bound_report("norms.inf", inf, 0, tol),
        bound_report("norms.one", one, 0, tol),
        bound_report("norms.two", two, 0, tol),
        bound_report("norms.holder", holder, 0, tol),
    };
    for (auto &r : out) {
        r.meta = {{"triples", n_triples}};
    }
    return out;
}

}  // namespace declab
