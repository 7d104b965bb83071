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

#include "declab/twirl.h"

#include <cmath>
#include <stdexcept>

#include "declab/qstate.h"
#include "declab/symgrp.h"

namespace declab {

UnitaryEnsemble::UnitaryEnsemble(std::vector<double> w, std::vector<Mat> u)
    : weights(std::move(w)), unitaries(std::move(u)) {
    if (weights.size() != unitaries.size() || unitaries.empty()) {
        throw std::invalid_argument("ensemble needs one weight per unitary");
    }
    double s = 0;
    for (size_t i = 0; i < unitaries.size(); i++) {
        const Mat &x = unitaries[i];
        if (x.rows() != x.cols() || x.rows() != unitaries[0].rows()) {
            throw DimensionError("ensemble members must be square and of equal size");
        }
        if ((x.adjoint() * x - Mat::Identity(x.rows(), x.rows())).cwiseAbs().maxCoeff() > 1e-10) {
            throw std::invalid_argument("ensemble member is not unitary");
        }
        if (weights[i] < 0) {
            throw std::invalid_argument("negative ensemble weight");
        }
        s += weights[i];
    }
    if (std::abs(s - 1) > 1e-10) {
        throw std::invalid_argument("ensemble weights do not sum to one");
    }
}

UnitaryEnsemble UnitaryEnsemble::uniform(std::vector<Mat> u) {
    std::vector<double> w(u.size(), u.empty() ? 0.0 : 1.0 / (double)u.size());
    return UnitaryEnsemble(std::move(w), std::move(u));
}

namespace {

void check_two_copy(const Mat &m, int d) {
    if (d < 2) {
        throw DimensionError("twirl needs d >= 2");
    }
    if (m.rows() != d * d || m.cols() != d * d) {
        throw DimensionError("operator must act on C^d ⊗ C^d");
    }
}

// (α, β) for the Haar twirl of M given tr M and tr(MF).
std::pair<double, double> haar_coeffs(double tr_m, double tr_mf, int d) {
    double dd = (double)d;
    double den = dd * dd * (dd * dd - 1);
    return {(dd * dd * tr_m - dd * tr_mf) / den, (dd * dd * tr_mf - dd * tr_m) / den};
}

}  // namespace

TwirlResult haar_twirl2_exact(const Mat &m, int d) {
    check_two_copy(m, d);
    Mat f = swap_operator(d);
    auto [a, b] = haar_coeffs(m.trace().real(), (m * f).trace().real(), d);
    TwirlResult r;
    r.alpha = a;
    r.beta = b;
    r.reconstructed = a * Mat::Identity(d * d, d * d) + b * f;
    return r;
}

Mat haar_sample(int d, std::mt19937_64 &rng) {
    if (d < 1) {
        throw DimensionError("haar_sample needs d >= 1");
    }
    Mat z = gaussian_matrix(d, d, rng);
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; j++) {
        cplx x = r(j, j);
        double ax = std::abs(x);
        q.col(j) *= ax > 0 ? x / ax : cplx(1);
    }
    return q;
}

Mat haar_sample(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_sample(d, rng);
}

MonteCarloTwirl haar_twirl2_mc_stats(const Mat &m, int d, int n, std::uint64_t seed) {
    check_two_copy(m, d);
    if (n < 1) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    std::mt19937_64 rng(seed);
    int dd = d * d;
    Mat sum = Mat::Zero(dd, dd);
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(dd, dd);
    for (int k = 0; k < n; k++) {
        Mat u = haar_sample(d, rng);
        Mat v = tensor(u, u);
        Mat x = v.adjoint() * m * v;
        sum += x;
        sq += x.cwiseAbs2();
    }
    MonteCarloTwirl out;
    out.mean = sum / (double)n;
    Eigen::MatrixXd var = sq / (double)n - out.mean.cwiseAbs2();
    double corr = n > 1 ? (double)n / (double)(n - 1) : 0.0;
    out.std_err = (var.cwiseMax(0.0) * corr / (double)n).cwiseSqrt();
    return out;
}

Mat haar_twirl2_mc(const Mat &m, int d, int n, std::uint64_t seed) {
    return haar_twirl2_mc_stats(m, d, n, seed).mean;
}

UnitaryEnsemble clifford_1q() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat h(2, 2);
    h << s, s, s, -s;
    Mat ph(2, 2);
    ph << 1, 0, 0, cplx(0, 1);
    auto canonical = [](Mat u) {
        for (Eigen::Index i = 0; i < u.size(); i++) {
            cplx x = u.data()[i];
            if (std::abs(x) > 1e-6) {
                return Mat(u * (std::conj(x) / std::abs(x)));
            }
        }
        return u;
    };
    std::vector<Mat> group{canonical(Mat::Identity(2, 2))};
    for (size_t i = 0; i < group.size(); i++) {
        for (const Mat *g : {&h, &ph}) {
            Mat c = canonical(*g * group[i]);
            bool known = false;
            for (const Mat &e : group) {
                if ((e - c).cwiseAbs().maxCoeff() < 1e-9) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                group.push_back(c);
            }
        }
    }
    return UnitaryEnsemble::uniform(std::move(group));
}

Mat design_twirl2(const UnitaryEnsemble &ens, const Mat &m) {
    int d = ens.dim();
    check_two_copy(m, d);
    Mat out = Mat::Zero(d * d, d * d);
    for (size_t i = 0; i < ens.size(); i++) {
        Mat v = tensor(ens.unitaries[i], ens.unitaries[i]);
        out += ens.weights[i] * (v * m * v.adjoint());
    }
    return out;
}

double design_epsilon_bound(const UnitaryEnsemble &ens, int d) {
    if (ens.dim() != d) {
        throw DimensionError("ensemble dimension does not match d");
    }
    if (d < 2 || d * d > 64) {
        throw DimensionError("design_epsilon_bound needs 2 <= d and d^2 <= 64");
    }
    int n = d * d;
    int big = n * n;
    // Choi(G) = (1/n) Σ_ab |a><b| ⊗ G(|a><b|), input index first.
    Mat delta = Mat::Zero(big, big);
    Eigen::VectorXcd v(big);
    for (size_t i = 0; i < ens.size(); i++) {
        Mat w = tensor(ens.unitaries[i], ens.unitaries[i]);
        for (int a = 0; a < n; a++) {
            for (int x = 0; x < n; x++) {
                v(a * n + x) = w(x, a);
            }
        }
        delta.selfadjointView<Eigen::Lower>().rankUpdate(v, ens.weights[i] / n);
    }
    Mat full = delta.selfadjointView<Eigen::Lower>();
    delta = full;
    double dd = (double)d;
    double den = dd * dd * (dd * dd - 1);
    auto fidx = [d](int a) { return (a % d) * d + a / d; };
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            // G_H(|a><b|) = α_ab I + β_ab F with tr M = δ_ab, tr(MF) = F[b, a].
            double del = a == b ? 1.0 : 0.0;
            double fba = fidx(a) == b ? 1.0 : 0.0;
            double al = (dd * dd * del - dd * fba) / den;
            double be = (dd * dd * fba - dd * del) / den;
            if (al == 0 && be == 0) {
                continue;
            }
            for (int x = 0; x < n; x++) {
                delta(a * n + x, b * n + x) -= al / n;
                delta(a * n + x, b * n + fidx(x)) -= be / n;
            }
        }
    }
    return (double)n * schatten_norm(delta, Schatten::one);
}

Mat embed_gate(const Mat &gate, int n_qubits, const std::vector<int> &qubits) {
    int k = (int)qubits.size();
    if (gate.rows() != (1 << k) || gate.cols() != (1 << k)) {
        throw DimensionError("gate size does not match the number of qubits");
    }
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits) {
            throw DimensionError("qubit index out of range");
        }
    }
    int dim = 1 << n_qubits;
    std::vector<int> bit(k);
    int mask = 0;
    for (int s = 0; s < k; s++) {
        bit[s] = n_qubits - 1 - qubits[s];
        mask |= 1 << bit[s];
    }
    auto local = [&](int x) {
        int l = 0;
        for (int s = 0; s < k; s++) {
            l = (l << 1) | ((x >> bit[s]) & 1);
        }
        return l;
    };
    auto place = [&](int rest, int l) {
        int x = rest;
        for (int s = 0; s < k; s++) {
            if ((l >> (k - 1 - s)) & 1) {
                x |= 1 << bit[s];
            }
        }
        return x;
    };
    Mat out = Mat::Zero(dim, dim);
    for (int col = 0; col < dim; col++) {
        int rest = col & ~mask;
        int lc = local(col);
        for (int lr = 0; lr < (1 << k); lr++) {
            out(place(rest, lr), col) = gate(lr, lc);
        }
    }
    return out;
}

Mat random_circuit(int n_qubits, int t, std::mt19937_64 &rng, GateSet gates) {
    if (n_qubits < 2 || n_qubits > 4) {
        throw DimensionError("random_circuit supports 2 to 4 qubits");
    }
    if (t < 0) {
        throw std::invalid_argument("circuit depth must be non-negative");
    }
    int dim = 1 << n_qubits;
    Mat u = Mat::Identity(dim, dim);
    Mat cnot = Mat::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    std::uniform_int_distribution<int> pick(0, n_qubits - 1);
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < t; s++) {
        int a = pick(rng);
        int b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        Mat g;
        if (gates == GateSet::haar_two_qubit) {
            g = embed_gate(haar_sample(4, rng), n_qubits, {a, b});
        } else if (coin(rng)) {
            g = embed_gate(haar_sample(2, rng), n_qubits, {a});
        } else {
            g = embed_gate(cnot, n_qubits, {a, b});
        }
        u = g * u;
    }
    return u;
}

Mat random_circuit(int n_qubits, int t, std::uint64_t seed, GateSet gates) {
    std::mt19937_64 rng(seed);
    return random_circuit(n_qubits, t, rng, gates);
}

UnitaryEnsemble circuit_ensemble(int n_qubits, int t, int trials, std::uint64_t seed, GateSet gates) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<Mat> us;
    us.reserve(trials);
    for (int i = 0; i < trials; i++) {
        us.push_back(random_circuit(n_qubits, t, rng, gates));
    }
    return UnitaryEnsemble::uniform(std::move(us));
}

double design_time(double c, int n_qubits, double eps) {
    double n = n_qubits;
    return c * (n * n + n * std::log2(1 / eps));
}

double decoupling_time(double c, int n_qubits, double eps) {
    double n = n_qubits;
    double d4 = std::pow(2.0, 4 * n);
    return c * (n * n + n * std::log2(d4 / eps));
}

namespace {

Eigen::MatrixXd closed_form_gramian(int d) {
    double x = d, x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(11, 11);
    // clang-format off
    g.topLeftCorner(9, 9) <<
        x2,     x2,      2*x2,         x,      x,      x,   4*x,            2*x,            2*x,
        x2,     x4,      2*x3,         x2,     x2,     x,   4*x2,           2*x3,           2*x3,
        2*x2,   2*x3,    2*x2 + 2*x3,  2*x,    2*x,    2*x, 4*x + 4*x2,     4*x2,           4*x2,
        x,      x2,      2*x,          x2,     x,      x,   4*x,            2*x2,           2*x,
        x,      x2,      2*x,          x,      x2,     x,   4*x,            2*x,            2*x2,
        x,      x,       2*x,          x,      x,      x,   4*x,            2*x,            2*x,
        4*x,    4*x2,    4*x + 4*x2,   4*x,    4*x,    4*x, 12*x + 4*x2,    4*x + 4*x2,     4*x + 4*x2,
        2*x,    2*x3,    4*x2,         2*x2,   2*x,    2*x, 4*x + 4*x2,     2*x2 + 2*x3,    4*x2,
        2*x,    2*x3,    4*x2,         2*x,    2*x2,   2*x, 4*x + 4*x2,     4*x2,           2*x2 + 2*x3;
    g.bottomRightCorner(2, 2) <<
        4*x2 - 4*x, 4*x2 - 4*x,
        4*x2 - 4*x, 2*x3 - 2*x2;
    // clang-format on
    return g;
}

Eigen::MatrixXd closed_form_gramian_inverse(int d) {
    double x = d, x2 = x * x, x3 = x2 * x, h = 0.5;
    Eigen::MatrixXd g1(9, 9);
    // clang-format off
    g1 <<
        x2 - 3*x + 1, 1,  -x + 2,        1,             1,             -x2 + x,  x - 1,                -1,             -1,
        1,            1,  -1,            1,             1,             -6,       2,                    -1,             -1,
        -x + 2,       -1, h*(x - 1),     -1,            -1,            2*x,      -h*(x + 1),           1,              1,
        1,            1,  -1,            x2 - 3*x + 1,  1,             -x2 + x,  x - 1,                -x + 2,         -1,
        1,            1,  -1,            1,             x2 - 3*x + 1,  -x2 + x,  x - 1,                -1,             -x + 2,
        -x2 + x,      -6, 2*x,           -x2 + x,       -x2 + x,       x3 + x2,  -x2 - x,              2*x,            2*x,
        x - 1,        2,  -h*(x + 1),    x - 1,         x - 1,         -x2 - x,  0.25*(x2 + x) + 1,    -h*(x + 1),     -h*(x + 1),
        -1,           -1, 1,             -x + 2,        -1,            2*x,      -h*(x + 1),           h*(x - 1),      1,
        -1,           -1, 1,             -1,            -x + 2,        2*x,      -h*(x + 1),           1,              h*(x - 1);
    // clang-format on
    g1 /= x * (x - 1) * (x - 2) * (x - 3);
    Eigen::Matrix2d g2;
    g2 << x / 4, -h, -h, h;
    g2 /= x * (x - 1) * (x - 2);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(11, 11);
    out.topLeftCorner(9, 9) = g1;
    out.bottomRightCorner(2, 2) = g2;
    return out;
}

}  // namespace

CommutantBasis commutant_basis(int d) {
    if (d < 4) {
        throw DimensionError("the Gramian of the commutant basis is singular for d < 4");
    }
    Mat id = Mat::Identity(d, d);
    Mat ones = Mat::Ones(d, d);
    auto e = [d](int i, int j) {
        Mat m = Mat::Zero(d, d);
        m(i, j) = 1;
        return m;
    };
    // |i><e| and |e><i| with |e> = Σ_i |i>.
    auto ie = [d](int i) {
        Mat m = Mat::Zero(d, d);
        m.row(i).setOnes();
        return m;
    };
    auto ei = [d](int i) {
        Mat m = Mat::Zero(d, d);
        m.col(i).setOnes();
        return m;
    };
    int n = d * d;
    std::vector<Mat> a(11, Mat::Zero(n, n));
    a[0] = tensor(id, id);
    a[1] = tensor(ones, ones);
    a[2] = tensor(id, ones) + tensor(ones, id);
    const cplx im(0, 1);
    for (int i = 0; i < d; i++) {
        a[5] += tensor(e(i, i), e(i, i));
        a[7] += tensor(ie(i), ie(i)) + tensor(ei(i), ei(i));
        a[8] += tensor(ei(i), ie(i)) + tensor(ie(i), ei(i));
        a[10] += im * (tensor(ie(i), ie(i)) - tensor(ei(i), ei(i)));
        for (int j = 0; j < d; j++) {
            a[3] += tensor(e(i, j), e(i, j));
            a[4] += tensor(e(i, j), e(j, i));
            Mat s = tensor(e(i, i), e(i, j)) + tensor(e(i, i), e(j, i)) + tensor(e(i, j), e(i, i)) +
                    tensor(e(j, i), e(i, i));
            a[6] += s;
            a[9] += im * (tensor(e(i, i), e(i, j)) - tensor(e(i, i), e(j, i)) + tensor(e(i, j), e(i, i)) -
                          tensor(e(j, i), e(i, i)));
        }
    }
    CommutantBasis b;
    b.d = d;
    b.A = std::move(a);
    b.G = closed_form_gramian(d);
    b.G_inv = closed_form_gramian_inverse(d);
    return b;
}

int commutant_dim_brute(int d) {
    if (d < 1 || d > 6) {
        throw DimensionError("commutant_dim_brute supports 1 <= d <= 6");
    }
    int n = d * d;
    int big = n * n;
    // Generators as index maps on C^d ⊗ C^d: P⊗P for every transposition, then F.
    std::vector<std::vector<int>> gens;
    for (int s = 0; s < d; s++) {
        for (int t = s + 1; t < d; t++) {
            std::vector<int> p(d);
            for (int i = 0; i < d; i++) {
                p[i] = i == s ? t : (i == t ? s : i);
            }
            std::vector<int> g(n);
            for (int i = 0; i < d; i++) {
                for (int j = 0; j < d; j++) {
                    g[i * d + j] = p[i] * d + p[j];
                }
            }
            gens.push_back(g);
        }
    }
    std::vector<int> f(n);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            f[i * d + j] = j * d + i;
        }
    }
    gens.push_back(f);
    // [X, g] = 0 with g an involutive permutation matrix: X[x, y] - X[g(x), g(y)] = 0 for all (x, y).
    // Sum of L^T L over generators, L = I - (g ⊗ g) acting on vec(X).
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(big, big);
    for (const auto &g : gens) {
        for (int x = 0; x < n; x++) {
            for (int y = 0; y < n; y++) {
                int r = x * n + y;
                int c = g[x] * n + g[y];
                if (r == c) {
                    continue;
                }
                // Row of L: e_r - e_c.
                q(r, r) += 1;
                q(c, c) += 1;
                q(r, c) -= 1;
                q(c, r) -= 1;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q, Eigen::EigenvaluesOnly);
    int count = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
        if (std::abs(es.eigenvalues()(i)) < 1e-8) {
            count++;
        }
    }
    return count;
}

TwirlResult perm_twirl2_exact(const CommutantBasis &basis, const Mat &m) {
    int d = basis.d;
    check_two_copy(m, d);
    Eigen::VectorXd t(11);
    for (int i = 0; i < 11; i++) {
        t(i) = (m * basis.A[i]).trace().real();
    }
    Eigen::VectorXd c = basis.G_inv * t;
    TwirlResult r;
    r.coeffs.assign(c.data(), c.data() + 11);
    r.reconstructed = Mat::Zero(d * d, d * d);
    for (int j = 0; j < 11; j++) {
        r.reconstructed += c(j) * basis.A[j];
    }
    return r;
}

TwirlResult perm_twirl2_exact(const Mat &m, int d) {
    return perm_twirl2_exact(commutant_basis(d), m);
}

Mat perm_twirl2_brute(const Mat &m, int d) {
    if (d > 7) {
        throw DimensionError("perm_twirl2_brute supports d <= 7");
    }
    check_two_copy(m, d);
    int n = d * d;
    Mat out = Mat::Zero(n, n);
    std::vector<int> img(n);
    auto perms = all_perms(d);
    for (const auto &p : perms) {
        for (int i = 0; i < d; i++) {
            for (int j = 0; j < d; j++) {
                img[i * d + j] = p(i) * d + p(j);
            }
        }
        for (int x = 0; x < n; x++) {
            for (int y = 0; y < n; y++) {
                out(img[x], img[y]) += m(x, y);
            }
        }
    }
    return out / (double)perms.size();
}

}  // namespace declab
