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

#include "declab/symgrp.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace declab {

Permutation::Permutation(std::vector<int> m) : mapping(std::move(m)) {
    std::vector<bool> seen(mapping.size(), false);
    for (int x : mapping) {
        if (x < 0 || x >= (int)mapping.size() || seen[x]) {
            throw std::invalid_argument("mapping is not a bijection");
        }
        seen[x] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> m(d);
    std::iota(m.begin(), m.end(), 0);
    return Permutation(m);
}

Permutation Permutation::inverse() const {
    std::vector<int> m(mapping.size());
    for (int j = 0; j < (int)mapping.size(); j++) {
        m[mapping[j]] = j;
    }
    return Permutation(m);
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.size() != q.size()) {
        throw DimensionError("composing permutations of different degree");
    }
    std::vector<int> m(p.size());
    for (int j = 0; j < p.size(); j++) {
        m[j] = p(q(j));
    }
    return Permutation(m);
}

int CycleType::d() const {
    int s = 0;
    for (size_t i = 1; i < k.size(); i++) {
        s += (int)i * k[i];
    }
    return s;
}

std::vector<int> CycleType::lengths() const {
    std::vector<int> out;
    for (int i = (int)k.size() - 1; i >= 1; i--) {
        for (int c = 0; c < k[i]; c++) {
            out.push_back(i);
        }
    }
    return out;
}

CycleType CycleType::from_lengths(int d, const std::vector<int> &lengths) {
    CycleType c;
    c.k.assign(d + 1, 0);
    int s = 0;
    for (int l : lengths) {
        if (l < 1 || l > d) {
            throw std::invalid_argument("cycle length out of range");
        }
        c.k[l]++;
        s += l;
    }
    if (s != d) {
        throw std::invalid_argument("cycle lengths do not sum to d");
    }
    return c;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); i++) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
            throw std::invalid_argument("partition parts must be positive and non-increasing");
        }
    }
}

int Partition::d() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Partition> partitions(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, cap); p >= 1; p--) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

PermFamily PermFamily::uniform(std::vector<Permutation> members) {
    PermFamily f;
    f.weights.assign(members.size(), 1.0 / (double)members.size());
    f.members = std::move(members);
    return f;
}

Mat perm_operator(const Permutation &p) {
    int d = p.size();
    Mat m = Mat::Zero(d, d);
    for (int j = 0; j < d; j++) {
        m(p(j), j) = 1;
    }
    return m;
}

std::vector<Permutation> all_perms(int d) {
    if (d < 1 || d > 8) {
        throw DimensionError("all_perms supports 1 <= d <= 8");
    }
    std::vector<int> m(d);
    std::iota(m.begin(), m.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

CycleType cycle_type(const Permutation &p) {
    int d = p.size();
    CycleType c;
    c.k.assign(d + 1, 0);
    std::vector<bool> seen(d, false);
    for (int s = 0; s < d; s++) {
        if (seen[s]) {
            continue;
        }
        int len = 0;
        for (int x = s; !seen[x]; x = p(x)) {
            seen[x] = true;
            len++;
        }
        c.k[len]++;
    }
    return c;
}

namespace {

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; i++) {
        f *= i;
    }
    return f;
}

// Beta-set form of the rule: removing a border strip of length r moves one bead from b to b - r,
// with sign (-1)^(number of beads strictly between), which is (-1)^(rows spanned - 1).
std::int64_t mn_rec(std::set<int> &beta, const std::vector<int> &lengths, size_t idx) {
    if (idx == lengths.size()) {
        return 1;
    }
    int r = lengths[idx];
    std::int64_t total = 0;
    std::vector<int> beads(beta.begin(), beta.end());
    for (int b : beads) {
        int nb = b - r;
        if (nb < 0 || beta.count(nb)) {
            continue;
        }
        int between = 0;
        for (int o : beads) {
            if (o > nb && o < b) {
                between++;
            }
        }
        beta.erase(b);
        beta.insert(nb);
        std::int64_t sub = mn_rec(beta, lengths, idx + 1);
        beta.erase(nb);
        beta.insert(b);
        total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    return total;
}

}  // namespace

std::int64_t class_size(const CycleType &c) {
    std::int64_t denom = 1;
    for (size_t i = 1; i < c.k.size(); i++) {
        for (int j = 0; j < c.k[i]; j++) {
            denom *= (std::int64_t)i;
        }
        denom *= factorial(c.k[i]);
    }
    return factorial(c.d()) / denom;
}

std::int64_t mn_character(const Partition &lambda, const CycleType &c) {
    if (lambda.d() != c.d()) {
        throw DimensionError("partition and cycle type belong to different symmetric groups");
    }
    int n = (int)lambda.parts.size();
    std::set<int> beta;
    for (int i = 0; i < n; i++) {
        beta.insert(lambda.parts[i] + (n - 1 - i));
    }
    // Longest cycle first.
    return mn_rec(beta, c.lengths(), 0);
}

std::array<std::int64_t, 4> char_closed_forms(int d, const CycleType &c) {
    if (d < 4) {
        throw DimensionError("char_closed_forms needs d >= 4");
    }
    if (c.d() != d) {
        throw DimensionError("cycle type does not belong to S_d");
    }
    std::int64_t k1 = c.k1(), k2 = c.k2();
    return {1, k1 - 1, (k1 - 1) * (k1 - 2) / 2 - k2, k1 * (k1 - 3) / 2 + k2};
}

std::int64_t chi_R(int d, const CycleType &c, S2Class b) {
    if (d < 2) {
        throw DimensionError("chi_R needs d >= 2");
    }
    if (c.d() != d) {
        throw DimensionError("cycle type does not belong to S_d");
    }
    std::int64_t k1 = c.k1(), k2 = c.k2();
    return b == S2Class::identity ? k1 * k1 : k1 + 2 * k2;
}

std::int64_t hook_dimension(const Partition &lambda) {
    const auto &p = lambda.parts;
    int rows = (int)p.size();
    std::int64_t prod = 1;
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < p[i]; j++) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < rows && p[r] > j; r++) {
                leg++;
            }
            prod *= arm + leg + 1;
        }
    }
    return factorial(lambda.d()) / prod;
}

std::uint32_t gf2n_poly(int n) {
    switch (n) {
        case 1: return 0b11;
        case 2: return 0b111;
        case 3: return 0b1011;
        case 4: return 0b10011;
        case 5: return 0b100101;
        case 6: return 0b1000011;
        default: throw DimensionError("GF(2^n) supported for 1 <= n <= 6");
    }
}

std::uint32_t gf2n_mul(std::uint32_t a, std::uint32_t b, int n) {
    std::uint32_t poly = gf2n_poly(n);
    std::uint32_t top = 1u << n;
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if (a & top) {
            a ^= poly;
        }
    }
    return r;
}

PermFamily affine_family(int n) {
    gf2n_poly(n);
    int q = 1 << n;
    std::vector<Permutation> members;
    for (int a = 1; a < q; a++) {
        for (int b = 0; b < q; b++) {
            std::vector<int> m(q);
            for (int x = 0; x < q; x++) {
                m[x] = (int)(gf2n_mul((std::uint32_t)a, (std::uint32_t)x, n) ^ (std::uint32_t)b);
            }
            members.emplace_back(m);
        }
    }
    return PermFamily::uniform(std::move(members));
}

namespace {

void check_family(const PermFamily &fam, int d) {
    if (d < 2) {
        throw DimensionError("family checks need d >= 2");
    }
    if (fam.members.size() != fam.weights.size() || fam.members.empty()) {
        throw std::invalid_argument("family needs one weight per member");
    }
    double s = 0;
    for (size_t i = 0; i < fam.members.size(); i++) {
        if (fam.members[i].size() != d) {
            throw DimensionError("family member has the wrong degree");
        }
        s += fam.weights[i];
    }
    if (std::abs(s - 1) > 1e-12) {
        throw std::invalid_argument("family weights do not sum to one");
    }
}

// Output distribution over (p(i), p(j)) for input (i, j).
std::vector<double> pair_image(const std::vector<Permutation> &ps, const std::vector<double> &ws, int d, int i,
                               int j) {
    std::vector<double> dist((size_t)d * d, 0.0);
    for (size_t k = 0; k < ps.size(); k++) {
        dist[(size_t)ps[k](i) * d + ps[k](j)] += ws[k];
    }
    return dist;
}

}  // namespace

double pairwise_dependence(const PermFamily &fam, int d) {
    check_family(fam, d);
    double u = 1.0 / (double)(d * (d - 1));
    double worst = 0;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            if (i == j) {
                continue;
            }
            auto dist = pair_image(fam.members, fam.weights, d, i, j);
            double sd = 0;
            for (int y1 = 0; y1 < d; y1++) {
                for (int y2 = 0; y2 < d; y2++) {
                    if (y1 != y2) {
                        sd += std::abs(dist[(size_t)y1 * d + y2] - u);
                    }
                }
            }
            worst = std::max(worst, sd);
        }
    }
    return worst;
}

namespace {

std::vector<std::vector<double>> moment_differences(const PermFamily &fam, int d) {
    check_family(fam, d);
    if (d > 7) {
        throw DimensionError("classical diamond distance needs the exhaustive S_d sum, d <= 7");
    }
    auto group = all_perms(d);
    std::vector<double> gw(group.size(), 1.0 / (double)group.size());
    std::vector<std::vector<double>> out;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            auto w = pair_image(fam.members, fam.weights, d, i, j);
            auto h = pair_image(group, gw, d, i, j);
            for (size_t k = 0; k < w.size(); k++) {
                w[k] -= h[k];
            }
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

double classical_diamond_distance(const PermFamily &fam, int d) {
    auto diffs = moment_differences(fam, d);
    double worst = 0;
    for (const auto &v : diffs) {
        double s = 0;
        for (double x : v) {
            s += std::abs(x);
        }
        worst = std::max(worst, s);
    }
    return worst;
}

double classical_moment_distance(const PermFamily &fam, int d, const std::vector<double> &q) {
    auto diffs = moment_differences(fam, d);
    if (q.size() != diffs.size()) {
        throw DimensionError("input distribution must have d^2 entries");
    }
    std::vector<double> acc(diffs[0].size(), 0.0);
    for (size_t x = 0; x < q.size(); x++) {
        for (size_t k = 0; k < acc.size(); k++) {
            acc[k] += q[x] * diffs[x][k];
        }
    }
    double s = 0;
    for (double v : acc) {
        s += std::abs(v);
    }
    return s;
}

Permutation random_permutation(int d, std::mt19937_64 &rng) {
    std::vector<int> m(d);
    std::iota(m.begin(), m.end(), 0);
    for (int i = d - 1; i > 0; i--) {
        std::uniform_int_distribution<int> u(0, i);
        std::swap(m[i], m[u(rng)]);
    }
    return Permutation(m);
}

}  // namespace declab
