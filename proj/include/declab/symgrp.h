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

#ifndef DECLAB_SYMGRP_H
#define DECLAB_SYMGRP_H

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "declab/matca.h"

namespace declab {

/// mapping[j] is the image of j.
struct Permutation {
    std::vector<int> mapping;

    Permutation() = default;
    explicit Permutation(std::vector<int> m);  // validates bijectivity
    static Permutation identity(int d);

    int size() const { return (int)mapping.size(); }
    int operator()(int j) const { return mapping[j]; }
    Permutation inverse() const;
    bool operator==(const Permutation &o) const { return mapping == o.mapping; }
};

/// (p∘q)(j) = p(q(j)).
Permutation compose(const Permutation &p, const Permutation &q);

/// k[i] = number of cycles of length i, for i = 1..d (k[0] unused).
struct CycleType {
    std::vector<int> k;

    int d() const;
    int k1() const { return k.size() > 1 ? k[1] : 0; }
    int k2() const { return k.size() > 2 ? k[2] : 0; }
    bool operator==(const CycleType &o) const { return k == o.k; }
    /// Cycle lengths in non-increasing order.
    std::vector<int> lengths() const;
    static CycleType from_lengths(int d, const std::vector<int> &lengths);
};

struct Partition {
    std::vector<int> parts;  // non-increasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);  // validates ordering and positivity
    int d() const;
    bool operator==(const Partition &o) const { return parts == o.parts; }
};

/// All partitions of d, in reverse lexicographic order starting from (d).
std::vector<Partition> partitions(int d);

struct PermFamily {
    std::vector<Permutation> members;
    std::vector<double> weights;

    static PermFamily uniform(std::vector<Permutation> members);
    int degree() const { return members.empty() ? 0 : members[0].size(); }
};

/// P[i,j] = 1 iff p(j) = i.
Mat perm_operator(const Permutation &p);

/// All d! permutations in lexicographic order. Requires d <= 8.
std::vector<Permutation> all_perms(int d);

CycleType cycle_type(const Permutation &p);

/// Size of the conjugacy class with the given cycle type.
std::int64_t class_size(const CycleType &c);

/// Irreducible character through the Murnaghan-Nakayama rule.
std::int64_t mn_character(const Partition &lambda, const CycleType &c);

/// (χ_(d), χ_(d-1,1), χ_(d-2,1,1), χ_(d-2,2)) from their closed forms in k1, k2. Requires d >= 4.
std::array<std::int64_t, 4> char_closed_forms(int d, const CycleType &c);

enum class S2Class { identity, swap };

/// Character of (σ,π) ↦ (P(σ)⊗P(σ))·S(π) on C^d ⊗ C^d: k1² for the identity of S2, k1 + 2k2 for the swap.
std::int64_t chi_R(int d, const CycleType &c, S2Class b);

/// d! / Π hook lengths.
std::int64_t hook_dimension(const Partition &lambda);

/// Multiplication in GF(2^n) with the fixed irreducible polynomial for n.
std::uint32_t gf2n_mul(std::uint32_t a, std::uint32_t b, int n);
std::uint32_t gf2n_poly(int n);

/// All maps x ↦ a·x + b over GF(2^n), a ≠ 0. Requires 1 <= n <= 6.
PermFamily affine_family(int n);

/// Max over ordered distinct pairs of the (unhalved) statistical distance between
/// the induced pair distribution and uniform on ordered distinct pairs.
double pairwise_dependence(const PermFamily &fam, int d);

/// Classical diamond distance between the second-moment maps of the family and of S_d,
/// evaluated at the classical basis inputs |i><i| ⊗ |j><j|. Requires d <= 7.
double classical_diamond_distance(const PermFamily &fam, int d);

/// Same quantity for a general classical input distribution q on pairs (i, j), flattened as i*d+j.
double classical_moment_distance(const PermFamily &fam, int d, const std::vector<double> &q);

Permutation random_permutation(int d, std::mt19937_64 &rng);

}  // namespace declab

#endif
