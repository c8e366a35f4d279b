// Copyright 2026 The gsv Authors
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

#ifndef GSV_CLOSED_FORMS_H
#define GSV_CLOSED_FORMS_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsv/sld.h"

namespace gsv {

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws DomainError on 64-bit overflow.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// SLD of the n-qubit GHZ state: A_k = C(n,k)[k even] + 2^{n-1}[k = n]. Requires n >= 2.
Sld ghz_sld(std::size_t n);

/// SLD of GHZ_m ⊗ |0>^{⊗(n-m)}:
/// A_k = 2^{m-1} C(n-m, k-m) + Σ_j C(m, 2j) C(n-m, k-2j). Requires 2 <= m <= n.
Sld ghz_with_product_sld(std::size_t n, std::size_t m);

/// Binomial approximation for a graph state with `isolated` isolated vertices:
/// A_k ≈ 2^n C(n,k) q^k (1-q)^{n-k}, q = (3n - I) / 4n.
std::vector<double> approximate_sld(std::size_t n, std::size_t isolated);

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    bool operator==(const Fraction &) const = default;
    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
};

enum class SamplingSet { TensorProductBasis, PauliGroup };

/// Probability that a uniformly drawn operator has weight k:
/// C(n,k) 2^{-n} over a tensor product basis, C(n,k) 3^k 4^{-n} over the Pauli group.
/// Reduced to lowest terms. Requires k <= n <= 31.
Fraction weight_probability(SamplingSet set, std::size_t n, std::size_t k);

}  // namespace gsv

#endif
