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

#include "gsv/closed_forms.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "gsv/errors.h"

namespace gsv {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 0; i < k; i++) {
        acc = acc * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw DomainError("binomial coefficient overflows 64 bits.");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

Sld ghz_sld(std::size_t n) {
    if (n < 2 || n > kSldMaxQubits) {
        throw DomainError("GHZ SLD needs 2 <= n <= 63, got " + std::to_string(n) + ".");
    }
    Sld out;
    out.counts.assign(n + 1, 0);
    for (std::size_t k = 0; k <= n; k += 2) {
        out.counts[k] = binomial(n, k);
    }
    out.counts[n] += std::uint64_t{1} << (n - 1);
    return out;
}

Sld ghz_with_product_sld(std::size_t n, std::size_t m) {
    if (m < 2 || m > n || n > kSldMaxQubits) {
        throw DomainError(
            "GHZ-with-product SLD needs 2 <= m <= n <= 63, got n=" + std::to_string(n) + ", m=" + std::to_string(m) +
            ".");
    }
    auto N = static_cast<std::int64_t>(n);
    auto M = static_cast<std::int64_t>(m);
    Sld out;
    out.counts.assign(n + 1, 0);
    for (std::int64_t k = 0; k <= N; k++) {
        std::uint64_t a = (std::uint64_t{1} << (m - 1)) * binomial(N - M, k - M);
        for (std::int64_t j = 0; j <= k / 2; j++) {
            a += binomial(M, 2 * j) * binomial(N - M, k - 2 * j);
        }
        out.counts[k] = a;
    }
    return out;
}

std::vector<double> approximate_sld(std::size_t n, std::size_t isolated) {
    if (n < 1 || isolated > n || n > kSldMaxQubits) {
        throw DomainError("approximate SLD needs 1 <= n <= 63 and 0 <= I <= n.");
    }
    double nd = static_cast<double>(n);
    double q = (3.0 * nd - static_cast<double>(isolated)) / (4.0 * nd);
    std::vector<double> out(n + 1);
    for (std::size_t k = 0; k <= n; k++) {
        out[k] = std::exp2(nd) * static_cast<double>(binomial(n, k)) * std::pow(q, static_cast<double>(k)) *
                 std::pow(1.0 - q, static_cast<double>(n - k));
    }
    return out;
}

Fraction weight_probability(SamplingSet set, std::size_t n, std::size_t k) {
    if (k > n || n > 31) {
        throw DomainError("weight probability needs 0 <= k <= n <= 31.");
    }
    Fraction f;
    f.num = binomial(n, k);
    if (set == SamplingSet::TensorProductBasis) {
        f.den = std::uint64_t{1} << n;
    } else {
        for (std::size_t i = 0; i < k; i++) {
            f.num *= 3;
        }
        f.den = std::uint64_t{1} << (2 * n);
    }
    std::uint64_t g = std::gcd(f.num, f.den);
    f.num /= g;
    f.den /= g;
    return f;
}

}  // namespace gsv
