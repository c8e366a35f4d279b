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

#include "gsv/thresholds.h"

#include <algorithm>
#include <cmath>

namespace gsv {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kBisectTolerance = 1e-12;

}  // namespace

double threshold_n_sector(const Sld &sld) {
    std::size_t n = sld.num_qubits();
    if (n == 0 || sld.counts[n] <= 1) {
        return 0;
    }
    return 1.0 - std::pow(static_cast<double>(sld.counts[n]), -1.0 / (2.0 * static_cast<double>(n)));
}

double majorization_polynomial(const Sld &sld, double x) {
    // Horner from the top coefficient.
    double n = static_cast<double>(sld.num_qubits());
    double acc = 0;
    for (std::size_t k = sld.counts.size(); k-- > 0;) {
        acc = acc * x + (2.0 * static_cast<double>(k) - n) * static_cast<double>(sld.counts[k]);
    }
    return acc;
}

double threshold_majorization(const Sld &sld) {
    if (!(majorization_polynomial(sld, 1.0) > 0)) {
        return 0;
    }
    double hi = 1.0;
    double lo = 1.0;
    // g(0) = -n A_0 < 0 for n >= 1, so the scan always finds a sign change.
    for (int step = 1;; step++) {
        lo = std::max(0.0, 1.0 - step * kScanStep);
        if (!(majorization_polynomial(sld, lo) > 0)) {
            break;
        }
        hi = lo;
        if (lo == 0.0) {
            return 1.0;
        }
    }
    // Invariant: g(lo) <= 0 < g(hi).
    while (hi - lo > kBisectTolerance) {
        double mid = 0.5 * (lo + hi);
        if (majorization_polynomial(sld, mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 1.0 - std::sqrt(0.5 * (lo + hi));
}

double threshold_distillation(const Graph &g) {
    auto pair = distillation_pair(g);
    if (!pair) {
        return 0;
    }
    double degree_sum = static_cast<double>(g.degree(pair->first) + g.degree(pair->second));
    return 1.0 - std::exp2(-2.0 / (2.0 + degree_sum));
}

ThresholdReport threshold_report(const Graph &g, const Sld &sld) {
    return {threshold_n_sector(sld), threshold_majorization(sld), threshold_distillation(g)};
}

}  // namespace gsv
