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

#ifndef GSV_THRESHOLDS_H
#define GSV_THRESHOLDS_H

#include <cstddef>

#include "gsv/graph.h"
#include "gsv/sld.h"

namespace gsv {

/// Lower bounds on the depolarizing probability at which a graph state loses its
/// entanglement. Each criterion is reported separately.
struct ThresholdReport {
    double n_sector = 0;
    double majorization = 0;
    double distillation = 0;
};

/// A state with A_n > 1 is entangled. Returns 1 - A_n^{-1/(2n)} when A_n > 1, else 0.
double threshold_n_sector(const Sld &sld);

/// A state with Σ_k (2k - n) A_k > 0 is entangled.
///
/// With x = (1-p)^2 the criterion reads g(x) = Σ_k (2k - n) A_k x^k > 0. Scans x downward
/// from 1 in steps of 1e-3 for the first sign change, bisects it to 1e-12 and returns
/// 1 - sqrt(x*). Returns 0 if g(1) <= 0.
double threshold_majorization(const Sld &sld);

/// Evaluates g(x) above; exposed for tests.
double majorization_polynomial(const Sld &sld, double x);

/// 1 - 2^{-2/(2 + max_{ij ∈ E} deg i + deg j)}, or 0 for an edgeless graph.
double threshold_distillation(const Graph &g);

ThresholdReport threshold_report(const Graph &g, const Sld &sld);

}  // namespace gsv

#endif
