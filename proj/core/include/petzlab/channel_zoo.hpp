// Copyright 2026 The petzlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Constructors for the channels and reference states studied here, in any
// dimension d >= 2.

#include <span>

#include "petzlab/channel.hpp"

namespace petzlab {

/// Noise strength p in [0, 1]; p = 0 is noiseless, p = 1 maximal noise.
/// Implicit from double so call sites read `dephasing(3, 0.4)`; throws
/// DomainError outside [0, 1].
class NoiseStrength {
 public:
  NoiseStrength(double p);  // NOLINT(google-explicit-constructor)
  double value() const { return p_; }

 private:
  double p_;
};

KrausSet identity_channel(int dim);

/// (1-p) rho + p sum_k P_k rho P_k with Kraus operators
/// { sqrt(1-p) 1, sqrt(p) |0><0|, ..., sqrt(p) |d-1><d-1| }.
KrausSet dephasing(int dim, NoiseStrength p);

/// Decay of every excited level straight to |0>:
/// K_0 = |0><0| + sqrt(1-p) sum_{i>0} |i><i|,  K_i = sqrt(p) |0><i|.
KrausSet amplitude_damping(int dim, NoiseStrength p);

/// Level-dependent decay probabilities; `probs[i-1]` is the decay
/// probability of level i, so d = probs.size() + 1.
KrausSet amplitude_damping_nonuniform(std::span<const double> probs);

/// sigma(eps) = (1-eps)|0><0| + eps/(d-1) sum_{n=1}^{d-1} |n><n|.
/// Full rank iff 0 < eps < 1; eps = 1 - 1/d is the maximally mixed state.
DensityMatrix reference_state(int dim, double epsilon);

/// The epsilon at which reference_state is maximally mixed, 1 - 1/d.
double maximally_mixed_epsilon(int dim);

}  // namespace petzlab
