// Copyright 2026 The wrightcont Authors
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

#ifndef WRIGHTCONT_SEEDS_HPP_
#define WRIGHTCONT_SEEDS_HPP_

#include "wrightcont/fourier_space.hpp"

namespace wrightcont {

/// Approximate periodic solution of the alpha problem just past the
/// bifurcation, at alpha = pi/2 + 7.3165e-4, with 6 modes. Starting datum
/// for the continuation run.
inline gpoint near_bifurcation_seed() {
  gpoint x(6);
  x.L() = 1.570599180042083;
  x.a0() = 0.0;
  x.a(1) = 0.000393777377493;
  x.b(1) = 0.031377227341359;
  x.a(2) = -0.000389051487791;
  x.b(2) = 0.000206800585095;
  x.a(3) = -0.000004694294098;
  x.b(3) = -0.000001372932742;
  x.a(4) = -0.000000031481138;
  x.b(4) = -0.000000035052666;
  x.a(5) = -0.000000000114467;
  x.b(5) = -0.000000000397361;
  return x;
}

/// Default left endpoint of the alpha continuation, rounded down so the
/// certified range starts at or below pi/2 + 7.3165e-4.
inline double default_alpha_start() {
  return (half_pi_interval() + interval(7.3165e-4)).lo();
}

/// Offset of default_alpha_start() from pi/2.
inline double default_alpha_offset() { return 7.3165e-4; }

}  // namespace wrightcont

#endif  // WRIGHTCONT_SEEDS_HPP_
