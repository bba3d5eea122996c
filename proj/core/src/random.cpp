// Copyright 2026 The steinerlab Authors
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

#include "steinerlab/random.hpp"

#include "steinerlab/ops.hpp"
#include "steinerlab/retraction.hpp"
#include "steinerlab/shapes.hpp"

namespace steinerlab {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BasedComplex random_shape(std::mt19937_64& rng) {
  switch (pick(rng, 0, 4)) {
    case 0:
      return disk(pick(rng, 0, 3));
    case 1:
      return boundary_disk(pick(rng, 1, 3));
    case 2:
      return cube(pick(rng, 0, 3));
    case 3:
      return oriental(pick(rng, 0, 3));
    default:
      return theta(random_theta_spec(rng, 3, 2));
  }
}

}  // namespace

BasedComplex random_steiner_complex(std::mt19937_64& rng, std::size_t max_total) {
  BasedComplex c = random_shape(rng);
  const int steps = pick(rng, 0, 2);
  for (int s = 0; s < steps; ++s) {
    BasedComplex next;
    switch (pick(rng, 0, 2)) {
      case 0:
        next = gray_tensor(c, random_shape(rng));
        break;
      case 1:
        next = join(c, random_shape(rng));
        break;
      default:
        next = suspension(c);
    }
    if (next.total() <= max_total) c = next;
  }
  return c;
}

}  // namespace steinerlab
