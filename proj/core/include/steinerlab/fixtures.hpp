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

#pragma once

#include "steinerlab/complex.hpp"

namespace steinerlab {

// Small complexes that each break one requirement on purpose.

// x -e-> y -f-> x: valid, but x ≤ e ≤ y ≤ f ≤ x is a loop.
BasedComplex loop_fixture();
// A 2-cell t with d(t) = e, so d(d(t)) = y - x.
BasedComplex d_squared_fixture();
// Vertices of augmentation 1 and 2 joined by an edge, so ε(d(e)) = 1.
BasedComplex augmentation_fixture();
// An edge e with d(e) = 2y - 2x; its atom has augmentation 2 at level 0.
BasedComplex non_unital_fixture();

}  // namespace steinerlab
