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

#include <random>

#include "steinerlab/complex.hpp"

namespace steinerlab {

// A small Steiner complex built from library shapes by a random sequence of
// Gray tensors, joins and suspensions, staying under max_total generators.
BasedComplex random_steiner_complex(std::mt19937_64& rng, std::size_t max_total = 120);

}  // namespace steinerlab
