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

#include "steinerlab/fixtures.hpp"

namespace steinerlab {

namespace {

const Name x("x"), y("y"), e("e"), f("f"), t("t");

}  // namespace

BasedComplex loop_fixture() {
  return ComplexBuilder().vertex(x).vertex(y).cell(1, e, {{y, 1}, {x, -1}}).cell(1, f, {{x, 1}, {y, -1}}).build();
}

BasedComplex d_squared_fixture() {
  return ComplexBuilder().vertex(x).vertex(y).cell(1, e, {{y, 1}, {x, -1}}).cell(2, t, {{e, 1}}).build();
}

BasedComplex augmentation_fixture() {
  return ComplexBuilder().vertex(x).vertex(y, 2).cell(1, e, {{y, 1}, {x, -1}}).build();
}

BasedComplex non_unital_fixture() {
  return ComplexBuilder().vertex(x).vertex(y).cell(1, e, {{y, 2}, {x, -2}}).build();
}

}  // namespace steinerlab
