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

#include <algorithm>

#include "steinerlab/errors.hpp"
#include "steinerlab/ops.hpp"
#include "steinerlab/shapes.hpp"

namespace steinerlab {

std::string_view to_string(Duality which) {
  switch (which) {
    case Duality::kOp: return "op";
    case Duality::kCo: return "co";
    case Duality::kCoop: return "coop";
  }
  return "?";
}

namespace {

Coeff dual_sign(int degree, Duality which) {
  switch (which) {
    case Duality::kOp: return sign_power(degree);
    case Duality::kCo: return sign_power(degree + 1);
    case Duality::kCoop: return -1;
  }
  return 1;
}

ComplexMap copy_matrices(const ComplexMap& f, const BasedComplex& source, const BasedComplex& target) {
  MapBuilder mb(source, target);
  for (int q = 0; q <= f.source().top_degree(); ++q) {
    for (std::uint32_t i = 0; i < f.source().count(q); ++i) mb.set(q, i, f.image(q, i));
  }
  return mb.build();
}

// x⊗y -> y⊗x between tensors presented with the given namings.
ComplexMap swap_map(const BasedComplex& a, const BasedComplex& b, const BasedComplex& source,
                    const BasedComplex& target) {
  TensorNaming src_name(a, b);
  TensorNaming tgt_name(b, a);
  MapBuilder mb(source, target);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (int q = 0; q <= b.top_degree(); ++q) {
      for (const Name& x : a.generators(p)) {
        for (const Name& y : b.generators(q)) mb.set(src_name(x, y), {{tgt_name(y, x), 1}});
      }
    }
  }
  return mb.build();
}

Iso swap_iso(const BasedComplex& a, const BasedComplex& b, Duality which) {
  BasedComplex da = dual(a, which);
  BasedComplex db = dual(b, which);
  BasedComplex source = gray_tensor(da, db);
  BasedComplex target = dual(gray_tensor(b, a), which);
  return {swap_map(a, b, source, target), swap_map(b, a, target, source)};
}

}  // namespace

BasedComplex dual(const BasedComplex& a, Duality which) {
  return map_differential(a, [which](int q, std::uint32_t, const Chain& d) { return d.scaled(dual_sign(q, which)); });
}

ComplexMap dual_map(const ComplexMap& f, Duality which) {
  return copy_matrices(f, dual(f.source(), which), dual(f.target(), which));
}

Iso swap_iso_op(const BasedComplex& a, const BasedComplex& b) { return swap_iso(a, b, Duality::kOp); }
Iso swap_iso_co(const BasedComplex& a, const BasedComplex& b) { return swap_iso(a, b, Duality::kCo); }

Iso join_op_iso(const BasedComplex& a, const BasedComplex& b) {
  BasedComplex source = join(dual_op(a), dual_op(b));
  BasedComplex target = dual_op(join(b, a));
  auto build = [](const BasedComplex& x, const BasedComplex& y, const BasedComplex& src, const BasedComplex& tgt) {
    MapBuilder mb(src, tgt);
    for (int p = 0; p <= x.top_degree(); ++p) {
      for (const Name& u : x.generators(p)) mb.set(join_left(u), {{join_right(u), 1}});
    }
    for (int q = 0; q <= y.top_degree(); ++q) {
      for (const Name& v : y.generators(q)) mb.set(join_right(v), {{join_left(v), 1}});
    }
    for (int p = 0; p <= x.top_degree(); ++p) {
      for (int q = 0; q <= y.top_degree(); ++q) {
        for (const Name& u : x.generators(p)) {
          for (const Name& v : y.generators(q)) mb.set(join_mixed(u, v), {{join_mixed(v, u), 1}});
        }
      }
    }
    return mb.build();
  };
  return {build(a, b, source, target), build(b, a, target, source)};
}

ComplexMap cube_selfduality(int n, Duality which) {
  if (n < 0) throw Error(ErrorCode::kBadDims, "cube dimension " + std::to_string(n));
  if (which == Duality::kCoop) {
    throw Error(ErrorCode::kUnsupportedSpec, "cube self-duality is provided for op and co");
  }
  BasedComplex d1 = interval();
  MapBuilder vb(dual(d1, which), d1);
  const bool flip = which == Duality::kOp;
  vb.set(Name("0"), {{Name(flip ? "1" : "0"), 1}});
  vb.set(Name("1"), {{Name(flip ? "0" : "1"), 1}});
  vb.set(Name("i"), {{Name("i"), 1}});
  ComplexMap vertex_swap = vb.build();

  ComplexMap sigma = identity_map(unit());
  for (int k = 0; k < n; ++k) {
    // (□^k ⊗ D¹)^w ≅ (D¹)^w ⊗ (□^k)^w -> D¹ ⊗ □^k = □^{k+1}
    Iso swap = swap_iso(d1, cube(k), which);
    sigma = compose(swap.inverse, gray_tensor_map(vertex_swap, sigma));
  }
  return sigma;
}

}  // namespace steinerlab
