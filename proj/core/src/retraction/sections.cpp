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

#include "memo.hpp"
#include "steinerlab/errors.hpp"
#include "steinerlab/retraction.hpp"

namespace steinerlab {

namespace {

const Name kPt;

void require_dim(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::kBadDims, std::string(what) + ": negative dimension");
}

std::vector<int> shifted(std::vector<int> vs, int by) {
  for (int& v : vs) v += by;
  return vs;
}

// I^op -> I exchanging the endpoints.
ComplexMap interval_flip_op() {
  MapBuilder mb(dual_op(interval()), interval());
  mb.set(Name::word("0"), {{Name::word("1"), 1}});
  mb.set(Name::word("1"), {{Name::word("0"), 1}});
  mb.set(Name::word("i"), {{Name::word("i"), 1}});
  return mb.build();
}

ComplexMap must_invert(const ComplexMap& f, const char* what) {
  auto inv = invert_bijection(f);
  if (!inv) throw Error(ErrorCode::kInvalidResult, std::string(what) + " is not a generator bijection");
  return *inv;
}

}  // namespace

Renamed join_point_as_oriental(int n) {
  require_dim(n, "join_point_as_oriental");
  return rename(join(oriental(n), unit()), [n](int, const Name& g) {
    if (g.tag() == "R") return subset_name({n + 1});
    std::vector<int> vs = subset_vertices(g.kids()[0]);
    if (g.tag() == "J") vs.push_back(n + 1);
    return subset_name(vs);
  });
}

Renamed cone_as_oriental(int n) {
  require_dim(n, "cone_as_oriental");
  const BasedComplex base = n == 0 ? zero() : oriental(n - 1);
  return rename(join(unit(), base), [](int, const Name& g) {
    if (g.tag() == "L") return subset_name({0});
    std::vector<int> vs = shifted(subset_vertices(g.kids().back()), 1);
    if (g.tag() == "J") vs.insert(vs.begin(), 0);
    return subset_name(vs);
  });
}

ComplexMap oriental_reversal(int n) {
  require_dim(n, "oriental_reversal");
  const BasedComplex o = oriental(n);
  MapBuilder mb(dual_op(o), o);
  for (int q = 0; q <= o.top_degree(); ++q) {
    for (const Name& g : o.generators(q)) {
      std::vector<int> vs = subset_vertices(g);
      for (int& v : vs) v = n - v;
      std::sort(vs.begin(), vs.end());
      mb.set(g, {{subset_name(vs), 1}});
    }
  }
  return mb.build();
}

RetractionPair section_q_cube(int n) {
  require_dim(n, "section_q_cube");
  static detail::Memo<RetractionPair> memo;
  return memo.get(n, [n] {
    ComplexMap retract = q_susp_map(cube(n));
    if (n == 0) {
      MapBuilder mb(suspension(unit()), cube(1));
      mb.set(susp_name(kPt), {{Name::word("i"), 1}});
      mb.set(pole_name(0), {{Name::word("0"), 1}});
      mb.set(pole_name(1), {{Name::word("1"), 1}});
      return RetractionPair{mb.build(), retract};
    }
    const RetractionPair prev = section_q_cube(n - 1);
    ComplexMap embed = compose(phi_map(cube(n - 1)), gray_tensor_map(identity_map(interval()), prev.embed));
    return RetractionPair{embed, retract};
  });
}

ComplexMap xi(int n) {
  require_dim(n, "xi");
  static detail::Memo<ComplexMap> memo;
  return memo.get(n, [n] {
    if (n == 0) {
      MapBuilder mb(unit(), oriental(0));
      mb.set(kPt, {{subset_name({0}), 1}});
      return mb.build();
    }
    return compose(gray_tensor_map(xi(n - 1), identity_map(interval())), p_map(oriental(n - 1)),
                   join_point_as_oriental(n - 1).forward);
  });
}

RetractionPair section_xi(int n) {
  require_dim(n, "section_xi");
  static detail::Memo<RetractionPair> memo;
  return memo.get(n, [n] {
    if (n == 0) {
      MapBuilder mb(oriental(0), unit());
      mb.set(subset_name({0}), {{kPt, 1}});
      return RetractionPair{mb.build(), xi(0)};
    }
    const int m = n - 1;
    const BasedComplex om = oriental(m);
    const BasedComplex i = interval();

    // Section of the cone quotient onto Δᵐ ≅ D⁰ ⋆ Δᵐ⁻¹, moved to subset names.
    const ESKappa esk = e_s_kappa(m == 0 ? zero() : oriental(m - 1));
    const Renamed cone = cone_as_oriental(m);
    const ComplexMap s_delta = compose(join_map(identity_map(unit()), cone.backward), esk.s,
                                       gray_tensor_map(identity_map(i), cone.forward));

    // Dualise to a section of p_{Δᵐ} using the reversal (Δᵐ)^op ≅ Δᵐ.
    const ComplexMap u = compose(swap_iso_op(i, om).inverse,
                                 gray_tensor_map(interval_flip_op(), oriental_reversal(m)));
    const ComplexMap v = compose(join_op_iso(unit(), om).inverse,
                                 join_map(identity_map(unit()), oriental_reversal(m)));
    const ComplexMap tau = dual_map(compose(v, s_delta, must_invert(u, "cylinder reversal")), Duality::kOp);

    const RetractionPair prev = section_xi(m);
    ComplexMap embed = compose(join_point_as_oriental(m).backward, tau,
                               gray_tensor_map(prev.embed, identity_map(i)));
    return RetractionPair{embed, xi(n)};
  });
}

RetractionPair section_ell(int n) {
  require_dim(n, "section_ell");
  static detail::Memo<RetractionPair> memo;
  return memo.get(n, [n] {
    ComplexMap retract = compose(join_point_as_oriental(n).backward, ell_map(oriental(n)));
    ComplexMap embed = compose(suspension_map(section_xi(n).embed), section_q_cube(n).embed, xi(n + 1));
    return RetractionPair{embed, retract};
  });
}

}  // namespace steinerlab
