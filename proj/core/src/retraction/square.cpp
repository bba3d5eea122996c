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

#include "steinerlab/errors.hpp"
#include "steinerlab/retraction.hpp"

namespace steinerlab {

namespace {

const Name kPt;

Name w(const char* letters) { return Name::word(letters); }
Name v(const char* subset) { return Name(subset); }

}  // namespace

CheckReport verify_retraction(const RetractionPair& pair) {
  CheckReport r;
  r.add("EMBED_VALID", validate_map(pair.embed).passed());
  r.add("RETRACT_VALID", validate_map(pair.retract).passed());
  if (!(pair.embed.target() == pair.retract.source()) || !(pair.retract.target() == pair.embed.source())) {
    r.fail("COMPOSITE_IDENTITY", "maps do not form a round trip");
    return r;
  }
  ComplexMap round = compose(pair.embed, pair.retract);
  ComplexMap id = identity_map(pair.embed.source());
  if (round == id) {
    r.pass("COMPOSITE_IDENTITY");
  } else {
    r.fail("COMPOSITE_IDENTITY", round.format());
  }
  ComplexMap endo = compose(pair.retract, pair.embed);
  r.add("IDEMPOTENT", compose(endo, endo) == endo);
  return r;
}

ComplexMap q2() {
  MapBuilder mb(cube(2), oriental(2));
  mb.set(w("00"), {{v("0"), 1}});
  mb.set(w("10"), {{v("1"), 1}});
  mb.set(w("01"), {{v("2"), 1}});
  mb.set(w("11"), {{v("2"), 1}});
  mb.set(w("i0"), {{v("0.1"), 1}});
  mb.set(w("1i"), {{v("1.2"), 1}});
  mb.set(w("0i"), {{v("0.2"), 1}});
  mb.set(w("ii"), {{v("0.1.2"), 1}});
  return mb.build();
}

ComplexMap s2() {
  MapBuilder mb(oriental(2), cube(2));
  mb.set(v("0"), {{w("00"), 1}});
  mb.set(v("1"), {{w("10"), 1}});
  mb.set(v("2"), {{w("11"), 1}});
  mb.set(v("0.1"), {{w("i0"), 1}});
  mb.set(v("1.2"), {{w("1i"), 1}});
  mb.set(v("0.2"), {{w("0i"), 1}, {w("i1"), 1}});
  mb.set(v("0.1.2"), {{w("ii"), 1}});
  return mb.build();
}

ComplexMap h_map(const BasedComplex& x) { return gray_tensor_map(compose(q2(), s2()), identity_map(x)); }

ComplexMap rho_map(const BasedComplex& a) {
  const BasedComplex i = interval();
  const BasedComplex sa = suspension(a);
  const BasedComplex ia = gray_tensor(i, a);
  TensorNaming outer(i, sa);
  TensorNaming inner(i, a);
  MapBuilder mb(gray_tensor(i, sa), suspension(ia));
  for (const char* c : {"0", "1", "i"}) {
    for (int p = 0; p <= a.top_degree(); ++p) {
      for (const Name& x : a.generators(p)) mb.set(outer(w(c), susp_name(x)), {{susp_name(inner(w(c), x)), 1}});
    }
  }
  for (int side : {0, 1}) {
    mb.set(outer(w("0"), pole_name(side)), {{pole_name(side), 1}});
    mb.set(outer(w("1"), pole_name(side)), {{pole_name(side), 1}});
  }
  return mb.build();
}

ComplexMap phi_map(const BasedComplex& a) {
  const BasedComplex i = interval();
  const BasedComplex sa = suspension(a);
  TensorNaming outer(i, sa);
  TensorNaming inner(i, a);
  MapBuilder mb(suspension(gray_tensor(i, a)), gray_tensor(i, sa));
  mb.set(pole_name(0), {{outer(w("0"), pole_name(0)), 1}});
  mb.set(pole_name(1), {{outer(w("1"), pole_name(1)), 1}});
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t k = 0; k < a.count(p); ++k) {
      const Name& x = a.name(p, k);
      mb.set(susp_name(inner(w("i"), x)), {{outer(w("i"), susp_name(x)), 1}});
      if (p > 0) {
        mb.set(susp_name(inner(w("0"), x)), {{outer(w("0"), susp_name(x)), 1}});
        mb.set(susp_name(inner(w("1"), x)), {{outer(w("1"), susp_name(x)), 1}});
        continue;
      }
      // Over a vertex the suspended edge picks up the interval edge at the
      // opposite pole.
      const Coeff e = a.aug(k);
      mb.set(susp_name(inner(w("1"), x)), {{outer(w("1"), susp_name(x)), 1}, {outer(w("i"), pole_name(0)), e}});
      mb.set(susp_name(inner(w("0"), x)), {{outer(w("0"), susp_name(x)), 1}, {outer(w("i"), pole_name(1)), e}});
    }
  }
  return mb.build();
}

ComplexMap cone_quotient(const BasedComplex& b) {
  TensorNaming t(interval(), b);
  MapBuilder mb(gray_tensor(interval(), b), join(unit(), b));
  for (int p = 0; p <= b.top_degree(); ++p) {
    for (std::uint32_t k = 0; k < b.count(p); ++k) {
      const Name& x = b.name(p, k);
      if (p == 0) mb.set(t(w("0"), x), {{join_left(kPt), b.aug(k)}});
      mb.set(t(w("i"), x), {{join_mixed(kPt, x), 1}});
      mb.set(t(w("1"), x), {{join_right(x), 1}});
    }
  }
  return mb.build();
}

namespace {

// □² -> D⁰ ⋆ Δ¹ collapsing the edge 0i, and a section with the same matrices as s2.
ComplexMap q_prime() {
  MapBuilder mb(cube(2), join(unit(), oriental(1)));
  mb.set(w("00"), {{join_left(kPt), 1}});
  mb.set(w("01"), {{join_left(kPt), 1}});
  mb.set(w("10"), {{join_right(v("0")), 1}});
  mb.set(w("11"), {{join_right(v("1")), 1}});
  mb.set(w("i0"), {{join_mixed(kPt, v("0")), 1}});
  mb.set(w("i1"), {{join_mixed(kPt, v("1")), 1}});
  mb.set(w("1i"), {{join_right(v("0.1")), 1}});
  mb.set(w("ii"), {{join_mixed(kPt, v("0.1")), 1}});
  return mb.build();
}

ComplexMap s_prime() {
  MapBuilder mb(join(unit(), oriental(1)), cube(2));
  mb.set(join_left(kPt), {{w("00"), 1}});
  mb.set(join_right(v("0")), {{w("10"), 1}});
  mb.set(join_right(v("1")), {{w("11"), 1}});
  mb.set(join_mixed(kPt, v("0")), {{w("i0"), 1}});
  mb.set(join_right(v("0.1")), {{w("1i"), 1}});
  mb.set(join_mixed(kPt, v("1")), {{w("0i"), 1}, {w("i1"), 1}});
  mb.set(join_mixed(kPt, v("0.1")), {{w("ii"), 1}});
  return mb.build();
}

}  // namespace

ESKappa e_s_kappa(const BasedComplex& x) {
  const BasedComplex i = interval();
  const BasedComplex b = join(unit(), x);
  const BasedComplex ib = gray_tensor(i, b);
  const ComplexMap cx = cone_quotient(x);
  const ComplexMap dcx = gray_tensor_map(identity_map(i), cx);
  const ComplexMap hp = compose(q_prime(), s_prime());
  const Iso assoc = tensor_assoc(i, i, x);
  const ComplexMap hx = compose(assoc.inverse, gray_tensor_map(hp, identity_map(x)), assoc.forward);
  const BasedComplex iix = hx.source();
  TensorNaming outer(i, b);
  TensorNaming inner_outer(i, gray_tensor(i, x));
  TensorNaming inner(i, x);

  // a ⊗ (c ⊗ y) pushed through h' ⊗ X and then D¹ ⊗ c_X.
  auto through = [&](const Name& a, const char* c, int deg_a, int deg_y, const Name& y) {
    const int deg = deg_a + (c[0] == 'i' ? 1 : 0) + deg_y;
    return dcx.apply(hx.apply(iix.gen(deg, inner_outer(a, inner(w(c), y)))));
  };

  MapBuilder eb(ib, ib);
  for (const char* a : {"0", "1", "i"}) {
    const int da = a[0] == 'i' ? 1 : 0;
    eb.set(outer(w(a), join_left(kPt)), {{outer(w(a), join_left(kPt)), 1}});
    for (int p = 0; p <= x.top_degree(); ++p) {
      for (const Name& y : x.generators(p)) {
        eb.set(da + p + 1, ib.index_of(da + p + 1, outer(w(a), join_mixed(kPt, y))), through(w(a), "i", da, p, y));
        eb.set(da + p, ib.index_of(da + p, outer(w(a), join_right(y))), through(w(a), "1", da, p, y));
      }
    }
  }
  const ComplexMap e = eb.build();

  const BasedComplex cb_target = join(unit(), b);
  MapBuilder sb(cb_target, ib);
  sb.set(join_left(kPt), {{outer(w("0"), join_left(kPt)), 1}});
  for (int p = 0; p <= b.top_degree(); ++p) {
    for (const Name& y : b.generators(p)) {
      sb.set(p + 1, cb_target.index_of(p + 1, join_mixed(kPt, y)), e.apply(ib.gen(p + 1, outer(w("i"), y))));
      sb.set(p, cb_target.index_of(p, join_right(y)), e.apply(ib.gen(p, outer(w("1"), y))));
    }
  }
  const ComplexMap s = sb.build();
  const ComplexMap cb = cone_quotient(b);

  CheckReport r;
  r.add("H_PRIME_VALID", validate_map(hp).passed());
  r.add("E_VALID", validate_map(e).passed());
  r.add("E_COMMUTES_WITH_H", compose(dcx, e) == compose(hx, dcx));
  r.add("E_OVER_CONE", compose(e, cb) == cb);
  r.add("S_VALID", validate_map(s).passed());
  r.add("S_SECTION", compose(s, cb) == identity_map(cb_target));
  r.add("S_FACTORS_E", compose(cb, s) == e);
  bool kappa = true;
  for (std::uint32_t k = 0; k < b.count(0); ++k) {
    const Name& y = b.name(0, k);
    Chain want = ib.gen(0, outer(w("0"), join_left(kPt)), b.aug(k));
    kappa = kappa && e.apply(ib.gen(0, outer(w("0"), y))) == want;
  }
  for (int p = 1; p <= b.top_degree(); ++p) {
    for (const Name& y : b.generators(p)) kappa = kappa && e.apply(ib.gen(p, outer(w("0"), y))).is_zero();
  }
  r.add("E_KILLS_BOTTOM", kappa);
  return {e, s, cb, hp, std::move(r)};
}

}  // namespace steinerlab
