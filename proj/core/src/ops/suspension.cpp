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
#include "steinerlab/ops.hpp"
#include "steinerlab/shapes.hpp"

namespace steinerlab {

Name susp_name(const Name& x) { return tagged("S", x); }
Name pole_name(int side) { return Name(side == 0 ? "bot0" : "bot1"); }

BasedComplex suspension(const BasedComplex& a) {
  ComplexBuilder builder;
  builder.vertex(pole_name(0), 1).vertex(pole_name(1), 1);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      NamedChain bd;
      if (p == 0) {
        bd = {{pole_name(1), a.aug(i)}, {pole_name(0), checked_neg(a.aug(i))}};
      } else {
        for (const Term& t : a.d(p, i).terms()) bd.emplace_back(susp_name(a.name(p - 1, t.index)), t.coeff);
      }
      builder.cell(p + 1, susp_name(a.name(p, i)), std::move(bd));
    }
  }
  return builder.build();
}

BasedComplex suspension_via_pushout(const BasedComplex& a) {
  BasedComplex ends = ComplexBuilder().vertex(Name("0")).vertex(Name("1")).build();
  BasedComplex d1 = interval();
  ComplexMap ends_in = MapBuilder(ends, d1).set(Name("0"), {{Name("0"), 1}}).set(Name("1"), {{Name("1"), 1}}).build();
  ComplexMap f = gray_tensor_map(identity_map(a), ends_in);
  BasedComplex poles = boundary_disk(1);
  TensorNaming c(a, ends);
  MapBuilder gb(f.source(), poles);
  for (std::uint32_t i = 0; i < a.count(0); ++i) {
    for (int t = 0; t < 2; ++t) gb.set(c(a.name(0, i), Name(t ? "1" : "0")), {{pole_name(t), a.aug(i)}});
  }
  PushoutResult po = pushout(f, gb.build());
  const BasedComplex& glued = po.require();
  TensorNaming x(a, d1);
  std::map<Name, Name> table{{tagged("R", pole_name(0)), pole_name(0)}, {tagged("R", pole_name(1)), pole_name(1)}};
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (const Name& n : a.generators(p)) table.emplace(tagged("L", x(n, Name("i"))), susp_name(n));
  }
  return rename(glued, table).complex;
}

ComplexMap suspension_map(const ComplexMap& f) {
  const BasedComplex& a = f.source();
  const BasedComplex& b = f.target();
  MapBuilder mb(suspension(a), suspension(b));
  mb.set(pole_name(0), {{pole_name(0), 1}}).set(pole_name(1), {{pole_name(1), 1}});
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      NamedChain img;
      for (const Term& t : f.image(p, i).terms()) img.emplace_back(susp_name(b.name(p, t.index)), t.coeff);
      mb.set(susp_name(a.name(p, i)), img);
    }
  }
  return mb.build();
}

BasedComplex antisuspension(const BasedComplex& a) { return dual_co(suspension(dual_co(a))); }

ComplexMap susp_coop_iso(const BasedComplex& a) {
  BasedComplex s = suspension(a);
  BasedComplex t = antisuspension(dual_coop(a));
  MapBuilder mb(s, t);
  for (int q = 0; q <= s.top_degree(); ++q) {
    for (const Name& n : s.generators(q)) mb.set(n, {{n, 1}});
  }
  return mb.build();
}

ComplexMap p_map(const BasedComplex& a) {
  BasedComplex source = gray_tensor(a, interval());
  TensorNaming c(a, interval());
  const Name pt;
  MapBuilder mb(source, join(a, unit()));
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      const Name& x = a.name(p, i);
      mb.set(c(x, Name("0")), {{join_left(x), 1}});
      mb.set(c(x, Name("i")), {{join_mixed(x, pt), 1}});
      if (p == 0) mb.set(c(x, Name("1")), {{join_right(pt), a.aug(i)}});
    }
  }
  return mb.build();
}

ComplexMap ell_map(const BasedComplex& a) {
  const Name pt;
  MapBuilder mb(join(a, unit()), suspension(a));
  mb.set(join_right(pt), {{pole_name(1), 1}});
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      const Name& x = a.name(p, i);
      if (p == 0) mb.set(join_left(x), {{pole_name(0), a.aug(i)}});
      mb.set(join_mixed(x, pt), {{susp_name(x), 1}});
    }
  }
  return mb.build();
}

ComplexMap q_susp_map(const BasedComplex& a) { return compose(p_map(a), ell_map(a)); }

}  // namespace steinerlab
