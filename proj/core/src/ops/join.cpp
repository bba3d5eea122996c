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

Name join_left(const Name& x) { return tagged("L", x); }
Name join_mixed(const Name& x, const Name& y) { return tagged("J", x, y); }
Name join_right(const Name& y) { return tagged("R", y); }

namespace {

BasedComplex endpoints() { return ComplexBuilder().vertex(Name("0")).vertex(Name("1")).build(); }

}  // namespace

BasedComplex join_closed_form(const BasedComplex& a, const BasedComplex& b) {
  ComplexBuilder full;
  auto add_side = [&full](const BasedComplex& c, Name (*wrap)(const Name&)) {
    for (int q = 0; q <= c.top_degree(); ++q) {
      for (std::uint32_t i = 0; i < c.count(q); ++i) {
        if (q == 0) {
          full.vertex(wrap(c.name(0, i)), c.aug(i));
        } else {
          NamedChain bd;
          for (const Term& t : c.d(q, i).terms()) bd.emplace_back(wrap(c.name(q - 1, t.index)), t.coeff);
          full.cell(q, wrap(c.name(q, i)), std::move(bd));
        }
      }
    }
  };
  add_side(a, join_left);
  add_side(b, join_right);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (int q = 0; q <= b.top_degree(); ++q) {
      const Coeff sign = sign_power(p);
      for (std::uint32_t i = 0; i < a.count(p); ++i) {
        const Name& x = a.name(p, i);
        for (std::uint32_t j = 0; j < b.count(q); ++j) {
          const Name& y = b.name(q, j);
          NamedChain bd;
          if (p > 0) {
            for (const Term& t : a.d(p, i).terms()) bd.emplace_back(join_mixed(a.name(p - 1, t.index), y), t.coeff);
          }
          if (p == 0) bd.emplace_back(join_right(y), checked_mul(sign, a.aug(i)));
          if (q == 0) bd.emplace_back(join_left(x), checked_mul(-sign, b.aug(j)));
          if (q > 0) {
            for (const Term& t : b.d(q, j).terms()) {
              bd.emplace_back(join_mixed(x, b.name(q - 1, t.index)), checked_mul(-sign, t.coeff));
            }
          }
          full.cell(p + q + 1, join_mixed(x, y), std::move(bd));
        }
      }
    }
  }
  return full.build();
}

BasedComplex join(const BasedComplex& a, const BasedComplex& b) {
  BasedComplex ends = endpoints();
  BasedComplex d1 = interval();
  ComplexMap ends_in = MapBuilder(ends, d1).set(Name("0"), {{Name("0"), 1}}).set(Name("1"), {{Name("1"), 1}}).build();

  BasedComplex a_ends = gray_tensor(a, ends);
  BasedComplex a_d1 = gray_tensor(a, d1);
  ComplexMap f = gray_tensor_map(gray_tensor_map(identity_map(a), ends_in), identity_map(b));

  BasedComplex sum = direct_sum(a, b);
  TensorNaming c1(a, ends);
  TensorNaming c2(a_ends, b);
  MapBuilder gb(f.source(), sum);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      const Name& x = a.name(p, i);
      for (int q = 0; q <= b.top_degree(); ++q) {
        for (std::uint32_t j = 0; j < b.count(q); ++j) {
          const Name& y = b.name(q, j);
          if (q == 0) gb.set(c2(c1(x, Name("0")), y), {{join_left(x), b.aug(j)}});
          if (p == 0) gb.set(c2(c1(x, Name("1")), y), {{join_right(y), a.aug(i)}});
        }
      }
    }
  }
  PushoutResult po = pushout(f, gb.build());
  const BasedComplex& glued = po.require();

  TensorNaming x1(a, d1);
  TensorNaming x2(a_d1, b);
  std::map<Name, Name> table;
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (const Name& x : a.generators(p)) {
      table.emplace(tagged("R", join_left(x)), join_left(x));
      for (int q = 0; q <= b.top_degree(); ++q) {
        for (const Name& y : b.generators(q)) table.emplace(tagged("L", x2(x1(x, Name("i")), y)), join_mixed(x, y));
      }
    }
  }
  for (int q = 0; q <= b.top_degree(); ++q) {
    for (const Name& y : b.generators(q)) table.emplace(tagged("R", join_right(y)), join_right(y));
  }
  BasedComplex out = rename(glued, table).complex;
  if (!(out == join_closed_form(a, b))) {
    throw Error(ErrorCode::kInvalidResult, "join pushout disagrees with the three-part presentation");
  }
  return out;
}

BasedComplex join_point_displayed(const BasedComplex& a) {
  const Name pt = join_right(Name());
  ComplexBuilder builder;
  builder.vertex(pt, 1);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      const Name& x = a.name(p, i);
      NamedChain own;
      if (p == 0) {
        builder.vertex(join_left(x), a.aug(i));
      } else {
        for (const Term& t : a.d(p, i).terms()) own.emplace_back(join_left(a.name(p - 1, t.index)), t.coeff);
        builder.cell(p, join_left(x), own);
      }
      NamedChain mixed;
      if (p == 0) {
        mixed.emplace_back(join_left(x), 1);
        mixed.emplace_back(pt, checked_neg(a.aug(i)));
      } else {
        mixed.emplace_back(join_left(x), sign_power(p));
        for (const Term& t : a.d(p, i).terms()) mixed.emplace_back(join_mixed(a.name(p - 1, t.index), Name()), t.coeff);
      }
      builder.cell(p + 1, join_mixed(x, Name()), std::move(mixed));
    }
  }
  return builder.build();
}

ComplexMap join_map(const ComplexMap& f, const ComplexMap& g) {
  const BasedComplex& a = f.source();
  const BasedComplex& b = g.source();
  const BasedComplex& a2 = f.target();
  const BasedComplex& b2 = g.target();
  BasedComplex source = join_closed_form(a, b);
  BasedComplex target = join_closed_form(a2, b2);
  MapBuilder mb(source, target);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      NamedChain img;
      for (const Term& t : f.image(p, i).terms()) img.emplace_back(join_left(a2.name(p, t.index)), t.coeff);
      mb.set(join_left(a.name(p, i)), img);
    }
  }
  for (int q = 0; q <= b.top_degree(); ++q) {
    for (std::uint32_t j = 0; j < b.count(q); ++j) {
      NamedChain img;
      for (const Term& t : g.image(q, j).terms()) img.emplace_back(join_right(b2.name(q, t.index)), t.coeff);
      mb.set(join_right(b.name(q, j)), img);
    }
  }
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (std::uint32_t i = 0; i < a.count(p); ++i) {
      for (int q = 0; q <= b.top_degree(); ++q) {
        for (std::uint32_t j = 0; j < b.count(q); ++j) {
          NamedChain img;
          for (const Term& s : f.image(p, i).terms()) {
            for (const Term& t : g.image(q, j).terms()) {
              img.emplace_back(join_mixed(a2.name(p, s.index), b2.name(q, t.index)), checked_mul(s.coeff, t.coeff));
            }
          }
          mb.set(join_mixed(a.name(p, i), b.name(q, j)), img);
        }
      }
    }
  }
  return mb.build();
}

BasedComplex antijoin(const BasedComplex& a, const BasedComplex& b) {
  return dual_co(join(dual_co(a), dual_co(b)));
}

}  // namespace steinerlab
