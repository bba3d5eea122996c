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

#include "steinerlab/ops.hpp"

namespace steinerlab {

namespace {

bool uniform_words(const BasedComplex& c) {
  std::optional<std::size_t> length;
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (const Name& n : c.generators(q)) {
      if (!n.is_word()) return false;
      if (length && *length != n.tag().size()) return false;
      length = n.tag().size();
    }
  }
  return true;
}

}  // namespace

TensorNaming::TensorNaming(const BasedComplex& a, const BasedComplex& b)
    : words_(uniform_words(a) && uniform_words(b)) {}

Name TensorNaming::operator()(const Name& x, const Name& y) const {
  if (words_) return Name::word(x.tag() + y.tag());
  return tagged("T", x, y);
}

BasedComplex gray_tensor(const BasedComplex& a, const BasedComplex& b) {
  TensorNaming name(a, b);
  ComplexBuilder builder;
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (int q = 0; q <= b.top_degree(); ++q) {
      const Coeff sign = sign_power(p);
      for (std::uint32_t i = 0; i < a.count(p); ++i) {
        const Name& x = a.name(p, i);
        for (std::uint32_t j = 0; j < b.count(q); ++j) {
          const Name& y = b.name(q, j);
          if (p + q == 0) {
            builder.vertex(name(x, y), checked_mul(a.aug(i), b.aug(j)));
            continue;
          }
          NamedChain bd;
          if (p > 0) {
            for (const Term& t : a.d(p, i).terms()) bd.emplace_back(name(a.name(p - 1, t.index), y), t.coeff);
          }
          if (q > 0) {
            for (const Term& t : b.d(q, j).terms()) {
              bd.emplace_back(name(x, b.name(q - 1, t.index)), checked_mul(sign, t.coeff));
            }
          }
          builder.cell(p + q, name(x, y), std::move(bd));
        }
      }
    }
  }
  return builder.build();
}

ComplexMap gray_tensor_map(const ComplexMap& f, const ComplexMap& g) {
  const BasedComplex& a = f.source();
  const BasedComplex& b = g.source();
  const BasedComplex& a2 = f.target();
  const BasedComplex& b2 = g.target();
  BasedComplex source = gray_tensor(a, b);
  BasedComplex target = gray_tensor(a2, b2);
  TensorNaming src_name(a, b);
  TensorNaming tgt_name(a2, b2);
  MapBuilder mb(source, target);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (int q = 0; q <= b.top_degree(); ++q) {
      for (std::uint32_t i = 0; i < a.count(p); ++i) {
        const Chain& fx = f.image(p, i);
        for (std::uint32_t j = 0; j < b.count(q); ++j) {
          const Chain& gy = g.image(q, j);
          std::vector<Term> terms;
          for (const Term& s : fx.terms()) {
            for (const Term& t : gy.terms()) {
              Name n = tgt_name(a2.name(p, s.index), b2.name(q, t.index));
              terms.push_back({target.index_of(p + q, n), checked_mul(s.coeff, t.coeff)});
            }
          }
          Name src = src_name(a.name(p, i), b.name(q, j));
          mb.set(p + q, source.index_of(p + q, src), Chain(p + q, std::move(terms)));
        }
      }
    }
  }
  return mb.build();
}

}  // namespace steinerlab

namespace steinerlab {

Iso tensor_assoc(const BasedComplex& a, const BasedComplex& b, const BasedComplex& c) {
  BasedComplex ab = gray_tensor(a, b);
  BasedComplex bc = gray_tensor(b, c);
  BasedComplex left = gray_tensor(ab, c);
  BasedComplex right = gray_tensor(a, bc);
  TensorNaming n_ab(a, b), n_abc(ab, c), n_bc(b, c), n_abc2(a, bc);
  MapBuilder fwd(left, right), bwd(right, left);
  for (int p = 0; p <= a.top_degree(); ++p) {
    for (const Name& x : a.generators(p)) {
      for (int q = 0; q <= b.top_degree(); ++q) {
        for (const Name& y : b.generators(q)) {
          for (int r = 0; r <= c.top_degree(); ++r) {
            for (const Name& z : c.generators(r)) {
              Name l = n_abc(n_ab(x, y), z);
              Name rr = n_abc2(x, n_bc(y, z));
              fwd.set(l, {{rr, 1}});
              bwd.set(rr, {{l, 1}});
            }
          }
        }
      }
    }
  }
  return {fwd.build(), bwd.build()};
}

}  // namespace steinerlab
