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

// Independent oracles shared by the unit tests. Nothing here calls into the
// constructions under test; counts and differentials are derived from first
// principles.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "steinerlab/complex.hpp"

namespace steinerlab::testing {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t power(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Degree-k generator count of the n-cube, by enumerating words over {0,1,i}.
inline std::map<int, std::size_t> cube_counts_by_enumeration(int n) {
  std::map<int, std::size_t> out;
  std::int64_t total = power(3, n);
  for (std::int64_t w = 0; w < total; ++w) {
    int letters_i = 0;
    for (std::int64_t v = w; v > 0; v /= 3) letters_i += (v % 3 == 2);
    ++out[letters_i];
  }
  return out;
}

// Named-chain view of a chain, as a sorted map for comparisons.
inline std::map<std::string, Coeff> terms_of(const BasedComplex& c, const Chain& x) {
  std::map<std::string, Coeff> out;
  for (auto& [name, coeff] : to_named(c, x)) out[name.str()] = coeff;
  return out;
}

inline std::map<std::string, Coeff> boundary_of(const BasedComplex& c, const std::string& name) {
  Name n = Name::parse(name);
  auto degree = c.degree_of(n);
  if (!degree) return {{"<missing " + name + ">", 0}};
  return terms_of(c, c.d(*degree, c.index_of(*degree, n)));
}

// Oriental faces from vertex lists: d(v0..vk) = sum_j (-1)^j (v0..^vj..vk).
inline std::map<std::string, Coeff> simplex_boundary(const std::vector<int>& vertices) {
  std::map<std::string, Coeff> out;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    std::string face;
    for (std::size_t t = 0; t < vertices.size(); ++t) {
      if (t == j) continue;
      if (!face.empty()) face += '.';
      face += std::to_string(vertices[t]);
    }
    out[face] = (j % 2 == 0) ? 1 : -1;
  }
  return out;
}

// Cube faces from words: d(w) = sum over i-letters at position p, with the
// number m of i-letters before p, of (-1)^m (w[p:=1] - w[p:=0]).
inline std::map<std::string, Coeff> cube_boundary(const std::string& word) {
  std::map<std::string, Coeff> out;
  int before = 0;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] != 'i') continue;
    Coeff sign = (before % 2 == 0) ? 1 : -1;
    std::string hi = word, lo = word;
    hi[p] = '1';
    lo[p] = '0';
    out[hi] += sign;
    out[lo] -= sign;
    ++before;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Renames c along a generator bijection (e.g. a Renamed::forward built for an
// isomorphic presentation).
inline Renamed rename_along(const BasedComplex& c, const ComplexMap& bijection) {
  return rename(c, [&](int q, const Name& n) {
    const Chain image = bijection.image(n);
    return bijection.target().name(q, image.terms()[0].index);
  });
}

inline bool is_identity(const ComplexMap& f) { return f == identity_map(f.source()); }

}  // namespace steinerlab::testing
