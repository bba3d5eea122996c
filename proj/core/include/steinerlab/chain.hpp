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

#include <cstdint>
#include <span>
#include <vector>

#include "steinerlab/integer.hpp"

namespace steinerlab {

struct Term {
  std::uint32_t index;  // position of the generator in its degree's canonical order
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// A sparse integer chain of fixed degree. Terms are sorted by index and never
// carry a zero coefficient. Indices refer to the ambient complex, which the
// chain does not own.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int degree) : degree_(degree) {}
  // Terms may be unsorted and repeated; they are merged.
  Chain(int degree, std::vector<Term> terms);

  static Chain basis(int degree, std::uint32_t index, Coeff coeff = 1) {
    Chain c(degree);
    if (coeff != 0) c.terms_.push_back({index, coeff});
    return c;
  }

  int degree() const { return degree_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff(std::uint32_t index) const;
  bool is_nonnegative() const;

  // this += factor * other
  void add_scaled(const Chain& other, Coeff factor);
  Chain scaled(Coeff factor) const;

  Chain& operator+=(const Chain& o) { add_scaled(o, 1); return *this; }
  Chain& operator-=(const Chain& o) { add_scaled(o, -1); return *this; }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }

  // Split into positive and negated-negative parts: *this == pos - neg.
  void split(Chain& pos, Chain& neg) const;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_ = 0;
  std::vector<Term> terms_;
};

}  // namespace steinerlab
