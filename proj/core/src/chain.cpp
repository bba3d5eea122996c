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

#include "steinerlab/chain.hpp"

#include <algorithm>

#include "steinerlab/errors.hpp"

namespace steinerlab {

Chain::Chain(int degree, std::vector<Term> terms) : degree_(degree) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  for (const Term& t : terms) {
    if (!terms_.empty() && terms_.back().index == t.index) {
      terms_.back().coeff = checked_add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

Coeff Chain::coeff(std::uint32_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  return (it != terms_.end() && it->index == index) ? it->coeff : 0;
}

bool Chain::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

void Chain::add_scaled(const Chain& other, Coeff factor) {
  if (other.degree_ != degree_ && !other.is_zero()) {
    throw Error(ErrorCode::kDegreeMismatch, "adding chains of degree " + std::to_string(degree_) +
                                                " and " + std::to_string(other.degree_));
  }
  if (factor == 0 || other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->index < a->index) {
      merged.push_back({b->index, checked_mul(b->coeff, factor)});
      ++b;
    } else {
      Coeff c = checked_add(a->coeff, checked_mul(b->coeff, factor));
      if (c != 0) merged.push_back({a->index, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Chain Chain::scaled(Coeff factor) const {
  Chain out(degree_);
  if (factor == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.index, checked_mul(t.coeff, factor)});
  return out;
}

void Chain::split(Chain& pos, Chain& neg) const {
  pos = Chain(degree_);
  neg = Chain(degree_);
  for (const Term& t : terms_) {
    if (t.coeff > 0) pos.terms_.push_back(t);
    else neg.terms_.push_back({t.index, checked_neg(t.coeff)});
  }
}

}  // namespace steinerlab
