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

#include "steinerlab/cells.hpp"

#include <algorithm>

#include "steinerlab/errors.hpp"

namespace steinerlab {

std::string CellTable::format() const {
  std::string out;
  for (int k = dim; k >= 0; --k) {
    out += "  x-_" + std::to_string(k) + " = " + ambient.format(minus[k]) + "\n";
    out += "  x+_" + std::to_string(k) + " = " + ambient.format(plus[k]) + "\n";
  }
  return out;
}

bool operator==(const CellTable& a, const CellTable& b) {
  return a.dim == b.dim && a.minus == b.minus && a.plus == b.plus && a.ambient == b.ambient;
}

CheckReport validate_table(const CellTable& t) {
  CheckReport r;
  const BasedComplex& c = t.ambient;
  if (t.dim < 0 || t.minus.size() != static_cast<std::size_t>(t.dim + 1) ||
      t.plus.size() != static_cast<std::size_t>(t.dim + 1)) {
    r.fail("SHAPE", "table does not have dim+1 levels");
    return r;
  }
  std::optional<std::string> bad;
  for (int k = 0; k <= t.dim && !bad; ++k) {
    if ((!t.minus[k].is_zero() && t.minus[k].degree() != k) || (!t.plus[k].is_zero() && t.plus[k].degree() != k)) {
      bad = "level " + std::to_string(k) + " has a chain of the wrong degree";
    }
  }
  bad ? r.fail("SHAPE", *bad) : r.pass("SHAPE");
  if (bad) return r;

  t.minus[t.dim] == t.plus[t.dim]
      ? r.pass("TOP_MATCHES")
      : r.fail("TOP_MATCHES", c.format(t.minus[t.dim]) + " vs " + c.format(t.plus[t.dim]));

  bad.reset();
  for (int k = 0; k <= t.dim && !bad; ++k) {
    if (!t.minus[k].is_nonnegative()) bad = "x-_" + std::to_string(k) + " = " + c.format(t.minus[k]);
    else if (!t.plus[k].is_nonnegative()) bad = "x+_" + std::to_string(k) + " = " + c.format(t.plus[k]);
  }
  bad ? r.fail("NONNEGATIVE", *bad) : r.pass("NONNEGATIVE");

  bad.reset();
  for (int k = 1; k <= t.dim && !bad; ++k) {
    Chain expect = t.plus[k - 1] - t.minus[k - 1];
    for (const Chain* x : {&t.minus[k], &t.plus[k]}) {
      Chain got = c.boundary(*x);
      if (!(got.terms().size() == expect.terms().size() &&
            std::equal(got.terms().begin(), got.terms().end(), expect.terms().begin()))) {
        bad = "level " + std::to_string(k) + ": d(" + c.format(*x) + ") = " + c.format(got) + ", expected " +
              c.format(expect);
        break;
      }
    }
  }
  bad ? r.fail("BOUNDARY", *bad) : r.pass("BOUNDARY");

  Coeff em = c.augment(t.minus[0]);
  Coeff ep = c.augment(t.plus[0]);
  (em == 1 && ep == 1) ? r.pass("UNITAL")
                       : r.fail("UNITAL", "augmentations " + std::to_string(em) + ", " + std::to_string(ep));
  return r;
}

namespace {

CellTable truncate(const CellTable& t, int k, bool target_side) {
  if (k < 0 || k > t.dim) {
    throw Error(ErrorCode::kBadLevel, "level " + std::to_string(k) + " outside 0.." + std::to_string(t.dim));
  }
  CellTable out{t.ambient, k, {t.minus.begin(), t.minus.begin() + k + 1}, {t.plus.begin(), t.plus.begin() + k + 1}};
  if (target_side) out.minus[k] = out.plus[k];
  else out.plus[k] = out.minus[k];
  return out;
}

}  // namespace

CellTable source(const CellTable& t, int k) { return truncate(t, k, false); }
CellTable target(const CellTable& t, int k) { return truncate(t, k, true); }

CellTable identity_table(const CellTable& t) {
  CellTable out = t;
  out.dim = t.dim + 1;
  out.minus.emplace_back(t.dim + 1);
  out.plus.emplace_back(t.dim + 1);
  return out;
}

bool is_degenerate(const CellTable& t) { return t.dim > 0 && t.top().is_zero(); }

CellTable compose_tables(const CellTable& u, const CellTable& t, int p) {
  if (!(u.ambient == t.ambient)) throw Error(ErrorCode::kNotComposable, "tables live in different complexes");
  if (u.dim != t.dim || p < 0 || p >= t.dim) {
    throw Error(ErrorCode::kNotComposable, "dimensions " + std::to_string(t.dim) + ", " + std::to_string(u.dim) +
                                               " cannot be composed at level " + std::to_string(p));
  }
  if (!(target(t, p) == source(u, p))) {
    throw Error(ErrorCode::kNotComposable, "target of the first cell at level " + std::to_string(p) +
                                               " is not the source of the second");
  }
  // Below p both sides agree; at p the result runs from t's source to u's
  // target; above p the shared level-p cell contributes nothing, so chains add.
  const int n = t.dim;
  CellTable out{t.ambient, n, t.minus, t.plus};
  out.plus[p] = u.plus[p];
  for (int k = p + 1; k <= n; ++k) {
    out.minus[k] = t.minus[k] + u.minus[k];
    out.plus[k] = t.plus[k] + u.plus[k];
  }
  CheckReport r = validate_table(out);
  if (!r.passed()) throw Error(ErrorCode::kInvalidResult, r.first_failure()->name + ": " + r.first_failure()->witness.value_or(""));
  return out;
}

}  // namespace steinerlab
