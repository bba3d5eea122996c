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
#include <map>
#include <numeric>

#include "steinerlab/errors.hpp"
#include "steinerlab/ops.hpp"

namespace steinerlab {

namespace {

using SparseRow = std::map<std::uint32_t, Coeff>;

void add_scaled(SparseRow& row, const SparseRow& other, Coeff factor) {
  for (const auto& [col, c] : other) {
    Coeff& slot = row[col];
    slot = checked_add(slot, checked_mul(c, factor));
    if (slot == 0) row.erase(col);
  }
}

Coeff abs_coeff(Coeff c) { return c < 0 ? checked_neg(c) : c; }

// Elementary divisors of a small dense integer matrix.
std::vector<Coeff> elementary_divisors(std::vector<std::vector<Coeff>> m) {
  std::vector<Coeff> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t top = 0;
  while (top < rows && top < cols) {
    // smallest nonzero magnitude in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = top; r < rows; ++r) {
      for (std::size_t c = top; c < cols; ++c) {
        if (m[r][c] != 0 && (pr == rows || abs_coeff(m[r][c]) < abs_coeff(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[top], m[pr]);
    for (auto& row : m) std::swap(row[top], row[pc]);
    bool clean = true;
    const Coeff p = m[top][top];
    for (std::size_t r = top + 1; r < rows; ++r) {
      Coeff qt = m[r][top] / p;
      if (qt != 0) {
        for (std::size_t c = top; c < cols; ++c) m[r][c] = checked_sub(m[r][c], checked_mul(qt, m[top][c]));
      }
      if (m[r][top] != 0) clean = false;
    }
    for (std::size_t c = top + 1; c < cols; ++c) {
      Coeff qt = m[top][c] / p;
      if (qt != 0) {
        for (std::size_t r = top; r < rows; ++r) m[r][c] = checked_sub(m[r][c], checked_mul(qt, m[r][top]));
      }
      if (m[top][c] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder now exists; pivot again
    diag.push_back(abs_coeff(p));
    ++top;
  }
  // normalise to the divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Coeff g = std::gcd(diag[i], diag[j]);
      Coeff l = checked_mul(diag[i] / g, diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

struct Quotient {
  bool based = false;
  std::optional<TorsionWitness> torsion;
  std::string diagnostic;
  std::optional<BasedComplex> complex;
  std::optional<ComplexMap> projection;
};

// Quotient of `t` by the subcomplex spanned by `relations` (per degree).
// Columns are eliminated along unit pivots only, smallest column first, so
// the generators earliest in name order (the first summand of a pushout)
// are the ones identified away.
Quotient quotient(const BasedComplex& t, const std::vector<std::vector<Chain>>& relations,
                  const std::function<Name(const Name&)>& rename) {
  const int top = t.top_degree();
  std::vector<std::vector<SparseRow>> expr(std::max(0, top + 1));
  std::vector<std::vector<bool>> alive(std::max(0, top + 1));
  Quotient out;

  for (int q = 0; q <= top; ++q) {
    const std::uint32_t ncols = static_cast<std::uint32_t>(t.count(q));
    expr[q].resize(ncols);
    alive[q].assign(ncols, true);
    for (std::uint32_t c = 0; c < ncols; ++c) expr[q][c][c] = 1;

    std::vector<SparseRow> rows;
    if (q < static_cast<int>(relations.size())) {
      for (const Chain& rel : relations[q]) {
        SparseRow row;
        for (const Term& term : rel.terms()) row[term.index] = term.coeff;
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    // column -> expressions that mention it, to keep substitution local
    std::vector<std::vector<std::uint32_t>> users(ncols);
    for (std::uint32_t c = 0; c < ncols; ++c) users[c].push_back(c);

    while (!rows.empty()) {
      std::size_t best_row = rows.size();
      std::uint32_t best_col = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [col, c] : rows[r]) {
          if (c != 1 && c != -1) continue;
          if (best_row == rows.size() || col < best_col) {
            best_row = r;
            best_col = col;
          }
          break;  // entries are sorted; the first unit entry is this row's best
        }
      }
      if (best_row == rows.size()) break;

      // u*col + rest = 0  =>  col = -u * rest
      SparseRow sub = rows[best_row];
      const Coeff u = sub[best_col];
      sub.erase(best_col);
      for (auto& [col, c] : sub) c = checked_mul(c, -u);

      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best_row));
      for (auto& row : rows) {
        auto it = row.find(best_col);
        if (it == row.end()) continue;
        Coeff a = it->second;
        row.erase(it);
        add_scaled(row, sub, a);
      }
      rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
                 rows.end());

      for (std::uint32_t k : users[best_col]) {
        auto it = expr[q][k].find(best_col);
        if (it == expr[q][k].end()) continue;
        Coeff a = it->second;
        expr[q][k].erase(it);
        add_scaled(expr[q][k], sub, a);
        for (const auto& [col, c] : sub) users[col].push_back(k);
      }
      users[best_col].clear();
      alive[q][best_col] = false;
    }

    if (!rows.empty()) {
      std::map<std::uint32_t, std::size_t> colpos;
      for (const auto& row : rows) {
        for (const auto& [col, c] : row) colpos.emplace(col, 0);
      }
      std::size_t k = 0;
      for (auto& [col, pos] : colpos) pos = k++;
      std::vector<std::vector<Coeff>> dense(rows.size(), std::vector<Coeff>(colpos.size(), 0));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [col, c] : rows[r]) dense[r][colpos[col]] = c;
      }
      for (Coeff dv : elementary_divisors(dense)) {
        if (dv > 1) {
          out.torsion = TorsionWitness{q, dv};
          out.diagnostic = "torsion in degree " + std::to_string(q) + ": elementary divisor " + std::to_string(dv);
          return out;
        }
      }
      out.diagnostic = "degree " + std::to_string(q) + ": quotient is free but no generator subset is a basis";
      return out;
    }
    for (std::uint32_t c = 0; c < ncols; ++c) {
      for (const auto& [col, v] : expr[q][c]) {
        if (v < 0) {
          out.diagnostic = "image of " + t.name(q, c).str() + " is not a non-negative combination of survivors";
          return out;
        }
      }
    }
  }

  // Assemble the quotient on surviving columns.
  auto project = [&](const Chain& x) {
    SparseRow acc;
    if (x.degree() >= 0 && x.degree() <= top) {
      for (const Term& term : x.terms()) add_scaled(acc, expr[x.degree()][term.index], term.coeff);
    }
    return acc;
  };
  ComplexBuilder builder;
  for (int q = 0; q <= top; ++q) {
    for (std::uint32_t c = 0; c < t.count(q); ++c) {
      if (!alive[q][c]) continue;
      Name n = rename(t.name(q, c));
      if (q == 0) {
        builder.vertex(n, t.aug(c));
        continue;
      }
      NamedChain bd;
      for (const auto& [col, v] : project(t.d(q, c))) bd.emplace_back(rename(t.name(q - 1, col)), v);
      builder.cell(q, n, std::move(bd));
    }
  }
  BasedComplex qc = builder.build();
  MapBuilder mb(t, qc);
  for (int q = 0; q <= top; ++q) {
    for (std::uint32_t c = 0; c < t.count(q); ++c) {
      std::vector<Term> terms;
      for (const auto& [col, v] : expr[q][c]) terms.push_back({qc.index_of(q, rename(t.name(q, col))), v});
      mb.set(q, c, Chain(q, std::move(terms)));
    }
  }
  out.based = true;
  out.complex = qc;
  out.projection = mb.build();
  return out;
}

}  // namespace

const BasedComplex& PushoutResult::require() const {
  if (!based || !complex) throw Error(ErrorCode::kNonBasedPushout, diagnostic);
  return *complex;
}

PushoutResult pushout(const ComplexMap& f, const ComplexMap& g) {
  if (!(f.source() == g.source())) throw Error(ErrorCode::kSourceMismatch, "pushout legs have different sources");
  const BasedComplex& c = f.source();
  BasedComplex sum = direct_sum(f.target(), g.target());
  ComplexMap in_a = sum_inclusion_left(f.target(), g.target());
  ComplexMap in_b = sum_inclusion_right(f.target(), g.target());
  std::vector<std::vector<Chain>> relations(std::max(0, c.top_degree() + 1));
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      relations[q].push_back(in_a.apply(f.image(q, i)) - in_b.apply(g.image(q, i)));
    }
  }
  Quotient qt = quotient(sum, relations, [](const Name& n) { return n; });
  PushoutResult r;
  r.based = qt.based;
  r.torsion_witness = qt.torsion;
  r.diagnostic = qt.diagnostic;
  if (qt.based) {
    r.complex = qt.complex;
    r.leg_a = compose(in_a, *qt.projection);
    r.leg_b = compose(in_b, *qt.projection);
  }
  return r;
}

PushoutResult coequalizer(const ComplexMap& f, const ComplexMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorCode::kSourceTargetMismatch, "coequalizer of maps with different ends");
  }
  const BasedComplex& c = f.source();
  std::vector<std::vector<Chain>> relations(std::max(0, c.top_degree() + 1));
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) relations[q].push_back(f.image(q, i) - g.image(q, i));
  }
  Quotient qt = quotient(f.target(), relations, [](const Name& n) { return n; });
  PushoutResult r;
  r.based = qt.based;
  r.torsion_witness = qt.torsion;
  r.diagnostic = qt.diagnostic;
  if (qt.based) {
    r.complex = qt.complex;
    r.leg_a = qt.projection;
    r.leg_b = qt.projection;
  }
  return r;
}

}  // namespace steinerlab
