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

#include "steinerlab/steiner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>

#include "steinerlab/errors.hpp"

namespace steinerlab {

PosNeg pos_neg_parts(const BasedComplex& c, const Chain& x) {
  if (x.degree() < 1) throw Error(ErrorCode::kDegreeZero, "positive/negative parts of a degree-0 chain");
  PosNeg out;
  c.boundary(x).split(out.plus, out.minus);
  return out;
}

CellTable atom_table(const BasedComplex& c, int degree, std::uint32_t index) {
  CellTable t{c, degree, std::vector<Chain>(degree + 1), std::vector<Chain>(degree + 1)};
  t.minus[degree] = t.plus[degree] = Chain::basis(degree, index);
  for (int k = degree - 1; k >= 0; --k) {
    t.minus[k] = pos_neg_parts(c, t.minus[k + 1]).minus;
    t.plus[k] = pos_neg_parts(c, t.plus[k + 1]).plus;
    if (!t.minus[k].is_nonnegative() || !t.plus[k].is_nonnegative()) {
      throw Error(ErrorCode::kNegativeEntry, "atom of " + c.name(degree, index).str() + " at level " + std::to_string(k));
    }
  }
  return t;
}

CellTable atom_table(const BasedComplex& c, const Name& b) {
  auto q = c.degree_of(b);
  if (!q) throw Error(ErrorCode::kMalformed, "no generator " + b.str());
  return atom_table(c, *q, c.index_of(*q, b));
}

CheckReport unitality_check(const BasedComplex& c) {
  CheckReport r;
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      CellTable t = atom_table(c, q, i);
      Coeff em = c.augment(t.minus[0]);
      Coeff ep = c.augment(t.plus[0]);
      if (em != 1 || ep != 1) {
        r.fail("UNITAL", c.name(q, i).str() + ": augmentation of x-_0 is " + std::to_string(em) + ", of x+_0 is " +
                             std::to_string(ep));
        return r;
      }
    }
  }
  r.pass("UNITAL");
  return r;
}

bool PreorderRelation::has_edge(const Name& from, const Name& to) const {
  auto a = complex.degree_of(from);
  auto b = complex.degree_of(to);
  if (!a || !b) return false;
  std::pair<GenRef, GenRef> e{{*a, complex.index_of(*a, from)}, {*b, complex.index_of(*b, to)}};
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

PreorderRelation preorder(const BasedComplex& c) {
  PreorderRelation rel{c, {}};
  for (int q = 1; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      PosNeg parts = pos_neg_parts(c, Chain::basis(q, i));
      for (const Term& t : parts.minus.terms()) rel.edges.push_back({{q - 1, t.index}, {q, i}});
      for (const Term& t : parts.plus.terms()) rel.edges.push_back({{q, i}, {q - 1, t.index}});
    }
  }
  return rel;
}

LoopfreeAnalysis loopfree_analysis(const BasedComplex& c) {
  // Number generators degree by degree.
  std::vector<std::size_t> offset(std::max(0, c.top_degree() + 1) + 1, 0);
  for (int q = 0; q <= c.top_degree(); ++q) offset[q + 1] = offset[q] + c.count(q);
  const std::size_t n = offset.back();
  std::vector<GenRef> refs(n);
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) refs[offset[q] + i] = {q, i};
  }
  auto id = [&offset](const GenRef& g) { return offset[g.degree] + g.index; };
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& [a, b] : preorder(c).edges) {
    out[id(a)].push_back(id(b));
    ++indeg[id(b)];
  }

  LoopfreeAnalysis result;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> remaining = indeg;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    result.linear_extension.push_back(refs[v]);
    for (std::size_t w : out[v]) {
      if (--remaining[w] == 0) ready.push(w);
    }
  }
  if (result.linear_extension.size() == n) return result;

  // Some vertex is left with positive in-degree: walk backwards along
  // unsorted predecessors until a vertex repeats.
  result.loopfree = false;
  result.linear_extension.clear();
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : out[v]) in[w].push_back(v);
  }
  std::size_t start = 0;
  while (remaining[start] == 0) ++start;
  std::vector<std::size_t> walk;
  std::vector<std::ptrdiff_t> seen_at(n, -1);
  std::size_t v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<std::ptrdiff_t>(walk.size());
    walk.push_back(v);
    for (std::size_t u : in[v]) {
      if (remaining[u] > 0) {
        v = u;
        break;
      }
    }
  }
  // walk[seen_at[v]..] is a backward cycle; reverse it into a forward one
  std::vector<std::size_t> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  auto first = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), first, cycle.end());
  for (std::size_t x : cycle) result.cycle.push_back(refs[x]);
  return result;
}

CheckReport is_strongly_loopfree(const BasedComplex& c) {
  LoopfreeAnalysis a = loopfree_analysis(c);
  CheckReport r;
  std::string text;
  const auto& seq = a.loopfree ? a.linear_extension : a.cycle;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) text += a.loopfree ? " < " : " <= ";
    text += c.name(seq[k].degree, seq[k].index).str();
  }
  if (!a.loopfree && !seq.empty()) text += " <= " + c.name(seq[0].degree, seq[0].index).str();
  r.add("STRONGLY_LOOPFREE", a.loopfree, text);
  return r;
}

CheckReport is_steiner(const BasedComplex& c) {
  CheckReport r = validate_complex(c);
  std::optional<std::string> negative;
  bool unital = true;
  std::string unital_witness;
  std::optional<std::string> invalid_atom;
  for (int q = 0; q <= c.top_degree() && !negative; ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      try {
        CellTable t = atom_table(c, q, i);
        if (unital && (c.augment(t.minus[0]) != 1 || c.augment(t.plus[0]) != 1)) {
          unital = false;
          unital_witness = c.name(q, i).str();
        }
        if (!invalid_atom) {
          CheckReport v = validate_table(t);
          if (!v.passed()) invalid_atom = c.name(q, i).str() + ": " + v.first_failure()->name;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNegativeEntry) throw;
        negative = e.what();
        break;
      }
    }
  }
  negative ? r.fail("NEGATIVE_ENTRY", *negative) : r.pass("NEGATIVE_ENTRY");
  unital ? r.pass("UNITAL") : r.fail("UNITAL", unital_witness);
  invalid_atom ? r.fail("ATOMS_VALID", *invalid_atom) : r.pass("ATOMS_VALID");
  r.merge(is_strongly_loopfree(c));
  return r;
}

namespace {

std::string cell_key(const CellTable& t) { return std::to_string(t.dim) + "\n" + t.format(); }

CellTable lift_identity(CellTable t, int dim) {
  while (t.dim < dim) t = identity_table(t);
  return t;
}

struct LawTally {
  std::size_t count = 0;
  std::optional<std::string> failure;
  void record(bool ok, const std::function<std::string()>& witness) {
    ++count;
    if (!ok && !failure) failure = witness();
  }
  void report(CheckReport& r, const std::string& name) const {
    if (failure) {
      r.fail(name, *failure);
    } else {
      r.add(name, true, std::to_string(count) + " cases");
    }
  }
};

}  // namespace

CheckReport cell_laws_on_atoms(const BasedComplex& c) {
  // Pool: atoms, all their truncations, and identities lifted up to the top degree.
  std::map<std::string, CellTable> seen;
  auto add = [&seen](const CellTable& t) { seen.emplace(cell_key(t), t); };
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      CellTable a = atom_table(c, q, i);
      for (int k = 0; k <= a.dim; ++k) {
        for (const CellTable& b : {source(a, k), target(a, k)}) {
          for (int d = b.dim; d <= c.top_degree(); ++d) add(lift_identity(b, d));
        }
      }
    }
  }
  std::vector<std::vector<CellTable>> by_dim(std::max(c.top_degree(), 0) + 1);
  for (const auto& [_, t] : seen) by_dim[t.dim].push_back(t);

  LawTally valid, assoc, left_unit, right_unit, interchange;
  auto compose_checked = [&valid](const CellTable& u, const CellTable& t, int p) -> std::optional<CellTable> {
    try {
      CellTable out = compose_tables(u, t, p);
      valid.record(true, {});
      return out;
    } catch (const Error& e) {
      valid.record(false, [&] { return std::string(e.what()); });
      return std::nullopt;
    }
  };

  for (int n = 1; n <= c.top_degree(); ++n) {
    const auto& cells = by_dim[n];
    for (int p = 0; p < n; ++p) {
      // Cells grouped by their level-p source, for fast composable lookups.
      std::map<std::string, std::vector<std::size_t>> starting_at;
      for (std::size_t k = 0; k < cells.size(); ++k) starting_at[cell_key(source(cells[k], p))].push_back(k);
      auto after = [&](const CellTable& t) -> const std::vector<std::size_t>& {
        static const std::vector<std::size_t> none;
        auto it = starting_at.find(cell_key(target(t, p)));
        return it == starting_at.end() ? none : it->second;
      };

      for (const CellTable& t : cells) {
        const CellTable id_src = lift_identity(source(t, p), n);
        const CellTable id_tgt = lift_identity(target(t, p), n);
        left_unit.record(compose_tables(id_tgt, t, p) == t, [&] { return "left unit fails on\n" + t.format(); });
        right_unit.record(compose_tables(t, id_src, p) == t, [&] { return "right unit fails on\n" + t.format(); });
        for (std::size_t iu : after(t)) {
          const CellTable& u = cells[iu];
          auto ut = compose_checked(u, t, p);
          if (!ut) continue;
          for (std::size_t iw : after(u)) {
            const CellTable& w = cells[iw];
            auto w_ut = compose_checked(w, *ut, p);
            auto wu = compose_checked(w, u, p);
            if (!w_ut || !wu) continue;
            auto wu_t = compose_checked(*wu, t, p);
            assoc.record(wu_t && *wu_t == *w_ut, [&] { return "associativity fails at level " + std::to_string(p); });
          }
        }
      }

      // Interchange against every lower level p' < p, with the level-p
      // composites as the inner ones.
      std::vector<std::pair<std::size_t, CellTable>> inner;  // (first factor, composite)
      std::vector<std::size_t> second;
      for (std::size_t ia = 0; ia < cells.size(); ++ia) {
        for (std::size_t ib : after(cells[ia])) {
          auto ba = compose_checked(cells[ib], cells[ia], p);
          if (ba) {
            inner.emplace_back(ia, *ba);
            second.push_back(ib);
          }
        }
      }
      for (int lower = 0; lower < p; ++lower) {
        for (std::size_t x = 0; x < inner.size(); ++x) {
          for (std::size_t y = 0; y < inner.size(); ++y) {
            const CellTable& ba = inner[x].second;
            const CellTable& dc = inner[y].second;
            if (!(target(ba, lower) == source(dc, lower))) continue;
            const CellTable& a = cells[inner[x].first];
            const CellTable& b = cells[second[x]];
            const CellTable& cc = cells[inner[y].first];
            const CellTable& d = cells[second[y]];
            auto lhs = compose_checked(dc, ba, lower);
            auto ca = compose_checked(cc, a, lower);
            auto db = compose_checked(d, b, lower);
            std::optional<CellTable> rhs;
            if (ca && db) rhs = compose_checked(*db, *ca, p);
            interchange.record(lhs && rhs && *lhs == *rhs, [&] {
              return "interchange fails for levels " + std::to_string(lower) + " < " + std::to_string(p);
            });
          }
        }
      }
    }
  }

  CheckReport r;
  valid.report(r, "COMPOSITES_VALID");
  assoc.report(r, "ASSOCIATIVITY");
  left_unit.report(r, "LEFT_UNIT");
  right_unit.report(r, "RIGHT_UNIT");
  interchange.report(r, "INTERCHANGE");
  return r;
}

}  // namespace steinerlab
