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

#include "suite.hpp"

#include <functional>
#include <future>
#include <random>

#include "steinerlab/errors.hpp"
#include "steinerlab/fixtures.hpp"
#include "steinerlab/io.hpp"
#include "steinerlab/ops.hpp"
#include "steinerlab/random.hpp"
#include "steinerlab/retraction.hpp"
#include "steinerlab/shapes.hpp"
#include "steinerlab/steiner.hpp"

namespace steinerlab::cli {

namespace {

using Labelled = std::pair<std::string, BasedComplex>;

std::string n(const char* family, int k) { return std::string(family) + "(" + std::to_string(k) + ")"; }

std::uint64_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::uint64_t r = 1;
  for (int k = 1; k <= b; ++k) r = r * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
  return r;
}

// Runs a check and turns library errors into a failing entry.
void guarded(CheckReport& r, const std::string& name, const std::function<void(CheckReport&)>& body) {
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(name, e.what());
  }
}

void add_result(CheckReport& r, const std::string& name, const CheckReport& sub) {
  const CheckResult* bad = sub.first_failure();
  if (bad) {
    r.fail(name, bad->name + (bad->witness ? ": " + *bad->witness : std::string()));
  } else {
    r.pass(name);
  }
}

std::vector<Labelled> small_library() {
  return {{"interval", interval()}, {"disk(2)", disk(2)}, {"oriental(2)", oriental(2)}, {"cube(2)", cube(2)}};
}

}  // namespace

CheckReport validity_battery(const SuiteBounds& b) {
  std::vector<Labelled> shapes;
  for (int k = 0; k <= b.max_disk; ++k) shapes.emplace_back(n("disk", k), disk(k));
  for (int k = 0; k <= b.max_disk; ++k) shapes.emplace_back(n("boundary_disk", k), boundary_disk(k));
  for (int k = 0; k <= b.max_cube; ++k) shapes.emplace_back(n("cube", k), cube(k));
  for (int k = 0; k <= b.max_oriental; ++k) shapes.emplace_back(n("oriental", k), oriental(k));
  for (int k = 0; k <= b.max_oriental; ++k) shapes.emplace_back(n("antioriental", k), antioriental(k));
  std::mt19937_64 rng(1);
  for (int k = 0; k < b.random_thetas; ++k) {
    ThetaSpec spec = random_theta_spec(rng, 4, 3);
    shapes.emplace_back("theta[" + to_string(spec) + "]", theta(spec));
  }
  CheckReport r;
  for (const auto& [label, c] : shapes) add_result(r, label, is_steiner(c));
  return r;
}

CheckReport counting_battery(const SuiteBounds& b) {
  CheckReport r;
  for (int k = 0; k <= b.max_cube; ++k) {
    BasedComplex c = cube(k);
    std::size_t three_k = 1;
    for (int q = 0; q < k; ++q) three_k *= 3;
    bool ok = c.total() == three_k;
    for (int q = 0; q <= k; ++q) ok = ok && c.count(q) == binomial(k, q) << (k - q);
    r.add(n("cube", k), ok);
  }
  for (int k = 0; k <= b.max_oriental; ++k) {
    BasedComplex c = oriental(k);
    bool ok = c.top_degree() == k;
    for (int q = 0; q <= k; ++q) ok = ok && c.count(q) == binomial(k + 1, q + 1);
    r.add(n("oriental", k), ok);
  }
  return r;
}

CheckReport construction_battery(const SuiteBounds& b) {
  CheckReport r;
  for (int k = 0; k <= b.max_oriental; ++k) {
    r.add("via_join." + n("oriental", k), equal_presentation(oriental(k), oriental_via_join(k)));
  }
  std::vector<Labelled> inputs;
  for (int k = 0; k <= 3; ++k) inputs.emplace_back(n("disk", k), disk(k));
  for (int k = 0; k <= 3; ++k) inputs.emplace_back(n("oriental", k), oriental(k));
  inputs.emplace_back("cube(2)", cube(2));
  for (const auto& [label, a] : inputs) {
    guarded(r, "closed_form." + label, [&, &a = a, &label = label](CheckReport& rr) {
      rr.add("closed_form." + label, join(a, unit()) == join_closed_form(a, unit()));
    });
    // The point-join formula as displayed, compared with the pushout join.
    guarded(r, "displayed." + label, [&, &a = a, &label = label](CheckReport& rr) {
      const BasedComplex computed = join(a, unit());
      const BasedComplex displayed = join_point_displayed(a);
      if (computed == displayed) {
        rr.pass("displayed." + label);
        return;
      }
      for (int q = 1; q <= computed.top_degree(); ++q) {
        for (std::uint32_t i = 0; i < computed.count(q); ++i) {
          if (!(computed.d(q, i) == displayed.d(q, i))) {
            rr.fail("displayed." + label, "d(" + computed.name(q, i).str() + ") = " +
                                              computed.format(computed.d(q, i)) + " vs displayed " +
                                              displayed.format(displayed.d(q, i)));
            return;
          }
        }
      }
      rr.fail("displayed." + label, "augmentations differ");
    });
  }
  return r;
}

CheckReport identities_battery(const SuiteBounds& b) {
  CheckReport r;
  const auto lib = small_library();
  for (const auto& [label, a] : lib) {
    r.add("op_involutive." + label, dual_op(dual_op(a)) == a);
    r.add("co_involutive." + label, dual_co(dual_co(a)) == a);
  }
  for (const auto& [la, a] : lib) {
    for (const auto& [lb, bb] : lib) {
      const std::string pair = la + "," + lb;
      guarded(r, "swap_op." + pair, [&, &a = a, &bb = bb](CheckReport& rr) {
        Iso s = swap_iso_op(a, bb);
        add_result(rr, "swap_op." + pair, verify_mutually_inverse(s.forward, s.inverse));
      });
      guarded(r, "swap_co." + pair, [&, &a = a, &bb = bb](CheckReport& rr) {
        Iso s = swap_iso_co(a, bb);
        add_result(rr, "swap_co." + pair, verify_mutually_inverse(s.forward, s.inverse));
      });
    }
  }
  for (int k = 0; k <= b.max_cube; ++k) {
    for (Duality d : {Duality::kOp, Duality::kCo}) {
      const std::string label = "cube_selfduality." + std::string(to_string(d)) + "." + std::to_string(k);
      guarded(r, label, [&](CheckReport& rr) {
        ComplexMap f = cube_selfduality(k, d);
        auto inv = invert_bijection(f);
        if (!inv) {
          rr.fail(label, "not a generator bijection");
          return;
        }
        CheckReport sub = validate_map(f);
        sub.merge(verify_mutually_inverse(f, *inv));
        sub.merge(validate_map(*inv), "inverse");
        add_result(rr, label, sub);
      });
    }
  }
  std::mt19937_64 rng(2);
  for (int k = 0; k < b.random_complexes; ++k) {
    const std::string label = "susp_coop_iso.random" + std::to_string(k);
    guarded(r, label, [&](CheckReport& rr) {
      BasedComplex a = random_steiner_complex(rng);
      ComplexMap f = susp_coop_iso(a);
      auto inv = invert_bijection(f);
      CheckReport sub = validate_map(f);
      if (inv) {
        sub.merge(validate_map(*inv), "inverse");
        sub.merge(verify_mutually_inverse(f, *inv));
      } else {
        sub.fail("BIJECTION", "not a generator bijection");
      }
      add_result(rr, label, sub);
    });
  }
  return r;
}

CheckReport retraction_battery(const SuiteBounds&) {
  CheckReport r;
  auto pair_check = [&r](const std::string& label, const std::function<RetractionPair()>& make) {
    guarded(r, label, [&](CheckReport& rr) { add_result(rr, label, verify_retraction(make())); });
  };
  pair_check("q2_s2", [] { return RetractionPair{s2(), q2()}; });
  for (const auto& [label, a] : std::vector<Labelled>{
           {"unit", unit()}, {"interval", interval()}, {"oriental(2)", oriental(2)}, {"cube(2)", cube(2)}}) {
    pair_check("phi_rho." + label, [&a = a] { return RetractionPair{phi_map(a), rho_map(a)}; });
  }
  for (int k = 0; k <= 4; ++k) pair_check("q_cube." + std::to_string(k), [k] { return section_q_cube(k); });
  for (int k = 0; k <= 3; ++k) {
    const std::string label = "q_cube_factors." + std::to_string(k);
    guarded(r, label, [&](CheckReport& rr) {
      ComplexMap via = compose(gray_tensor_map(identity_map(interval()), q_susp_map(cube(k))), rho_map(cube(k)));
      rr.add(label, via == q_susp_map(cube(k + 1)));
    });
  }
  for (int k = 0; k <= 3; ++k) {
    const std::string label = "e_s_kappa." + std::to_string(k);
    guarded(r, label, [&](CheckReport& rr) {
      add_result(rr, label, e_s_kappa(k == 0 ? zero() : oriental(k - 1)).report);
    });
  }
  for (int k = 0; k <= 4; ++k) pair_check("xi." + std::to_string(k), [k] { return section_xi(k); });
  for (int k = 0; k <= 3; ++k) pair_check("ell." + std::to_string(k), [k] { return section_ell(k); });
  for (int a = 0; a <= 4; ++a) {
    for (int c = 0; a + c <= 4; ++c) {
      pair_check("zeta_theta." + std::to_string(a) + "," + std::to_string(c),
                 [a, c] { return RetractionPair{zeta(a, c), theta_left_inverse(a, c)}; });
    }
  }
  std::mt19937_64 rng(3);
  for (int made = 0; made < 10;) {
    ThetaSpec spec = random_theta_spec(rng, 3, 3);
    if (theta_total_dimension(spec) > 4) continue;
    ++made;
    const std::string label = "theta_retract[" + to_string(spec) + "]";
    guarded(r, label, [&](CheckReport& rr) { add_result(rr, label, theta_retract_into_oriental(spec).report); });
  }
  return r;
}

CheckReport decomposition_battery(const SuiteBounds& b) {
  CheckReport r;
  for (Family f : {Family::kOriental, Family::kCube}) {
    const int top = f == Family::kCube ? b.max_cube : b.max_oriental;
    for (int k = 2; k <= top; ++k) {
      const std::string shape = std::string(to_string(f)) + "(" + std::to_string(k) + ")";
      guarded(r, "boundary." + shape,
              [&](CheckReport& rr) { add_result(rr, "boundary." + shape, boundary_decomposition_check(f, k)); });
      guarded(r, "top_cell." + shape,
              [&](CheckReport& rr) { add_result(rr, "top_cell." + shape, top_cell_decomposition_check(f, k)); });
    }
  }
  return r;
}

CheckReport atom_battery(const SuiteBounds& b) {
  CheckReport r;
  std::vector<Labelled> shapes;
  for (int k = 0; k <= b.max_disk; ++k) shapes.emplace_back(n("disk", k), disk(k));
  for (int k = 0; k <= b.max_cube; ++k) shapes.emplace_back(n("cube", k), cube(k));
  for (int k = 0; k <= b.max_oriental; ++k) shapes.emplace_back(n("oriental", k), oriental(k));
  for (const auto& [label, c] : shapes) add_result(r, "unital." + label, unitality_check(c));

  CellTable t = atom_table(oriental(2), Name("0.1.2"));
  const BasedComplex& o = t.ambient;
  Chain plus1 = o.gen(1, Name("0.1")) + o.gen(1, Name("1.2"));
  r.add("oriental(2).atom", t.dim == 2 && t.minus[1] == o.gen(1, Name("0.2")) && t.plus[1] == plus1 &&
                                t.minus[0] == o.gen(0, Name("0")) && t.plus[0] == o.gen(0, Name("2")));

  add_result(r, "cell_laws.oriental(3)", cell_laws_on_atoms(oriental(3)));
  add_result(r, "cell_laws.cube(3)", cell_laws_on_atoms(cube(3)));

  CheckReport loop = is_strongly_loopfree(loop_fixture());
  const CheckResult* lf = loop.find("STRONGLY_LOOPFREE");
  r.add("loop_fixture", lf && !lf->passed && lf->witness.has_value(), lf && lf->witness ? *lf->witness : "");
  return r;
}

CheckReport robustness_battery(const SuiteBounds& b) {
  CheckReport r;
  auto designated = [&r](const std::string& label, const CheckReport& rep, const std::string& check) {
    const CheckResult* c = rep.find(check);
    const bool ok = c && !c->passed && c->witness.has_value();
    r.add(label, ok, c && c->witness ? check + ": " + *c->witness : check + " did not fail");
  };
  designated("fixture.d_squared", validate_complex(d_squared_fixture()), "D2_ZERO");
  designated("fixture.augmentation", validate_complex(augmentation_fixture()), "AUG_KILLS_D1");
  designated("fixture.non_unital", is_steiner(non_unital_fixture()), "UNITAL");

  std::vector<Labelled> docs;
  for (int k = 0; k <= std::min(b.max_cube, 4); ++k) docs.emplace_back(n("cube", k), cube(k));
  for (int k = 0; k <= std::min(b.max_oriental, 4); ++k) docs.emplace_back(n("oriental", k), oriental(k));
  docs.emplace_back("theta", theta(parse_theta_spec("2,1,2/1,0")));
  docs.emplace_back("join", join(oriental(1), cube(2)));
  for (const auto& [label, c] : docs) {
    guarded(r, "round_trip." + label, [&, &c = c, &label = label](CheckReport& rr) {
      const std::string text = emit(c);
      const BasedComplex back = parse_complex(text);
      rr.add("round_trip." + label, back == c && emit(back) == text);
    });
  }
  guarded(r, "round_trip.map", [&](CheckReport& rr) {
    const ComplexMap f = section_xi(3).embed;
    const std::string text = emit(f);
    const ComplexMap back = parse_map(text);
    rr.add("round_trip.map", back == f && emit(back) == text);
  });
  return r;
}

std::vector<SuiteItem> run_suite(const SuiteBounds& bounds) {
  struct Entry {
    const char* id;
    const char* title;
    CheckReport (*run)(const SuiteBounds&);
  };
  static const Entry entries[] = {
      {"1", "validity of library shapes", validity_battery},
      {"2", "generator counts", counting_battery},
      {"3", "construction cross-checks", construction_battery},
      {"4", "duality identities", identities_battery},
      {"5", "retractions", retraction_battery},
      {"6", "decomposition colimits", decomposition_battery},
      {"7", "atoms and cell composition", atom_battery},
      {"8", "fixtures and serialization", robustness_battery},
  };
  std::vector<std::future<CheckReport>> pending;
  for (const Entry& e : entries) {
    pending.push_back(std::async(std::launch::async, [&e, &bounds] {
      CheckReport r;
      guarded(r, e.id, [&](CheckReport& rr) { rr = e.run(bounds); });
      return r;
    }));
  }
  std::vector<SuiteItem> out;
  for (std::size_t k = 0; k < pending.size(); ++k) out.push_back({entries[k].id, entries[k].title, pending[k].get()});
  return out;
}

}  // namespace steinerlab::cli
