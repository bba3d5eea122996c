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
#include <numeric>

#include "steinerlab/errors.hpp"
#include "steinerlab/retraction.hpp"

namespace steinerlab {

namespace {

std::optional<Name> single_generator(const ComplexMap& f, int q, std::uint32_t i) {
  const Chain& img = f.image(q, i);
  if (img.size() != 1 || img.terms()[0].coeff != 1) return std::nullopt;
  return f.target().name(q, img.terms()[0].index);
}

Name image_vertex(const ComplexMap& f, const Name& v, const char* what) {
  auto i = f.source().find(0, v);
  auto img = i ? single_generator(f, 0, *i) : std::nullopt;
  if (!img) throw Error(ErrorCode::kBadBasepoint, std::string(what) + " does not send " + v.str() + " to a vertex");
  return *img;
}

void check_supported(const ThetaSpec& spec) {
  check_theta_spec(spec);
  for (std::size_t l = 0; l < spec.glue.size(); ++l) {
    if (spec.sides[l] != std::pair{Side::kTarget, Side::kSource}) {
      throw Error(ErrorCode::kUnsupportedSpec, "gluing " + std::to_string(l + 1) + " is not target-to-source");
    }
    if (spec.glue[l] >= std::min(spec.dims[l], spec.dims[l + 1])) {
      throw Error(ErrorCode::kUnsupportedSpec, "gluing " + std::to_string(l + 1) + " is along a whole disk");
    }
  }
}

// The recursion shared by the tree and the retraction: a single point, a
// wedge split at the first gluing along a vertex, or a suspension.
struct Split {
  ThetaTree::Kind kind;
  std::vector<int> dims_a, glue_a, dims_b, glue_b;
};

Split split(const std::vector<int>& dims, const std::vector<int>& glue) {
  if (dims.size() == 1 && dims[0] == 0) return {ThetaTree::Kind::kPoint, {}, {}, {}, {}};
  auto zero = std::find(glue.begin(), glue.end(), 0);
  if (zero != glue.end()) {
    const auto l = static_cast<std::size_t>(zero - glue.begin());
    return {ThetaTree::Kind::kWedge,
            {dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(l) + 1},
            {glue.begin(), zero},
            {dims.begin() + static_cast<std::ptrdiff_t>(l) + 1, dims.end()},
            {zero + 1, glue.end()}};
  }
  Split s{ThetaTree::Kind::kSuspension, dims, glue, {}, {}};
  for (int& d : s.dims_a) --d;
  for (int& j : s.glue_a) --j;
  return s;
}

std::shared_ptr<const ThetaTree> build_tree(const std::vector<int>& dims, const std::vector<int>& glue) {
  Split s = split(dims, glue);
  auto t = std::make_shared<ThetaTree>();
  t->kind = s.kind;
  if (s.kind != ThetaTree::Kind::kPoint) t->kids.push_back(build_tree(s.dims_a, s.glue_a));
  if (s.kind == ThetaTree::Kind::kWedge) t->kids.push_back(build_tree(s.dims_b, s.glue_b));
  return t;
}

// A Θ-object assembled by the recursion, with its disks and a retraction
// from an oriental.
struct Node {
  BasedComplex complex;
  Name start, end;                     // the marked source and target vertices
  std::vector<ComplexMap> disk_maps;   // disk(i_l) -> complex
  int n = 0;
  RetractionPair pair;                 // complex -> Δⁿ -> complex
};

Node build_node(const std::vector<int>& dims, const std::vector<int>& glue) {
  Split s = split(dims, glue);
  if (s.kind == ThetaTree::Kind::kPoint) {
    const BasedComplex pt = unit();
    return {pt, Name(), Name(), {identity_map(pt)}, 0, {xi(0), section_xi(0).embed}};
  }
  if (s.kind == ThetaTree::Kind::kSuspension) {
    Node child = build_node(s.dims_a, s.glue_a);
    std::vector<ComplexMap> maps;
    for (const ComplexMap& m : child.disk_maps) maps.push_back(suspension_map(m));
    const RetractionPair ell = section_ell(child.n);
    RetractionPair pair{compose(suspension_map(child.pair.embed), ell.embed),
                        compose(ell.retract, suspension_map(child.pair.retract))};
    return {suspension(child.complex), pole_name(0), pole_name(1), std::move(maps), child.n + 1, std::move(pair)};
  }
  Node a = build_node(s.dims_a, s.glue_a);
  Node b = build_node(s.dims_b, s.glue_b);
  WedgeResult w = wedge_with_legs(a.complex, a.end, b.complex, b.start);
  std::vector<ComplexMap> maps;
  for (const ComplexMap& m : a.disk_maps) maps.push_back(compose(m, w.left));
  for (const ComplexMap& m : b.disk_maps) maps.push_back(compose(m, w.right));
  const Name a_last = subset_name({a.n});
  const Name b_first = subset_name({0});
  if (image_vertex(a.pair.embed, a.end, "embedding") != a_last ||
      image_vertex(b.pair.embed, b.start, "embedding") != b_first) {
    throw Error(ErrorCode::kInvalidResult, "embedding does not respect the marked vertices");
  }
  RetractionPair pair{compose(wedge_map(a.pair.embed, a.end, b.pair.embed, b.start), zeta(a.n, b.n)),
                      compose(theta_left_inverse(a.n, b.n), wedge_map(a.pair.retract, a_last, b.pair.retract, b_first))};
  Name start = image_vertex(w.left, a.start, "wedge leg");
  Name end = image_vertex(w.right, b.end, "wedge leg");
  return {w.complex, start, end, std::move(maps), a.n + b.n, std::move(pair)};
}

// Matches generators of two complexes covered by parallel families of disk maps.
ComplexMap match_by_disks(const std::vector<ComplexMap>& from, const std::vector<ComplexMap>& to) {
  MapBuilder mb(from.front().target(), to.front().target());
  for (std::size_t l = 0; l < from.size(); ++l) {
    const BasedComplex& d = from[l].source();
    for (int q = 0; q <= d.top_degree(); ++q) {
      for (std::uint32_t i = 0; i < d.count(q); ++i) {
        auto x = single_generator(from[l], q, i);
        auto y = single_generator(to[l], q, i);
        if (!x || !y) throw Error(ErrorCode::kInvalidResult, "disk map is not an inclusion");
        mb.set(*x, {{*y, 1}});
      }
    }
  }
  return mb.build();
}

}  // namespace

ComplexMap wedge_map(const ComplexMap& f, const Name& fa, const ComplexMap& g, const Name& gb) {
  WedgeResult src = wedge_with_legs(f.source(), fa, g.source(), gb);
  WedgeResult tgt = wedge_with_legs(f.target(), image_vertex(f, fa, "left map"), g.target(),
                                    image_vertex(g, gb, "right map"));
  MapBuilder mb(src.complex, tgt.complex);
  auto fill = [&mb](const ComplexMap& h, const ComplexMap& leg_src, const ComplexMap& leg_tgt) {
    const BasedComplex& c = h.source();
    for (int q = 0; q <= c.top_degree(); ++q) {
      for (std::uint32_t i = 0; i < c.count(q); ++i) {
        const Chain& at = leg_src.image(q, i);
        mb.set(q, at.terms()[0].index, leg_tgt.apply(h.image(q, i)));
      }
    }
  };
  fill(f, src.left, tgt.left);
  fill(g, src.right, tgt.right);
  return mb.build();
}

ComplexMap zeta(int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorCode::kBadDims, "zeta: negative dimension");
  const BasedComplex w = wedge(oriental(n), subset_name({n}), oriental(m), subset_name({0}));
  MapBuilder mb(w, oriental(n + m));
  for (int q = 0; q <= w.top_degree(); ++q) {
    for (const Name& g : w.generators(q)) {
      std::vector<int> vs = subset_vertices(g.kids()[0]);
      if (g.tag() == "R") {
        for (int& v : vs) v += n;
      }
      mb.set(g, {{subset_name(vs), 1}});
    }
  }
  return mb.build();
}

ComplexMap theta_left_inverse(int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorCode::kBadDims, "theta_left_inverse: negative dimension");
  const BasedComplex o = oriental(n + m);
  const BasedComplex w = wedge(oriental(n), subset_name({n}), oriental(m), subset_name({0}));
  MapBuilder mb(o, w);
  for (int q = 0; q <= o.top_degree(); ++q) {
    for (const Name& g : o.generators(q)) {
      const std::vector<int> vs = subset_vertices(g);
      if (q == 0) {
        const int v = vs[0];
        Name img = v < n ? tagged("L", subset_name({v})) : tagged("R", subset_name({v - n}));
        mb.set(g, {{img, 1}});
        continue;
      }
      // Collapse onto each wedge summand; keep the face where it stays a simplex.
      std::vector<int> left, right;
      for (int v : vs) {
        left.push_back(std::min(v, n));
        right.push_back(std::max(v, n) - n);
      }
      NamedChain img;
      if (std::adjacent_find(left.begin(), left.end()) == left.end()) img.push_back({tagged("L", subset_name(left)), 1});
      if (std::adjacent_find(right.begin(), right.end()) == right.end()) {
        img.push_back({tagged("R", subset_name(right)), 1});
      }
      mb.set(g, img);
    }
  }
  return mb.build();
}

std::string ThetaTree::str() const {
  switch (kind) {
    case Kind::kPoint:
      return "pt";
    case Kind::kSuspension:
      return "S(" + kids[0]->str() + ")";
    case Kind::kWedge:
      return "W(" + kids[0]->str() + "," + kids[1]->str() + ")";
  }
  return {};
}

ThetaTree theta_tree(const ThetaSpec& spec) {
  check_supported(spec);
  return *build_tree(spec.dims, spec.glue);
}

int theta_total_dimension(const ThetaSpec& spec) {
  return std::accumulate(spec.dims.begin(), spec.dims.end(), 0) -
         std::accumulate(spec.glue.begin(), spec.glue.end(), 0);
}

ThetaSpec random_theta_spec(std::mt19937_64& rng, int max_disks, int max_dim) {
  const int disks = std::uniform_int_distribution<int>(1, std::max(1, max_disks))(rng);
  ThetaSpec spec;
  const int lowest = disks == 1 ? 0 : 1;
  for (int l = 0; l < disks; ++l) {
    spec.dims.push_back(std::uniform_int_distribution<int>(lowest, std::max(lowest, max_dim))(rng));
  }
  for (int l = 1; l < disks; ++l) {
    const int top = std::min(spec.dims[l - 1], spec.dims[l]) - 1;
    spec.glue.push_back(std::uniform_int_distribution<int>(0, top)(rng));
    spec.sides.emplace_back(Side::kTarget, Side::kSource);
  }
  return spec;
}

ThetaRetraction theta_retract_into_oriental(const ThetaSpec& spec) {
  check_supported(spec);
  Node node = build_node(spec.dims, spec.glue);
  ThetaObject obj = theta_object(spec);
  const ComplexMap to_node = match_by_disks(obj.disk_maps, node.disk_maps);
  const ComplexMap from_node = match_by_disks(node.disk_maps, obj.disk_maps);

  CheckReport report;
  CheckReport iso = verify_mutually_inverse(to_node, from_node);
  iso.add("ISO_VALID", validate_map(to_node).passed() && validate_map(from_node).passed());
  report.merge(iso, "ISO");
  RetractionPair pair{compose(to_node, node.pair.embed), compose(node.pair.retract, from_node)};
  report.merge(verify_retraction(pair));
  if (node.n == theta_total_dimension(spec)) {
    report.pass("DIMENSION");
  } else {
    report.fail("DIMENSION", std::to_string(node.n) + " vs " + std::to_string(theta_total_dimension(spec)));
  }
  return {node.n, std::move(pair), std::move(report)};
}

}  // namespace steinerlab
