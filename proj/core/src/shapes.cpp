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

#include "steinerlab/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "steinerlab/errors.hpp"
#include "steinerlab/ops.hpp"
#include "steinerlab/steiner.hpp"

namespace steinerlab {

BasedComplex unit() { return ComplexBuilder().vertex(Name(), 1).build(); }

BasedComplex zero() { return BasedComplex(); }

BasedComplex interval() {
  return ComplexBuilder()
      .vertex(Name("0"))
      .vertex(Name("1"))
      .cell(1, Name("i"), {{Name("1"), 1}, {Name("0"), -1}})
      .build();
}

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw Error(ErrorCode::kBadDims, std::string(what) + " of negative dimension " + std::to_string(n));
}

Name iterate_susp(int k, Name base) {
  for (int j = 0; j < k; ++j) base = susp_name(base);
  return base;
}

}  // namespace

BasedComplex disk(int n) {
  require_nonnegative(n, "disk");
  BasedComplex c = unit();
  for (int k = 0; k < n; ++k) c = suspension(c);
  return c;
}

BasedComplex boundary_disk(int n) {
  require_nonnegative(n, "boundary disk");
  BasedComplex c = zero();
  for (int k = 0; k < n; ++k) c = suspension(c);
  return c;
}

Name disk_generator(int k, int side) { return iterate_susp(k, pole_name(side)); }
Name disk_top(int n) { return iterate_susp(n, Name()); }

BasedComplex cube(int n) {
  require_nonnegative(n, "cube");
  BasedComplex c = unit();
  for (int k = 0; k < n; ++k) c = gray_tensor(c, interval());
  return c;
}

Name subset_name(const std::vector<int>& vertices) {
  std::string s;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(vertices[k]);
  }
  return Name(s);
}

std::vector<int> subset_vertices(const Name& name) {
  std::vector<int> out;
  const std::string& s = name.tag();
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t dot = s.find('.', start);
    if (dot == std::string::npos) dot = s.size();
    out.push_back(std::stoi(s.substr(start, dot - start)));
    start = dot + 1;
  }
  return out;
}

BasedComplex oriental(int n) {
  require_nonnegative(n, "oriental");
  ComplexBuilder builder;
  // all non-empty subsets of {0..n}
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n + 1)); ++mask) {
    std::vector<int> v;
    for (int j = 0; j <= n; ++j) {
      if (mask >> j & 1) v.push_back(j);
    }
    const int k = static_cast<int>(v.size()) - 1;
    if (k == 0) {
      builder.vertex(subset_name(v));
      continue;
    }
    NamedChain bd;
    for (int j = 0; j <= k; ++j) {
      std::vector<int> face = v;
      face.erase(face.begin() + j);
      bd.emplace_back(subset_name(face), sign_power(j));
    }
    builder.cell(k, subset_name(v), std::move(bd));
  }
  return builder.build();
}

BasedComplex oriental_via_join(int n) {
  require_nonnegative(n, "oriental");
  BasedComplex c = rename(unit(), [](int, const Name&) { return subset_name({0}); }).complex;
  for (int k = 1; k <= n; ++k) {
    BasedComplex j = join(c, unit());
    c = rename(j, [k](int, const Name& name) {
          if (name.tag() == "R") return subset_name({k});
          std::vector<int> v = subset_vertices(name.kids()[0]);
          if (name.tag() == "J") v.push_back(k);
          return subset_name(v);
        }).complex;
  }
  return c;
}

BasedComplex antioriental(int n) { return dual_co(oriental(n)); }

const char* to_string(Side side) { return side == Side::kSource ? "source" : "target"; }

ComplexMap disk_inclusion(int j, int i, Side side) {
  if (j < 0 || j > i) {
    throw Error(ErrorCode::kBadDims, "no disk inclusion D^" + std::to_string(j) + " -> D^" + std::to_string(i));
  }
  MapBuilder mb(disk(j), disk(i));
  for (int k = 0; k < j; ++k) {
    for (int e = 0; e < 2; ++e) mb.set(disk_generator(k, e), {{disk_generator(k, e), 1}});
  }
  mb.set(disk_top(j), {{j == i ? disk_top(i) : disk_generator(j, static_cast<int>(side)), 1}});
  return mb.build();
}

void check_theta_spec(const ThetaSpec& spec) {
  if (spec.dims.empty()) throw Error(ErrorCode::kBadDims, "theta spec without disks");
  if (spec.glue.size() + 1 != spec.dims.size() || spec.sides.size() != spec.glue.size()) {
    throw Error(ErrorCode::kBadDims, "theta spec lengths are inconsistent");
  }
  for (int d : spec.dims) require_nonnegative(d, "theta disk");
  for (std::size_t l = 0; l < spec.glue.size(); ++l) {
    int j = spec.glue[l];
    if (j < 0 || j > spec.dims[l] || j > spec.dims[l + 1]) {
      throw Error(ErrorCode::kBadDims, "glue dimension " + std::to_string(j) + " exceeds a neighbouring disk");
    }
  }
}

std::string to_string(const ThetaSpec& spec) {
  auto join_ints = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
    return out;
  };
  std::string out = join_ints(spec.dims) + "/" + join_ints(spec.glue);
  bool standard = true;
  std::string sides;
  for (std::size_t k = 0; k < spec.sides.size(); ++k) {
    const auto& [a, b] = spec.sides[k];
    standard = standard && a == Side::kTarget && b == Side::kSource;
    sides += (k ? "," : "") + std::string(a == Side::kTarget ? "t" : "s") + (b == Side::kTarget ? "t" : "s");
  }
  return standard ? out : out + "/" + sides;
}

ThetaSpec parse_theta_spec(std::string_view text) {
  auto fail = [text](const std::string& why) {
    throw Error(ErrorCode::kParseError, "theta spec '" + std::string(text) + "': " + why);
  };
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    if (s.empty()) return parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.size(); ++k) {
      if (k == s.size() || s[k] == sep) {
        parts.push_back(s.substr(start, k - start));
        start = k + 1;
      }
    }
    return parts;
  };
  auto ints = [&](std::string_view s) {
    std::vector<int> out;
    for (std::string_view p : split(s, ',')) {
      int v = 0;
      auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
      if (ec != std::errc() || end != p.data() + p.size()) fail("bad integer '" + std::string(p) + "'");
      out.push_back(v);
    }
    return out;
  };
  std::vector<std::string_view> fields = split(text, '/');
  if (fields.empty() || fields.size() > 3) fail("expected DIMS[/GLUE[/SIDES]]");
  ThetaSpec spec;
  spec.dims = ints(fields[0]);
  if (fields.size() > 1) spec.glue = ints(fields[1]);
  if (fields.size() > 2) {
    for (std::string_view p : split(fields[2], ',')) {
      if (p.size() != 2 || (p[0] != 's' && p[0] != 't') || (p[1] != 's' && p[1] != 't')) {
        fail("bad side pair '" + std::string(p) + "'");
      }
      spec.sides.emplace_back(p[0] == 't' ? Side::kTarget : Side::kSource, p[1] == 't' ? Side::kTarget : Side::kSource);
    }
  } else {
    spec.sides.assign(spec.glue.size(), {Side::kTarget, Side::kSource});
  }
  return spec;
}

namespace {

std::string disk_tag(std::size_t l) { return "D" + std::to_string(l); }

Renamed tag_all(const BasedComplex& c, const std::string& tag) {
  return rename(c, [&tag](int, const Name& n) { return tagged(tag, n); });
}

Renamed untag_sum(const BasedComplex& c) {
  return rename(c, [](int, const Name& n) { return n.kids()[0]; });
}

}  // namespace

ThetaObject theta_object(const ThetaSpec& spec) {
  check_theta_spec(spec);
  Renamed first = tag_all(disk(spec.dims[0]), disk_tag(0));
  ThetaObject obj{first.complex, {first.forward}};
  for (std::size_t l = 1; l < spec.dims.size(); ++l) {
    const int j = spec.glue[l - 1];
    Renamed next = tag_all(disk(spec.dims[l]), disk_tag(l));
    ComplexMap fa = compose(disk_inclusion(j, spec.dims[l - 1], spec.sides[l - 1].first), obj.disk_maps[l - 1]);
    ComplexMap fb = compose(disk_inclusion(j, spec.dims[l], spec.sides[l - 1].second), next.forward);
    PushoutResult po = pushout(fa, fb);
    Renamed flat = untag_sum(po.require());
    ComplexMap into_a = compose(*po.leg_a, flat.forward);
    for (auto& m : obj.disk_maps) m = compose(m, into_a);
    obj.disk_maps.push_back(compose(next.forward, *po.leg_b, flat.forward));
    obj.complex = flat.complex;
  }
  return obj;
}

BasedComplex theta(const ThetaSpec& spec) { return theta_object(spec).complex; }

WedgeResult wedge_with_legs(const BasedComplex& a, const Name& point_a, const BasedComplex& b,
                            const Name& point_b) {
  auto check = [](const BasedComplex& c, const Name& p) {
    auto i = c.find(0, p);
    if (!i) throw Error(ErrorCode::kBadBasepoint, p.str() + " is not a vertex");
    if (c.aug(*i) != 1) throw Error(ErrorCode::kBadBasepoint, p.str() + " does not have augmentation 1");
  };
  check(a, point_a);
  check(b, point_b);
  BasedComplex pt = unit();
  ComplexMap fa = MapBuilder(pt, a).set(Name(), {{point_a, 1}}).build();
  ComplexMap fb = MapBuilder(pt, b).set(Name(), {{point_b, 1}}).build();
  PushoutResult po = pushout(fa, fb);
  return {po.require(), *po.leg_a, *po.leg_b};
}

BasedComplex wedge(const BasedComplex& a, const Name& point_a, const BasedComplex& b, const Name& point_b) {
  return wedge_with_legs(a, point_a, b, point_b).complex;
}

const char* to_string(Family family) { return family == Family::kCube ? "cube" : "oriental"; }

BasedComplex shape(Family family, int n) { return family == Family::kCube ? cube(n) : oriental(n); }

namespace {

// A face of codimension one or two, as a generator-level embedding.
using Embed = std::function<Name(const Name&)>;

struct FaceDiagram {
  std::vector<std::pair<std::string, Embed>> faces;  // copies of the (n-1)-shape
  // copies of the (n-2)-shape with their embeddings into two faces
  struct Overlap {
    std::string tag;
    std::size_t face_a;
    Embed into_a;
    std::size_t face_b;
    Embed into_b;
  };
  std::vector<Overlap> overlaps;
};

Name insert_letter(const Name& w, std::size_t pos, char letter) {
  std::string s = w.tag();
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), letter);
  return Name::word(s);
}

Name skip_vertex(const Name& subset, int j) {
  std::vector<int> v = subset_vertices(subset);
  for (int& x : v) {
    if (x >= j) ++x;
  }
  return subset_name(v);
}

FaceDiagram face_diagram(Family family, int n) {
  FaceDiagram dia;
  if (family == Family::kCube) {
    // face (k,e) fixes letter k to e; overlap (k<l, e, f) fixes both
    auto face_index = [](int k, int e) { return static_cast<std::size_t>(2 * k + e); };
    for (int k = 0; k < n; ++k) {
      for (int e = 0; e < 2; ++e) {
        char letter = e ? '1' : '0';
        dia.faces.push_back({"F" + std::to_string(k) + "_" + letter,
                             [k, letter](const Name& w) { return insert_letter(w, k, letter); }});
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) {
        for (int e = 0; e < 2; ++e) {
          for (int f = 0; f < 2; ++f) {
            char le = e ? '1' : '0';
            char lf = f ? '1' : '0';
            dia.overlaps.push_back({"G" + std::to_string(k) + "_" + std::to_string(l) + "_" + le + lf,
                                    face_index(l, f), [k, le](const Name& w) { return insert_letter(w, k, le); },
                                    face_index(k, e), [l, lf](const Name& w) { return insert_letter(w, l - 1, lf); }});
          }
        }
      }
    }
  } else {
    // face j omits vertex j; overlap (j<k) omits both
    for (int j = 0; j <= n; ++j) {
      dia.faces.push_back({"F" + std::to_string(j), [j](const Name& s) { return skip_vertex(s, j); }});
    }
    for (int j = 0; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        dia.overlaps.push_back({"G" + std::to_string(j) + "_" + std::to_string(k), static_cast<std::size_t>(k),
                                [j](const Name& s) { return skip_vertex(s, j); }, static_cast<std::size_t>(j),
                                [k](const Name& s) { return skip_vertex(s, k - 1); }});
      }
    }
  }
  return dia;
}

}  // namespace

CheckReport boundary_decomposition_check(Family family, int n) {
  if (n < 2) throw Error(ErrorCode::kBadDims, "boundary decomposition needs n >= 2");
  FaceDiagram dia = face_diagram(family, n);
  BasedComplex facet = shape(family, n - 1);
  BasedComplex ridge = shape(family, n - 2);
  std::vector<std::pair<std::string, BasedComplex>> face_parts, overlap_parts;
  for (const auto& f : dia.faces) face_parts.emplace_back(f.first, facet);
  for (const auto& o : dia.overlaps) overlap_parts.emplace_back(o.tag, ridge);
  BasedComplex faces = coproduct(face_parts);
  BasedComplex overlaps = coproduct(overlap_parts);

  MapBuilder ma(overlaps, faces), mb(overlaps, faces);
  for (const auto& o : dia.overlaps) {
    for (int q = 0; q <= ridge.top_degree(); ++q) {
      for (const Name& x : ridge.generators(q)) {
        Name src = tagged(o.tag, x);
        ma.set(src, {{tagged(dia.faces[o.face_a].first, o.into_a(x)), 1}});
        mb.set(src, {{tagged(dia.faces[o.face_b].first, o.into_b(x)), 1}});
      }
    }
  }
  CheckReport r;
  PushoutResult co = coequalizer(ma.build(), mb.build());
  if (!co.based) {
    r.fail("COLIMIT_BASED", co.diagnostic);
    return r;
  }
  r.pass("COLIMIT_BASED");

  // Each surviving face generator names a boundary generator of the shape.
  std::map<std::string, const Embed*> embed_of;
  for (const auto& f : dia.faces) embed_of[f.first] = &f.second;
  std::set<Name> images;
  bool bijective = true;
  std::string witness;
  const BasedComplex& glued = *co.complex;
  for (int q = 0; q <= glued.top_degree(); ++q) {
    for (const Name& s : glued.generators(q)) {
      Name img = (*embed_of.at(s.tag()))(s.kids()[0]);
      if (!images.insert(img).second && bijective) {
        bijective = false;
        witness = "two survivors name " + img.str();
      }
    }
  }
  BasedComplex boundary = truncate_top(shape(family, n));
  if (bijective && images.size() != boundary.total()) {
    bijective = false;
    witness = std::to_string(images.size()) + " survivors for " + std::to_string(boundary.total()) + " generators";
  }
  bijective ? r.pass("SURVIVORS_ARE_FACES") : r.fail("SURVIVORS_ARE_FACES", witness);
  if (!bijective) return r;

  BasedComplex named = rename(glued, [&embed_of](int, const Name& s) { return (*embed_of.at(s.tag()))(s.kids()[0]); })
                           .complex;
  equal_presentation(named, boundary) && named == boundary
      ? r.pass("EQUALS_BOUNDARY")
      : r.fail("EQUALS_BOUNDARY", "glued faces differ from the boundary of the " + std::string(to_string(family)));
  return r;
}

CheckReport top_cell_decomposition_check(Family family, int n) {
  if (n < 1) throw Error(ErrorCode::kBadDims, "top cell decomposition needs n >= 1");
  BasedComplex x = shape(family, n);
  const Name& top = x.name(n, 0);
  CellTable atom = atom_table(x, n, 0);
  BasedComplex rim = truncate_top(x);
  BasedComplex sphere = boundary_disk(n);

  CheckReport r;
  MapBuilder attach(sphere, rim);
  for (int k = 0; k < n; ++k) {
    attach.set(disk_generator(k, 0), to_named(x, atom.minus[k]));
    attach.set(disk_generator(k, 1), to_named(x, atom.plus[k]));
  }
  ComplexMap g = attach.build();
  CheckReport vg = validate_map(g);
  vg.passed() ? r.pass("ATTACHING_MAP_VALID") : r.fail("ATTACHING_MAP_VALID", vg.first_failure()->witness.value_or(""));
  if (!vg.passed()) return r;

  PushoutResult po = pushout(truncation_inclusion(disk(n)), g);
  if (!po.based) {
    r.fail("COLIMIT_BASED", po.diagnostic);
    return r;
  }
  r.pass("COLIMIT_BASED");
  const Name cell = tagged("L", disk_top(n));
  BasedComplex named = rename(*po.complex, [&](int, const Name& s) {
                         return s == cell ? top : s.kids()[0];
                       }).complex;
  named == x ? r.pass("EQUALS_SHAPE")
             : r.fail("EQUALS_SHAPE", "disk glued along the boundary differs from the " + std::string(to_string(family)));
  return r;
}

}  // namespace steinerlab
