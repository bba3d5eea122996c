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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steinerlab/chain.hpp"
#include "steinerlab/check_report.hpp"
#include "steinerlab/name.hpp"

namespace steinerlab {

// A linear combination written with names, resolved against a complex on build.
using NamedChain = std::vector<std::pair<Name, Coeff>>;

// Generator count above which construction refuses to build; read from
// STEINERLAB_MAX_GENERATORS, default 100000.
std::size_t max_generators();

// A finitely based augmented directed complex. Generators of each degree are
// kept sorted by name; chains index into that order. Immutable and cheap to
// copy (shared storage). Positivity is the N-span of the basis.
class BasedComplex {
 public:
  BasedComplex();  // the zero complex

  // -1 for the zero complex.
  int top_degree() const { return static_cast<int>(data_->names.size()) - 1; }
  std::size_t count(int degree) const;
  std::size_t total() const;
  const std::vector<Name>& generators(int degree) const;
  const Name& name(int degree, std::uint32_t index) const { return data_->names[degree][index]; }
  std::optional<std::uint32_t> find(int degree, const Name& name) const;
  std::uint32_t index_of(int degree, const Name& name) const;  // throws kMalformed
  // Degree of a generator; names are unique across the whole complex.
  std::optional<int> degree_of(const Name& name) const;

  const Chain& d(int degree, std::uint32_t index) const { return data_->diff[degree][index]; }
  Coeff aug(std::uint32_t index) const { return data_->aug[index]; }

  Chain gen(int degree, const Name& name, Coeff coeff = 1) const {
    return Chain::basis(degree, index_of(degree, name), coeff);
  }
  Chain boundary(const Chain& x) const;
  Coeff augment(const Chain& x) const;  // 0 unless x has degree 0
  Chain resolve(int degree, const NamedChain& terms) const;

  std::string format(const Chain& x) const;

  // Identical names, differentials and augmentations.
  friend bool operator==(const BasedComplex& a, const BasedComplex& b);

 private:
  struct Data {
    std::vector<std::vector<Name>> names;
    std::vector<std::map<Name, std::uint32_t>> index;
    std::vector<std::vector<Chain>> diff;  // diff[0] holds empty degree -1 chains
    std::vector<Coeff> aug;
  };
  explicit BasedComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
  friend class ComplexBuilder;
};

class ComplexBuilder {
 public:
  // Degree-0 generators carry an augmentation; higher ones a boundary in names
  // of the degree below.
  ComplexBuilder& vertex(Name name, Coeff augmentation = 1);
  ComplexBuilder& cell(int degree, Name name, NamedChain boundary);
  BasedComplex build() const;

 private:
  struct Pending {
    int degree;
    Name name;
    NamedChain boundary;
    Coeff aug;
  };
  std::vector<Pending> pending_;
};

// A degreewise integer matrix between complexes, stored as the image chain of
// every source generator.
class ComplexMap {
 public:
  ComplexMap(BasedComplex source, BasedComplex target, std::vector<std::vector<Chain>> images);

  const BasedComplex& source() const { return source_; }
  const BasedComplex& target() const { return target_; }
  const Chain& image(int degree, std::uint32_t index) const { return images_[degree][index]; }
  Chain image(const Name& generator) const;
  Chain apply(const Chain& x) const;

  std::string format() const;

  friend bool operator==(const ComplexMap& a, const ComplexMap& b);

 private:
  BasedComplex source_;
  BasedComplex target_;
  std::vector<std::vector<Chain>> images_;
};

class MapBuilder {
 public:
  MapBuilder(BasedComplex source, BasedComplex target);
  // Unassigned generators map to zero.
  MapBuilder& set(const Name& generator, const NamedChain& image);
  MapBuilder& set(int degree, std::uint32_t index, Chain image);
  ComplexMap build() const;

 private:
  BasedComplex source_;
  BasedComplex target_;
  std::vector<std::vector<Chain>> images_;
};

CheckReport validate_complex(const BasedComplex& c);
CheckReport validate_map(const ComplexMap& f);

// Runs f first, then g.
ComplexMap compose(const ComplexMap& f, const ComplexMap& g);
ComplexMap identity_map(const BasedComplex& c);
ComplexMap zero_map(const BasedComplex& source, const BasedComplex& target);
ComplexMap add_maps(const ComplexMap& f, const ComplexMap& g, Coeff g_factor = 1);

// Summand generators are renamed L(x) and R(y).
BasedComplex direct_sum(const BasedComplex& a, const BasedComplex& b);
ComplexMap sum_inclusion_left(const BasedComplex& a, const BasedComplex& b);
ComplexMap sum_inclusion_right(const BasedComplex& a, const BasedComplex& b);

std::map<int, std::size_t> graded_counts(const BasedComplex& c);

// Same counts and, matching generators by position in each degree, the same
// differentials and augmentations.
bool equal_presentation(const BasedComplex& a, const BasedComplex& b);

CheckReport verify_mutually_inverse(const ComplexMap& f, const ComplexMap& g);

struct Renamed {
  BasedComplex complex;
  ComplexMap forward;  // old -> new
  ComplexMap backward;
};
// Renames each generator; the result is re-sorted under the new names.
Renamed rename(const BasedComplex& c, const std::function<Name(int, const Name&)>& fn);
Renamed rename(const BasedComplex& c, const std::map<Name, Name>& table);
// Inverse of a map sending generators bijectively to generators (coefficient 1).
std::optional<ComplexMap> invert_bijection(const ComplexMap& f);
// The positional iso a -> b; requires equal_presentation.
ComplexMap positional_iso(const BasedComplex& a, const BasedComplex& b);
// compose(compose(f, g), h)
ComplexMap compose(const ComplexMap& f, const ComplexMap& g, const ComplexMap& h);

// Disjoint union; generator x of the part tagged t is named t(x).
BasedComplex coproduct(const std::vector<std::pair<std::string, BasedComplex>>& parts);

// Same generators and augmentation; each differential replaced by fn(q, i, d).
BasedComplex map_differential(const BasedComplex& c,
                              const std::function<Chain(int, std::uint32_t, const Chain&)>& fn);
NamedChain to_named(const BasedComplex& c, const Chain& x);

// Drops the top-degree generators.
BasedComplex truncate_top(const BasedComplex& c);
// Inclusion of truncate_top(c) into c.
ComplexMap truncation_inclusion(const BasedComplex& c);

}  // namespace steinerlab
