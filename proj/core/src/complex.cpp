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

#include "steinerlab/complex.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include "steinerlab/errors.hpp"

namespace steinerlab {

std::size_t max_generators() {
  const char* env = std::getenv("STEINERLAB_MAX_GENERATORS");
  if (env == nullptr || *env == '\0') return 100000;
  std::size_t value = 0;
  std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "STEINERLAB_MAX_GENERATORS is not a count: " + std::string(text));
  }
  return value;
}

// ---------------------------------------------------------------- complex

BasedComplex::BasedComplex() : data_(std::make_shared<const Data>()) {}

std::size_t BasedComplex::count(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return data_->names[degree].size();
}

std::size_t BasedComplex::total() const {
  std::size_t n = 0;
  for (const auto& v : data_->names) n += v.size();
  return n;
}

const std::vector<Name>& BasedComplex::generators(int degree) const {
  static const std::vector<Name> kEmpty;
  if (degree < 0 || degree > top_degree()) return kEmpty;
  return data_->names[degree];
}

std::optional<std::uint32_t> BasedComplex::find(int degree, const Name& name) const {
  if (degree < 0 || degree > top_degree()) return std::nullopt;
  const auto& idx = data_->index[degree];
  auto it = idx.find(name);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::uint32_t BasedComplex::index_of(int degree, const Name& name) const {
  auto i = find(degree, name);
  if (!i) {
    throw Error(ErrorCode::kMalformed,
                "no generator " + name.str() + " in degree " + std::to_string(degree));
  }
  return *i;
}

std::optional<int> BasedComplex::degree_of(const Name& name) const {
  for (int q = 0; q <= top_degree(); ++q) {
    if (find(q, name)) return q;
  }
  return std::nullopt;
}

Chain BasedComplex::boundary(const Chain& x) const {
  Chain out(x.degree() - 1);
  if (x.degree() <= 0) return out;
  for (const Term& t : x.terms()) out.add_scaled(d(x.degree(), t.index), t.coeff);
  return out;
}

Coeff BasedComplex::augment(const Chain& x) const {
  if (x.degree() != 0) return 0;
  Coeff s = 0;
  for (const Term& t : x.terms()) s = checked_add(s, checked_mul(t.coeff, aug(t.index)));
  return s;
}

Chain BasedComplex::resolve(int degree, const NamedChain& terms) const {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [n, c] : terms) out.push_back({index_of(degree, n), c});
  return Chain(degree, std::move(out));
}

std::string BasedComplex::format(const Chain& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : x.terms()) {
    Coeff c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Coeff mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name(x.degree(), t.index).str();
    first = false;
  }
  return out;
}

bool operator==(const BasedComplex& a, const BasedComplex& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->names == b.data_->names && a.data_->diff == b.data_->diff &&
         a.data_->aug == b.data_->aug;
}

// ---------------------------------------------------------------- builder

ComplexBuilder& ComplexBuilder::vertex(Name name, Coeff augmentation) {
  pending_.push_back({0, std::move(name), {}, augmentation});
  return *this;
}

ComplexBuilder& ComplexBuilder::cell(int degree, Name name, NamedChain boundary) {
  if (degree < 1) throw Error(ErrorCode::kMalformed, "cell of degree " + std::to_string(degree));
  pending_.push_back({degree, std::move(name), std::move(boundary), 0});
  return *this;
}

BasedComplex ComplexBuilder::build() const {
  if (pending_.size() > max_generators()) {
    throw Error(ErrorCode::kTooLarge, std::to_string(pending_.size()) +
                                          " generators exceed STEINERLAB_MAX_GENERATORS=" +
                                          std::to_string(max_generators()));
  }
  int top = -1;
  for (const auto& p : pending_) top = std::max(top, p.degree);
  auto data = std::make_shared<BasedComplex::Data>();
  data->names.resize(top + 1);
  data->index.resize(top + 1);
  data->diff.resize(top + 1);

  std::set<Name> seen;
  std::vector<std::vector<const Pending*>> by_degree(top + 1);
  for (const auto& p : pending_) {
    if (!seen.insert(p.name).second) {
      throw Error(ErrorCode::kMalformed, "duplicate generator " + p.name.str());
    }
    by_degree[p.degree].push_back(&p);
  }
  for (int q = 0; q <= top; ++q) {
    auto& list = by_degree[q];
    std::sort(list.begin(), list.end(), [](const Pending* a, const Pending* b) { return a->name < b->name; });
    for (std::uint32_t i = 0; i < list.size(); ++i) {
      data->names[q].push_back(list[i]->name);
      data->index[q].emplace(list[i]->name, i);
    }
  }
  for (int q = 0; q <= top; ++q) {
    for (const Pending* p : by_degree[q]) {
      if (q == 0) {
        data->diff[0].emplace_back(-1);
        data->aug.push_back(p->aug);
        continue;
      }
      std::vector<Term> terms;
      for (const auto& [n, c] : p->boundary) {
        auto it = data->index[q - 1].find(n);
        if (it == data->index[q - 1].end()) {
          throw Error(ErrorCode::kMalformed, "boundary of " + p->name.str() + " references " + n.str() +
                                                 ", not a generator of degree " + std::to_string(q - 1));
        }
        terms.push_back({it->second, c});
      }
      data->diff[q].emplace_back(q - 1, std::move(terms));
    }
  }
  return BasedComplex(std::move(data));
}

// ---------------------------------------------------------------- maps

ComplexMap::ComplexMap(BasedComplex source, BasedComplex target, std::vector<std::vector<Chain>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  images_.resize(std::max(0, source_.top_degree() + 1));
  for (int q = 0; q <= source_.top_degree(); ++q) {
    auto& row = images_[q];
    if (row.size() != source_.count(q)) {
      if (!row.empty()) throw Error(ErrorCode::kMalformed, "map image count differs from source");
      row.assign(source_.count(q), Chain(q));
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Chain& c = row[i];
      if (c.degree() != q && !c.is_zero()) {
        throw Error(ErrorCode::kDegreeMismatch, "image of " + source_.name(q, i).str() + " has degree " +
                                                    std::to_string(c.degree()));
      }
      if (c.degree() != q) row[i] = Chain(q);
      for (const Term& t : c.terms()) {
        if (t.index >= target_.count(q)) {
          throw Error(ErrorCode::kMalformed, "image of " + source_.name(q, i).str() + " leaves the target");
        }
      }
    }
  }
}

Chain ComplexMap::image(const Name& generator) const {
  auto q = source_.degree_of(generator);
  if (!q) throw Error(ErrorCode::kMalformed, "no source generator " + generator.str());
  return images_[*q][source_.index_of(*q, generator)];
}

Chain ComplexMap::apply(const Chain& x) const {
  Chain out(x.degree());
  if (x.degree() < 0 || x.degree() > source_.top_degree()) return out;
  for (const Term& t : x.terms()) out.add_scaled(images_[x.degree()][t.index], t.coeff);
  return out;
}

std::string ComplexMap::format() const {
  std::string out;
  for (int q = 0; q <= source_.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < source_.count(q); ++i) {
      out += source_.name(q, i).str() + " -> " + target_.format(images_[q][i]) + "\n";
    }
  }
  return out;
}

bool operator==(const ComplexMap& a, const ComplexMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
}

MapBuilder::MapBuilder(BasedComplex source, BasedComplex target)
    : source_(std::move(source)), target_(std::move(target)) {
  images_.resize(std::max(0, source_.top_degree() + 1));
  for (int q = 0; q <= source_.top_degree(); ++q) images_[q].assign(source_.count(q), Chain(q));
}

MapBuilder& MapBuilder::set(const Name& generator, const NamedChain& image) {
  auto q = source_.degree_of(generator);
  if (!q) throw Error(ErrorCode::kMalformed, "no source generator " + generator.str());
  images_[*q][source_.index_of(*q, generator)] = target_.resolve(*q, image);
  return *this;
}

MapBuilder& MapBuilder::set(int degree, std::uint32_t index, Chain image) {
  images_.at(degree).at(index) = std::move(image);
  return *this;
}

ComplexMap MapBuilder::build() const { return ComplexMap(source_, target_, images_); }

// ---------------------------------------------------------------- checks

CheckReport validate_complex(const BasedComplex& c) {
  CheckReport r;
  std::optional<std::string> bad;
  for (int q = 2; q <= c.top_degree() && !bad; ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      Chain dd = c.boundary(c.d(q, i));
      if (!dd.is_zero()) {
        bad = "d(d(" + c.name(q, i).str() + ")) = " + c.format(dd);
        break;
      }
    }
  }
  bad ? r.fail("D2_ZERO", *bad) : r.pass("D2_ZERO");

  bad.reset();
  for (std::uint32_t i = 0; i < c.count(1); ++i) {
    Coeff e = c.augment(c.d(1, i));
    if (e != 0) {
      bad = "augmentation of d(" + c.name(1, i).str() + ") = " + std::to_string(e);
      break;
    }
  }
  bad ? r.fail("AUG_KILLS_D1", *bad) : r.pass("AUG_KILLS_D1");

  bad.reset();
  for (std::uint32_t i = 0; i < c.count(0); ++i) {
    if (c.aug(i) < 0) {
      bad = c.name(0, i).str() + ": augmentation " + std::to_string(c.aug(i));
      break;
    }
  }
  bad ? r.fail("AUG_NONNEGATIVE", *bad) : r.pass("AUG_NONNEGATIVE");
  return r;
}

CheckReport validate_map(const ComplexMap& f) {
  const BasedComplex& s = f.source();
  const BasedComplex& t = f.target();
  CheckReport r;
  std::optional<std::string> bad;
  for (int q = 1; q <= s.top_degree() && !bad; ++q) {
    for (std::uint32_t i = 0; i < s.count(q); ++i) {
      Chain lhs = f.apply(s.d(q, i));
      Chain rhs = t.boundary(f.image(q, i));
      if (!(lhs == rhs)) {
        bad = s.name(q, i).str() + ": f(d x) = " + t.format(lhs) + " but d(f x) = " + t.format(rhs);
        break;
      }
    }
  }
  bad ? r.fail("CHAIN_RULE", *bad) : r.pass("CHAIN_RULE");

  bad.reset();
  for (std::uint32_t i = 0; i < s.count(0); ++i) {
    Coeff e = t.augment(f.image(0, i));
    if (e != s.aug(i)) {
      bad = s.name(0, i).str() + ": augmentation " + std::to_string(s.aug(i)) + " -> " + std::to_string(e);
      break;
    }
  }
  bad ? r.fail("AUG_PRESERVED", *bad) : r.pass("AUG_PRESERVED");

  bad.reset();
  for (int q = 0; q <= s.top_degree() && !bad; ++q) {
    for (std::uint32_t i = 0; i < s.count(q); ++i) {
      if (!f.image(q, i).is_nonnegative()) {
        bad = s.name(q, i).str() + " -> " + t.format(f.image(q, i));
        break;
      }
    }
  }
  bad ? r.fail("POSITIVITY", *bad) : r.pass("POSITIVITY");
  return r;
}

// ---------------------------------------------------------------- algebra

ComplexMap compose(const ComplexMap& f, const ComplexMap& g) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorCode::kSourceTargetMismatch, "compose: target of the first map is not the source of the second");
  }
  const BasedComplex& s = f.source();
  std::vector<std::vector<Chain>> images(std::max(0, s.top_degree() + 1));
  for (int q = 0; q <= s.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < s.count(q); ++i) images[q].push_back(g.apply(f.image(q, i)));
  }
  return ComplexMap(s, g.target(), std::move(images));
}

ComplexMap compose(const ComplexMap& f, const ComplexMap& g, const ComplexMap& h) {
  return compose(compose(f, g), h);
}

ComplexMap identity_map(const BasedComplex& c) {
  std::vector<std::vector<Chain>> images(std::max(0, c.top_degree() + 1));
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) images[q].push_back(Chain::basis(q, i));
  }
  return ComplexMap(c, c, std::move(images));
}

ComplexMap zero_map(const BasedComplex& source, const BasedComplex& target) {
  return ComplexMap(source, target, {});
}

ComplexMap add_maps(const ComplexMap& f, const ComplexMap& g, Coeff g_factor) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorCode::kSourceTargetMismatch, "adding maps with different ends");
  }
  const BasedComplex& s = f.source();
  std::vector<std::vector<Chain>> images(std::max(0, s.top_degree() + 1));
  for (int q = 0; q <= s.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < s.count(q); ++i) {
      Chain c = f.image(q, i);
      c.add_scaled(g.image(q, i), g_factor);
      images[q].push_back(std::move(c));
    }
  }
  return ComplexMap(s, f.target(), std::move(images));
}

namespace {

NamedChain named(const BasedComplex& c, const Chain& x, const std::function<Name(const Name&)>& wrap) {
  NamedChain out;
  for (const Term& t : x.terms()) out.emplace_back(wrap(c.name(x.degree(), t.index)), t.coeff);
  return out;
}

void copy_into(ComplexBuilder& b, const BasedComplex& c, const std::function<Name(const Name&)>& wrap) {
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      if (q == 0) b.vertex(wrap(c.name(0, i)), c.aug(i));
      else b.cell(q, wrap(c.name(q, i)), named(c, c.d(q, i), wrap));
    }
  }
}

ComplexMap inclusion_by_name(const BasedComplex& from, const BasedComplex& into,
                             const std::function<Name(const Name&)>& wrap) {
  MapBuilder mb(from, into);
  for (int q = 0; q <= from.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < from.count(q); ++i) {
      mb.set(q, i, into.gen(q, wrap(from.name(q, i))));
    }
  }
  return mb.build();
}

Name wrap_left(const Name& n) { return tagged("L", n); }
Name wrap_right(const Name& n) { return tagged("R", n); }

}  // namespace

BasedComplex direct_sum(const BasedComplex& a, const BasedComplex& b) {
  ComplexBuilder builder;
  copy_into(builder, a, wrap_left);
  copy_into(builder, b, wrap_right);
  return builder.build();
}

ComplexMap sum_inclusion_left(const BasedComplex& a, const BasedComplex& b) {
  return inclusion_by_name(a, direct_sum(a, b), wrap_left);
}

ComplexMap sum_inclusion_right(const BasedComplex& a, const BasedComplex& b) {
  return inclusion_by_name(b, direct_sum(a, b), wrap_right);
}

std::map<int, std::size_t> graded_counts(const BasedComplex& c) {
  std::map<int, std::size_t> out;
  for (int q = 0; q <= c.top_degree(); ++q) {
    if (c.count(q) > 0) out[q] = c.count(q);
  }
  return out;
}

bool equal_presentation(const BasedComplex& a, const BasedComplex& b) {
  if (graded_counts(a) != graded_counts(b)) return false;
  for (int q = 0; q <= a.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < a.count(q); ++i) {
      if (q == 0 ? a.aug(i) != b.aug(i) : !(a.d(q, i).terms().size() == b.d(q, i).terms().size() &&
                                            std::equal(a.d(q, i).terms().begin(), a.d(q, i).terms().end(),
                                                       b.d(q, i).terms().begin()))) {
        return false;
      }
    }
  }
  return true;
}

CheckReport verify_mutually_inverse(const ComplexMap& f, const ComplexMap& g) {
  if (!(f.target() == g.source()) || !(g.target() == f.source())) {
    throw Error(ErrorCode::kSourceTargetMismatch, "maps do not form a round trip");
  }
  CheckReport r;
  auto check = [&r](const std::string& label, const ComplexMap& round) {
    const BasedComplex& c = round.source();
    for (int q = 0; q <= c.top_degree(); ++q) {
      for (std::uint32_t i = 0; i < c.count(q); ++i) {
        if (!(round.image(q, i) == Chain::basis(q, i))) {
          r.fail(label, c.name(q, i).str() + " -> " + c.format(round.image(q, i)));
          return;
        }
      }
    }
    r.pass(label);
  };
  check("FIRST_THEN_SECOND_IS_ID", compose(f, g));
  check("SECOND_THEN_FIRST_IS_ID", compose(g, f));
  return r;
}

Renamed rename(const BasedComplex& c, const std::function<Name(int, const Name&)>& fn) {
  std::vector<std::vector<Name>> fresh(std::max(0, c.top_degree() + 1));
  ComplexBuilder builder;
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) fresh[q].push_back(fn(q, c.name(q, i)));
  }
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      if (q == 0) {
        builder.vertex(fresh[0][i], c.aug(i));
      } else {
        NamedChain bd;
        for (const Term& t : c.d(q, i).terms()) bd.emplace_back(fresh[q - 1][t.index], t.coeff);
        builder.cell(q, fresh[q][i], std::move(bd));
      }
    }
  }
  BasedComplex out = builder.build();
  MapBuilder fwd(c, out);
  MapBuilder bwd(out, c);
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      std::uint32_t j = out.index_of(q, fresh[q][i]);
      fwd.set(q, i, Chain::basis(q, j));
      bwd.set(q, j, Chain::basis(q, i));
    }
  }
  return {out, fwd.build(), bwd.build()};
}

Renamed rename(const BasedComplex& c, const std::map<Name, Name>& table) {
  return rename(c, [&table](int, const Name& n) {
    auto it = table.find(n);
    if (it == table.end()) throw Error(ErrorCode::kMalformed, "rename table misses " + n.str());
    return it->second;
  });
}

std::optional<ComplexMap> invert_bijection(const ComplexMap& f) {
  const BasedComplex& s = f.source();
  const BasedComplex& t = f.target();
  if (graded_counts(s) != graded_counts(t)) return std::nullopt;
  MapBuilder mb(t, s);
  for (int q = 0; q <= s.top_degree(); ++q) {
    std::vector<bool> hit(t.count(q), false);
    for (std::uint32_t i = 0; i < s.count(q); ++i) {
      const Chain& img = f.image(q, i);
      if (img.size() != 1 || img.terms()[0].coeff != 1 || hit[img.terms()[0].index]) return std::nullopt;
      hit[img.terms()[0].index] = true;
      mb.set(q, img.terms()[0].index, Chain::basis(q, i));
    }
  }
  return mb.build();
}

ComplexMap positional_iso(const BasedComplex& a, const BasedComplex& b) {
  if (!equal_presentation(a, b)) {
    throw Error(ErrorCode::kSourceTargetMismatch, "positional iso between different presentations");
  }
  MapBuilder mb(a, b);
  for (int q = 0; q <= a.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < a.count(q); ++i) mb.set(q, i, Chain::basis(q, i));
  }
  return mb.build();
}

BasedComplex coproduct(const std::vector<std::pair<std::string, BasedComplex>>& parts) {
  ComplexBuilder builder;
  for (const auto& [tag, c] : parts) {
    copy_into(builder, c, [&tag](const Name& n) { return tagged(tag, n); });
  }
  return builder.build();
}

BasedComplex map_differential(const BasedComplex& c,
                              const std::function<Chain(int, std::uint32_t, const Chain&)>& fn) {
  ComplexBuilder builder;
  for (int q = 0; q <= c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      if (q == 0) builder.vertex(c.name(0, i), c.aug(i));
      else builder.cell(q, c.name(q, i), to_named(c, fn(q, i, c.d(q, i))));
    }
  }
  return builder.build();
}

NamedChain to_named(const BasedComplex& c, const Chain& x) {
  NamedChain out;
  for (const Term& t : x.terms()) out.emplace_back(c.name(x.degree(), t.index), t.coeff);
  return out;
}

BasedComplex truncate_top(const BasedComplex& c) {
  if (c.top_degree() < 0) throw Error(ErrorCode::kEmpty, "truncating the zero complex");
  ComplexBuilder builder;
  for (int q = 0; q < c.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      if (q == 0) builder.vertex(c.name(0, i), c.aug(i));
      else builder.cell(q, c.name(q, i), named(c, c.d(q, i), [](const Name& n) { return n; }));
    }
  }
  return builder.build();
}

ComplexMap truncation_inclusion(const BasedComplex& c) {
  BasedComplex t = truncate_top(c);
  return inclusion_by_name(t, c, [](const Name& n) { return n; });
}

}  // namespace steinerlab
