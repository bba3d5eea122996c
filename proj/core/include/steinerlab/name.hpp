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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace steinerlab {

// Structured generator name: a tag with an ordered list of child names.
//
// Leaves carry the primitive tokens (cube words over {0,1,i}, oriental vertex
// lists such as "0.1.2", suspension poles). Composite constructions wrap their
// inputs, e.g. L(x) / R(y) for direct-sum summands, J(x,y) for the mixed part
// of a join, S(x) for a suspended generator and T(x,y) for a tensor pair.
//
// Text form: `tag` for leaves, `tag(kid,kid,...)` otherwise; the empty leaf
// (the empty cube word) renders as `*`.
class Name {
 public:
  Name() = default;
  explicit Name(std::string tag) : tag_(std::move(tag)) {}
  Name(std::string tag, std::vector<Name> kids) : tag_(std::move(tag)), kids_(std::move(kids)) {}

  static Name word(std::string_view letters) { return Name(std::string(letters)); }
  static Name parse(std::string_view text);

  const std::string& tag() const { return tag_; }
  const std::vector<Name>& kids() const { return kids_; }
  bool is_leaf() const { return kids_.empty(); }
  // A leaf spelled over {0,1,i}; cube generators are words.
  bool is_word() const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const Name& a, const Name& b);
  friend bool operator==(const Name& a, const Name& b) = default;

 private:
  std::string tag_;
  std::vector<Name> kids_;
};

Name tagged(std::string tag, const Name& kid);
Name tagged(std::string tag, const Name& a, const Name& b);

}  // namespace steinerlab
