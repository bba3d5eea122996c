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

#include "steinerlab/name.hpp"

#include <algorithm>

#include "steinerlab/errors.hpp"

namespace steinerlab {

namespace {

bool is_reserved(char c) {
  return c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '"';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Name parse_all() {
    Name n = parse_name();
    if (pos_ != text_.size()) fail("trailing characters");
    return n;
  }

 private:
  Name parse_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_reserved(text_[pos_])) ++pos_;
    std::string tag(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (tag.empty()) fail("composite name without tag");
      ++pos_;
      std::vector<Name> kids;
      kids.push_back(parse_name());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        kids.push_back(parse_name());
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return Name(std::move(tag), std::move(kids));
    }
    if (tag.empty()) fail("empty name token");
    if (tag == "*") tag.clear();
    return Name(std::move(tag));
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError,
                "name '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Name Name::parse(std::string_view text) { return Parser(text).parse_all(); }

bool Name::is_word() const {
  return kids_.empty() &&
         std::all_of(tag_.begin(), tag_.end(), [](char c) { return c == '0' || c == '1' || c == 'i'; });
}

std::string Name::str() const {
  if (kids_.empty()) return tag_.empty() ? std::string("*") : tag_;
  std::string out = tag_ + "(";
  for (std::size_t k = 0; k < kids_.size(); ++k) {
    if (k) out += ',';
    out += kids_[k].str();
  }
  out += ')';
  return out;
}

std::strong_ordering operator<=>(const Name& a, const Name& b) {
  if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.kids_.begin(), a.kids_.end(), b.kids_.begin(),
                                                b.kids_.end());
}

Name tagged(std::string tag, const Name& kid) { return Name(std::move(tag), {kid}); }

Name tagged(std::string tag, const Name& a, const Name& b) { return Name(std::move(tag), {a, b}); }

}  // namespace steinerlab
