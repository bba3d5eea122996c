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

#include "steinerlab/io.hpp"

#include <charconv>

#include <json.hpp>

namespace steinerlab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json terms_json(const BasedComplex& c, const Chain& x) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : x.terms()) {
    terms.push_back({{"generator", c.name(x.degree(), t.index).str()}, {"coeff", std::to_string(t.coeff)}});
  }
  return terms;
}

ordered_json complex_json(const BasedComplex& c) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  ordered_json degrees = ordered_json::array();
  ordered_json diff = ordered_json::array();
  ordered_json aug = ordered_json::array();
  for (int q = 0; q <= c.top_degree(); ++q) {
    ordered_json names = ordered_json::array();
    for (std::uint32_t i = 0; i < c.count(q); ++i) {
      const std::string name = c.name(q, i).str();
      names.push_back(name);
      if (q == 0) {
        aug.push_back({{"generator", name}, {"value", std::to_string(c.aug(i))}});
      } else {
        diff.push_back({{"generator", name}, {"terms", terms_json(c, c.d(q, i))}});
      }
    }
    degrees.push_back({{"degree", q}, {"generators", std::move(names)}});
  }
  doc["degrees"] = std::move(degrees);
  doc["differential"] = std::move(diff);
  doc["augmentation"] = std::move(aug);
  return doc;
}

[[noreturn]] void fail_at(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::kParseError, where + ": " + why);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail_at(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(where, std::string("missing field '") + key + "'");
  return *it;
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) fail_at(where + "/" + key, "expected an array");
  return v;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) fail_at(where, "expected a string");
  return v.get<std::string>();
}

Name name_at(const json& v, const std::string& where) {
  try {
    return Name::parse(string_at(v, where));
  } catch (const Error& e) {
    fail_at(where, e.what());
  }
}

Coeff coeff_at(const json& v, const std::string& where) {
  const std::string s = string_at(v, where);
  Coeff out = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec == std::errc::result_out_of_range) fail_at(where, "coefficient '" + s + "' exceeds 64 bits");
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) fail_at(where, "bad coefficient '" + s + "'");
  return out;
}

NamedChain terms_at(const json& entry, const std::string& where) {
  const json& terms = array_field(entry, "terms", where);
  NamedChain out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string at = where + "/terms/" + std::to_string(k);
    out.emplace_back(name_at(field(terms[k], "generator", at), at + "/generator"),
                     coeff_at(field(terms[k], "coeff", at), at + "/coeff"));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail_at("byte " + std::to_string(e.byte), e.what());
  }
}

BasedComplex complex_from(const json& doc, const std::string& where, bool validate = true) {
  const json& version = field(doc, "format_version", where);
  if (string_at(version, where + "/format_version") != kFormatVersion) {
    fail_at(where + "/format_version", "unsupported version " + version.dump());
  }
  std::map<Name, int> degree_of;
  const json& degrees = array_field(doc, "degrees", where);
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const std::string at = where + "/degrees/" + std::to_string(k);
    const json& q = field(degrees[k], "degree", at);
    if (!q.is_number_integer() || q.get<int>() < 0) fail_at(at + "/degree", "expected a non-negative integer");
    const json& gens = array_field(degrees[k], "generators", at);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string gat = at + "/generators/" + std::to_string(g);
      if (!degree_of.emplace(name_at(gens[g], gat), q.get<int>()).second) fail_at(gat, "duplicate generator");
    }
  }
  std::map<Name, NamedChain> boundary;
  const json& diff = array_field(doc, "differential", where);
  for (std::size_t k = 0; k < diff.size(); ++k) {
    const std::string at = where + "/differential/" + std::to_string(k);
    boundary[name_at(field(diff[k], "generator", at), at + "/generator")] = terms_at(diff[k], at);
  }
  std::map<Name, Coeff> aug;
  const json& augs = array_field(doc, "augmentation", where);
  for (std::size_t k = 0; k < augs.size(); ++k) {
    const std::string at = where + "/augmentation/" + std::to_string(k);
    aug[name_at(field(augs[k], "generator", at), at + "/generator")] = coeff_at(field(augs[k], "value", at), at + "/value");
  }
  ComplexBuilder b;
  for (const auto& [name, q] : degree_of) {
    if (q == 0) {
      auto it = aug.find(name);
      if (it == aug.end()) fail_at(where + "/augmentation", "no value for vertex " + name.str());
      b.vertex(name, it->second);
    } else {
      auto it = boundary.find(name);
      b.cell(q, name, it == boundary.end() ? NamedChain{} : it->second);
    }
  }
  for (const auto& [name, _] : boundary) {
    auto it = degree_of.find(name);
    if (it == degree_of.end() || it->second == 0) fail_at(where + "/differential", "unexpected entry for " + name.str());
  }
  for (const auto& [name, _] : aug) {
    auto it = degree_of.find(name);
    if (it == degree_of.end() || it->second != 0) fail_at(where + "/augmentation", "unexpected entry for " + name.str());
  }
  BasedComplex c;
  try {
    c = b.build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTooLarge || e.code() == ErrorCode::kOverflow) throw;
    fail_at(where, e.what());
  }
  if (!validate) return c;
  CheckReport report = validate_complex(c);
  if (!report.passed()) throw ValidationError(std::move(report));
  return c;
}

}  // namespace

std::string emit(const BasedComplex& c) { return complex_json(c).dump(2) + "\n"; }

std::string emit(const ComplexMap& f) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["source"] = complex_json(f.source());
  doc["target"] = complex_json(f.target());
  ordered_json assignment = ordered_json::array();
  const BasedComplex& s = f.source();
  for (int q = 0; q <= s.top_degree(); ++q) {
    for (std::uint32_t i = 0; i < s.count(q); ++i) {
      assignment.push_back({{"generator", s.name(q, i).str()}, {"terms", terms_json(f.target(), f.image(q, i))}});
    }
  }
  doc["assignment"] = std::move(assignment);
  return doc.dump(2) + "\n";
}

BasedComplex parse_complex(std::string_view text, bool validate) {
  return complex_from(parse_json(text), "", validate);
}

ComplexMap parse_map(std::string_view text) {
  const json doc = parse_json(text);
  const json& version = field(doc, "format_version", "");
  if (string_at(version, "/format_version") != kFormatVersion) fail_at("/format_version", "unsupported version");
  BasedComplex source = complex_from(field(doc, "source", ""), "/source");
  BasedComplex target = complex_from(field(doc, "target", ""), "/target");
  MapBuilder mb(source, target);
  const json& assignment = array_field(doc, "assignment", "");
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    const std::string at = "/assignment/" + std::to_string(k);
    Name g = name_at(field(assignment[k], "generator", at), at + "/generator");
    NamedChain terms = terms_at(assignment[k], at);
    try {
      mb.set(g, terms);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kOverflow) throw;
      fail_at(at, e.what());
    }
  }
  ComplexMap f = mb.build();
  CheckReport report = validate_map(f);
  if (!report.passed()) throw ValidationError(std::move(report));
  return f;
}

std::string report_json(const CheckReport& report) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks()) {
    ordered_json entry{{"name", c.name}, {"passed", c.passed}};
    if (c.witness) entry["witness"] = *c.witness;
    checks.push_back(std::move(entry));
  }
  ordered_json doc{{"passed", report.passed()}, {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

}  // namespace steinerlab
