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

#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinerlab/errors.hpp"
#include "steinerlab/io.hpp"
#include "steinerlab/ops.hpp"
#include "steinerlab/retraction.hpp"
#include "steinerlab/shapes.hpp"
#include "steinerlab/steiner.hpp"
#include "suite.hpp"

namespace steinerlab::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::string out_file;
};

int to_int(const std::string& s, const char* what) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v < 0) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + s + "'");
  }
  return v;
}

void expect_args(const std::vector<std::string>& params, std::size_t count, const std::string& usage) {
  if (params.size() != count) throw UsageError("usage: " + usage);
}

std::string read_input(Context& ctx, const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  buf << f.rdbuf();
  return buf.str();
}

void write_output(Context& ctx, const std::string& text) {
  if (ctx.out_file.empty() || ctx.out_file == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream f(ctx.out_file, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + ctx.out_file);
}

int emit_report(Context& ctx, const CheckReport& report) {
  write_output(ctx, ctx.json ? report_json(report) : report.to_text());
  return report.passed() ? 0 : 1;
}

Family parse_family(const std::string& s) {
  if (s == "cube") return Family::kCube;
  if (s == "oriental") return Family::kOriental;
  throw UsageError("family must be cube or oriental, got '" + s + "'");
}

// ------------------------------------------------------------------ gen

BasedComplex generate(const std::string& shape, const std::vector<std::string>& params) {
  using Maker = BasedComplex (*)(int);
  static const std::map<std::string, Maker> by_size = {
      {"disk", disk}, {"boundary-disk", boundary_disk}, {"cube", cube}, {"oriental", oriental},
      {"antioriental", antioriental}};
  if (auto it = by_size.find(shape); it != by_size.end()) {
    expect_args(params, 1, "gen " + shape + " N");
    return it->second(to_int(params[0], "N"));
  }
  if (shape == "theta") {
    expect_args(params, 1, "gen theta DIMS[/GLUE[/SIDES]]");
    return theta(parse_theta_spec(params[0]));
  }
  if (shape == "wedge") {
    expect_args(params, 2, "gen wedge N M");
    const int a = to_int(params[0], "N");
    const int b = to_int(params[1], "M");
    return wedge(oriental(a), subset_name({a}), oriental(b), subset_name({0}));
  }
  throw UsageError("unknown shape '" + shape + "'");
}

// ------------------------------------------------------------------ op

BasedComplex operate(Context& ctx, const std::string& op, const std::vector<std::string>& inputs) {
  static const std::map<std::string, std::function<BasedComplex(const BasedComplex&, const BasedComplex&)>> binary = {
      {"tensor", gray_tensor}, {"join", join}, {"antijoin", antijoin}};
  static const std::map<std::string, std::function<BasedComplex(const BasedComplex&)>> unary = {
      {"susp", suspension}, {"antisusp", antisuspension}, {"op", dual_op}, {"co", dual_co}, {"coop", dual_coop}};
  auto load = [&ctx](const std::string& path) { return parse_complex(read_input(ctx, path)); };
  if (auto it = binary.find(op); it != binary.end()) {
    expect_args(inputs, 2, "op " + op + " FILE FILE");
    if (inputs[0] == "-" && inputs[1] == "-") throw UsageError("only one input may come from standard input");
    return it->second(load(inputs[0]), load(inputs[1]));
  }
  if (auto it = unary.find(op); it != unary.end()) {
    expect_args(inputs, 1, "op " + op + " FILE");
    return it->second(load(inputs[0]));
  }
  throw UsageError("unknown operation '" + op + "'");
}

// ------------------------------------------------------------------ info / atoms

int info(Context& ctx, const BasedComplex& c) {
  const CheckReport report = validate_complex(c);
  if (ctx.json) {
    ordered_json counts = ordered_json::object();
    for (const auto& [q, k] : graded_counts(c)) counts[std::to_string(q)] = k;
    ordered_json doc{{"top_degree", c.top_degree()},
                     {"counts", counts},
                     {"total", c.total()},
                     {"validation", ordered_json::parse(report_json(report))}};
    write_output(ctx, doc.dump(2) + "\n");
  } else {
    std::string text = "top degree " + std::to_string(c.top_degree()) + "\n";
    for (const auto& [q, k] : graded_counts(c)) text += "degree " + std::to_string(q) + ": " + std::to_string(k) + "\n";
    text += "total " + std::to_string(c.total()) + "\n" + report.to_text();
    write_output(ctx, text);
  }
  return report.passed() ? 0 : 1;
}

ordered_json chain_json(const BasedComplex& c, const Chain& x) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : x.terms()) {
    terms.push_back({{"generator", c.name(x.degree(), t.index).str()}, {"coeff", std::to_string(t.coeff)}});
  }
  return terms;
}

int atoms(Context& ctx, const BasedComplex& c, const std::string& only) {
  std::vector<std::pair<int, Name>> gens;
  if (!only.empty()) {
    Name g = Name::parse(only);
    auto q = c.degree_of(g);
    if (!q) throw UsageError("no generator " + only);
    gens.emplace_back(*q, g);
  } else {
    for (int q = 0; q <= c.top_degree(); ++q) {
      for (const Name& g : c.generators(q)) gens.emplace_back(q, g);
    }
  }
  ordered_json list = ordered_json::array();
  std::string text;
  int status = 0;
  for (const auto& [q, g] : gens) {
    try {
      CellTable t = atom_table(c, g);
      const bool valid = validate_table(t).passed();
      if (!valid) status = 1;
      if (ctx.json) {
        ordered_json levels = ordered_json::array();
        for (int k = t.dim; k >= 0; --k) {
          levels.push_back({{"level", k}, {"minus", chain_json(c, t.minus[k])}, {"plus", chain_json(c, t.plus[k])}});
        }
        list.push_back({{"generator", g.str()}, {"dim", t.dim}, {"valid", valid}, {"levels", levels}});
      } else {
        text += "atom " + g.str() + (valid ? "" : "  (invalid)") + "\n" + t.format();
      }
    } catch (const Error& e) {
      status = 1;
      if (ctx.json) {
        list.push_back({{"generator", g.str()}, {"error", e.what()}});
      } else {
        text += "atom " + g.str() + "\n  " + e.what() + "\n";
      }
    }
  }
  write_output(ctx, ctx.json ? ordered_json{{"atoms", list}}.dump(2) + "\n" : text);
  return status;
}

// ------------------------------------------------------------------ check / verify-retract

int check(Context& ctx, const std::string& what, const std::vector<std::string>& params) {
  if (what == "steiner") {
    expect_args(params, 1, "check steiner FILE");
    return emit_report(ctx, is_steiner(parse_complex(read_input(ctx, params[0]), false)));
  }
  if (what == "boundary-decomp" || what == "top-cell") {
    expect_args(params, 2, "check " + what + " cube|oriental N");
    const Family f = parse_family(params[0]);
    const int k = to_int(params[1], "N");
    if (k < 2) throw UsageError("N must be at least 2");
    return emit_report(ctx, what == "top-cell" ? top_cell_decomposition_check(f, k) : boundary_decomposition_check(f, k));
  }
  if (what == "identities") {
    expect_args(params, 0, "check identities");
    return emit_report(ctx, identities_battery(SuiteBounds{}));
  }
  throw UsageError("unknown check '" + what + "'");
}

int verify_retract(Context& ctx, const std::string& what, const std::vector<std::string>& params) {
  CheckReport report;
  if (what == "xi" || what == "q-cube" || what == "ell") {
    expect_args(params, 1, "verify-retract " + what + " N");
    const int k = to_int(params[0], "N");
    RetractionPair pair = what == "xi" ? section_xi(k) : what == "q-cube" ? section_q_cube(k) : section_ell(k);
    report = verify_retraction(pair);
  } else if (what == "zeta") {
    expect_args(params, 2, "verify-retract zeta N M");
    report = verify_retraction({zeta(to_int(params[0], "N"), to_int(params[1], "M")),
                                theta_left_inverse(to_int(params[0], "N"), to_int(params[1], "M"))});
  } else if (what == "theta") {
    expect_args(params, 1, "verify-retract theta DIMS[/GLUE]");
    report = theta_retract_into_oriental(parse_theta_spec(params[0])).report;
  } else {
    throw UsageError("unknown retraction '" + what + "'");
  }
  return emit_report(ctx, report);
}

// ------------------------------------------------------------------ suite

int suite(Context& ctx) {
  const std::vector<SuiteItem> items = run_suite();
  bool all = true;
  if (ctx.json) {
    ordered_json rows = ordered_json::array();
    for (const SuiteItem& item : items) {
      all = all && item.report.passed();
      rows.push_back({{"criterion", item.id},
                      {"title", item.title},
                      {"report", ordered_json::parse(report_json(item.report))}});
    }
    write_output(ctx, ordered_json{{"passed", all}, {"criteria", rows}}.dump(2) + "\n");
    return all ? 0 : 1;
  }
  std::ostringstream text;
  text << "criterion  result  checks  title\n";
  for (const SuiteItem& item : items) {
    all = all && item.report.passed();
    text << std::left << std::setw(11) << item.id << std::setw(8) << (item.report.passed() ? "pass" : "FAIL")
         << std::setw(8) << item.report.checks().size() << item.title << "\n";
  }
  for (const SuiteItem& item : items) {
    for (const CheckResult& c : item.report.checks()) {
      if (!c.passed) text << "  [" << item.id << "] FAIL " << c.name << "  " << c.witness.value_or("") << "\n";
    }
  }
  text << (all ? "RESULT pass\n" : "RESULT fail\n");
  write_output(ctx, text.str());
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Augmented directed complexes: shapes, operations and verification", "steinerlab"};
  app.require_subcommand(1);
  Context ctx{in, out, err, false, {}};

  std::string first;
  std::vector<std::string> rest;
  std::string only_gen;
  std::function<int()> action;

  auto out_option = [&ctx](CLI::App* sub) { sub->add_option("--out", ctx.out_file, "Write to FILE instead of stdout"); };
  auto json_flag = [&ctx](CLI::App* sub) { sub->add_flag("--json", ctx.json, "Machine-readable output"); };

  CLI::App* gen = app.add_subcommand("gen", "Emit a shape: disk|boundary-disk|cube|oriental|antioriental|theta|wedge");
  gen->add_option("shape", first)->required();
  gen->add_option("params", rest);
  out_option(gen);
  gen->callback([&] { action = [&] { write_output(ctx, emit(generate(first, rest))); return 0; }; });

  CLI::App* op = app.add_subcommand("op", "Apply tensor|join|antijoin|susp|antisusp|op|co|coop to input files");
  op->add_option("operation", first)->required();
  op->add_option("inputs", rest);
  out_option(op);
  op->callback([&] { action = [&] { write_output(ctx, emit(operate(ctx, first, rest))); return 0; }; });

  CLI::App* inf = app.add_subcommand("info", "Graded counts, top degree and validation summary");
  inf->add_option("file", first)->required();
  json_flag(inf);
  out_option(inf);
  inf->callback([&] { action = [&] { return info(ctx, parse_complex(read_input(ctx, first), false)); }; });

  CLI::App* at = app.add_subcommand("atoms", "Print atom tables");
  at->add_option("file", first)->required();
  at->add_option("--gen", only_gen, "Only this generator");
  json_flag(at);
  out_option(at);
  at->callback([&] { action = [&] { return atoms(ctx, parse_complex(read_input(ctx, first), false), only_gen); }; });

  CLI::App* chk = app.add_subcommand("check", "Run steiner|boundary-decomp|top-cell|identities");
  chk->add_option("suite", first)->required();
  chk->add_option("params", rest);
  json_flag(chk);
  out_option(chk);
  chk->callback([&] { action = [&] { return check(ctx, first, rest); }; });

  CLI::App* vr = app.add_subcommand("verify-retract", "Build and verify xi|q-cube|ell|zeta|theta");
  vr->add_option("pair", first)->required();
  vr->add_option("params", rest);
  json_flag(vr);
  out_option(vr);
  vr->callback([&] { action = [&] { return verify_retract(ctx, first, rest); }; });

  CLI::App* su = app.add_subcommand("suite", "Run the full verification battery");
  json_flag(su);
  out_option(su);
  su->callback([&] { action = [&] { return suite(ctx); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: invalid input\n" << e.report().to_text();
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kBadDims:
      case ErrorCode::kUnsupportedSpec:
      case ErrorCode::kTooLarge:
      case ErrorCode::kBadBasepoint:
        return 2;
      default:
        return 1;
    }
  }
}

}  // namespace steinerlab::cli
