// Copyright 2026 The cutstrength Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cutstrength/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cutstrength/body_json.h"
#include "cutstrength/cut_engine.h"
#include "cutstrength/errors.h"
#include "cutstrength/lattice_geometry.h"
#include "cutstrength/monte_carlo.h"
#include "cutstrength/probability_bounds.h"
#include "cutstrength/sweep.h"

namespace cutstrength {
namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string body;
  std::string body_file;
  std::string z;
  std::string f;
  int n = kDefaultClosureRadius;
  int64_t samples = kDefaultSamples;
  uint64_t seed = 0;
  std::string format;
  std::string output;
  std::string family;
  std::vector<std::string> grid;
  std::string step;
  std::string curve;
};

enum class Format { kJson, kCsv };

Format ResolveFormat(const Options& o, Format fallback) {
  if (o.format.empty()) return fallback;
  return o.format == "csv" ? Format::kCsv : Format::kJson;
}

BodyDescriptor LoadBody(const Options& o) {
  if (o.body.empty() && o.body_file.empty()) {
    throw UsageError("a body is required: pass --body or --body-file");
  }
  if (!o.body.empty()) return ParseBodyDescriptorText(o.body);
  std::ifstream in(o.body_file);
  if (!in) throw ValidationError("cannot read body file '" + o.body_file + "'");
  std::stringstream text;
  text << in.rdbuf();
  return ParseBodyDescriptorText(text.str());
}

Rational RequireZ(const Options& o) {
  if (o.z.empty()) throw UsageError("--z is required");
  return ParseRational(o.z);
}

Rational2 ParsePoint(const std::string& text) {
  const auto first = text.find_first_not_of(' ');
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json value;
    try {
      value = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw ValidationError("--f is not valid JSON: " + text);
    }
    return Rational2FromJson(value);
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ValidationError("--f must be a pair such as '[\"1/2\",\"1/3\"]' or "
                          "1/2,1/3");
  }
  return {ParseRational(text.substr(0, comma)),
          ParseRational(text.substr(comma + 1))};
}

std::string Decimal(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

void EmitJson(const ojson& value, std::ostream& out) {
  out << value.dump(2) << '\n';
}

void EmitCsv(const std::vector<std::string>& header,
             const std::vector<std::vector<std::string>>& rows,
             std::ostream& out) {
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

void CmdClassify(const Options& o, std::ostream& out) {
  const BodyDescriptor d = LoadBody(o);
  const BodyClass c = ClassifyDescriptor(d);
  if (ResolveFormat(o, Format::kJson) == Format::kCsv) {
    EmitCsv({"class"}, {{std::string(ToString(c))}}, out);
    return;
  }
  EmitJson(ojson{{"class", ToString(c)}}, out);
}

void CmdWidth(const Options& o, std::ostream& out) {
  const CanonicalForm form = ResolveBody(LoadBody(o));
  const Rational w = LatticeWidth(form.body);
  if (ResolveFormat(o, Format::kJson) == Format::kCsv) {
    EmitCsv({"w"}, {{ToString(w)}}, out);
    return;
  }
  EmitJson(ojson{{"body", BodyToJson(form.body)}, {"w", ToJson(w)}}, out);
}

void CmdStrength(const Options& o, std::ostream& out) {
  if (o.f.empty()) throw UsageError("--f is required");
  const CanonicalForm form = ResolveBody(LoadBody(o));
  const Rational2 f = form.map.Apply(ParsePoint(o.f));
  const StrengthReport r = Strength(form.body, f, o.n);
  const std::string split =
      r.chosen_split_normal
          ? "(" + std::to_string(r.chosen_split_normal->x1) + " " +
                std::to_string(r.chosen_split_normal->x2) + ")"
          : "";
  if (ResolveFormat(o, Format::kJson) == Format::kCsv) {
    EmitCsv({"region", "chosen_split", "t_bar", "t_N", "N"},
            {{r.region.ToString(), split, ToString(r.t_bar), ToString(*r.t_n),
              std::to_string(*r.n)}},
            out);
    return;
  }
  ojson j;
  j["body"] = BodyToJson(form.body);
  j["f"] = ToJson(f);
  j["region"] = r.region.ToString();
  j["chosen_split"] = r.chosen_split_normal ? ToJson(*r.chosen_split_normal)
                                            : ojson(nullptr);
  j["t_bar"] = ToJson(r.t_bar);
  j["t_N"] = ToJson(*r.t_n);
  j["N"] = *r.n;
  if (form.body.kind() == BodyKind::kType3) {
    j["secondary_width_ordering"] = form.body.type3().secondary_width_ordering;
  }
  EmitJson(j, out);
}

void CmdBound(const Options& o, std::ostream& out) {
  const CanonicalForm form = ResolveBody(LoadBody(o));
  const Rational z = RequireZ(o);
  const Rational value = ClosedFormLower(form.body, z);
  const PiecewiseBound bound = ClosedFormBound(form.body);
  if (ResolveFormat(o, Format::kJson) == Format::kCsv) {
    EmitCsv({"z", "bound"}, {{ToString(z), ToString(value)}}, out);
    return;
  }
  ojson terms = ojson::object();
  const std::vector<Rational> values = bound.TermValues(z);
  for (size_t i = 0; i < values.size(); ++i) {
    terms[bound.terms[i].regions] = ToJson(values[i]);
  }
  ojson j;
  j["body"] = BodyToJson(form.body);
  j["z"] = ToJson(z);
  j["bound"] = ToJson(value);
  j["bound_decimal"] = value.get_d();
  j["exact"] = form.body.kind() == BodyKind::kType1;
  j["area"] = ToJson(bound.area);
  j["region_integrals"] = terms;
  EmitJson(j, out);
}

void CmdMonteCarlo(const Options& o, std::ostream& out) {
  const CanonicalForm form = ResolveBody(LoadBody(o));
  const Rational z = RequireZ(o);
  const Rational closed = ClosedFormLower(form.body, z);
  const McEstimate mc = MonteCarloLower(form.body, z, o.samples, o.seed);
  const double gap = mc.estimate - closed.get_d();
  const double deviation = mc.std_error > 0 ? gap / mc.std_error : 0.0;
  if (ResolveFormat(o, Format::kJson) == Format::kCsv) {
    EmitCsv({"z", "closed_form", "estimate", "std_error", "samples", "seed"},
            {{ToString(z), ToString(closed), Decimal(mc.estimate),
              Decimal(mc.std_error), std::to_string(mc.samples),
              std::to_string(mc.seed)}},
            out);
    return;
  }
  ojson j;
  j["body"] = BodyToJson(form.body);
  j["z"] = ToJson(z);
  j["closed_form"] = ToJson(closed);
  j["closed_form_decimal"] = closed.get_d();
  j["estimate"] = mc.estimate;
  j["std_error"] = mc.std_error;
  j["deviation_std_errors"] = deviation;
  j["samples"] = mc.samples;
  j["seed"] = mc.seed;
  EmitJson(j, out);
}

void CmdSweep(const Options& o, bool samples_given, std::ostream& out) {
  if (o.family.empty()) throw UsageError("--family is required");
  const Family family = ParseFamily(o.family);
  const Rational z = RequireZ(o);
  GridSpec grid;
  if (!o.step.empty()) grid.step = ParseRational(o.step);
  for (const std::string& g : o.grid) {
    const auto eq = g.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--grid expects name=lo:hi:step or name=v1,v2,...");
    }
    grid.axes[g.substr(0, eq)] = Axis::Parse(g.substr(eq + 1));
  }
  const std::vector<GridRow> rows =
      SweepGrid(family, grid, z, samples_given ? o.samples : 0, o.seed);
  if (ResolveFormat(o, Format::kCsv) == Format::kCsv) {
    WriteCsv(rows, out);
    return;
  }
  ojson list = ojson::array();
  for (const GridRow& row : rows) {
    ojson params = ojson::object();
    for (const auto& [name, value] : row.params) params[name] = ToJson(value);
    ojson j;
    j["params"] = params;
    j["w"] = ToJson(row.w);
    j["z"] = ToJson(row.z);
    j["bound"] = ToJson(row.bound);
    if (row.mc) {
      j["mc_estimate"] = row.mc->estimate;
      j["mc_stderr"] = row.mc->std_error;
      j["samples"] = row.mc->samples;
      j["seed"] = row.mc->seed;
    }
    list.push_back(j);
  }
  EmitJson(list, out);
}

void CmdPlotData(const Options& o, std::ostream& out) {
  if (o.curve != "z2" && o.curve != "z32") {
    throw UsageError("--curve must be z2 or z32");
  }
  std::vector<std::vector<std::string>> rows;
  ojson list = ojson::array();
  for (int k = 101; k <= 200; ++k) {
    const Rational w(k, 100);
    const SpecialValuesResult v = SpecialValuesForWidth(w);
    const Rational& b = o.curve == "z2" ? v.upper_miss_at_2 : v.lower_hit_at_3_2;
    Rational wc = w;
    wc.canonicalize();
    rows.push_back({ToString(wc), ToString(b)});
    list.push_back(ojson{{"w", ToJson(wc)}, {"bound", ToJson(b)}});
  }
  if (ResolveFormat(o, Format::kCsv) == Format::kCsv) {
    EmitCsv({"w", "bound"}, rows, out);
    return;
  }
  EmitJson(list, out);
}

void AddBodyOptions(CLI::App* cmd, Options& o) {
  auto* body = cmd->add_option("--body", o.body, "Inline JSON body descriptor");
  auto* file = cmd->add_option("--body-file", o.body_file,
                               "Path to a JSON body descriptor");
  body->excludes(file);
  file->excludes(body);
}

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "Write output to this file");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Strength of planar lattice-free cuts relative to the split "
               "closure",
               "cutstrength"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Classify a body");
  auto* width = app.add_subcommand("width", "Lattice width of a body");
  auto* strength = app.add_subcommand("strength", "Strength at a point f");
  auto* bound = app.add_subcommand("bound", "Closed-form probability bound");
  auto* montecarlo = app.add_subcommand(
      "montecarlo", "Monte Carlo estimate beside the closed-form bound");
  auto* sweep = app.add_subcommand("sweep", "Closed-form bound over a grid");
  auto* plotdata = app.add_subcommand("plotdata", "Width curves at z=2, 3/2");

  for (auto* cmd : {classify, width, strength, bound, montecarlo}) {
    AddBodyOptions(cmd, o);
  }
  for (auto* cmd : {classify, width, strength, bound, montecarlo, sweep,
                    plotdata}) {
    AddCommon(cmd, o);
  }
  strength->add_option("--f", o.f, "Point f as '[\"p/q\",\"p/q\"]' or p/q,p/q");
  strength->add_option("--N", o.n, "Split-closure enumeration radius")
      ->check(CLI::Range(1, 50));
  for (auto* cmd : {bound, montecarlo, sweep}) {
    cmd->add_option("--z", o.z, "Strength threshold z > 1 as p/q");
  }
  CLI::Option* samples_opt = nullptr;
  for (auto* cmd : {montecarlo, sweep}) {
    auto* opt = cmd->add_option("--samples", o.samples, "Monte Carlo samples")
                    ->check(CLI::PositiveNumber);
    if (cmd == sweep) samples_opt = opt;
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
  }
  sweep->add_option("--family", o.family, "type2, quadrilateral or type3");
  sweep->add_option("--grid", o.grid,
                    "Parameter axis name=lo:hi:step or name=v1,v2,...");
  sweep->add_option("--step", o.step, "Default axis step as p/q");
  plotdata->add_option("--curve", o.curve, "z2 or z32");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    if (classify->parsed()) CmdClassify(o, buffer);
    if (width->parsed()) CmdWidth(o, buffer);
    if (strength->parsed()) CmdStrength(o, buffer);
    if (bound->parsed()) CmdBound(o, buffer);
    if (montecarlo->parsed()) CmdMonteCarlo(o, buffer);
    if (sweep->parsed()) CmdSweep(o, samples_opt->count() > 0, buffer);
    if (plotdata->parsed()) CmdPlotData(o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitValidation;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace cutstrength
