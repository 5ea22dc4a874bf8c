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

#include "cutstrength/sweep.h"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "cutstrength/errors.h"
#include "cutstrength/lattice_geometry.h"
#include "cutstrength/probability_bounds.h"

namespace cutstrength {
namespace {

constexpr size_t kMaxAxisValues = 1'000'000;

std::vector<Rational> Values(const GridSpec& grid, const std::string& name,
                             const Rational& lo, const Rational& hi) {
  auto it = grid.axes.find(name);
  if (it != grid.axes.end()) return it->second.Expand();
  return Axis::Range(lo, hi, grid.step).Expand();
}

void CheckAxisNames(const GridSpec& grid,
                    std::initializer_list<std::string_view> names,
                    Family family) {
  for (const auto& [name, axis] : grid.axes) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ValidationError("parameter '" + name + "' does not belong to the " +
                            std::string(ToString(family)) + " family");
    }
  }
}

std::string Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kType2:
      return "type2";
    case Family::kQuadrilateral:
      return "quadrilateral";
    case Family::kType3:
      return "type3";
  }
  return "?";
}

Family ParseFamily(std::string_view text) {
  if (text == "type2") return Family::kType2;
  if (text == "quadrilateral" || text == "quad") return Family::kQuadrilateral;
  if (text == "type3") return Family::kType3;
  throw ValidationError("unknown family '" + std::string(text) +
                        "' (expected type2, quadrilateral or type3)");
}

Axis Axis::List(std::vector<Rational> values) {
  if (values.empty()) throw ValidationError("axis value list is empty");
  Axis a;
  a.values = std::move(values);
  return a;
}

Axis Axis::Range(Rational lo, Rational hi, Rational step) {
  if (step <= 0) throw ValidationError("grid step must be > 0");
  Axis a;
  a.lo = std::move(lo);
  a.hi = std::move(hi);
  a.step = std::move(step);
  return a;
}

Axis Axis::Parse(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    std::vector<Rational> parts;
    size_t start = 0;
    while (true) {
      const size_t colon = text.find(':', start);
      parts.push_back(ParseRational(Trim(text.substr(start, colon - start))));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3) {
      throw ValidationError("axis range must be lo:hi:step, got '" +
                            std::string(text) + "'");
    }
    return Range(parts[0], parts[1], parts[2]);
  }
  std::vector<Rational> values;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    values.push_back(ParseRational(Trim(text.substr(start, comma - start))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return List(std::move(values));
}

std::vector<Rational> Axis::Expand() const {
  if (!step) return values;
  std::vector<Rational> out;
  for (Rational v = *lo; v <= *hi; v += *step) {
    if (out.size() >= kMaxAxisValues) {
      throw ValidationError("axis has more than 1000000 values");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<GridRow> SweepGrid(Family family, const GridSpec& grid,
                               const Rational& z, int64_t samples,
                               uint64_t seed) {
  if (z <= 1) throw ValidationError("z must be > 1, got " + ToString(z));
  if (grid.step <= 0) throw ValidationError("grid step must be > 0");
  if (samples < 0) throw ValidationError("samples must be >= 0");
  const Rational& step = grid.step;
  std::vector<GridRow> rows;

  auto add_body = [&](std::vector<std::pair<std::string, Rational>> params,
                      const std::function<LatticeFreeBody()>& make) {
    std::optional<LatticeFreeBody> body;
    try {
      body = make();
    } catch (const ValidationError&) {
      return;
    }
    GridRow row;
    row.params = std::move(params);
    row.w = LatticeWidth(*body);
    row.z = z;
    row.bound = ClosedFormLower(*body, z);
    if (samples > 0) row.mc = MonteCarloLower(*body, z, samples, seed);
    rows.push_back(std::move(row));
  };

  switch (family) {
    case Family::kType2: {
      CheckAxisNames(grid, {"w"}, family);
      for (const Rational& w : Values(grid, "w", 1 + step, Rational(2))) {
        if (w <= 1 || w > 2) continue;
        GridRow row;
        row.params = {{"w", w}};
        row.w = w;
        row.z = z;
        row.bound = PT2Lower(z, w);
        if (samples > 0) {
          // The Type2 triangle with apex (1/2, w) has width w for w <= 2.
          row.mc = MonteCarloLower(LatticeFreeBody::Type2(Rational(1, 2), w), z,
                                   samples, seed);
        }
        rows.push_back(std::move(row));
      }
      break;
    }
    case Family::kQuadrilateral: {
      CheckAxisNames(grid, {"a1", "a2", "b1", "b2"}, family);
      for (const Rational& a1 : Values(grid, "a1", step, 1 - step)) {
        for (const Rational& b1 : Values(grid, "b1", a1, 1 - step)) {
          for (const Rational& a2 : Values(grid, "a2", 1 + step, 2 - step)) {
            for (const Rational& b2 : Values(grid, "b2", -(a2 - 1), -step)) {
              add_body({{"a1", a1}, {"a2", a2}, {"b1", b1}, {"b2", b2}}, [&] {
                return LatticeFreeBody::Quadrilateral(a1, a2, b1, b2);
              });
            }
          }
        }
      }
      break;
    }
    case Family::kType3: {
      CheckAxisNames(grid, {"a1", "a2", "b1"}, family);
      const auto a1s = grid.axes.count("a1")
                           ? grid.axes.at("a1").Expand()
                           : Axis::Range(3, 10, 1).Expand();
      for (const Rational& a1 : a1s) {
        for (const Rational& a2 : Values(grid, "a2", step, 1 - step)) {
          for (const Rational& b1 : Values(grid, "b1", step, 1 - step)) {
            add_body({{"a1", a1}, {"a2", a2}, {"b1", b1}},
                     [&] { return LatticeFreeBody::Type3(a1, a2, b1); });
          }
        }
      }
      break;
    }
  }
  if (rows.empty()) throw ValidationError("grid contains no valid body");
  std::stable_sort(rows.begin(), rows.end(),
                   [](const GridRow& a, const GridRow& b) { return a.w > b.w; });
  return rows;
}

void WriteCsv(const std::vector<GridRow>& rows, std::ostream& out) {
  out << "params,w,z,bound,mc_estimate,mc_stderr,samples,seed\n";
  for (const GridRow& row : rows) {
    for (size_t i = 0; i < row.params.size(); ++i) {
      if (i > 0) out << ';';
      out << row.params[i].first << '=' << ToString(row.params[i].second);
    }
    out << ',' << ToString(row.w) << ',' << ToString(row.z) << ','
        << ToString(row.bound) << ',';
    if (row.mc) {
      out << FormatDouble(row.mc->estimate) << ','
          << FormatDouble(row.mc->std_error) << ',' << row.mc->samples << ','
          << row.mc->seed;
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

}  // namespace cutstrength
