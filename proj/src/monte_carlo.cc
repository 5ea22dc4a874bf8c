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

#include "cutstrength/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "cutstrength/cut_engine.h"
#include "cutstrength/errors.h"
#include "table_strength.h"

namespace cutstrength {
namespace {

uint64_t Mix(uint64_t seed, uint64_t counter) {
  uint64_t x = seed * 0xD1B54A32D192ED03ULL + counter * 0x9E3779B97F4A7C15ULL +
               0x632BE59BD9B4E019ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double Unit(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1p-53; }

using Point = std::array<double, 2>;

struct Fan {
  std::vector<Point> vertices;  // counter-clockwise
  std::vector<double> cumulative;
};

Fan MakeFan(const LatticeFreeBody& body) {
  Fan fan;
  for (const Rational2& v : body.boundary()) {
    fan.vertices.push_back({v.x1.get_d(), v.x2.get_d()});
  }
  double total = 0;
  const Point& o = fan.vertices[0];
  for (size_t i = 1; i + 1 < fan.vertices.size(); ++i) {
    const Point& p = fan.vertices[i];
    const Point& q = fan.vertices[i + 1];
    total += 0.5 * ((p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]));
    fan.cumulative.push_back(total);
  }
  return fan;
}

size_t PickTriangle(const Fan& fan, double u) {
  const double target = u * fan.cumulative.back();
  const auto it =
      std::upper_bound(fan.cumulative.begin(), fan.cumulative.end(), target);
  return std::min<size_t>(it - fan.cumulative.begin(),
                          fan.cumulative.size() - 1);
}

Point Sample(const Fan& fan, uint64_t seed, int64_t index) {
  const uint64_t base = 3 * static_cast<uint64_t>(index);
  const size_t t = PickTriangle(fan, Unit(Mix(seed, base)));
  double u = Unit(Mix(seed, base + 1));
  double v = Unit(Mix(seed, base + 2));
  if (u + v > 1) {
    u = 1 - u;
    v = 1 - v;
  }
  const Point& o = fan.vertices[0];
  const Point& p = fan.vertices[t + 1];
  const Point& q = fan.vertices[t + 2];
  return {o[0] + u * (p[0] - o[0]) + v * (q[0] - o[0]),
          o[1] + u * (p[1] - o[1]) + v * (q[1] - o[1])};
}

struct DoublePiece {
  int region;
  std::vector<Point> ccw;
};

class Indicator {
 public:
  explicit Indicator(const LatticeFreeBody& body)
      : params_(internal::MakeTableParams<double>(
            body, [](const Rational& q) { return q.get_d(); })) {
    for (const Region& region : Regions(body)) {
      for (const Polygon& piece : region.pieces) {
        DoublePiece d{region.id.index, {}};
        for (const Rational2& v : piece) d.ccw.push_back({v.x1.get_d(), v.x2.get_d()});
        pieces_.push_back(std::move(d));
      }
    }
  }

  double Strength(const Point& f) const {
    const DoublePiece* best = nullptr;
    double best_margin = -INFINITY;
    for (const DoublePiece& piece : pieces_) {
      const double margin = Margin(piece.ccw, f);
      if (margin >= 0) {
        best = &piece;
        break;
      }
      if (margin > best_margin) {
        best_margin = margin;
        best = &piece;
      }
    }
    return internal::TableStrengthOf(params_, best->region, f[0], f[1]);
  }

 private:
  // Smallest signed edge distance; >= 0 inside the closed piece.
  static double Margin(const std::vector<Point>& ccw, const Point& f) {
    double margin = INFINITY;
    for (size_t i = 0; i < ccw.size(); ++i) {
      const Point& p = ccw[i];
      const Point& q = ccw[(i + 1) % ccw.size()];
      const double ex = q[0] - p[0], ey = q[1] - p[1];
      const double cross = ex * (f[1] - p[1]) - ey * (f[0] - p[0]);
      margin = std::min(margin, cross / std::hypot(ex, ey));
    }
    return margin;
  }

  internal::TableParams<double> params_;
  std::vector<DoublePiece> pieces_;
};

void RequireSampling(const LatticeFreeBody& body, int64_t samples) {
  if (!body.is_bounded()) {
    throw ValidationError("Monte Carlo needs a bounded body, got a split");
  }
  if (samples < 1) throw ValidationError("samples must be >= 1");
}

template <typename Work>
void ParallelChunks(int64_t total, Work work) {
  const int64_t threads =
      std::max<int64_t>(1, std::min<int64_t>(WorkerThreads(), total / 4096));
  if (threads == 1) {
    work(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  const int64_t chunk = (total + threads - 1) / threads;
  for (int64_t t = 0; t < threads; ++t) {
    const int64_t lo = t * chunk;
    const int64_t hi = std::min(total, lo + chunk);
    pool.emplace_back(work, static_cast<int>(t), lo, hi);
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

int WorkerThreads() {
  if (const char* env = std::getenv("CUTSTRENGTH_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::array<double, 2> SamplePoint(const LatticeFreeBody& body, uint64_t seed,
                                  int64_t index) {
  RequireSampling(body, 1);
  return Sample(MakeFan(body), seed, index);
}

std::vector<McEstimate> MonteCarloLower(const LatticeFreeBody& body,
                                        std::span<const Rational> zs,
                                        int64_t samples, uint64_t seed) {
  RequireSampling(body, samples);
  std::vector<double> thresholds;
  for (const Rational& z : zs) {
    if (z <= 1) throw ValidationError("z must be > 1, got " + ToString(z));
    thresholds.push_back(z.get_d());
  }
  const Fan fan = MakeFan(body);
  const Indicator indicator(body);
  const int64_t threads = WorkerThreads();
  std::vector<std::vector<int64_t>> hits(
      threads, std::vector<int64_t>(thresholds.size(), 0));
  ParallelChunks(samples, [&](int t, int64_t lo, int64_t hi) {
    std::vector<int64_t>& mine = hits[t];
    for (int64_t i = lo; i < hi; ++i) {
      const double strength = indicator.Strength(Sample(fan, seed, i));
      for (size_t k = 0; k < thresholds.size(); ++k) {
        if (strength <= thresholds[k]) ++mine[k];
      }
    }
  });
  std::vector<McEstimate> out;
  for (size_t k = 0; k < thresholds.size(); ++k) {
    int64_t total = 0;
    for (const auto& h : hits) total += h[k];
    McEstimate e;
    e.samples = samples;
    e.seed = seed;
    e.estimate = static_cast<double>(total) / static_cast<double>(samples);
    e.std_error = std::sqrt(e.estimate * (1 - e.estimate) /
                            static_cast<double>(samples));
    out.push_back(e);
  }
  return out;
}

McEstimate MonteCarloLower(const LatticeFreeBody& body, const Rational& z,
                           int64_t samples, uint64_t seed) {
  return MonteCarloLower(body, std::span<const Rational>(&z, 1), samples,
                         seed)[0];
}

Rational2 SampleExactPoint(const LatticeFreeBody& body, uint64_t seed,
                           int64_t index) {
  RequireSampling(body, 1);
  const Fan fan = MakeFan(body);
  const Polygon& v = body.boundary();
  constexpr uint64_t kBits = 30;
  constexpr uint64_t kDenominator = uint64_t{1} << kBits;
  for (uint64_t attempt = 0;; ++attempt) {
    const uint64_t base = 3 * (static_cast<uint64_t>(index) + attempt * 0x100000000ULL);
    const size_t t = PickTriangle(fan, Unit(Mix(seed, base)));
    uint64_t u = Mix(seed, base + 1) >> (64 - kBits);
    uint64_t w = Mix(seed, base + 2) >> (64 - kBits);
    if (u + w > kDenominator) {
      u = kDenominator - u;
      w = kDenominator - w;
    }
    if (u == 0 || w == 0 || u + w >= kDenominator) continue;
    const Rational du(mpz_class(static_cast<unsigned long>(u)),
                      mpz_class(static_cast<unsigned long>(kDenominator)));
    const Rational dw(mpz_class(static_cast<unsigned long>(w)),
                      mpz_class(static_cast<unsigned long>(kDenominator)));
    Rational2 f = v[0] + du * (v[t + 1] - v[0]) + dw * (v[t + 2] - v[0]);
    f.x1.canonicalize();
    f.x2.canonicalize();
    return f;
  }
}

std::vector<ClosureFrequency> CompareClosureFrequency(
    const LatticeFreeBody& body, std::span<const Rational> zs, int n,
    int64_t samples, uint64_t seed) {
  RequireSampling(body, samples);
  std::vector<ClosureFrequency> out;
  for (const Rational& z : zs) {
    ClosureFrequency c;
    c.z = z;
    c.samples = samples;
    out.push_back(c);
  }
  const int64_t threads = WorkerThreads();
  std::vector<std::vector<std::array<int64_t, 2>>> hits(
      threads, std::vector<std::array<int64_t, 2>>(zs.size(), {0, 0}));
  ParallelChunks(samples, [&](int t, int64_t lo, int64_t hi) {
    for (int64_t i = lo; i < hi; ++i) {
      const Rational2 f = SampleExactPoint(body, seed, i);
      const StrengthReport report = Strength(body, f, n);
      for (size_t k = 0; k < zs.size(); ++k) {
        if (report.t_bar <= zs[k]) ++hits[t][k][0];
        if (*report.t_n <= zs[k]) ++hits[t][k][1];
      }
    }
  });
  for (const auto& h : hits) {
    for (size_t k = 0; k < zs.size(); ++k) {
      out[k].single_split_hits += h[k][0];
      out[k].closure_hits += h[k][1];
    }
  }
  return out;
}

}  // namespace cutstrength
