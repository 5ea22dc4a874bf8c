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

#include "oracle.h"

#include <algorithm>
#include <cstdlib>

namespace oracle {
namespace {

Q Cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

using Form = StrengthPiece::Form;

StrengthPiece Low(int region, Poly poly, Q p, Q q, Q alpha) {
  return {region, std::move(poly), Form::kLow, std::move(p), std::move(q),
          std::move(alpha)};
}

StrengthPiece High(int region, Poly poly, Q p, Q q, Q beta, Q gamma = 1) {
  return {region, std::move(poly), Form::kHigh, std::move(p), std::move(q),
          std::move(beta), std::move(gamma)};
}

// Keeps lo <= p*x + q*y <= hi.
Poly Slab(const Poly& poly, const Q& p, const Q& q, const Q& lo, const Q& hi) {
  return ClipLe(ClipLe(poly, -p, -q, -lo), p, q, hi);
}

void AddIf(std::vector<StrengthPiece>& out, StrengthPiece piece) {
  if (piece.poly.size() >= 3 && AreaOf(piece.poly) > 0) {
    out.push_back(std::move(piece));
  }
}

bool SolveSquare(std::vector<std::vector<Q>> a, std::vector<Q> b,
                 std::vector<Q>& x) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return false;
    std::swap(a[r], a[c]);
    std::swap(b[r], b[c]);
    for (size_t i = c + 1; i < n; ++i) {
      const Q f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (size_t i = n; i-- > 0;) {
    Q acc = b[i];
    for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return true;
}

}  // namespace

Poly ClipLe(const Poly& poly, const Q& a, const Q& b, const Q& c) {
  Poly out;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    const Q vp = a * p.x + b * p.y - c;
    const Q vq = a * q.x + b * q.y - c;
    if (vp <= 0) out.push_back(p);
    if ((vp < 0 && vq > 0) || (vp > 0 && vq < 0)) {
      const Q t = vp / (vp - vq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

Q AreaOf(const Poly& poly) {
  if (poly.size() < 3) return 0;
  Q s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - p.y * q.x;
  }
  return abs(s) / 2;
}

bool InsideClosed(const Poly& poly, const Pt& p) {
  int sign = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const int s = sgn(Cross(poly[i], poly[(i + 1) % poly.size()], p));
    if (s == 0) continue;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

OracleBody Type1() {
  OracleBody b;
  b.vertices = {{0, 0}, {2, 0}, {0, 2}};
  b.area = 2;
  b.pieces.push_back({1, {{1, 0}, {0, 1}, {1, 1}}, Form::kConstant, 0, 0, 2});
  b.pieces.push_back(High(2, {{0, 0}, {1, 0}, {0, 1}}, 1, 1, 3, 2));
  b.pieces.push_back(Low(3, {{0, 1}, {1, 1}, {0, 2}}, 0, 1, -1));
  b.pieces.push_back(Low(4, {{1, 0}, {1, 1}, {2, 0}}, 1, 0, -1));
  return b;
}

OracleBody Type2(const Q& a1, const Q& a2) {
  const Q left = -a1 / (a2 - 1);
  const Q right = (a2 - a1) / (a2 - 1);
  OracleBody b;
  b.vertices = {{left, 0}, {right, 0}, {a1, a2}};
  b.area = AreaOf(b.vertices);
  const Poly r1 = {{0, 0}, {a1, 0}, {a1, 1}, {0, 1}};
  const Poly r2 = {{a1, 0}, {1, 0}, {1, 1}, {a1, 1}};
  if (a2 <= 2) {
    b.pieces.push_back(High(1, r1, 0, 1, a2));
    b.pieces.push_back(High(2, r2, 0, 1, a2));
  } else {
    b.pieces.push_back(Low(1, r1, 1, 0, left));
    b.pieces.push_back(High(2, r2, 1, 0, right));
  }
  b.pieces.push_back(High(3, {{0, 0}, {0, 1}, {left, 0}}, 0, 1, a2));
  b.pieces.push_back(High(4, {{1, 0}, {1, 1}, {right, 0}}, 0, 1, a2));
  b.pieces.push_back(Low(5, {{0, 1}, {a1, 1}, {a1, a2}}, 1, 0, left));
  b.pieces.push_back(High(6, {{a1, 1}, {1, 1}, {a1, a2}}, 1, 0, right));
  return b;
}

QuadVertices QuadDerived(const Q& a1, const Q& a2, const Q& b1, const Q& b2) {
  QuadVertices v;
  v.c1 = -a1 * b1 / ((a2 - 1) * b1 - a1 * b2);
  v.c2 = v.c1 * b2 / b1;
  v.d1 = ((a2 - a1) * (1 - b1) - (1 - a1) * b2) /
         ((a2 - 1) * (1 - b1) - (1 - a1) * b2);
  v.d2 = (v.d1 - 1) * b2 / (b1 - 1);
  v.theta = (a1 * b1 * (a2 - 1) * (1 - b1) - b1 * a1 * (1 - a1) * b2) /
            (b1 * (a2 - 1) * (1 - b1) - a1 * (1 - a1) * b2);
  for (Q* q : {&v.c1, &v.c2, &v.d1, &v.d2, &v.theta}) q->canonicalize();
  return v;
}

OracleBody Quadrilateral(const Q& a1, const Q& a2, const Q& b1, const Q& b2) {
  const QuadVertices v = QuadDerived(a1, a2, b1, b2);
  OracleBody b;
  b.vertices = {{b1, b2}, {v.d1, v.d2}, {a1, a2}, {v.c1, v.c2}};
  b.area = AreaOf(b.vertices);
  const Q h = -b2 / (a2 - b2 - 1);
  AddIf(b.pieces, Low(1, Slab(b.vertices, 0, 1, 0, h), 0, 1, b2));
  AddIf(b.pieces, High(2, Slab(b.vertices, 0, 1, h, 1), 0, 1, a2));
  for (const Poly& cap : {ClipLe(b.vertices, 0, 1, 0),
                          ClipLe(b.vertices, 0, -1, -1)}) {
    AddIf(b.pieces, Low(3, ClipLe(cap, 1, 0, v.theta), 1, 0, v.c1));
    AddIf(b.pieces, High(4, ClipLe(cap, -1, 0, -v.theta), 1, 0, v.d1));
  }
  return b;
}

T3Vertices T3Derived(const Q& a1, const Q& a2, const Q& b1) {
  T3Vertices v;
  v.b2 = -a2 * (1 - b1) / (a1 - 1);
  const Q d = (a1 - 1) * (1 - a2) * b1 - a1 * a2 * (1 - b1);
  v.c1 = a1 * (a1 - 1) * b1 / d;
  v.c2 = -a1 * a2 * (1 - b1) / d;
  for (Q* q : {&v.b2, &v.c1, &v.c2}) q->canonicalize();
  return v;
}

OracleBody Type3(const Q& a1, const Q& a2, const Q& b1) {
  const T3Vertices v = T3Derived(a1, a2, b1);
  OracleBody b;
  b.vertices = {{a1, a2}, {b1, v.b2}, {v.c1, v.c2}};
  b.area = AreaOf(b.vertices);
  const Q h1 = -v.b2 / (v.c2 - 1 - v.b2);
  const Q h2 = -v.c1 / (a1 - 1 - v.c1);
  const Q bs = b1 + v.b2;
  const Q h3 = -bs / (a1 + a2 - 1 - bs);
  AddIf(b.pieces, Low(1, Slab(b.vertices, 0, 1, 0, h1), 0, 1, v.b2));
  AddIf(b.pieces, High(2, Slab(b.vertices, 0, 1, h1, 1), 0, 1, v.c2));
  for (const Poly& cap : {ClipLe(b.vertices, 0, 1, 0),
                          ClipLe(b.vertices, 0, -1, -1)}) {
    const Poly mid = Slab(cap, 1, 0, 0, 1);
    AddIf(b.pieces, Low(3, ClipLe(mid, 1, 0, h2), 1, 0, v.c1));
    AddIf(b.pieces, High(4, ClipLe(mid, -1, 0, -h2), 1, 0, a1));
    for (const Poly& side : {ClipLe(cap, 1, 0, 0), ClipLe(cap, -1, 0, -1)}) {
      AddIf(b.pieces, Low(5, Slab(side, 1, 1, 0, h3), 1, 1, bs));
      AddIf(b.pieces, High(6, Slab(side, 1, 1, h3, 1), 1, 1, a1 + a2));
    }
  }
  return b;
}

Q IndicatorArea(const OracleBody& body, const Q& z) {
  Q total = 0;
  for (const StrengthPiece& piece : body.pieces) {
    switch (piece.form) {
      case Form::kConstant:
        if (piece.param <= z) total += AreaOf(piece.poly);
        break;
      case Form::kLow:
        total += AreaOf(ClipLe(piece.poly, -piece.p, -piece.q,
                               piece.param / (z - 1)));
        break;
      case Form::kHigh:
        total += AreaOf(ClipLe(piece.poly, piece.p, piece.q,
                               (z * piece.gamma - piece.param) / (z - 1)));
        break;
    }
  }
  total.canonicalize();
  return total;
}

std::optional<Q> StrengthAt(const OracleBody& body, const Pt& f) {
  for (const StrengthPiece& piece : body.pieces) {
    if (!InsideClosed(piece.poly, f)) continue;
    const Q u = piece.p * f.x + piece.q * f.y;
    Q t;
    switch (piece.form) {
      case Form::kConstant:
        t = piece.param;
        break;
      case Form::kLow:
        if (u == 0) continue;
        t = (u - piece.param) / u;
        break;
      case Form::kHigh:
        if (u == piece.gamma) continue;
        t = (piece.param - u) / (piece.gamma - u);
        break;
    }
    t.canonicalize();
    return t;
  }
  return std::nullopt;
}

std::optional<Q> CoveringMin(const std::vector<std::vector<Q>>& rows) {
  const size_t k = rows.front().size();
  const size_t m = rows.size();
  std::optional<Q> best;
  std::vector<size_t> pick(k);
  // Iterate all k-subsets of m + k constraints via bitmasks.
  const size_t total = m + k;
  for (unsigned long mask = 0; mask < (1ul << total); ++mask) {
    if (static_cast<size_t>(__builtin_popcountl(mask)) != k) continue;
    std::vector<std::vector<Q>> a;
    std::vector<Q> rhs;
    for (size_t c = 0; c < total; ++c) {
      if (!(mask >> c & 1)) continue;
      if (c < m) {
        a.push_back(rows[c]);
        rhs.push_back(1);
      } else {
        std::vector<Q> e(k, 0);
        e[c - m] = 1;
        a.push_back(e);
        rhs.push_back(0);
      }
    }
    std::vector<Q> s;
    if (!SolveSquare(a, rhs, s)) continue;
    bool ok = std::all_of(s.begin(), s.end(), [](const Q& v) { return v >= 0; });
    for (size_t i = 0; i < m && ok; ++i) {
      Q lhs = 0;
      for (size_t j = 0; j < k; ++j) lhs += rows[i][j] * s[j];
      ok = lhs >= 1;
    }
    if (!ok) continue;
    Q sum = 0;
    for (const Q& v : s) sum += v;
    if (!best || sum < *best) best = sum;
  }
  return best;
}

Q WidthScan(const Poly& vertices, int radius) {
  std::optional<Q> best;
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) {
      if (i == 0 && j == 0) continue;
      Q lo = i * vertices[0].x + j * vertices[0].y, hi = lo;
      for (const Pt& v : vertices) {
        const Q d = i * v.x + j * v.y;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      if (!best || hi - lo < *best) best = hi - lo;
    }
  }
  return *best;
}

int InteriorLatticePoints(const Poly& convex) {
  Q lx = convex[0].x, hx = lx, ly = convex[0].y, hy = ly;
  for (const Pt& p : convex) {
    lx = std::min(lx, p.x);
    hx = std::max(hx, p.x);
    ly = std::min(ly, p.y);
    hy = std::max(hy, p.y);
  }
  mpz_class x0, x1, y0, y1;
  mpz_fdiv_q(x0.get_mpz_t(), lx.get_num_mpz_t(), lx.get_den_mpz_t());
  mpz_cdiv_q(x1.get_mpz_t(), hx.get_num_mpz_t(), hx.get_den_mpz_t());
  mpz_fdiv_q(y0.get_mpz_t(), ly.get_num_mpz_t(), ly.get_den_mpz_t());
  mpz_cdiv_q(y1.get_mpz_t(), hy.get_num_mpz_t(), hy.get_den_mpz_t());
  int count = 0;
  for (mpz_class x = x0; x <= x1; ++x) {
    for (mpz_class y = y0; y <= y1; ++y) {
      const Pt p{Q(x), Q(y)};
      int sign = 0;
      bool strict = true;
      for (size_t i = 0; i < convex.size() && strict; ++i) {
        const int s = sgn(Cross(convex[i], convex[(i + 1) % convex.size()], p));
        if (s == 0 || (sign != 0 && s != sign)) strict = false;
        sign = s;
      }
      if (strict) ++count;
    }
  }
  return count;
}

}  // namespace oracle
