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

#include "cutstrength/piecewise.h"

#include <algorithm>
#include <stdexcept>

namespace cutstrength {

PiecewiseFunction::PiecewiseFunction(std::vector<Rational> breakpoints,
                                     std::vector<Piece> pieces,
                                     std::vector<Rational> right_closed)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      right_closed_(std::move(right_closed)) {
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw std::invalid_argument("piecewise function needs one more piece "
                                "than breakpoints");
  }
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end())) {
    throw std::invalid_argument("breakpoints must be nondecreasing");
  }
}

PiecewiseFunction PiecewiseFunction::Zero() {
  return PiecewiseFunction({}, {Piece{[](const Rational&) -> Rational { return Rational(0); },
                                      "0"}});
}

size_t PiecewiseFunction::PieceIndex(const Rational& z) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), z);
  if (it != breakpoints_.end() && *it == z &&
      std::find(right_closed_.begin(), right_closed_.end(), z) !=
          right_closed_.end()) {
    it = std::upper_bound(it, breakpoints_.end(), z);
  }
  return static_cast<size_t>(it - breakpoints_.begin());
}

Rational PiecewiseFunction::operator()(const Rational& z) const {
  return EvaluatePiece(PieceIndex(z), z);
}

Rational PiecewiseFunction::EvaluatePiece(size_t index,
                                          const Rational& z) const {
  Rational v = pieces_.at(index).eval(z);
  v.canonicalize();
  return v;
}

std::vector<Rational> PiecewiseFunction::ContinuityDefects() const {
  std::vector<Rational> defects;
  size_t left = 0;
  for (size_t i = 0; i < breakpoints_.size(); ++i) {
    const Rational& b = breakpoints_[i];
    // Piece i+1 is empty when the next breakpoint coincides with this one.
    if (i + 1 < breakpoints_.size() && breakpoints_[i + 1] == b) continue;
    if (EvaluatePiece(left, b) != EvaluatePiece(i + 1, b)) defects.push_back(b);
    left = i + 1;
  }
  return defects;
}

}  // namespace cutstrength
