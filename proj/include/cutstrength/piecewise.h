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

#ifndef CUTSTRENGTH_PIECEWISE_H_
#define CUTSTRENGTH_PIECEWISE_H_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cutstrength/rational.h"

namespace cutstrength {

// A function of z given by closed-form pieces between breakpoints
// b_1 <= ... <= b_{n-1}. Piece 0 covers z <= b_1, piece i covers
// b_i < z <= b_{i+1}, and the last piece covers z > b_{n-1}. A breakpoint
// listed in right_closed instead belongs to the piece on its right.
class PiecewiseFunction {
 public:
  using Evaluator = std::function<Rational(const Rational&)>;

  struct Piece {
    Evaluator eval;
    std::string source;  // human-readable name of the formula
  };

  PiecewiseFunction() = default;
  // Throws std::invalid_argument unless pieces.size() == breakpoints.size()+1
  // and the breakpoints are nondecreasing.
  PiecewiseFunction(std::vector<Rational> breakpoints, std::vector<Piece> pieces,
                    std::vector<Rational> right_closed = {});

  static PiecewiseFunction Zero();

  Rational operator()(const Rational& z) const;
  size_t PieceIndex(const Rational& z) const;
  Rational EvaluatePiece(size_t index, const Rational& z) const;

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  // Breakpoints at which the pieces on either side disagree. Empty pieces
  // (repeated breakpoints) are skipped.
  std::vector<Rational> ContinuityDefects() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Piece> pieces_;
  std::vector<Rational> right_closed_;
};

}  // namespace cutstrength

#endif  // CUTSTRENGTH_PIECEWISE_H_
