// Copyright 2026 The momrec Authors
//
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

#ifndef MOMREC_QUADRATURE_HPP
#define MOMREC_QUADRATURE_HPP

#include <vector>

#include "momrec/precision.hpp"

namespace momrec {

/// Nodes/weights on [-1, 1].
struct QuadratureRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// n-point Gauss-Legendre rule, exact for polynomials of degree 2n-1.
/// Nodes are refined by Newton iteration at `prec` + guard bits.
QuadratureRule gauss_legendre(int n, mpfr_prec_t prec);

/// Closed Clenshaw-Curtis rule with `points` nodes (cosine-spaced,
/// endpoints included), exact for polynomials of degree points-1.
QuadratureRule clenshaw_curtis(int points, mpfr_prec_t prec);

}  // namespace momrec

#endif  // MOMREC_QUADRATURE_HPP
