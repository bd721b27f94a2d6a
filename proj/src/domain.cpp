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

#include "momrec/domain.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "momrec/errors.hpp"

namespace momrec {

namespace {

struct Pt {
  double x, y;
};

// Proper segment intersection test in double precision; touching at
// shared endpoints does not count. Used for sampled sanity checks only.
bool segments_cross(Pt a, Pt b, Pt c, Pt d) {
  auto orient = [](Pt p, Pt q, Pt r) {
    double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    double scale = std::abs(q.x - p.x) + std::abs(q.y - p.y) +
                   std::abs(r.x - p.x) + std::abs(r.y - p.y);
    double eps = 1e-14 * scale * scale;
    if (v > eps) return 1;
    if (v < -eps) return -1;
    return 0;
  };
  int o1 = orient(a, b, c);
  int o2 = orient(a, b, d);
  int o3 = orient(c, d, a);
  int o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

void check_closed_chain_simple(const std::vector<Pt>& pts, bool is_polygon) {
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
      if (segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) {
        if (is_polygon)
          throw InvalidPolygon("edges " + std::to_string(i) + " and " +
                               std::to_string(j) + " intersect");
        throw NonJordanBoundary("sampled boundary self-intersects near segments " +
                                std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

}  // namespace

Real signed_polygon_area(const std::vector<Complex>& vertices) {
  if (vertices.empty()) return Real(53);
  mpfr_prec_t p = vertices.front().prec();
  Real twice(p);
  size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Complex& a = vertices[i];
    const Complex& b = vertices[(i + 1) % n];
    twice += a.re * b.im - a.im * b.re;
  }
  Real half = Real::of_ratio(1, 2, p);
  return twice * half;
}

void validate_polygon(const std::vector<Complex>& vertices) {
  if (vertices.size() < 3)
    throw InvalidPolygon("need at least 3 vertices, got " +
                         std::to_string(vertices.size()));
  std::vector<Pt> pts;
  pts.reserve(vertices.size());
  for (const Complex& v : vertices)
    pts.push_back({v.re.to_double(), v.im.to_double()});
  check_closed_chain_simple(pts, /*is_polygon=*/true);
  if (signed_polygon_area(vertices).sign() <= 0)
    throw InvalidPolygon("vertices must be in counterclockwise order");
}

void validate_jordan_trace(const LaurentMap& map, int resolution) {
  if (resolution < 8) resolution = 8;
  mpfr_prec_t p = map.prec();
  Real two_pi = Real::pi(p);
  two_pi.scale2(1);
  std::vector<Pt> pts;
  pts.reserve(resolution);
  for (int i = 0; i < resolution; ++i) {
    Real theta = two_pi * Real::of_si(i, p) / Real::of_si(resolution, p);
    Complex z = map.eval(Complex::unit(theta));
    pts.push_back({z.re.to_double(), z.im.to_double()});
  }
  check_closed_chain_simple(pts, /*is_polygon=*/false);
}

DomainSpec DomainSpec::polygon(std::vector<Complex> vertices) {
  validate_polygon(vertices);
  DomainSpec s;
  s.v_ = PolygonSpec{std::move(vertices)};
  return s;
}

DomainSpec DomainSpec::laurent_boundary(LaurentMap map, int check_resolution) {
  validate_jordan_trace(map, check_resolution);
  DomainSpec s;
  s.v_ = std::move(map);
  return s;
}

DomainSpec DomainSpec::named(NamedShape shape) {
  if (shape.kind == NamedShape::Kind::Ellipse &&
      (shape.a.sign() <= 0 || shape.c.sign() <= 0))
    throw BadInputFile("ellipse semiaxes must be positive");
  DomainSpec s;
  s.v_ = std::move(shape);
  return s;
}

DomainSpec DomainSpec::resolved(const PrecisionContext& ctx) const {
  if (!is_named()) return *this;
  const NamedShape& sh = as_named();
  mpfr_prec_t p = ctx.bits;
  switch (sh.kind) {
    case NamedShape::Kind::UnitDisk: {
      LaurentMap map(Real::of_si(1, p), {});
      return laurent_boundary(std::move(map));
    }
    case NamedShape::Kind::Ellipse: {
      // Joukowski-type map alpha*w + beta/w with alpha=(a+c)/2, beta=(a-c)/2.
      Real half = Real::of_ratio(1, 2, p);
      Real alpha = (sh.a + sh.c) * half;
      Real beta = (sh.a - sh.c) * half;
      std::vector<Complex> cs;
      cs.push_back(Complex(p));
      cs.push_back(Complex::from_real(beta));
      LaurentMap map(alpha, std::move(cs));
      return laurent_boundary(std::move(map));
    }
    case NamedShape::Kind::EquilateralTriangle: {
      // Vertices 1, e^{2 pi i/3}, e^{4 pi i/3}.
      Real third = Real::of_ratio(2, 3, p) * Real::pi(p);
      std::vector<Complex> vs;
      vs.push_back(Complex::of(1.0, 0.0, p));
      vs.push_back(Complex::unit(third));
      vs.push_back(Complex::unit(third + third));
      return polygon(std::move(vs));
    }
    case NamedShape::Kind::Hypocycloid3: {
      // w + 1/(2 w^2)
      std::vector<Complex> cs;
      cs.push_back(Complex(p));
      cs.push_back(Complex(p));
      cs.push_back(Complex::from_real(Real::of_ratio(1, 2, p)));
      LaurentMap map(Real::of_si(1, p), std::move(cs));
      return laurent_boundary(std::move(map));
    }
  }
  throw BadInputFile("unknown named shape");
}

Real DomainSpec::boundary_radius(const PrecisionContext& ctx) const {
  DomainSpec r = resolved(ctx);
  mpfr_prec_t p = ctx.bits;
  Real best(p);
  if (r.is_polygon()) {
    for (const Complex& v : r.as_polygon().vertices) best = Real::max(best, v.abs());
    return best;
  }
  const LaurentMap& map = r.as_laurent();
  const int samples = 512;
  Real two_pi = Real::pi(p);
  two_pi.scale2(1);
  for (int i = 0; i < samples; ++i) {
    Real theta = two_pi * Real::of_si(i, p) / Real::of_si(samples, p);
    best = Real::max(best, map.eval(Complex::unit(theta)).abs());
  }
  return best;
}

std::string DomainSpec::describe() const {
  if (is_polygon())
    return "polygon(" + std::to_string(as_polygon().vertices.size()) + " vertices)";
  if (is_laurent())
    return "laurent(order " + std::to_string(as_laurent().order()) + ")";
  switch (as_named().kind) {
    case NamedShape::Kind::UnitDisk: return "unit-disk";
    case NamedShape::Kind::Ellipse: return "ellipse";
    case NamedShape::Kind::EquilateralTriangle: return "equilateral-triangle";
    case NamedShape::Kind::Hypocycloid3: return "hypocycloid-3";
  }
  return "?";
}

}  // namespace momrec
