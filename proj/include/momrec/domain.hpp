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

#ifndef MOMREC_DOMAIN_HPP
#define MOMREC_DOMAIN_HPP

#include <string>
#include <variant>
#include <vector>

#include "momrec/laurent.hpp"
#include "momrec/precision.hpp"

namespace momrec {

struct PolygonSpec {
  std::vector<Complex> vertices;  // counterclockwise, simple, >= 3
};

struct NamedShape {
  enum class Kind { UnitDisk, Ellipse, EquilateralTriangle, Hypocycloid3 };
  Kind kind;
  // Ellipse semiaxes; unused for the other shapes.
  Real a, c;

  explicit NamedShape(Kind k, mpfr_prec_t prec = 53)
      : kind(k), a(prec), c(prec) {}
};

/// Description of a test domain: explicit polygon, truncated exterior map
/// restricted to the unit circle, or a named reference shape.
class DomainSpec {
 public:
  static DomainSpec polygon(std::vector<Complex> vertices);
  static DomainSpec laurent_boundary(LaurentMap map, int check_resolution = 256);
  static DomainSpec named(NamedShape shape);

  bool is_polygon() const { return std::holds_alternative<PolygonSpec>(v_); }
  bool is_laurent() const { return std::holds_alternative<LaurentMap>(v_); }
  bool is_named() const { return std::holds_alternative<NamedShape>(v_); }

  const PolygonSpec& as_polygon() const { return std::get<PolygonSpec>(v_); }
  const LaurentMap& as_laurent() const { return std::get<LaurentMap>(v_); }
  const NamedShape& as_named() const { return std::get<NamedShape>(v_); }

  /// Named shapes with a polygonal boundary resolve to explicit vertices;
  /// named smooth shapes resolve to their exact truncated exterior map.
  /// Returns a spec holding only polygon or laurent variants.
  DomainSpec resolved(const PrecisionContext& ctx) const;

  /// Largest |z| over the boundary (exact for polygons, sampled for maps).
  Real boundary_radius(const PrecisionContext& ctx) const;

  std::string describe() const;

 private:
  DomainSpec() = default;
  std::variant<PolygonSpec, LaurentMap, NamedShape> v_;
};

/// Positively-oriented polygon area (shoelace).  Sign tells orientation.
Real signed_polygon_area(const std::vector<Complex>& vertices);

/// Validation used by DomainSpec::polygon: >= 3 vertices, simple,
/// counterclockwise. Throws InvalidPolygon.
void validate_polygon(const std::vector<Complex>& vertices);

/// Samples the map on |w|=1 and rejects self-intersecting traces.
/// Throws NonJordanBoundary.
void validate_jordan_trace(const LaurentMap& map, int resolution);

}  // namespace momrec

#endif  // MOMREC_DOMAIN_HPP
