#pragma once

#include "gendem/polytope.hpp"

namespace gendem {

// Exact V- and H-representation of the convex hull of a finite rational
// point set in dimension <= 8. Degenerate (lower-dimensional) inputs are
// reported with their affine dimension: `equations` carries the affine
// span and `facets` the facet inequalities within it, lifted to ambient
// coordinates. Every facet satisfies normal . x >= offset on all input
// points, with equality attained.
struct HullResult {
  int ambient_dim = 0;
  int affine_dim = 0;
  std::vector<RationalPoint> vertices;  // sorted lexicographically
  struct Facet {
    std::vector<long long> normal;  // primitive integer vector
    Rat offset;
  };
  std::vector<Facet> facets;
  struct Equation {
    std::vector<long long> normal;
    Rat value;  // normal . x = value on the affine span
  };
  std::vector<Equation> equations;
};

struct HullOptions {
  int max_dim = 8;
  // Guard on the number of candidate facet hyperplanes (subsets of size
  // affine_dim) examined.
  std::size_t max_candidates = 5'000'000;
};

HullResult convex_hull(const std::vector<RationalPoint>& points,
                       const HullOptions& opts = {});

}  // namespace gendem
