#pragma once

#include "ehrlimit/combinators.hpp"
#include "ehrlimit/series_prefix.hpp"
#include "ehrlimit/simplex.hpp"

namespace ehrlimit {

/// |tP intersect Z^n| by scanning the bounding box of the dilate and testing
/// membership with exact integer functionals (for a simplex, the sign
/// pattern of the solved coefficient vector; for a combinator polytope, its
/// facet inequalities). Deliberately independent of the parallelepiped
/// enumeration path.
Int count_dilate_points(const LatticeSimplex& p, long t);
Int count_dilate_points(const VertexPolytope& p, long t);

/// Prefix 1, i(P;1), .., i(P;T) of the Ehrhart series by direct counting.
SeriesPrefix ehrhart_prefix_by_counting(const LatticeSimplex& p, long t_max);
SeriesPrefix ehrhart_prefix_by_counting(const VertexPolytope& p, long t_max);

/// True iff the counted prefix equals the expansion of
/// hstar(P) / (1-z)^(dim+1) through degree T.
bool consistency_check(const LatticeSimplex& p, long t_max);

}  // namespace ehrlimit
