#pragma once

#include <memory>
#include <vector>

#include "ehrlimit/fpp.hpp"
#include "ehrlimit/simplex.hpp"

namespace ehrlimit {

/// Lattice polytope given by vertices plus its construction tree. Free sums
/// of simplices are generally not simplices, so h* is evaluated through the
/// provenance rules: leaves enumerate, joins and (reflexive (+) Q) free sums
/// multiply, pyramids pass through.
class VertexPolytope {
  public:
    enum class Node { leaf, free_sum, join, pyramid };

    static VertexPolytope leaf(LatticeSimplex s);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    const std::vector<std::vector<Int>>& vertices() const { return vertices_; }
    Node node() const { return node_; }
    bool left_reflexive() const { return left_reflexive_; }
    const LatticeSimplex& leaf_simplex() const { return *leaf_; }

    friend VertexPolytope free_sum(const VertexPolytope& p, const VertexPolytope& q);
    friend VertexPolytope join(const VertexPolytope& p, const VertexPolytope& q);
    friend VertexPolytope pyramid(const VertexPolytope& p);
    friend bool origin_interior(const VertexPolytope& p);
    friend bool is_reflexive(const VertexPolytope& p);
    friend IntPolynomial hstar(const VertexPolytope& p, const HstarOptions& opts);

  private:
    VertexPolytope() = default;

    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<std::vector<Int>> vertices_;
    Node node_ = Node::leaf;
    std::shared_ptr<const VertexPolytope> left_, right_;
    std::shared_ptr<const LatticeSimplex> leaf_;
    bool left_reflexive_ = false;
};

/// Vertices {(v, 0)} union {(0, w)}; both arguments must contain the origin
/// in their interiors (checked exactly). Records whether the left argument
/// is reflexive; h* of the node multiplies only in that case.
VertexPolytope free_sum(const VertexPolytope& p, const VertexPolytope& q);

/// Vertices {(v, 0, 0)} union {(0, w, 1)}; h* multiplies unconditionally.
VertexPolytope join(const VertexPolytope& p, const VertexPolytope& q);

/// Vertices {(v, 0)} plus the apex e_{n+1}; h* is preserved.
VertexPolytope pyramid(const VertexPolytope& p);

/// Exact: leaves test barycentric positivity, free sums need both sides,
/// joins and pyramids never contain the origin in their interiors.
bool origin_interior(const VertexPolytope& p);

/// Leaves run the facet-normal test; a free sum is reflexive iff both sides
/// are; joins and pyramids are not (origin on the boundary).
bool is_reflexive(const VertexPolytope& p);

/// h* through the provenance tree. Throws std::domain_error on a free-sum
/// node whose recorded left argument is not reflexive.
IntPolynomial hstar(const VertexPolytope& p, const HstarOptions& opts = {});

/// The crosspolytope family member: the d-fold free sum of S_1 copies.
VertexPolytope make_crosspolytope(long d);

}  // namespace ehrlimit
