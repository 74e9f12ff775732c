#include "ehrlimit/combinators.hpp"

#include <stdexcept>

namespace ehrlimit {

namespace {

std::vector<Int> embed(const std::vector<Int>& v, int before, int after) {
    std::vector<Int> out(before + v.size() + after, Int(0));
    for (size_t i = 0; i < v.size(); ++i) out[before + i] = v[i];
    return out;
}

}  // namespace

VertexPolytope VertexPolytope::leaf(LatticeSimplex s) {
    VertexPolytope p;
    p.ambient_dim_ = s.ambient_dim();
    p.dim_ = s.dim();
    p.vertices_ = s.vertices();
    p.node_ = Node::leaf;
    p.leaf_ = std::make_shared<LatticeSimplex>(std::move(s));
    return p;
}

bool origin_interior(const VertexPolytope& p) {
    switch (p.node_) {
        case VertexPolytope::Node::leaf: {
            const LatticeSimplex& s = *p.leaf_;
            if (s.ambient_dim() != s.dim()) return false;
            std::vector<Rat> e0(s.dim() + 1);
            e0[0] = 1;
            auto bary = solve(s.homogenized(), e0);
            if (!bary) return false;
            for (const Rat& c : *bary)
                if (c <= 0) return false;
            return true;
        }
        case VertexPolytope::Node::free_sum:
            return origin_interior(*p.left_) && origin_interior(*p.right_);
        case VertexPolytope::Node::join:
        case VertexPolytope::Node::pyramid:
            // The origin lies on the base facet of the extra coordinate.
            return false;
    }
    return false;
}

bool is_reflexive(const VertexPolytope& p) {
    switch (p.node_) {
        case VertexPolytope::Node::leaf:
            return is_reflexive(*p.leaf_);
        case VertexPolytope::Node::free_sum:
            // The dual of a free sum is the product of the duals.
            return is_reflexive(*p.left_) && is_reflexive(*p.right_);
        case VertexPolytope::Node::join:
        case VertexPolytope::Node::pyramid:
            return false;
    }
    return false;
}

VertexPolytope free_sum(const VertexPolytope& p, const VertexPolytope& q) {
    if (!origin_interior(p) || !origin_interior(q))
        throw std::invalid_argument("free_sum: both arguments must contain the origin in their interiors");
    VertexPolytope r;
    r.ambient_dim_ = p.ambient_dim_ + q.ambient_dim_;
    r.dim_ = p.dim_ + q.dim_;
    for (const auto& v : p.vertices_) r.vertices_.push_back(embed(v, 0, q.ambient_dim_));
    for (const auto& w : q.vertices_) r.vertices_.push_back(embed(w, p.ambient_dim_, 0));
    r.node_ = VertexPolytope::Node::free_sum;
    r.left_ = std::make_shared<VertexPolytope>(p);
    r.right_ = std::make_shared<VertexPolytope>(q);
    r.left_reflexive_ = is_reflexive(p);
    return r;
}

VertexPolytope join(const VertexPolytope& p, const VertexPolytope& q) {
    VertexPolytope r;
    r.ambient_dim_ = p.ambient_dim_ + q.ambient_dim_ + 1;
    r.dim_ = p.dim_ + q.dim_ + 1;
    for (const auto& v : p.vertices_) r.vertices_.push_back(embed(v, 0, q.ambient_dim_ + 1));
    for (const auto& w : q.vertices_) {
        auto e = embed(w, p.ambient_dim_, 1);
        e.back() = 1;
        r.vertices_.push_back(std::move(e));
    }
    r.node_ = VertexPolytope::Node::join;
    r.left_ = std::make_shared<VertexPolytope>(p);
    r.right_ = std::make_shared<VertexPolytope>(q);
    return r;
}

VertexPolytope pyramid(const VertexPolytope& p) {
    VertexPolytope r;
    r.ambient_dim_ = p.ambient_dim_ + 1;
    r.dim_ = p.dim_ + 1;
    for (const auto& v : p.vertices_) r.vertices_.push_back(embed(v, 0, 1));
    std::vector<Int> apex(r.ambient_dim_, Int(0));
    apex.back() = 1;
    r.vertices_.push_back(std::move(apex));
    r.node_ = VertexPolytope::Node::pyramid;
    r.left_ = std::make_shared<VertexPolytope>(p);
    return r;
}

IntPolynomial hstar(const VertexPolytope& p, const HstarOptions& opts) {
    switch (p.node_) {
        case VertexPolytope::Node::leaf:
            return hstar(*p.leaf_, opts);
        case VertexPolytope::Node::free_sum:
            if (!p.left_reflexive_)
                throw std::domain_error(
                    "hstar: free-sum product rule requires the left argument to be reflexive");
            return poly_mul(hstar(*p.left_, opts), hstar(*p.right_, opts));
        case VertexPolytope::Node::join:
            return poly_mul(hstar(*p.left_, opts), hstar(*p.right_, opts));
        case VertexPolytope::Node::pyramid:
            return hstar(*p.left_, opts);
    }
    throw std::logic_error("hstar: unknown provenance node");
}

VertexPolytope make_crosspolytope(long d) {
    if (d < 1) throw std::invalid_argument("make_crosspolytope: d must be >= 1");
    VertexPolytope x = VertexPolytope::leaf(make_S(1));
    for (long i = 1; i < d; ++i) x = free_sum(x, VertexPolytope::leaf(make_S(1)));
    return x;
}

}  // namespace ehrlimit
