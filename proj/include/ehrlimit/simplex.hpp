#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ehrlimit/matrix.hpp"
#include "ehrlimit/numeric.hpp"

namespace ehrlimit {

/// Full-dimensional lattice simplex given by an exact integer vertex list.
///
/// hnf_flag is true when vertex 0 is the origin and vertices 1..d form an
/// upper-triangular column matrix with above-diagonal column entries in
/// [0, diagonal). The homogenized matrix (all-ones top row, columns (1, v))
/// is derived on demand and cached; the cache is shared across copies and
/// initialized idempotently.
class LatticeSimplex {
  public:
    LatticeSimplex(int ambient_dim, std::vector<std::vector<Int>> vertices);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<std::vector<Int>>& vertices() const { return vertices_; }
    bool hnf_flag() const { return hnf_flag_; }

    /// Set when the simplex is conv{e_1, .., e_d, -q}; enables the cyclic
    /// fundamental-parallelepiped parameterization.
    const std::optional<std::vector<Int>>& delta_q() const { return delta_q_; }

    /// Band vector of a multidiagonal construction, when built that way.
    const std::optional<std::vector<long>>& band() const { return band_; }

    /// (d+1) x (d+1) matrix: top row all ones, column j = homogenized vertex j.
    const IntMatrix& homogenized() const;

    /// |det| of the homogenized matrix.
    Int normalized_volume() const;

  private:
    friend LatticeSimplex make_delta_one_q(const std::vector<Int>& q);
    friend LatticeSimplex make_multidiagonal(const std::vector<long>& a, long d);

    int ambient_dim_;
    std::vector<std::vector<Int>> vertices_;
    bool hnf_flag_ = false;
    std::optional<std::vector<Int>> delta_q_;
    std::optional<std::vector<long>> band_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Build a simplex from a d x d (implicit origin vertex) or d x (d+1) column
/// matrix of vertices. Throws std::invalid_argument on affine rank deficiency.
LatticeSimplex from_columns(const IntMatrix& columns);

/// S_d = conv{e_1, .., e_d, -(e_1 + .. + e_d)}; reflexive, h* = 1 + z + .. + z^d.
LatticeSimplex make_S(long d);

/// conv{e_1, .., e_d, -q} for q with entries >= 1.
LatticeSimplex make_delta_one_q(const std::vector<Int>& q);

/// The member Delta_(1,q(n)) with q(n) = (1,..,1 [2n-1 times], 3n, 10n, 15n).
LatticeSimplex make_q_of_n(long n);

/// Bidiagonal Hermite normal form simplex: (d-1)-dimensional, d vertices
/// (origin, e_1, then e_{j-1} + m e_j), homogenized diagonal (1, 1, m, .., m),
/// normalized volume m^(d-2). Requires m >= 2, d >= 3.
LatticeSimplex make_bidiagonal(long m, long d);

/// Multidiagonal Hermite normal form simplex for a band a = (a_1, .., a_s)
/// with a_1 > a_j: d-dimensional, vertices origin, e_1, .., e_{s-1}, then
/// a_1 e_j + a_2 e_{j-1} + .. + a_s e_{j-s+1} for j = s..d. Homogenized
/// diagonal has s leading ones, then a_1; normalized volume a_1^(d-s+1).
/// Band (m, 1) at dimension d reproduces the bidiagonal simplex of m, d+1.
LatticeSimplex make_multidiagonal(const std::vector<long>& a, long d);

/// Exact reflexivity test: origin strictly interior and every facet
/// hyperplane is {x : <a, x> = 1} with a integral. Requires full dimension.
bool is_reflexive(const LatticeSimplex& p);

Int normalized_volume(const LatticeSimplex& p);

/// Parse a simplex file: JSON {"vertices": [[..], ..]} (rows are vertices;
/// origin appended when the count equals the ambient dimension) or plain
/// whitespace-separated matrix text whose columns are vertices (origin
/// implicit when the matrix is square).
LatticeSimplex read_simplex_file(const std::string& path);
LatticeSimplex parse_simplex_text(const std::string& text);

}  // namespace ehrlimit
