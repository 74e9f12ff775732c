#include "ehrlimit/simplex.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ehrlimit {

struct LatticeSimplex::Cache {
    std::once_flag once;
    IntMatrix homogenized;
};

namespace {

IntMatrix build_homogenized(int ambient, const std::vector<std::vector<Int>>& vs) {
    const int d1 = static_cast<int>(vs.size());
    IntMatrix b(ambient + 1, d1);
    for (int j = 0; j < d1; ++j) {
        b.at(0, j) = 1;
        for (int i = 0; i < ambient; ++i) b.at(i + 1, j) = vs[j][i];
    }
    return b;
}

bool structural_hnf(int ambient, const std::vector<std::vector<Int>>& vs) {
    // Vertex 0 must be the origin and the remaining vertices a square
    // upper-triangular column matrix with entries in [0, diagonal).
    const int d = static_cast<int>(vs.size()) - 1;
    if (d != ambient) return false;
    for (const Int& c : vs[0])
        if (c != 0) return false;
    for (int j = 1; j <= d; ++j) {
        const auto& v = vs[j];
        const Int& diag = v[j - 1];
        if (diag <= 0) return false;
        for (int i = 0; i < ambient; ++i) {
            if (i > j - 1 && v[i] != 0) return false;
            if (i < j - 1 && (v[i] < 0 || v[i] >= diag)) return false;
        }
    }
    return true;
}

}  // namespace

LatticeSimplex::LatticeSimplex(int ambient_dim, std::vector<std::vector<Int>> vertices)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), cache_(std::make_shared<Cache>()) {
    if (vertices_.empty()) throw std::invalid_argument("simplex: no vertices");
    for (const auto& v : vertices_)
        if (static_cast<int>(v.size()) != ambient_dim_)
            throw std::invalid_argument("simplex: vertex length != ambient dimension");
    IntMatrix b = build_homogenized(ambient_dim_, vertices_);
    if (b.rows != b.cols)
        throw std::invalid_argument("simplex: expected a full-dimensional simplex (d+1 vertices in dimension d)");
    if (determinant(b) == 0)
        throw std::invalid_argument("simplex: degenerate input (vertices not affinely independent)");
    hnf_flag_ = structural_hnf(ambient_dim_, vertices_);
}

const IntMatrix& LatticeSimplex::homogenized() const {
    std::call_once(cache_->once, [&] { cache_->homogenized = build_homogenized(ambient_dim_, vertices_); });
    return cache_->homogenized;
}

Int LatticeSimplex::normalized_volume() const {
    if (hnf_flag_) {
        Int v = 1;
        const IntMatrix& b = homogenized();
        for (int i = 0; i < b.rows; ++i) v *= b.at(i, i);
        return v;
    }
    Int d = determinant(homogenized());
    return abs(d);
}

Int normalized_volume(const LatticeSimplex& p) { return p.normalized_volume(); }

LatticeSimplex from_columns(const IntMatrix& columns) {
    const int d = columns.rows;
    std::vector<std::vector<Int>> vs;
    if (columns.cols == d) {
        vs.emplace_back(d, Int(0));
    } else if (columns.cols != d + 1) {
        throw std::invalid_argument("from_columns: expected d x d or d x (d+1) matrix");
    }
    for (int j = 0; j < columns.cols; ++j) {
        std::vector<Int> v(d);
        for (int i = 0; i < d; ++i) v[i] = columns.at(i, j);
        vs.push_back(std::move(v));
    }
    return LatticeSimplex(d, std::move(vs));
}

LatticeSimplex make_S(long d) {
    if (d < 1) throw std::invalid_argument("make_S: d must be >= 1");
    return make_delta_one_q(std::vector<Int>(static_cast<size_t>(d), Int(1)));
}

LatticeSimplex make_delta_one_q(const std::vector<Int>& q) {
    if (q.empty()) throw std::invalid_argument("make_delta_one_q: q must be nonempty");
    for (const Int& qi : q)
        if (qi < 1) throw std::invalid_argument("make_delta_one_q: entries must be >= 1");
    const int d = static_cast<int>(q.size());
    std::vector<std::vector<Int>> vs;
    for (int i = 0; i < d; ++i) {
        std::vector<Int> e(d, Int(0));
        e[i] = 1;
        vs.push_back(std::move(e));
    }
    std::vector<Int> neg(d);
    for (int i = 0; i < d; ++i) neg[i] = -q[i];
    vs.push_back(std::move(neg));
    LatticeSimplex s(d, std::move(vs));
    s.delta_q_ = q;
    return s;
}

LatticeSimplex make_q_of_n(long n) {
    if (n < 1) throw std::invalid_argument("make_q_of_n: n must be >= 1");
    std::vector<Int> q(static_cast<size_t>(2 * n - 1), Int(1));
    q.emplace_back(3 * n);
    q.emplace_back(10 * n);
    q.emplace_back(15 * n);
    return make_delta_one_q(q);
}

LatticeSimplex make_bidiagonal(long m, long d) {
    if (m < 2) throw std::invalid_argument("make_bidiagonal: m must be >= 2");
    if (d < 3) throw std::invalid_argument("make_bidiagonal: d must be >= 3");
    const int n = static_cast<int>(d) - 1;
    std::vector<std::vector<Int>> vs;
    vs.emplace_back(n, Int(0));
    std::vector<Int> e1(n, Int(0));
    e1[0] = 1;
    vs.push_back(std::move(e1));
    for (int j = 1; j < n; ++j) {
        std::vector<Int> v(n, Int(0));
        v[j - 1] = 1;
        v[j] = m;
        vs.push_back(std::move(v));
    }
    return LatticeSimplex(n, std::move(vs));
}

LatticeSimplex make_multidiagonal(const std::vector<long>& a, long d) {
    if (a.empty()) throw std::invalid_argument("make_multidiagonal: band must be nonempty");
    const long s = static_cast<long>(a.size());
    for (long ai : a)
        if (ai < 1) throw std::invalid_argument("make_multidiagonal: band entries must be >= 1");
    for (long j = 1; j < s; ++j)
        if (a[0] <= a[j])
            throw std::invalid_argument("make_multidiagonal: a_1 must exceed every later band entry");
    if (d < s) throw std::invalid_argument("make_multidiagonal: d must be >= band length");
    const int n = static_cast<int>(d);
    std::vector<std::vector<Int>> vs;
    vs.emplace_back(n, Int(0));
    for (long j = 1; j < s; ++j) {
        std::vector<Int> e(n, Int(0));
        e[j - 1] = 1;
        vs.push_back(std::move(e));
    }
    for (long j = s; j <= d; ++j) {
        std::vector<Int> v(n, Int(0));
        for (long i = 0; i < s; ++i) v[j - 1 - i] = a[i];
        vs.push_back(std::move(v));
    }
    LatticeSimplex p(n, std::move(vs));
    p.band_ = a;
    return p;
}

bool is_reflexive(const LatticeSimplex& p) {
    if (p.ambient_dim() != p.dim())
        throw std::invalid_argument("is_reflexive: simplex must be full-dimensional");
    const int d = p.dim();

    // Origin strictly interior: unique barycentric coordinates all positive.
    std::vector<Rat> e0(d + 1);
    e0[0] = 1;
    auto bary = solve(p.homogenized(), e0);
    if (!bary) return false;
    for (const Rat& c : *bary)
        if (c <= 0) return false;

    // Facet opposite vertex i: solve <a, v_j> = 1 for the d other vertices.
    for (int skip = 0; skip <= d; ++skip) {
        IntMatrix m(d, d);
        int r = 0;
        for (int j = 0; j <= d; ++j) {
            if (j == skip) continue;
            for (int c = 0; c < d; ++c) m.at(r, c) = p.vertices()[j][c];
            ++r;
        }
        auto normal = solve(m, std::vector<Rat>(d, Rat(1)));
        if (!normal) return false;  // hyperplane through the origin
        for (const Rat& c : *normal)
            if (c.get_den() != 1) return false;
    }
    return true;
}

namespace {

LatticeSimplex simplex_from_vertex_rows(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) throw std::invalid_argument("simplex input: no vertices");
    const int n = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("simplex input: ragged vertex rows");
    if (static_cast<int>(rows.size()) == n)
        rows.insert(rows.begin(), std::vector<Int>(n, Int(0)));
    return LatticeSimplex(n, std::move(rows));
}

}  // namespace

LatticeSimplex parse_simplex_text(const std::string& text) {
    std::string trimmed = text;
    size_t first = trimmed.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("simplex input: empty file");

    if (trimmed[first] == '{') {
        auto j = nlohmann::json::parse(trimmed);
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw std::invalid_argument("simplex input: missing \"vertices\" array");
        std::vector<std::vector<Int>> rows;
        for (const auto& row : j["vertices"]) {
            std::vector<Int> v;
            for (const auto& e : row) {
                if (e.is_number_integer())
                    v.emplace_back(static_cast<long>(e.get<long long>()));
                else if (e.is_string())
                    v.emplace_back(e.get<std::string>());
                else
                    throw std::invalid_argument("simplex input: non-integer vertex entry");
            }
            rows.push_back(std::move(v));
        }
        return simplex_from_vertex_rows(std::move(rows));
    }

    // Plain text: one matrix row per line, columns are vertices.
    std::vector<std::vector<Int>> mat;
    std::istringstream in(trimmed);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
        if (!row.empty()) mat.push_back(std::move(row));
    }
    if (mat.empty()) throw std::invalid_argument("simplex input: empty matrix");
    const int rows = static_cast<int>(mat.size());
    const int cols = static_cast<int>(mat[0].size());
    IntMatrix cm(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(mat[i].size()) != cols)
            throw std::invalid_argument("simplex input: ragged matrix");
        for (int j = 0; j < cols; ++j) cm.at(i, j) = mat[i][j];
    }
    return from_columns(cm);
}

LatticeSimplex read_simplex_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open simplex file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_simplex_text(ss.str());
}

}  // namespace ehrlimit
