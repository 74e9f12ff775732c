#include <numeric>

#include "ehrlimit/fpp.hpp"

namespace ehrlimit {

namespace {

// B lambda, asserting integrality of every coordinate.
std::vector<Int> lattice_point_of(const IntMatrix& b, const std::vector<Rat>& lambda) {
    const int n = b.rows;
    std::vector<Int> p(n);
    for (int i = 0; i < n; ++i) {
        Rat acc = 0;
        for (int j = 0; j < n; ++j)
            if (b.at(i, j) != 0) acc += Rat(b.at(i, j)) * lambda[j];
        acc.canonicalize();
        if (acc.get_den() != 1)
            throw std::logic_error("fpp: coefficient vector does not yield a lattice point");
        p[i] = acc.get_num();
    }
    return p;
}

void enumerate_triangular(const IntMatrix& b, const FppSink& sink) {
    const int n = b.rows;
    std::vector<long> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = to_long(b.at(i, i), "diagonal entry");

    std::vector<long> z(n, 0);
    while (true) {
        // Exact back-substitution, reducing each coordinate into [0, 1).
        std::vector<Rat> lambda(n);
        for (int i = n - 1; i >= 0; --i) {
            Rat acc = z[i];
            for (int j = i + 1; j < n; ++j)
                if (b.at(i, j) != 0) acc -= Rat(b.at(i, j)) * lambda[j];
            acc /= diag[i];
            lambda[i] = rat_frac(acc);
        }
        FppPoint pt;
        pt.point = lattice_point_of(b, lambda);
        pt.height = to_long(pt.point[0], "height");
        pt.lambda = std::move(lambda);
        sink(pt);

        int i = n - 1;
        while (i >= 0 && z[i] == diag[i] - 1) z[i--] = 0;
        if (i < 0) break;
        ++z[i];
    }
}

void enumerate_delta(const LatticeSimplex& p, const FppSink& sink) {
    const auto& q = *p.delta_q();
    const int d = static_cast<int>(q.size());
    Int n = 1;
    n = std::accumulate(q.begin(), q.end(), n);
    for (Int b = 0; b < n; ++b) {
        FppPoint pt;
        pt.lambda.resize(d + 1);
        Int total = b;
        for (int i = 0; i < d; ++i) {
            Int rem = (b * q[i]) % n;
            total += rem;
            pt.lambda[i] = Rat(rem, n);
            pt.lambda[i].canonicalize();
        }
        pt.lambda[d] = Rat(b, n);
        pt.lambda[d].canonicalize();
        if (total % n != 0) throw std::logic_error("fpp: cyclic height not integral");
        pt.height = to_long(total / n, "height");
        pt.point = lattice_point_of(p.homogenized(), pt.lambda);
        sink(pt);
    }
}

}  // namespace

void enumerate_fpp(const LatticeSimplex& p, const FppSink& sink) {
    if (p.hnf_flag()) {
        enumerate_triangular(p.homogenized(), sink);
        return;
    }
    if (p.delta_q()) {
        enumerate_delta(p, sink);
        return;
    }
    throw UnsupportedFormError(
        "enumerate_fpp: simplex is neither in Hermite normal form nor of the form conv{e_i, -q}");
}

IntPolynomial hstar_reference(const LatticeSimplex& p) {
    std::vector<Int> counts(p.dim() + 2);
    enumerate_fpp(p, [&](const FppPoint& pt) { counts[pt.height] += 1; });
    return IntPolynomial(std::move(counts));
}

std::vector<Rat> decode_bidiagonal(long m, const BidiagonalCode& code, long d) {
    const long k = code.k;
    if (m < 2 || k < 1 || k > d - 2) throw std::invalid_argument("decode_bidiagonal: bad code");
    if (code.b <= 0 || code.b >= int_pow(m, k) || code.b % m == 0)
        throw std::invalid_argument("decode_bidiagonal: numerator out of range");

    std::vector<Rat> lambda(d, Rat(0));
    lambda[2] = Rat(code.b, int_pow(m, k));
    lambda[2].canonicalize();
    Int c = code.b;
    for (long t = 2; t <= k; ++t) {
        Int mod = int_pow(m, k - t + 1);
        c = mod - (c % mod);
        lambda[t + 1] = Rat(c, mod);
        lambda[t + 1].canonicalize();
    }
    lambda[1] = Rat(1) - lambda[2];
    Rat s = 0;
    for (long i = 1; i < d; ++i) s += lambda[i];
    lambda[0] = Rat(rat_ceil(s)) - s;
    lambda[0].canonicalize();
    return lambda;
}

void enumerate_bidiagonal(long m, long d, const FppSink& sink) {
    if (m < 2) throw std::invalid_argument("enumerate_bidiagonal: m must be >= 2");
    if (d < 3) throw std::invalid_argument("enumerate_bidiagonal: d must be >= 3");
    const LatticeSimplex simplex = make_bidiagonal(m, d);
    const IntMatrix& b = simplex.homogenized();

    FppPoint zero;
    zero.lambda.assign(d, Rat(0));
    zero.point.assign(d, Int(0));
    zero.height = 0;
    sink(zero);

    for (long k = 1; k <= d - 2; ++k) {
        const Int mk = int_pow(m, k);
        for (Int num = 1; num < mk; ++num) {
            if (num % m == 0) continue;
            FppPoint pt;
            pt.lambda = decode_bidiagonal(m, BidiagonalCode{k, num}, d);
            pt.point = lattice_point_of(b, pt.lambda);
            pt.height = to_long(pt.point[0], "height");
            sink(pt);
        }
    }
}

long bidiagonal_code_k(long m, const Rat& lambda2) {
    if (lambda2 == 0) throw std::invalid_argument("bidiagonal_code_k: lambda_2 is zero");
    Int den = lambda2.get_den();
    long k = 0;
    while (den > 1) {
        if (den % m != 0)
            throw std::invalid_argument("bidiagonal_code_k: denominator is not a power of m");
        den /= m;
        ++k;
    }
    return k;
}

namespace {

bool is_zero_point(const FppPoint& pt) {
    for (const Rat& l : pt.lambda)
        if (l != 0) return false;
    return true;
}

}  // namespace

bool check_bidiagonal_height_bound(long m, long d) {
    bool ok = true;
    enumerate_fpp(make_bidiagonal(m, d), [&](const FppPoint& pt) {
        if (is_zero_point(pt)) return;
        long k = bidiagonal_code_k(m, pt.lambda[2]);
        if (pt.height * m < k / 2) ok = false;
    });
    return ok;
}

bool check_multidiagonal_height_bound(const LatticeSimplex& p) {
    if (!p.band())
        throw std::invalid_argument("check_multidiagonal_height_bound: not a multidiagonal simplex");
    const auto& a = *p.band();
    const long s = static_cast<long>(a.size());
    if (s < 2 || std::gcd(a[0], a[1]) != 1)
        throw std::invalid_argument(
            "check_multidiagonal_height_bound: requires a band with gcd(a_1, a_2) = 1");
    bool ok = true;
    enumerate_fpp(p, [&](const FppPoint& pt) {
        long k = -1;
        for (long i = 0; i < static_cast<long>(pt.lambda.size()); ++i)
            if (pt.lambda[i] != 0) k = i;
        if (k < 0) return;  // the zero point
        if (pt.height * a[0] < k / s) ok = false;
    });
    return ok;
}

std::map<std::pair<long, long>, Int> bidiagonal_census(long m, long d) {
    std::map<std::pair<long, long>, Int> census;
    enumerate_fpp(make_bidiagonal(m, d), [&](const FppPoint& pt) {
        if (is_zero_point(pt)) return;
        census[{bidiagonal_code_k(m, pt.lambda[2]), pt.height}] += 1;
    });
    return census;
}

}  // namespace ehrlimit
