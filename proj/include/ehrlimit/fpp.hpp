#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehrlimit/int_polynomial.hpp"
#include "ehrlimit/simplex.hpp"

namespace ehrlimit {

/// A fundamental-parallelepiped lattice point: exact coefficient vector
/// lambda in [0,1)^(d+1) against the homogenized vertices, the lattice point
/// B lambda, and its height (first coordinate).
struct FppPoint {
    std::vector<Rat> lambda;
    std::vector<Int> point;
    long height = 0;
};

using FppSink = std::function<void(const FppPoint&)>;

/// Simplex form not covered by an exact enumeration route.
struct UnsupportedFormError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration would exceed the configured point budget.
struct BudgetError : std::runtime_error {
    BudgetError(Int required, Int budget)
        : std::runtime_error("enumeration budget exceeded: requires " + required.get_str() +
                             " parallelepiped points (budget " + budget.get_str() + ")"),
          required_determinant(std::move(required)) {}
    Int required_determinant;
};

struct HstarOptions {
    Int budget = default_budget();
    int threads = 0;  // 0 = library default worker count
    // Skip the machine-word fast path and run the kernel on
    // arbitrary-precision integers (the path taken automatically when the
    // precomputed overflow bounds do not fit a word).
    bool wide_arithmetic = false;

    static Int default_budget() { return Int(1) << 22; }
};

/// Stream every lattice point of the fundamental parallelepiped exactly once.
///
/// Hermite-normal-form simplices are enumerated over mixed-radix residues
/// z_i in [0, B_ii), emitted in lexicographic representative order, the zero
/// point first; lambda is recovered by exact rational back-substitution with
/// per-coordinate fractional reduction. Simplices conv{e_1,..,e_d,-q} use the
/// cyclic parameterization lambda = (frac(b q_i / N))_i, b/N for b = 0..N-1
/// with N = 1 + sum(q). Anything else raises UnsupportedFormError.
///
/// This is the serial reference path; hstar() is the counting kernel.
void enumerate_fpp(const LatticeSimplex& p, const FppSink& sink);

/// h*-polynomial: coefficient of z^h = number of parallelepiped points at
/// height h. Runs the parallel counting kernel (machine-word fast path with
/// precomputed overflow bounds, arbitrary-precision otherwise). Throws
/// BudgetError when the determinant exceeds opts.budget.
IntPolynomial hstar(const LatticeSimplex& p, const HstarOptions& opts = {});

/// Serial reference: folds enumerate_fpp heights. Kept independent of the
/// kernel so the two routes can be compared in tests and benchmarks.
IntPolynomial hstar_reference(const LatticeSimplex& p);

/// Identifies one nonzero parallelepiped point of a bidiagonal simplex:
/// lambda_2 = b / m^k in lowest terms (0 < b < m^k, m does not divide b).
struct BidiagonalCode {
    long k = 0;
    Int b;
};

/// Expand a code into the full coefficient vector of length d: the residue
/// chain lambda_{t+1} = (m^{k-t+1} - (c_t mod m^{k-t+1})) / m^{k-t+1} runs
/// through lambda_{k+1} with denominator m, lambda_1 = 1 - lambda_2, and
/// lambda_0 makes the coordinate sum integral.
std::vector<Rat> decode_bidiagonal(long m, const BidiagonalCode& code, long d);

/// Specialized enumerator for bidiagonal simplices: the zero point first,
/// then decode_bidiagonal for every code, k ascending then b ascending.
/// Agrees with enumerate_fpp(make_bidiagonal(m, d)) as a multiset.
void enumerate_bidiagonal(long m, long d, const FppSink& sink);

/// Denominator exponent k of a nonzero value lambda_2 = b / m^k.
/// Throws when the denominator is not a positive power of m.
long bidiagonal_code_k(long m, const Rat& lambda2);

/// Every nonzero point of the bidiagonal simplex satisfies
/// height * m >= floor(k / 2) for its code k.
bool check_bidiagonal_height_bound(long m, long d);

/// Every nonzero point of a multidiagonal simplex with gcd(a_1, a_2) = 1
/// satisfies height * a_1 >= floor(k / s), where k is the largest index of a
/// nonzero lambda entry. Throws unless the simplex carries a band with
/// s >= 2 and coprime leading entries.
bool check_multidiagonal_height_bound(const LatticeSimplex& p);

/// Census of nonzero bidiagonal parallelepiped points grouped by
/// (denominator exponent k of lambda_2, height).
std::map<std::pair<long, long>, Int> bidiagonal_census(long m, long d);

}  // namespace ehrlimit
