#pragma once

#include <initializer_list>
#include <vector>

#include "ehrlimit/numeric.hpp"

namespace ehrlimit {

/// Polynomial over Z, coeffs[i] = coefficient of z^i, trailing zeros trimmed.
/// The zero polynomial is the empty coefficient list and has no degree.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> cs);
    explicit IntPolynomial(std::vector<Int> cs);

    static IntPolynomial one() { return IntPolynomial{1}; }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const;  // throws on the zero polynomial

    /// Coefficient of z^i; zero beyond the stored range.
    const Int& at(long i) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int sum() const;  // evaluation at z = 1

    bool operator==(const IntPolynomial&) const = default;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Exact convolution product.
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    return poly_mul(a, b);
}

}  // namespace ehrlimit
