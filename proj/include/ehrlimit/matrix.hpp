#pragma once

#include <optional>
#include <vector>

#include "ehrlimit/numeric.hpp"

namespace ehrlimit {

/// Dense integer matrix, row-major. Small: dimensions stay below ~100.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const IntMatrix&) const = default;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

/// Solve A x = b over the rationals. Returns nullopt when A is singular.
std::optional<std::vector<Rat>> solve(const IntMatrix& a, const std::vector<Rat>& b);

/// Exact inverse over the rationals. Returns nullopt when singular.
std::optional<std::vector<std::vector<Rat>>> invert(const IntMatrix& a);

}  // namespace ehrlimit
