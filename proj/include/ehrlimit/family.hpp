#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ehrlimit/fpp.hpp"
#include "ehrlimit/int_polynomial.hpp"

namespace ehrlimit {

enum class FamilyKind {
    standard_reflexive,  // S_d
    delta_one_q,         // a fixed Delta_(1,q); no dimension schedule
    q_of_n,
    bidiagonal,
    multidiagonal,
    crosspolytope,  // d-fold free sum of S_1
};

/// Identity of a dimension-indexed simplex family (or a fixed member).
struct FamilySpec {
    FamilyKind kind = FamilyKind::standard_reflexive;
    long m = 0;           // bidiagonal
    std::vector<long> a;  // multidiagonal band
    std::vector<long> q;  // delta_one_q

    static FamilySpec S() { return {FamilyKind::standard_reflexive, 0, {}, {}}; }
    static FamilySpec qn() { return {FamilyKind::q_of_n, 0, {}, {}}; }
    static FamilySpec bidiag(long m) { return {FamilyKind::bidiagonal, m, {}, {}}; }
    static FamilySpec multidiag(std::vector<long> a) {
        return {FamilyKind::multidiagonal, 0, std::move(a), {}};
    }
    static FamilySpec cross() { return {FamilyKind::crosspolytope, 0, {}, {}}; }
    static FamilySpec delta(std::vector<long> q) {
        return {FamilyKind::delta_one_q, 0, {}, std::move(q)};
    }

    void validate() const;
    bool has_schedule() const { return kind != FamilyKind::delta_one_q; }
    /// First schedule parameter with a defined member.
    long schedule_start() const;

    nlohmann::ordered_json to_json() const;
};

/// h* of the family member at the given schedule parameter (dimension index
/// for the simplex families, n for q(n), d for the crosspolytope).
IntPolynomial family_member_hstar(const FamilySpec& fam, long param, const HstarOptions& opts = {});

}  // namespace ehrlimit
