#include "ehrlimit/family.hpp"

#include <stdexcept>

#include "ehrlimit/combinators.hpp"
#include "ehrlimit/simplex.hpp"

namespace ehrlimit {

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::bidiagonal:
            if (m < 2) throw std::invalid_argument("family: bidiagonal requires m >= 2");
            return;
        case FamilyKind::multidiagonal: {
            if (a.empty()) throw std::invalid_argument("family: multidiagonal requires a band");
            for (long ai : a)
                if (ai < 1) throw std::invalid_argument("family: band entries must be >= 1");
            for (size_t j = 1; j < a.size(); ++j)
                if (a[0] <= a[j]) throw std::invalid_argument("family: a_1 must exceed later band entries");
            return;
        }
        case FamilyKind::delta_one_q:
            if (q.empty()) throw std::invalid_argument("family: delta1q requires q");
            for (long qi : q)
                if (qi < 1) throw std::invalid_argument("family: q entries must be >= 1");
            return;
        default:
            return;
    }
}

long FamilySpec::schedule_start() const {
    switch (kind) {
        case FamilyKind::standard_reflexive: return 1;
        case FamilyKind::q_of_n: return 2;
        case FamilyKind::bidiagonal: return 3;
        case FamilyKind::multidiagonal: return static_cast<long>(a.size());
        case FamilyKind::crosspolytope: return 1;
        case FamilyKind::delta_one_q:
            throw std::invalid_argument("family: Delta_(1,q) has no dimension schedule");
    }
    throw std::logic_error("family: unknown kind");
}

nlohmann::ordered_json FamilySpec::to_json() const {
    nlohmann::ordered_json j;
    switch (kind) {
        case FamilyKind::standard_reflexive: j["kind"] = "S"; break;
        case FamilyKind::delta_one_q:
            j["kind"] = "delta1q";
            j["q"] = q;
            break;
        case FamilyKind::q_of_n: j["kind"] = "qn"; break;
        case FamilyKind::bidiagonal:
            j["kind"] = "bidiagonal";
            j["m"] = m;
            break;
        case FamilyKind::multidiagonal:
            j["kind"] = "multidiagonal";
            j["a"] = a;
            break;
        case FamilyKind::crosspolytope: j["kind"] = "crosspolytope"; break;
    }
    return j;
}

IntPolynomial family_member_hstar(const FamilySpec& fam, long param, const HstarOptions& opts) {
    fam.validate();
    switch (fam.kind) {
        case FamilyKind::standard_reflexive: return hstar(make_S(param), opts);
        case FamilyKind::q_of_n: return hstar(make_q_of_n(param), opts);
        case FamilyKind::bidiagonal: return hstar(make_bidiagonal(fam.m, param), opts);
        case FamilyKind::multidiagonal: return hstar(make_multidiagonal(fam.a, param), opts);
        case FamilyKind::crosspolytope: return hstar(make_crosspolytope(param), opts);
        case FamilyKind::delta_one_q: {
            std::vector<Int> qi(fam.q.begin(), fam.q.end());
            return hstar(make_delta_one_q(qi), opts);
        }
    }
    throw std::logic_error("family: unknown kind");
}

}  // namespace ehrlimit
