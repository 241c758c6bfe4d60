// Three-valued certified verdicts over interval-valued inequality sides,
// plus the adaptive tolerance policy shared by the theorem checkers.

#pragma once

#include "eigengap/interval.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eigengap {

enum class Verdict { holds, fails, undecided, skipped };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "Holds-certified";
        case Verdict::fails: return "Fails-certified";
        case Verdict::undecided: return "Undecided";
        case Verdict::skipped: return "Skipped";
    }
    return "?";
}

// Claim "lhs > rhs" (the checked inequalities are strict).
inline Verdict decide_strict_gt(const Interval& lhs, const Interval& rhs) {
    if (lhs.lo().cmp(rhs.hi()) > 0) return Verdict::holds;
    if (lhs.hi().cmp(rhs.lo()) <= 0) return Verdict::fails;
    return Verdict::undecided;
}

// Claim "lhs >= rhs".
inline Verdict decide_ge(const Interval& lhs, const Interval& rhs) {
    if (lhs.lo().cmp(rhs.hi()) >= 0) return Verdict::holds;
    if (lhs.hi().cmp(rhs.lo()) < 0) return Verdict::fails;
    return Verdict::undecided;
}

// Claim "lhs < rhs".
inline Verdict decide_strict_lt(const Interval& lhs, const Interval& rhs) {
    return decide_strict_gt(rhs, lhs);
}

struct BoundVerdict {
    std::string check_id;
    Interval lhs, rhs;  // NaN endpoints when skipped
    Verdict verdict = Verdict::skipped;
    std::vector<std::pair<std::string, bool>> hypotheses;
    unsigned precision_bits = 0;
    std::string notes;

    bool all_hypotheses_hold() const {
        for (const auto& [name, ok] : hypotheses)
            if (!ok) return false;
        return true;
    }
};

// Enclosure width request: RHS/8 first, one retry at RHS/64 (the targets of
// the extremal families shrink geometrically, so a fixed tolerance cannot
// serve every instance).
struct TolerancePolicy {
    double rhs_fraction = 1.0 / 8.0;
    double retry_fraction = 1.0 / 64.0;
    unsigned max_precision_bits = 8192;
};

inline mpfr_prec_t prec_for_tol(double tol) {
    if (tol <= 0) return 256;
    double bits = -std::log2(tol);
    if (bits < 32) bits = 32;
    return static_cast<mpfr_prec_t>(bits) + 64;
}

}  // namespace eigengap
