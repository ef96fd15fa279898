// SPDX-License-Identifier: Apache-2.0
#include "bellspace/correlation.hpp"

#include "bellspace/errors.hpp"

namespace bellspace {

Scalar Scalar::exact(Rat value) {
    Scalar s;
    s.has_rat_ = true;
    s.rat_ = std::move(value);
    return s;
}

Scalar Scalar::estimated(Rat frequency, double stderr_, long n) {
    if (n <= 0) throw DomainError("estimated scalar requires a positive sample count");
    Scalar s;
    s.has_rat_ = true;
    s.rat_ = std::move(frequency);
    s.se_ = stderr_;
    s.n_ = n;
    return s;
}

Scalar Scalar::analytic(double value) {
    Scalar s;
    s.has_rat_ = false;
    s.approx_ = value;
    return s;
}

const Rat& Scalar::exact_value() const {
    if (!has_rat_) throw DomainError("scalar has no exact rational value");
    return rat_;
}

bool CorrelationTable::all_exact() const {
    for (const auto& s : p11)
        if (!s.has_exact()) return false;
    return pA[0].has_exact() && pA[1].has_exact() && pB[0].has_exact() && pB[1].has_exact();
}

namespace {
void check_unit(const Scalar& s, const char* what) {
    if (s.has_exact()) {
        if (s.exact_value() < 0 || s.exact_value() > 1)
            throw DomainError(std::string(what) + " outside [0,1]");
    } else if (!(s.value() >= 0.0 && s.value() <= 1.0)) {
        throw DomainError(std::string(what) + " outside [0,1]");
    }
}
} // namespace

void CorrelationTable::validate() const {
    for (const auto& s : p11) check_unit(s, "joint probability");
    for (const auto& s : pA) check_unit(s, "marginal");
    for (const auto& s : pB) check_unit(s, "marginal");
    for (int ai = 0; ai < 2; ++ai) {
        for (int bi = 0; bi < 2; ++bi) {
            const Scalar& p = p11[pair_index(ai, bi)];
            const Scalar& a = pA[ai];
            const Scalar& b = pB[bi];
            bool bad;
            if (p.has_exact() && a.has_exact() && b.has_exact()) {
                bad = p.exact_value() > a.exact_value() || p.exact_value() > b.exact_value();
            } else {
                const double tol = 3.0 * (p.se() + a.se() + b.se()) + 1e-12;
                bad = p.value() > a.value() + tol || p.value() > b.value() + tol;
            }
            if (bad) throw DomainError("Fréchet bound violated: p11 > min(pA, pB)");
        }
    }
}

bool frechet_consistent(const Rat& p11, const Rat& pa, const Rat& pb) {
    if (p11 < 0 || p11 > 1 || pa < 0 || pa > 1 || pb < 0 || pb > 1) return false;
    if (p11 > pa || p11 > pb) return false;
    return p11 >= pa + pb - 1;
}

} // namespace bellspace
