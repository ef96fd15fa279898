// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>

#include "bellspace/rational.hpp"

namespace bellspace {

/// A probability-like scalar that is either exact (rational), an estimated
/// frequency (exact rational value N_E/M plus a standard error), or an
/// analytic floating value (trigonometric laws).
class Scalar {
public:
    static Scalar exact(Rat value);
    static Scalar estimated(Rat frequency, double stderr_, long n);
    static Scalar analytic(double value);

    bool has_exact() const { return has_rat_; }
    const Rat& exact_value() const; // throws DomainError when analytic-float
    double value() const { return has_rat_ ? to_double(rat_) : approx_; }
    double se() const { return se_; }
    long n() const { return n_; }

private:
    bool has_rat_ = true;
    Rat rat_ = Rat(0);
    double approx_ = 0.0;
    double se_ = 0.0;
    long n_ = 0;
};

enum class Provenance { analytic, estimated };

/// Pair indices follow the sign structure of the inequalities:
///   0 = (a,b)   1 = (a',b)   2 = (a,b')   3 = (a',b')
/// with the minus sign on pair 3 in the canonical orientation.
inline int pair_index(int a_setting, int b_setting) { return a_setting + 2 * b_setting; }

/// The four pairwise P(both = 1) plus the per-side marginals, with settings
/// and provenance. The one table every model in this library reduces to.
struct CorrelationTable {
    std::array<std::string, 2> a_labels{"0", "45"};
    std::array<std::string, 2> b_labels{"0", "45"};
    std::array<Scalar, 4> p11; // indexed by pair_index
    std::array<Scalar, 2> pA;  // P(A=1) at a, a'
    std::array<Scalar, 2> pB;  // P(B=1) at b, b'
    Provenance provenance = Provenance::analytic;
    long runs = 0;

    bool all_exact() const;
    /// Entries in [0,1] and the upper Fréchet bound
    /// p11(x,y) <= min(pA(x), pB(y)); throws DomainError on violation.
    void validate() const;
};

/// Lower/upper Fréchet consistency of a single (p11, pA, pB) triple:
/// max(0, pA+pB-1) <= p11 <= min(pA, pB).
bool frechet_consistent(const Rat& p11, const Rat& pa, const Rat& pb);

} // namespace bellspace
