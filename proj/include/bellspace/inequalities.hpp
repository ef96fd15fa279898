// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bellspace/correlation.hpp"
#include "bellspace/models.hpp"
#include "bellspace/prob_core.hpp"

namespace bellspace {

/// One evaluated inequality: value, bounds, violation verdict and the
/// hypotheses the derivation commits to. For exact inputs the verdict uses
/// zero tolerance; for estimated inputs a violation is declared only beyond
/// three propagated standard errors.
struct InequalityReport {
    std::string id; // "core", "chsh_pm1", "chsh_01", "1", "2", "3", "freq"
    Scalar value;
    int lo = -1;
    int hi = 0;
    double stderr_ = 0.0;  // propagated; 0 for exact inputs
    double tolerance = 0.0; // 3·stderr
    bool violated = false;
    std::vector<std::string> hypotheses;
    std::vector<std::pair<std::string, Scalar>> terms;
};

/// The numerical inequality everything else reduces to:
///   value = ab + a'b + ab' − a'b' − a − b ∈ [−1, 0]  for a,b,a',b' ∈ [0,1].
/// The double overload verifies the bounds by exact dyadic-rational
/// evaluation whenever rounding puts the double value outside them.
Rat core_inequality(const Rat& a, const Rat& b, const Rat& ap, const Rat& bp);
double core_inequality(double a, double b, double ap, double bp);

/// CHSH in the ±1 convention: S = E(a,b) + E(a',b) + E(a,b') − E(a',b'),
/// bounds ±2. Correlators must lie in [−1, 1].
InequalityReport chsh_pm1(const std::array<Scalar, 4>& correlators);
/// Correlators derived from a 0/1 table: E = 4p11 − 2pA − 2pB + 1 per pair.
InequalityReport chsh_pm1(const CorrelationTable& t);

/// CHSH in the 0/1 convention (the Bell expression of this library),
/// bounds [−1, 0]. The report's terms carry the conversion value
/// S = 4·value + 2 for cross-checking against chsh_pm1.
InequalityReport chsh_01(const CorrelationTable& t);

/// Inequality 1: the space-1 Bell inequality. Terms are computed by the
/// λ-sum  P(A=1,B=1|α,β) = Σ_λ P(A=1|α,λ)P(B=1|β,λ)P(λ); the marginal terms
/// are Σ_λ P(A=1|α,λ)P(λ). Requires the model's locality and λ-independence
/// flags; rejects with HypothesisViolation otherwise.
InequalityReport inequality1(const LHVModel& model);

/// Inequality 2: needs only a valid Kolmogorov measure on space 2 — no
/// locality, no λ-independence. Terms are event sums P(A_x=1, B_y=1).
InequalityReport inequality2(const Measure& m2, const BellLayout& layout = {});
/// Same expression read off a correlation table interpreted as space-2
/// joints (the reading estimated tables get under fair sampling).
InequalityReport inequality2_from_table(const CorrelationTable& t);

struct Space3Hypotheses {
    bool locality = true;
    bool lambda_independence = true;
};

/// Inequality 3: the space-3 conditional form. `theta` / `omega` select which
/// setting value is conditioned on in each slot (defaults: first/second).
/// Conditioning events must have positive probability.
InequalityReport inequality3(const Measure& m3, const Space3Hypotheses& hyp,
                             const BellLayout& layout = {},
                             int theta = 0, int theta_p = 1, int omega = 0, int omega_p = 1);

/// One run of complete counterfactual data: values of A_a, A_a', B_b, B_b'.
/// −1 marks a missing value (rejected by the evaluators).
struct CounterfactualRow {
    std::int8_t a0 = -1, a1 = -1, b0 = -1, b1 = -1;
    bool complete() const {
        return a0 >= 0 && a0 <= 1 && a1 >= 0 && a1 <= 1 && b0 >= 0 && b0 <= 1 && b1 >= 0 &&
               b1 <= 1;
    }
};

/// The probability-free inequality: the exact per-run average
///   (1/N) Σ_i [A_a B_b + A_a B_b' + A_a' B_b − A_a' B_b' − A_a − B_b]
/// lies in [−1, 0] for every complete finite 0/1 table.
InequalityReport frequency_inequality(std::span<const CounterfactualRow> rows);

/// Observed-vs-complete comparison under a per-run selection of which setting
/// pair was actually measured (0..3 in pair_index order). The reconstruction
/// from observed subsets only may leave [−1, 0]; the full-table value never
/// does. This is the fair-sampling gap made concrete.
struct GapReport {
    struct Term {
        std::string name;
        Rat observed;
        Rat full;
        Rat gap; // observed − full
        long n_observed = 0;
    };
    std::vector<Term> terms; // 4 products then 2 marginals
    Rat observed_value;
    Rat full_value;
    bool observed_in_bounds = false;
    bool full_in_bounds = false;
};

GapReport fair_sampling_gap(std::span<const CounterfactualRow> rows,
                            std::span<const int> selection);

/// A deterministic dataset + selection for which the observed reconstruction
/// exits [−1, 0] (value 1/2) while the complete-table value is −2/3.
struct FairSamplingDemo {
    std::vector<CounterfactualRow> rows;
    std::vector<int> selection;
};
FairSamplingDemo adversarial_fair_sampling_demo(int repetitions = 1);

/// The hypothesis ledger of each inequality ("1", "2", "3", "freq").
std::vector<std::string> hypothesis_ledger(const std::string& inequality_id);

/// Grid scan of the 0/1 CHSH value of the quantum cos² law over analyzer
/// angles with the given step (must divide 360). Returns the maximum and one
/// argmax angle quadruple (a, a', b, b') in degrees.
struct AngleScan {
    double max_chsh01 = 0.0;
    double max_chsh_pm1 = 0.0;
    std::array<double, 4> argmax_deg{};
};
AngleScan scan_angles(double step_deg);

} // namespace bellspace
