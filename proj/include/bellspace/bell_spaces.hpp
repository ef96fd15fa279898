// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "bellspace/prob_core.hpp"
#include "bellspace/rational.hpp"

namespace bellspace {

/// Discrete hidden-variable support with a prior (used when settings
/// independence holds). Weights are exact rationals summing to 1.
struct LambdaSupport {
    std::vector<std::string> labels;
    std::vector<Rat> prior;

    static LambdaSupport single(std::string label = "l0");
    static LambdaSupport uniform(std::vector<std::string> labels);
    void validate() const; // InvalidSpace on empty / bad prior
};

/// Symbolic angle labels of the two settings on each side. The labels only
/// matter numerically in the quantum model; here they name variables and
/// values ("0" and "45" by default).
struct BellLayout {
    std::array<std::string, 2> a_labels{"0", "45"};
    std::array<std::string, 2> b_labels{"0", "45"};

    std::string slot_a(int which) const { return "A_" + a_labels[which]; }
    std::string slot_b(int which) const { return "B_" + b_labels[which]; }
};

// Sample spaces of the three descriptions of a two-setting/two-outcome run.
//   space 1: (A, alpha, B, beta, lambda)            — 16·|Λ| outcomes
//   space 2: (A_0, A_45, B_0, B_45, lambda)          — 16·|Λ| outcomes
//   space 3: (A_0, A_45, alpha, B_0, B_45, beta, lambda) — 64·|Λ| outcomes
SampleSpace sample_space1(const LambdaSupport& lam, const BellLayout& layout = {});
SampleSpace sample_space2(const LambdaSupport& lam, const BellLayout& layout = {});
SampleSpace sample_space3(const LambdaSupport& lam, const BellLayout& layout = {});

/// The corresponding probability-space scaffolds: biggest event space
/// (singleton atoms), no measure attached.
EventSpace build_space1(const LambdaSupport& lam, const BellLayout& layout = {});
EventSpace build_space2(const LambdaSupport& lam, const BellLayout& layout = {});
EventSpace build_space3(const LambdaSupport& lam, const BellLayout& layout = {});

/// One experimental run: result bit and selected angle on each side.
struct Observation {
    int a_result = 0;
    std::string a_angle;
    int b_result = 0;
    std::string b_angle;
};

/// The event a single observation picks out in the given space. The same
/// observation fixes different coordinates in each space:
///   space 1: A, alpha, B, beta fixed, lambda free          (|Λ| outcomes)
///   space 2: the two observed counterfactual slots fixed    (4·|Λ|)
///   space 3: slots and settings fixed, other slots free     (4·|Λ|)
Event event_of(int space_id, const Observation& obs, const SampleSpace& space,
               const BellLayout& layout = {});

/// Whether a conjunction of variable=value constraints denotes an event of
/// the given space (every constrained variable and value must exist there).
bool representable(const SampleSpace& space,
                   const std::vector<std::pair<std::string, std::string>>& constraints);

/// Projections of a space-3 measure down to space 2 (marginalize the
/// settings out) or space 1 (the observed result is the counterfactual slot
/// selected by the setting).
Measure project_space3(const Measure& m3, int target, const BellLayout& layout = {});

/// The six-run worked example: one experimental record depicted in space 1
/// (observed result + angle) and in space 2 (both counterfactual slots, one
/// of them observed).
struct Table1Demo {
    struct Row {
        int run;
        int a;               // observed result
        std::string alpha;   // selected angle label
        int a0, a45;         // space-2 depiction
        bool observed_first; // true when the 0° slot was the observed one
    };
    std::vector<Row> rows;
    Rat p_joint;          // P(A=1, alpha=0)        = 1/3
    Rat p_alpha0;         // P(alpha=0)             = 1/2
    Rat p_conditional;    // P(A=1 | alpha=0)       = 2/3
    Rat p_counterfactual; // P(A_0 = 1)             = 2/3
    bool eq9_holds;       // P(A_0=1) == P(A=1|alpha=0), exactly
};

Table1Demo table1_demo();

} // namespace bellspace
