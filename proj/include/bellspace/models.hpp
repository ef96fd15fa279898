// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "bellspace/bell_spaces.hpp"
#include "bellspace/correlation.hpp"
#include "bellspace/prob_core.hpp"
#include "bellspace/rational.hpp"

namespace bellspace {

/// Analyzer angles in exact degrees; trigonometry is evaluated in double
/// precision only where a cos² law enters.
struct SettingAngles {
    Rat a = Rat(0);
    Rat ap = Rat(45);
    Rat b = Rat(0);
    Rat bp = Rat(45);

    BellLayout layout() const;
};

/// CHSH-optimal analyzer set (0°, 45°; 22.5°, −22.5°).
SettingAngles optimal_angles();

/// Local hidden-variable model: discrete λ support with prior, and response
/// probabilities P(A=1|setting,λ), P(B=1|setting,λ). The locality and
/// λ-independence flags are declarations the inequality engine checks; they
/// are data, never inferred.
struct LHVModel {
    LambdaSupport lambda;
    std::array<std::vector<Rat>, 2> response_a; // [setting][lambda]
    std::array<std::vector<Rat>, 2> response_b;
    SettingAngles angles;
    std::vector<Rat> lambda_angles; // degrees; set by angular constructions
    bool locality = true;
    bool lambda_independence = true;

    void validate() const;
};

/// Classical polarization model: λ is a hidden polarization angle on a
/// uniform grid over [0°,180°), and a detector fires exactly when
/// cos²(setting − λ) > 1/2. Satisfies locality and λ-independence by
/// construction.
LHVModel threshold_photon_lhv(std::size_t grid_size, const SettingAngles& angles = {});

/// Mixture over the 16 deterministic assignments (A_a, A_a', B_b, B_b').
/// Strategy index: bit0 = A_a, bit1 = A_a', bit2 = B_b, bit3 = B_b'.
struct DeterministicMixture {
    std::array<Rat, 16> weights;

    void validate() const; // NotAMeasure on negative weight / sum != 1
    static bool strategy_bit(std::size_t strategy, int bit) {
        return (strategy >> bit) & 1u;
    }
};

/// Maximally entangled polarization pair measured at the given angles.
struct QuantumPairModel {
    SettingAngles angles;
};

/// Canonical nonsignaling extremal box.
struct PRBox {};

using ModelSpec = std::variant<LHVModel, DeterministicMixture, QuantumPairModel, PRBox>;

/// weight(A,α,B,β,λ) = P(α,β)·P(λ)·P(A|α,λ)·P(B|β,λ).
Measure lhv_to_space1(const LHVModel& m, const std::array<Rat, 4>& pair_weights);

/// Space-3 embedding: counterfactual slots drawn independently per side given
/// λ, settings independent of everything.
Measure lhv_to_space3(const LHVModel& m, const std::array<Rat, 4>& pair_weights);

/// The canonical product embedding into the 16 deterministic strategies:
/// weight(s) = Σ_λ P(λ) Π_slots P(slot value | λ).
DeterministicMixture lhv_to_mixture(const LHVModel& m);

/// Atom weights equal mixture weights; λ is inert (single value).
Measure mixture_to_space2(const DeterministicMixture& d, const BellLayout& layout = {});

CorrelationTable mixture_table(const DeterministicMixture& d, const BellLayout& layout = {});

/// p11(a,b) = ½cos²(a−b), marginals ½. The ±1-convention correlator is
/// cos 2(a−b).
CorrelationTable quantum_table(const QuantumPairModel& q);
std::array<double, 4> quantum_correlators(const QuantumPairModel& q);

/// p11 = ½ on (a,b),(a',b),(a,b') and 0 on (a',b'); marginals ½.
CorrelationTable pr_table(const BellLayout& layout = {});

/// Reduce a measure on one of the three spaces to a correlation table.
/// Space 1 and 3 use conditional probabilities P(...|settings); space 2 uses
/// plain joints of the counterfactual slots.
CorrelationTable table_of(const Measure& m, int space_id, const BellLayout& layout = {});

CorrelationTable table_of_model(const ModelSpec& model);

/// Setting labels declared by a model (exact-degree labels for LHV/quantum,
/// layout defaults for mixtures and the PR box).
BellLayout layout_of_model(const ModelSpec& model);

} // namespace bellspace
