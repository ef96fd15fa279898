// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellspace/rational.hpp"

namespace bellspace {

/// A named variable with a finite, ordered value set.
struct Variable {
    std::string name;
    std::vector<std::string> values;
};

/// An event: a subset of the outcomes of a sample space, as a bitset indexed
/// by outcome.
using Event = boost::dynamic_bitset<>;

/// Finite sample space: the Cartesian product of its variables' value sets.
/// Outcomes are ordered lexicographically in declaration order (first declared
/// variable most significant), and every serialization uses that order.
///
/// An empty variable list is the trivial space with one (empty-tuple) outcome;
/// it arises as the target of marginalizing every variable out.
class SampleSpace {
public:
    explicit SampleSpace(std::vector<Variable> variables);

    std::size_t size() const { return size_; }
    const std::vector<Variable>& variables() const { return variables_; }

    bool has_variable(std::string_view name) const;
    std::size_t var_index(std::string_view name) const; // throws UnknownVariable
    std::size_t value_index(std::size_t var, std::string_view value) const;

    /// Value index of `var` in outcome number `outcome`.
    std::size_t digit(std::size_t outcome, std::size_t var) const;

    /// Outcome number of a full assignment (one value index per variable).
    std::size_t outcome_of(std::span<const std::size_t> digits) const;

    /// "A=1,alpha=0,..." in declaration order.
    std::string outcome_label(std::size_t outcome) const;

    /// Event of all outcomes consistent with the given (variable, value)
    /// constraints. Unknown names/values throw UnknownVariable.
    Event where(std::span<const std::pair<std::string, std::string>> constraints) const;
    Event where(std::initializer_list<std::pair<std::string, std::string>> constraints) const;

    Event full_event() const;
    Event empty_event() const;

    bool same_shape(const SampleSpace& other) const;

private:
    std::vector<Variable> variables_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 1;
};

/// make_space of the artifact interface: Cartesian-product construction.
SampleSpace make_space(std::vector<Variable> variables);

/// Event space over a sample space, represented by an atom partition: the
/// induced event family is exactly the unions of atoms. This keeps closure
/// checks O(outcomes) where the power set would be 2^outcomes.
class EventSpace {
public:
    EventSpace(SampleSpace base, std::vector<Event> atoms);

    /// Biggest event space: singleton atoms, every subset is an event.
    static EventSpace discrete(SampleSpace base);
    /// Smallest event space: one atom, events are only ∅ and Ω.
    static EventSpace trivial(SampleSpace base);

    const SampleSpace& base() const { return base_; }
    const std::vector<Event>& atoms() const { return atoms_; }
    bool is_discrete() const;

private:
    SampleSpace base_;
    std::vector<Event> atoms_;
};

struct VerificationReport {
    bool contains_sample_space = false;  // Ω is an event
    bool complement_closed = false;
    bool closure_under_union_intersection = false;
    std::vector<std::string> violations;
    bool valid() const {
        return contains_sample_space && complement_closed &&
               closure_under_union_intersection && violations.empty();
    }
};

/// Checks the three event-space conditions by validating the atom partition
/// (disjoint, non-empty, covering). A valid partition induces a family that
/// contains Ω, is complement-closed and is closed under finite unions and
/// intersections; each partition defect is reported against the condition it
/// breaks ("not a cover", "atoms overlap", "empty atom").
VerificationReport verify_event_space(const EventSpace& es);

/// A random variable: a total map outcome -> rational value.
struct RandomVariable {
    std::string name;
    std::vector<Rat> values; // one per outcome

    static RandomVariable indicator(const SampleSpace& space, const Event& e,
                                    std::string name = "1_E");
    /// 1 when `var == one_value`, else 0.
    static RandomVariable binary(const SampleSpace& space, std::string_view var,
                                 std::string_view one_value);
    static RandomVariable constant(const SampleSpace& space, Rat c);
};

/// Exact probability measure: one nonnegative rational weight per atom,
/// summing to exactly 1. Construction enforces the axioms; additivity over
/// disjoint unions then holds by construction. Immutable after construction.
class Measure {
public:
    Measure(EventSpace space, std::vector<Rat> atom_weights);

    static Measure uniform(EventSpace space);
    /// Measure on the biggest event space from per-outcome weights.
    static Measure on_outcomes(SampleSpace space, std::vector<Rat> weights);

    const EventSpace& space() const { return space_; }
    const SampleSpace& base() const { return space_.base(); }
    const std::vector<Rat>& atom_weights() const { return weights_; }

    /// Sum of the weights of the atoms making up `e`. Throws
    /// EventNotMeasurable when `e` is not a union of atoms.
    Rat probability(const Event& e) const;

    /// P(e1|e2) = P(e1 ∩ e2) / P(e2); P(e2) = 0 throws ConditionOnNull.
    Rat conditional(const Event& e1, const Event& e2) const;

    /// Marginal measure on the sub-product of `keep` variables (declaration
    /// order preserved). Each reduced outcome's cylinder must be a union of
    /// atoms of this measure.
    Measure marginal(std::span<const std::string> keep) const;
    Measure marginal(std::initializer_list<std::string> keep) const;

    /// Σ f(outcome)·weight. f must be total and constant on atoms.
    Rat expectation(const RandomVariable& f) const;
    /// Expectation of a pointwise product of random variables.
    Rat expectation(std::span<const RandomVariable> factors) const;

    /// Per-outcome weight; requires singleton atoms.
    Rat outcome_weight(std::size_t outcome) const;

private:
    EventSpace space_;
    std::vector<Rat> weights_;
};

/// Relative frequency N_E / M of a predicate-event over a log of observed
/// outcomes (outcome indices into a common sample space).
Rat relative_frequency(std::span<const std::size_t> log, const Event& e);

} // namespace bellspace
