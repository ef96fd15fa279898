// SPDX-License-Identifier: Apache-2.0
#include "bellspace/prob_core.hpp"

#include <algorithm>
#include <set>

#include "bellspace/errors.hpp"

namespace bellspace {

SampleSpace::SampleSpace(std::vector<Variable> variables) : variables_(std::move(variables)) {
    std::set<std::string_view> names;
    for (const auto& v : variables_) {
        if (!names.insert(v.name).second)
            throw InvalidSpace("duplicate variable name '" + v.name + "'");
        if (v.values.empty())
            throw InvalidSpace("variable '" + v.name + "' has an empty value set");
        std::set<std::string_view> vals(v.values.begin(), v.values.end());
        if (vals.size() != v.values.size())
            throw InvalidSpace("variable '" + v.name + "' has duplicate values");
    }
    stride_.assign(variables_.size(), 1);
    for (std::size_t i = variables_.size(); i-- > 0;) {
        if (i + 1 < variables_.size())
            stride_[i] = stride_[i + 1] * variables_[i + 1].values.size();
    }
    size_ = variables_.empty() ? 1 : stride_[0] * variables_[0].values.size();
    if (size_ == 0) throw InvalidSpace("empty sample space");
}

bool SampleSpace::has_variable(std::string_view name) const {
    return std::any_of(variables_.begin(), variables_.end(),
                       [&](const Variable& v) { return v.name == name; });
}

std::size_t SampleSpace::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name) return i;
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

std::size_t SampleSpace::value_index(std::size_t var, std::string_view value) const {
    const auto& vals = variables_.at(var).values;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] == value) return i;
    throw UnknownVariable("variable '" + variables_[var].name + "' has no value '" +
                          std::string(value) + "'");
}

std::size_t SampleSpace::digit(std::size_t outcome, std::size_t var) const {
    return (outcome / stride_.at(var)) % variables_[var].values.size();
}

std::size_t SampleSpace::outcome_of(std::span<const std::size_t> digits) const {
    if (digits.size() != variables_.size())
        throw DomainError("assignment does not cover every variable");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= variables_[i].values.size())
            throw DomainError("value index out of range");
        idx += digits[i] * stride_[i];
    }
    return idx;
}

std::string SampleSpace::outcome_label(std::size_t outcome) const {
    std::string s;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i) s += ",";
        s += variables_[i].name + "=" + variables_[i].values[digit(outcome, i)];
    }
    return s;
}

Event SampleSpace::where(std::span<const std::pair<std::string, std::string>> constraints) const {
    std::vector<std::pair<std::size_t, std::size_t>> fixed;
    fixed.reserve(constraints.size());
    for (const auto& [name, value] : constraints) {
        const std::size_t vi = var_index(name);
        fixed.emplace_back(vi, value_index(vi, value));
    }
    Event e(size_);
    for (std::size_t o = 0; o < size_; ++o) {
        bool ok = true;
        for (const auto& [vi, di] : fixed)
            if (digit(o, vi) != di) { ok = false; break; }
        if (ok) e.set(o);
    }
    return e;
}

Event SampleSpace::where(std::initializer_list<std::pair<std::string, std::string>> cs) const {
    std::vector<std::pair<std::string, std::string>> v(cs.begin(), cs.end());
    return where(std::span<const std::pair<std::string, std::string>>(v));
}

Event SampleSpace::full_event() const {
    Event e(size_);
    e.set();
    return e;
}

Event SampleSpace::empty_event() const { return Event(size_); }

bool SampleSpace::same_shape(const SampleSpace& other) const {
    if (variables_.size() != other.variables_.size()) return false;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].name != other.variables_[i].name ||
            variables_[i].values != other.variables_[i].values)
            return false;
    }
    return true;
}

SampleSpace make_space(std::vector<Variable> variables) {
    return SampleSpace(std::move(variables));
}

EventSpace::EventSpace(SampleSpace base, std::vector<Event> atoms)
    : base_(std::move(base)), atoms_(std::move(atoms)) {
    for (const auto& a : atoms_)
        if (a.size() != base_.size())
            throw InvalidSpace("atom bitset size does not match the sample space");
}

EventSpace EventSpace::discrete(SampleSpace base) {
    std::vector<Event> atoms;
    atoms.reserve(base.size());
    for (std::size_t o = 0; o < base.size(); ++o) {
        Event a(base.size());
        a.set(o);
        atoms.push_back(std::move(a));
    }
    return EventSpace(std::move(base), std::move(atoms));
}

EventSpace EventSpace::trivial(SampleSpace base) {
    Event all(base.size());
    all.set();
    return EventSpace(std::move(base), {all});
}

bool EventSpace::is_discrete() const {
    if (atoms_.size() != base_.size()) return false;
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [](const Event& a) { return a.count() == 1; });
}

VerificationReport verify_event_space(const EventSpace& es) {
    VerificationReport report;
    Event seen(es.base().size());
    bool overlap = false;
    for (std::size_t i = 0; i < es.atoms().size(); ++i) {
        const Event& a = es.atoms()[i];
        if (a.none()) report.violations.push_back("empty atom");
        if ((seen & a).any()) overlap = true;
        seen |= a;
    }
    const bool cover = seen.all() && !es.atoms().empty();
    if (!cover) report.violations.push_back("not a cover");
    if (overlap) report.violations.push_back("atoms overlap");

    // Ω is the union of all atoms only if they cover; complements of
    // atom-unions are atom-unions only if atoms are disjoint.
    report.contains_sample_space = cover;
    report.complement_closed = cover && !overlap;
    report.closure_under_union_intersection = cover && !overlap;
    return report;
}

RandomVariable RandomVariable::indicator(const SampleSpace& space, const Event& e,
                                         std::string name) {
    if (e.size() != space.size()) throw DomainError("indicator event size mismatch");
    RandomVariable rv{std::move(name), std::vector<Rat>(space.size(), Rat(0))};
    for (std::size_t o = 0; o < space.size(); ++o)
        if (e.test(o)) rv.values[o] = 1;
    return rv;
}

RandomVariable RandomVariable::binary(const SampleSpace& space, std::string_view var,
                                      std::string_view one_value) {
    const std::size_t vi = space.var_index(var);
    const std::size_t di = space.value_index(vi, one_value);
    RandomVariable rv{std::string(var), std::vector<Rat>(space.size(), Rat(0))};
    for (std::size_t o = 0; o < space.size(); ++o)
        if (space.digit(o, vi) == di) rv.values[o] = 1;
    return rv;
}

RandomVariable RandomVariable::constant(const SampleSpace& space, Rat c) {
    return RandomVariable{"const", std::vector<Rat>(space.size(), std::move(c))};
}

Measure::Measure(EventSpace space, std::vector<Rat> atom_weights)
    : space_(std::move(space)), weights_(std::move(atom_weights)) {
    const auto report = verify_event_space(space_);
    if (!report.valid()) {
        std::string what = "event space is not a valid partition:";
        for (const auto& v : report.violations) what += " " + v + ";";
        throw InvalidSpace(what);
    }
    if (weights_.size() != space_.atoms().size())
        throw NotAMeasure("one weight per atom required");
    Rat total(0);
    for (const auto& w : weights_) {
        if (w < 0) throw NotAMeasure("negative atom weight (axiom 1)");
        total += w;
    }
    if (total != 1) throw NotAMeasure("atom weights sum to " + rat_string(total) +
                                      ", expected exactly 1 (axiom 2)");
}

Measure Measure::uniform(EventSpace space) {
    const std::size_t n = space.atoms().size();
    if (n == 0) throw NotAMeasure("no atoms");
    return Measure(std::move(space), std::vector<Rat>(n, rat(1, static_cast<long>(n))));
}

Measure Measure::on_outcomes(SampleSpace space, std::vector<Rat> weights) {
    return Measure(EventSpace::discrete(std::move(space)), std::move(weights));
}

Rat Measure::probability(const Event& e) const {
    if (e.size() != base().size()) throw DomainError("event size does not match the space");
    Rat total(0);
    for (std::size_t i = 0; i < space_.atoms().size(); ++i) {
        const Event& a = space_.atoms()[i];
        const Event inter = a & e;
        if (inter.none()) continue;
        if (inter != a)
            throw EventNotMeasurable("event is not a union of atoms of the event space");
        total += weights_[i];
    }
    return total;
}

Rat Measure::conditional(const Event& e1, const Event& e2) const {
    const Rat p2 = probability(e2);
    if (p2 == 0) throw ConditionOnNull("conditioning event has probability 0");
    return probability(e1 & e2) / p2;
}

Measure Measure::marginal(std::span<const std::string> keep) const {
    // Kept variables in original declaration order.
    std::vector<std::size_t> kept;
    for (std::size_t vi = 0; vi < base().variables().size(); ++vi) {
        const auto& name = base().variables()[vi].name;
        if (std::find(keep.begin(), keep.end(), name) != keep.end()) kept.push_back(vi);
    }
    for (const auto& name : keep) (void)base().var_index(name); // UnknownVariable if absent

    std::vector<Variable> reduced_vars;
    reduced_vars.reserve(kept.size());
    for (std::size_t vi : kept) reduced_vars.push_back(base().variables()[vi]);
    SampleSpace reduced(std::move(reduced_vars));

    // reduced index of each original outcome
    std::vector<std::size_t> project(base().size());
    std::vector<std::size_t> digits(kept.size());
    for (std::size_t o = 0; o < base().size(); ++o) {
        for (std::size_t k = 0; k < kept.size(); ++k) digits[k] = base().digit(o, kept[k]);
        project[o] = reduced.outcome_of(digits);
    }

    std::vector<Rat> reduced_weights(reduced.size(), Rat(0));
    for (std::size_t i = 0; i < space_.atoms().size(); ++i) {
        const Event& a = space_.atoms()[i];
        std::size_t target = 0;
        bool first = true;
        for (std::size_t o = a.find_first(); o != Event::npos; o = a.find_next(o)) {
            if (first) {
                target = project[o];
                first = false;
            } else if (project[o] != target) {
                throw EventNotMeasurable(
                    "marginal is undefined: an atom straddles two reduced outcomes");
            }
        }
        if (!first) reduced_weights[target] += weights_[i];
    }
    return Measure::on_outcomes(std::move(reduced), std::move(reduced_weights));
}

Measure Measure::marginal(std::initializer_list<std::string> keep) const {
    std::vector<std::string> v(keep.begin(), keep.end());
    return marginal(std::span<const std::string>(v));
}

Rat Measure::expectation(const RandomVariable& f) const {
    if (f.values.size() != base().size())
        throw DomainError("random variable '" + f.name + "' is not total on the space");
    Rat total(0);
    for (std::size_t i = 0; i < space_.atoms().size(); ++i) {
        const Event& a = space_.atoms()[i];
        const std::size_t first = a.find_first();
        if (first == Event::npos) continue;
        for (std::size_t o = a.find_next(first); o != Event::npos; o = a.find_next(o)) {
            if (f.values[o] != f.values[first])
                throw EventNotMeasurable("random variable '" + f.name +
                                         "' is not constant on an atom");
        }
        total += f.values[first] * weights_[i];
    }
    return total;
}

Rat Measure::expectation(std::span<const RandomVariable> factors) const {
    if (factors.empty()) throw DomainError("empty product of random variables");
    RandomVariable product = factors.front();
    product.name = "product";
    for (std::size_t k = 1; k < factors.size(); ++k) {
        if (factors[k].values.size() != product.values.size())
            throw DomainError("product factors live on different spaces");
        for (std::size_t o = 0; o < product.values.size(); ++o)
            product.values[o] *= factors[k].values[o];
    }
    return expectation(product);
}

Rat Measure::outcome_weight(std::size_t outcome) const {
    if (!space_.is_discrete())
        throw EventNotMeasurable("per-outcome weights require singleton atoms");
    Event e(base().size());
    e.set(outcome);
    return probability(e);
}

Rat relative_frequency(std::span<const std::size_t> log, const Event& e) {
    if (log.empty()) throw EmptyLog("relative frequency of an empty log");
    long hits = 0;
    for (std::size_t o : log) {
        if (o >= e.size()) throw DomainError("log entry outside the sample space");
        if (e.test(o)) ++hits;
    }
    return rat(hits, static_cast<long>(log.size()));
}

} // namespace bellspace
