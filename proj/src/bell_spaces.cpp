// SPDX-License-Identifier: Apache-2.0
#include "bellspace/bell_spaces.hpp"

#include "bellspace/errors.hpp"

namespace bellspace {

LambdaSupport LambdaSupport::single(std::string label) {
    return LambdaSupport{{std::move(label)}, {Rat(1)}};
}

LambdaSupport LambdaSupport::uniform(std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    if (n == 0) throw InvalidSpace("lambda support must be non-empty");
    return LambdaSupport{std::move(labels), std::vector<Rat>(n, rat(1, static_cast<long>(n)))};
}

void LambdaSupport::validate() const {
    if (labels.empty()) throw InvalidSpace("lambda support must be non-empty");
    if (prior.size() != labels.size())
        throw InvalidSpace("lambda prior must have one weight per label");
    Rat total(0);
    for (const auto& w : prior) {
        if (w < 0) throw InvalidSpace("negative lambda prior weight");
        total += w;
    }
    if (total != 1) throw InvalidSpace("lambda prior does not sum to 1");
}

namespace {
const std::vector<std::string> kBits{"0", "1"};
}

SampleSpace sample_space1(const LambdaSupport& lam, const BellLayout& layout) {
    lam.validate();
    return make_space({{"A", kBits},
                       {"alpha", {layout.a_labels[0], layout.a_labels[1]}},
                       {"B", kBits},
                       {"beta", {layout.b_labels[0], layout.b_labels[1]}},
                       {"lambda", lam.labels}});
}

SampleSpace sample_space2(const LambdaSupport& lam, const BellLayout& layout) {
    lam.validate();
    return make_space({{layout.slot_a(0), kBits},
                       {layout.slot_a(1), kBits},
                       {layout.slot_b(0), kBits},
                       {layout.slot_b(1), kBits},
                       {"lambda", lam.labels}});
}

SampleSpace sample_space3(const LambdaSupport& lam, const BellLayout& layout) {
    lam.validate();
    return make_space({{layout.slot_a(0), kBits},
                       {layout.slot_a(1), kBits},
                       {"alpha", {layout.a_labels[0], layout.a_labels[1]}},
                       {layout.slot_b(0), kBits},
                       {layout.slot_b(1), kBits},
                       {"beta", {layout.b_labels[0], layout.b_labels[1]}},
                       {"lambda", lam.labels}});
}

EventSpace build_space1(const LambdaSupport& lam, const BellLayout& layout) {
    return EventSpace::discrete(sample_space1(lam, layout));
}
EventSpace build_space2(const LambdaSupport& lam, const BellLayout& layout) {
    return EventSpace::discrete(sample_space2(lam, layout));
}
EventSpace build_space3(const LambdaSupport& lam, const BellLayout& layout) {
    return EventSpace::discrete(sample_space3(lam, layout));
}

namespace {
std::string bit(int b) { return b ? "1" : "0"; }
}

Event event_of(int space_id, const Observation& obs, const SampleSpace& space,
               const BellLayout& layout) {
    (void)layout;
    if (obs.a_result < 0 || obs.a_result > 1 || obs.b_result < 0 || obs.b_result > 1)
        throw DomainError("observation results must be bits");
    switch (space_id) {
        case 1:
            return space.where({{"A", bit(obs.a_result)},
                                {"alpha", obs.a_angle},
                                {"B", bit(obs.b_result)},
                                {"beta", obs.b_angle}});
        case 2:
            return space.where({{"A_" + obs.a_angle, bit(obs.a_result)},
                                {"B_" + obs.b_angle, bit(obs.b_result)}});
        case 3:
            return space.where({{"A_" + obs.a_angle, bit(obs.a_result)},
                                {"alpha", obs.a_angle},
                                {"B_" + obs.b_angle, bit(obs.b_result)},
                                {"beta", obs.b_angle}});
        default:
            throw DomainError("space id must be 1, 2 or 3");
    }
}

bool representable(const SampleSpace& space,
                   const std::vector<std::pair<std::string, std::string>>& constraints) {
    for (const auto& [name, value] : constraints) {
        if (!space.has_variable(name)) return false;
        const auto& vals = space.variables()[space.var_index(name)].values;
        if (std::find(vals.begin(), vals.end(), value) == vals.end()) return false;
    }
    return true;
}

Measure project_space3(const Measure& m3, int target, const BellLayout& layout) {
    const SampleSpace& s3 = m3.base();
    if (target == 2) {
        std::vector<std::string> keep{layout.slot_a(0), layout.slot_a(1), layout.slot_b(0),
                                      layout.slot_b(1), "lambda"};
        return m3.marginal(std::span<const std::string>(keep));
    }
    if (target != 1) throw DomainError("projection target must be 1 or 2");

    const std::size_t a0 = s3.var_index(layout.slot_a(0));
    const std::size_t a1 = s3.var_index(layout.slot_a(1));
    const std::size_t al = s3.var_index("alpha");
    const std::size_t b0 = s3.var_index(layout.slot_b(0));
    const std::size_t b1 = s3.var_index(layout.slot_b(1));
    const std::size_t be = s3.var_index("beta");
    const std::size_t lv = s3.var_index("lambda");

    // prior irrelevant here; only the labels shape the space
    SampleSpace s1 = sample_space1(LambdaSupport::uniform(s3.variables()[lv].values), layout);

    std::vector<Rat> w1(s1.size(), Rat(0));
    std::vector<std::size_t> digits(5);
    for (std::size_t o = 0; o < s3.size(); ++o) {
        const std::size_t alpha = s3.digit(o, al);
        const std::size_t beta = s3.digit(o, be);
        // the selected slot supplies the observed result
        digits[0] = alpha == 0 ? s3.digit(o, a0) : s3.digit(o, a1);
        digits[1] = alpha;
        digits[2] = beta == 0 ? s3.digit(o, b0) : s3.digit(o, b1);
        digits[3] = beta;
        digits[4] = s3.digit(o, lv);
        w1[s1.outcome_of(digits)] += m3.outcome_weight(o);
    }
    return Measure::on_outcomes(std::move(s1), std::move(w1));
}

Table1Demo table1_demo() {
    Table1Demo demo;
    // run, A, alpha, A_0, A_45, observed slot is 0°?
    demo.rows = {{1, 1, "0", 1, 0, true},  {2, 1, "45", 0, 1, false},
                 {3, 1, "45", 1, 1, false}, {4, 1, "0", 1, 0, true},
                 {5, 0, "0", 0, 1, true},  {6, 1, "45", 1, 1, false}};

    // space-1 depiction: empirical measure over (A, alpha)
    SampleSpace s1 = make_space({{"A", kBits}, {"alpha", {"0", "45"}}});
    std::vector<Rat> weights(s1.size(), Rat(0));
    std::vector<std::size_t> log1;
    for (const auto& r : demo.rows) {
        const std::size_t o =
            s1.where({{"A", bit(r.a)}, {"alpha", r.alpha}}).find_first();
        log1.push_back(o);
        weights[o] += rat(1, static_cast<long>(demo.rows.size()));
    }
    Measure m1 = Measure::on_outcomes(s1, weights);
    const Event a1 = s1.where({{"A", "1"}});
    const Event alpha0 = s1.where({{"alpha", "0"}});
    demo.p_joint = m1.probability(a1 & alpha0);
    demo.p_alpha0 = m1.probability(alpha0);
    demo.p_conditional = m1.conditional(a1, alpha0);

    // space-2 depiction: relative frequency of the counterfactual slot A_0
    SampleSpace s2 = make_space({{"A_0", kBits}, {"A_45", kBits}});
    std::vector<std::size_t> log2;
    for (const auto& r : demo.rows)
        log2.push_back(s2.where({{"A_0", bit(r.a0)}, {"A_45", bit(r.a45)}}).find_first());
    demo.p_counterfactual = relative_frequency(log2, s2.where({{"A_0", "1"}}));

    demo.eq9_holds = demo.p_counterfactual == demo.p_conditional;
    return demo;
}

} // namespace bellspace
