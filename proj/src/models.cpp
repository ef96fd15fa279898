// SPDX-License-Identifier: Apache-2.0
#include "bellspace/models.hpp"

#include <cmath>
#include <numbers>

#include "bellspace/errors.hpp"

namespace bellspace {

BellLayout SettingAngles::layout() const {
    BellLayout l;
    l.a_labels = {decimal_or_ratio(a), decimal_or_ratio(ap)};
    l.b_labels = {decimal_or_ratio(b), decimal_or_ratio(bp)};
    return l;
}

SettingAngles optimal_angles() {
    return SettingAngles{Rat(0), Rat(45), rat(45, 2), rat(-45, 2)};
}

void LHVModel::validate() const {
    lambda.validate();
    const std::size_t k = lambda.labels.size();
    for (const auto& side : {&response_a, &response_b}) {
        for (const auto& row : *side) {
            if (row.size() != k)
                throw DomainError("LHV response rows must cover every lambda value");
            for (const auto& p : row)
                if (p < 0 || p > 1) throw DomainError("LHV response outside [0,1]");
        }
    }
    if (!lambda_angles.empty() && lambda_angles.size() != k)
        throw DomainError("lambda_angles must match the lambda support");
}

namespace {

// Angular distance of two exact-degree angles under 180° periodicity,
// in [0, 90]. cos²(x) > 1/2 iff this distance is < 45.
Rat polarization_distance(const Rat& x, const Rat& y) {
    Rat d = x - y;
    // reduce mod 180 into [0, 180)
    Rat q = d / 180;
    mpz_class floorq;
    mpz_fdiv_q(floorq.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    d -= Rat(floorq) * 180;
    if (d >= 90) d = 180 - d;
    return d;
}

constexpr double kDegToRad = std::numbers::pi / 180.0;

} // namespace

LHVModel threshold_photon_lhv(std::size_t grid_size, const SettingAngles& angles) {
    if (grid_size == 0) throw InvalidSpace("threshold model needs at least one lambda value");
    LHVModel m;
    m.angles = angles;
    std::vector<std::string> labels(grid_size);
    m.lambda_angles.resize(grid_size);
    for (std::size_t j = 0; j < grid_size; ++j) {
        m.lambda_angles[j] = rat(180 * static_cast<long>(j), static_cast<long>(grid_size));
        labels[j] = decimal_or_ratio(m.lambda_angles[j]);
    }
    m.lambda = LambdaSupport::uniform(std::move(labels));
    const std::array<Rat, 2> a_angles{angles.a, angles.ap};
    const std::array<Rat, 2> b_angles{angles.b, angles.bp};
    for (int s = 0; s < 2; ++s) {
        m.response_a[s].resize(grid_size);
        m.response_b[s].resize(grid_size);
        for (std::size_t j = 0; j < grid_size; ++j) {
            m.response_a[s][j] = polarization_distance(a_angles[s], m.lambda_angles[j]) < 45 ? 1 : 0;
            m.response_b[s][j] = polarization_distance(b_angles[s], m.lambda_angles[j]) < 45 ? 1 : 0;
        }
    }
    return m;
}

void DeterministicMixture::validate() const {
    Rat total(0);
    for (const auto& w : weights) {
        if (w < 0) throw NotAMeasure("negative mixture weight");
        total += w;
    }
    if (total != 1) throw NotAMeasure("mixture weights sum to " + rat_string(total));
}

Measure lhv_to_space1(const LHVModel& m, const std::array<Rat, 4>& pair_weights) {
    m.validate();
    Rat total(0);
    for (const auto& w : pair_weights) {
        if (w < 0) throw NotAMeasure("negative setting-pair weight");
        total += w;
    }
    if (total != 1) throw NotAMeasure("setting-pair weights must sum to 1");

    const BellLayout layout = m.angles.layout();
    SampleSpace s1 = sample_space1(m.lambda, layout);
    std::vector<Rat> w(s1.size(), Rat(0));
    std::vector<std::size_t> digits(5);
    const std::size_t k = m.lambda.labels.size();
    for (std::size_t ai = 0; ai < 2; ++ai)
        for (std::size_t bi = 0; bi < 2; ++bi)
            for (std::size_t l = 0; l < k; ++l) {
                const Rat base = pair_weights[pair_index(static_cast<int>(ai), static_cast<int>(bi))] *
                                 m.lambda.prior[l];
                const Rat pa = m.response_a[ai][l];
                const Rat pb = m.response_b[bi][l];
                for (std::size_t av = 0; av < 2; ++av)
                    for (std::size_t bv = 0; bv < 2; ++bv) {
                        digits[0] = av;
                        digits[1] = ai;
                        digits[2] = bv;
                        digits[3] = bi;
                        digits[4] = l;
                        const Rat pav = av ? pa : 1 - pa;
                        const Rat pbv = bv ? pb : 1 - pb;
                        w[s1.outcome_of(digits)] += base * pav * pbv;
                    }
            }
    return Measure::on_outcomes(std::move(s1), std::move(w));
}

Measure lhv_to_space3(const LHVModel& m, const std::array<Rat, 4>& pair_weights) {
    m.validate();
    Rat total(0);
    for (const auto& w : pair_weights) {
        if (w < 0) throw NotAMeasure("negative setting-pair weight");
        total += w;
    }
    if (total != 1) throw NotAMeasure("setting-pair weights must sum to 1");

    const BellLayout layout = m.angles.layout();
    SampleSpace s3 = sample_space3(m.lambda, layout);
    std::vector<Rat> w(s3.size(), Rat(0));
    std::vector<std::size_t> digits(7);
    const std::size_t k = m.lambda.labels.size();
    for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t a0 = 0; a0 < 2; ++a0)
            for (std::size_t a1 = 0; a1 < 2; ++a1)
                for (std::size_t b0 = 0; b0 < 2; ++b0)
                    for (std::size_t b1 = 0; b1 < 2; ++b1) {
                        const Rat slot_weight =
                            (a0 ? m.response_a[0][l] : 1 - m.response_a[0][l]) *
                            (a1 ? m.response_a[1][l] : 1 - m.response_a[1][l]) *
                            (b0 ? m.response_b[0][l] : 1 - m.response_b[0][l]) *
                            (b1 ? m.response_b[1][l] : 1 - m.response_b[1][l]);
                        if (slot_weight == 0) continue;
                        for (std::size_t ai = 0; ai < 2; ++ai)
                            for (std::size_t bi = 0; bi < 2; ++bi) {
                                digits[0] = a0;
                                digits[1] = a1;
                                digits[2] = ai;
                                digits[3] = b0;
                                digits[4] = b1;
                                digits[5] = bi;
                                digits[6] = l;
                                w[s3.outcome_of(digits)] +=
                                    m.lambda.prior[l] * slot_weight *
                                    pair_weights[pair_index(static_cast<int>(ai),
                                                            static_cast<int>(bi))];
                            }
                    }
    }
    return Measure::on_outcomes(std::move(s3), std::move(w));
}

DeterministicMixture lhv_to_mixture(const LHVModel& m) {
    m.validate();
    DeterministicMixture d;
    d.weights.fill(Rat(0));
    const std::size_t k = m.lambda.labels.size();
    for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t s = 0; s < 16; ++s) {
            const Rat w = (DeterministicMixture::strategy_bit(s, 0) ? m.response_a[0][l]
                                                                    : 1 - m.response_a[0][l]) *
                          (DeterministicMixture::strategy_bit(s, 1) ? m.response_a[1][l]
                                                                    : 1 - m.response_a[1][l]) *
                          (DeterministicMixture::strategy_bit(s, 2) ? m.response_b[0][l]
                                                                    : 1 - m.response_b[0][l]) *
                          (DeterministicMixture::strategy_bit(s, 3) ? m.response_b[1][l]
                                                                    : 1 - m.response_b[1][l]);
            d.weights[s] += m.lambda.prior[l] * w;
        }
    }
    return d;
}

Measure mixture_to_space2(const DeterministicMixture& d, const BellLayout& layout) {
    d.validate();
    SampleSpace s2 = sample_space2(LambdaSupport::single(), layout);
    std::vector<Rat> w(s2.size(), Rat(0));
    std::vector<std::size_t> digits(5);
    for (std::size_t s = 0; s < 16; ++s) {
        digits[0] = DeterministicMixture::strategy_bit(s, 0);
        digits[1] = DeterministicMixture::strategy_bit(s, 1);
        digits[2] = DeterministicMixture::strategy_bit(s, 2);
        digits[3] = DeterministicMixture::strategy_bit(s, 3);
        digits[4] = 0;
        w[s2.outcome_of(digits)] = d.weights[s];
    }
    return Measure::on_outcomes(std::move(s2), std::move(w));
}

CorrelationTable mixture_table(const DeterministicMixture& d, const BellLayout& layout) {
    d.validate();
    CorrelationTable t;
    t.a_labels = layout.a_labels;
    t.b_labels = layout.b_labels;
    std::array<Rat, 4> p11{Rat(0), Rat(0), Rat(0), Rat(0)};
    std::array<Rat, 2> pa{Rat(0), Rat(0)};
    std::array<Rat, 2> pb{Rat(0), Rat(0)};
    for (std::size_t s = 0; s < 16; ++s) {
        const bool bits[4] = {DeterministicMixture::strategy_bit(s, 0),
                              DeterministicMixture::strategy_bit(s, 1),
                              DeterministicMixture::strategy_bit(s, 2),
                              DeterministicMixture::strategy_bit(s, 3)};
        for (int ai = 0; ai < 2; ++ai) {
            if (bits[ai]) pa[ai] += d.weights[s];
            for (int bi = 0; bi < 2; ++bi)
                if (bits[ai] && bits[2 + bi]) p11[pair_index(ai, bi)] += d.weights[s];
        }
        for (int bi = 0; bi < 2; ++bi)
            if (bits[2 + bi]) pb[bi] += d.weights[s];
    }
    for (int i = 0; i < 4; ++i) t.p11[i] = Scalar::exact(p11[i]);
    for (int i = 0; i < 2; ++i) {
        t.pA[i] = Scalar::exact(pa[i]);
        t.pB[i] = Scalar::exact(pb[i]);
    }
    t.validate();
    return t;
}

std::array<double, 4> quantum_correlators(const QuantumPairModel& q) {
    const double a[2] = {to_double(q.angles.a), to_double(q.angles.ap)};
    const double b[2] = {to_double(q.angles.b), to_double(q.angles.bp)};
    std::array<double, 4> e{};
    for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi)
            e[pair_index(ai, bi)] = std::cos(2.0 * (a[ai] - b[bi]) * kDegToRad);
    return e;
}

CorrelationTable quantum_table(const QuantumPairModel& q) {
    CorrelationTable t;
    t.a_labels = q.angles.layout().a_labels;
    t.b_labels = q.angles.layout().b_labels;
    const double a[2] = {to_double(q.angles.a), to_double(q.angles.ap)};
    const double b[2] = {to_double(q.angles.b), to_double(q.angles.bp)};
    for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
            const double c = std::cos((a[ai] - b[bi]) * kDegToRad);
            t.p11[pair_index(ai, bi)] = Scalar::analytic(0.5 * c * c);
        }
    for (int i = 0; i < 2; ++i) {
        t.pA[i] = Scalar::analytic(0.5);
        t.pB[i] = Scalar::analytic(0.5);
    }
    t.validate();
    return t;
}

CorrelationTable pr_table(const BellLayout& layout) {
    CorrelationTable t;
    t.a_labels = layout.a_labels;
    t.b_labels = layout.b_labels;
    for (int i = 0; i < 4; ++i) t.p11[i] = Scalar::exact(i == 3 ? Rat(0) : rat(1, 2));
    for (int i = 0; i < 2; ++i) {
        t.pA[i] = Scalar::exact(rat(1, 2));
        t.pB[i] = Scalar::exact(rat(1, 2));
    }
    t.validate();
    return t;
}

namespace {

CorrelationTable table_of_space2_measure(const Measure& m, const BellLayout& layout) {
    const SampleSpace& s = m.base();
    CorrelationTable t;
    t.a_labels = layout.a_labels;
    t.b_labels = layout.b_labels;
    const std::array<Event, 2> ea{s.where({{layout.slot_a(0), "1"}}),
                                  s.where({{layout.slot_a(1), "1"}})};
    const std::array<Event, 2> eb{s.where({{layout.slot_b(0), "1"}}),
                                  s.where({{layout.slot_b(1), "1"}})};
    for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi)
            t.p11[pair_index(ai, bi)] = Scalar::exact(m.probability(ea[ai] & eb[bi]));
    for (int i = 0; i < 2; ++i) {
        t.pA[i] = Scalar::exact(m.probability(ea[i]));
        t.pB[i] = Scalar::exact(m.probability(eb[i]));
    }
    t.validate();
    return t;
}

CorrelationTable table_of_space1_measure(const Measure& m, const BellLayout& layout) {
    const SampleSpace& s = m.base();
    CorrelationTable t;
    t.a_labels = layout.a_labels;
    t.b_labels = layout.b_labels;
    const Event a1 = s.where({{"A", "1"}});
    const Event b1 = s.where({{"B", "1"}});
    for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
            const Event setting = s.where(
                {{"alpha", layout.a_labels[ai]}, {"beta", layout.b_labels[bi]}});
            t.p11[pair_index(ai, bi)] = Scalar::exact(m.conditional(a1 & b1, setting));
        }
    for (int i = 0; i < 2; ++i) {
        t.pA[i] = Scalar::exact(m.conditional(a1, s.where({{"alpha", layout.a_labels[i]}})));
        t.pB[i] = Scalar::exact(m.conditional(b1, s.where({{"beta", layout.b_labels[i]}})));
    }
    t.validate();
    return t;
}

CorrelationTable table_of_space3_measure(const Measure& m, const BellLayout& layout) {
    const SampleSpace& s = m.base();
    CorrelationTable t;
    t.a_labels = layout.a_labels;
    t.b_labels = layout.b_labels;
    for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
            const Event slots =
                s.where({{layout.slot_a(ai), "1"}, {layout.slot_b(bi), "1"}});
            const Event setting = s.where(
                {{"alpha", layout.a_labels[ai]}, {"beta", layout.b_labels[bi]}});
            t.p11[pair_index(ai, bi)] = Scalar::exact(m.conditional(slots, setting));
        }
    for (int i = 0; i < 2; ++i) {
        t.pA[i] = Scalar::exact(m.conditional(s.where({{layout.slot_a(i), "1"}}),
                                              s.where({{"alpha", layout.a_labels[i]}})));
        t.pB[i] = Scalar::exact(m.conditional(s.where({{layout.slot_b(i), "1"}}),
                                              s.where({{"beta", layout.b_labels[i]}})));
    }
    t.validate();
    return t;
}

} // namespace

CorrelationTable table_of(const Measure& m, int space_id, const BellLayout& layout) {
    switch (space_id) {
        case 1: return table_of_space1_measure(m, layout);
        case 2: return table_of_space2_measure(m, layout);
        case 3: return table_of_space3_measure(m, layout);
        default: throw DomainError("space id must be 1, 2 or 3");
    }
}

CorrelationTable table_of_model(const ModelSpec& model) {
    return std::visit(
        [](const auto& m) -> CorrelationTable {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LHVModel>) {
                return mixture_table(lhv_to_mixture(m), m.angles.layout());
            } else if constexpr (std::is_same_v<T, DeterministicMixture>) {
                return mixture_table(m);
            } else if constexpr (std::is_same_v<T, QuantumPairModel>) {
                return quantum_table(m);
            } else {
                return pr_table();
            }
        },
        model);
}

BellLayout layout_of_model(const ModelSpec& model) {
    return std::visit(
        [](const auto& m) -> BellLayout {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LHVModel>) {
                return m.angles.layout();
            } else if constexpr (std::is_same_v<T, QuantumPairModel>) {
                return m.angles.layout();
            } else {
                return BellLayout{};
            }
        },
        model);
}

} // namespace bellspace
