#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "chronocost/changepoint.hpp"

namespace chronocost {

enum class ChangeLabel { increase, decrease, none };

/// Transitions between consecutive segment states. Entry j describes the
/// change from state j to state j+1; amounts are absolute differences and
/// zero exactly when the label is none.
struct ChangeSequence {
    std::vector<ChangeLabel> labels;
    std::vector<double> amounts;

    std::size_t size() const { return labels.size(); }
};

struct SpikeFeatures {
    int count_of_spike = 0;
    double amount_of_positive_changes = 0.0;
    double amount_of_negative_changes = 0.0;

    bool operator==(const SpikeFeatures&) const = default;
};

inline ChangeSequence label_changes(std::span<const double> states) {
    if (states.empty()) throw std::invalid_argument("label_changes: need at least one state");
    ChangeSequence seq;
    seq.labels.reserve(states.size() - 1);
    seq.amounts.reserve(states.size() - 1);
    for (std::size_t j = 1; j < states.size(); ++j) {
        const double prev = states[j - 1];
        const double cur = states[j];
        if (cur > prev) {
            seq.labels.push_back(ChangeLabel::increase);
            seq.amounts.push_back(cur - prev);
        } else if (cur < prev) {
            seq.labels.push_back(ChangeLabel::decrease);
            seq.amounts.push_back(prev - cur);
        } else {
            seq.labels.push_back(ChangeLabel::none);
            seq.amounts.push_back(0.0);
        }
    }
    return seq;
}

/// A spike is an increase immediately followed by a decrease. Each firing
/// adds the increase amount to the positive total and the decrease amount
/// to the negative total. Equal consecutive states label as none and so
/// break tandems.
inline SpikeFeatures spike_features(const ChangeSequence& seq) {
    SpikeFeatures out;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        if (seq.labels[j] == ChangeLabel::increase && seq.labels[j + 1] == ChangeLabel::decrease) {
            out.count_of_spike += 1;
            out.amount_of_positive_changes += seq.amounts[j];
            out.amount_of_negative_changes += seq.amounts[j + 1];
        }
    }
    return out;
}

/// Divides by the sample standard deviation when it is nonzero; otherwise
/// returns the series unchanged.
inline std::vector<double> standardize_series(const std::vector<double>& series) {
    if (series.size() < 2) return series;
    double sum = 0.0;
    for (double v : series) sum += v;
    const double mean = sum / static_cast<double>(series.size());
    double ss = 0.0;
    for (double v : series) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(series.size() - 1));
    if (sd == 0.0) return series;
    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) out.push_back(v / sd);
    return out;
}

/// Full per-series pipeline: PELT segmentation, change labeling, spike
/// features. When `standardize` is set the series is divided by its sample
/// standard deviation (when nonzero) before segmentation, so states and
/// amounts come out in standardized units.
inline SpikeFeatures series_spike_features(const std::vector<double>& series,
                                           const PeltConfig& config = {},
                                           bool standardize = false) {
    const Segmentation seg = standardize
        ? pelt(standardize_series(series), config)
        : pelt(series, config);
    return spike_features(label_changes(seg.states));
}

} // namespace chronocost
