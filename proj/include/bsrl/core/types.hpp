#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bsrl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using VecI = Eigen::VectorXi;

// Per-step reward signal: n channel rewards plus the scalar task reward.
struct RewardVector {
    Vec channels;
    double task = 0.0;

    RewardVector() = default;
    RewardVector(Vec ch, double task_reward) : channels(std::move(ch)), task(task_reward) {}

    bool finite() const { return channels.allFinite() && std::isfinite(task); }
};

// Coefficient vector over the n reward channels. Every coefficient is a
// member of the quantized bin set B; bin_indices index into B. Coefficients
// are deliberately not normalized, so their sum ranges over [0, n].
struct BehaviourVector {
    Vec coeffs;
    VecI bin_indices;

    BehaviourVector() = default;
    BehaviourVector(const VecI& indices, const Vec& bins) {
        bin_indices = indices;
        coeffs.resize(indices.size());
        for (Eigen::Index i = 0; i < indices.size(); ++i) {
            if (indices[i] < 0 || indices[i] >= bins.size())
                throw std::invalid_argument("BehaviourVector: bin index out of range");
            coeffs[i] = bins[indices[i]];
        }
    }

    static BehaviourVector one_hot(int channel, int n, const Vec& bins) {
        VecI idx = VecI::Zero(n);
        idx[channel] = static_cast<int>(bins.size()) - 1;
        return BehaviourVector(idx, bins);
    }

    int size() const { return static_cast<int>(coeffs.size()); }

    bool operator==(const BehaviourVector& o) const {
        return bin_indices.size() == o.bin_indices.size() && (bin_indices.array() == o.bin_indices.array()).all();
    }
};

// A controller decision: run the intra-option policy at rho for length steps.
struct OptionCommand {
    BehaviourVector rho;
    int length = 1;       // element of L
    int length_index = 0; // index into the configured length set

    bool operator==(const OptionCommand& o) const {
        return length == o.length && length_index == o.length_index && rho == o.rho;
    }
};

// Primitive transitions recorded while one command was active. The segment
// may be shorter than the commanded length when the episode ends first.
struct TrajectorySegment {
    Mat observations;                 // obs_dim x steps_executed
    std::vector<int> actions;         // per-step primitive action ids
    std::vector<RewardVector> rewards;
    std::vector<bool> dones;
    std::vector<double> action_log_probs;  // behaviour log-probs at sampling time
    OptionCommand command;
    int steps_executed = 0;
    Vec final_obs;                    // observation after the last step

    void validate() const {
        if (steps_executed < 1) throw std::logic_error("TrajectorySegment: steps_executed < 1");
        for (int t = 0; t + 1 < steps_executed; ++t)
            if (dones[static_cast<std::size_t>(t)])
                throw std::logic_error("TrajectorySegment: steps follow a done within a segment");
    }
};

}  // namespace bsrl
