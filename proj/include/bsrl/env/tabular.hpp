#pragma once

#include "bsrl/core/rng.hpp"
#include "bsrl/env/env.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bsrl {

// Exact tabular MDP: transition matrices per action, per-channel reward
// tensors plus the task reward tensor.
struct TabularMDP {
    int n_states = 0;
    int n_actions = 0;
    std::vector<Mat> transitions;      // [a] -> S x S, row s is a distribution over s'
    std::vector<Mat> channel_rewards;  // [c] -> S x A
    Mat task_reward;                   // S x A
    Vec start_dist;

    int n_channels() const { return static_cast<int>(channel_rewards.size()); }

    void validate(double tol = 1e-12) const {
        if (static_cast<int>(transitions.size()) != n_actions)
            throw std::logic_error("TabularMDP: transition tensor shape mismatch");
        for (const Mat& T : transitions) {
            if (T.rows() != n_states || T.cols() != n_states)
                throw std::logic_error("TabularMDP: transition matrix shape mismatch");
            if ((T.array() < 0.0).any()) throw std::logic_error("TabularMDP: negative probability");
            for (int s = 0; s < n_states; ++s)
                if (std::abs(T.row(s).sum() - 1.0) > tol)
                    throw std::logic_error("TabularMDP: transition row does not sum to 1");
        }
        for (const Mat& R : channel_rewards)
            if (!R.allFinite()) throw std::logic_error("TabularMDP: non-finite channel reward");
        if (!task_reward.allFinite()) throw std::logic_error("TabularMDP: non-finite task reward");
        if (std::abs(start_dist.sum() - 1.0) > tol)
            throw std::logic_error("TabularMDP: start distribution does not sum to 1");
    }

    // Reward matrix for the linear combination sum_c rho[c]*scales[c]*R_c.
    Mat combined_reward(const Vec& rho, const Vec& scales) const {
        Mat R = Mat::Zero(n_states, n_actions);
        for (int c = 0; c < n_channels(); ++c) R += rho[c] * scales[c] * channel_rewards[c];
        return R;
    }
};

// Deterministic chain with left/right/stay actions. Channel 0 doubles as the
// task reward and pays +1 for every step that lands on the right end; the
// remaining channels pay +1 for landing on seeded interior waypoint states.
inline TabularMDP build_chain(int n_states, int n_channels, std::uint64_t seed) {
    if (n_states < 2) throw std::invalid_argument("build_chain: n_states must be >= 2");
    if (n_channels < 1) throw std::invalid_argument("build_chain: n_channels must be >= 1");
    TabularMDP mdp;
    mdp.n_states = n_states;
    mdp.n_actions = 3;  // 0=left, 1=right, 2=stay
    auto next_state = [n_states](int s, int a) {
        if (a == 0) return std::max(0, s - 1);
        if (a == 1) return std::min(n_states - 1, s + 1);
        return s;
    };
    mdp.transitions.assign(3, Mat::Zero(n_states, n_states));
    for (int a = 0; a < 3; ++a)
        for (int s = 0; s < n_states; ++s) mdp.transitions[a](s, next_state(s, a)) = 1.0;

    auto rng = make_rng(seed, "chain/waypoints");
    std::vector<int> targets(static_cast<std::size_t>(n_channels));
    targets[0] = n_states - 1;
    std::vector<int> interior;
    for (int s = 1; s + 1 < n_states; ++s) interior.push_back(s);
    for (int c = 1; c < n_channels; ++c) {
        if (interior.empty()) {
            targets[static_cast<std::size_t>(c)] = n_states / 2;
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, interior.size() - 1);
            const std::size_t j = pick(rng);
            targets[static_cast<std::size_t>(c)] = interior[j];
            if (interior.size() > 1) interior.erase(interior.begin() + static_cast<std::ptrdiff_t>(j));
        }
    }
    mdp.channel_rewards.assign(static_cast<std::size_t>(n_channels), Mat::Zero(n_states, 3));
    for (int c = 0; c < n_channels; ++c)
        for (int s = 0; s < n_states; ++s)
            for (int a = 0; a < 3; ++a)
                if (next_state(s, a) == targets[static_cast<std::size_t>(c)])
                    mdp.channel_rewards[static_cast<std::size_t>(c)](s, a) = 1.0;
    mdp.task_reward = mdp.channel_rewards[0];
    mdp.start_dist = Vec::Zero(n_states);
    mdp.start_dist[0] = 1.0;
    mdp.validate();
    return mdp;
}

// Random unichain laboratory MDP. Every transition row is blended with the
// uniform distribution, which makes every stationary policy's chain
// irreducible and aperiodic (gain is then well defined and constant).
inline TabularMDP make_lab_mdp(int n_states, int n_actions, int n_channels, std::uint64_t seed,
                               double mixing = 0.1) {
    if (n_states < 2 || n_actions < 2) throw std::invalid_argument("make_lab_mdp: need >= 2 states/actions");
    TabularMDP mdp;
    mdp.n_states = n_states;
    mdp.n_actions = n_actions;
    auto rng = make_rng(seed, "lab/mdp");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    mdp.transitions.assign(static_cast<std::size_t>(n_actions), Mat::Zero(n_states, n_states));
    for (int a = 0; a < n_actions; ++a) {
        for (int s = 0; s < n_states; ++s) {
            Vec w(n_states);
            for (int k = 0; k < n_states; ++k) w[k] = std::pow(unit(rng), 3.0);  // sparse-ish
            w /= w.sum();
            mdp.transitions[static_cast<std::size_t>(a)].row(s) =
                ((1.0 - mixing) * w + mixing * Vec::Constant(n_states, 1.0 / n_states)).transpose();
        }
    }
    mdp.channel_rewards.assign(static_cast<std::size_t>(n_channels), Mat::Zero(n_states, n_actions));
    for (int c = 0; c < n_channels; ++c)
        for (int s = 0; s < n_states; ++s)
            for (int a = 0; a < n_actions; ++a)
                if (unit(rng) < 0.35) mdp.channel_rewards[static_cast<std::size_t>(c)](s, a) = unit(rng);
    mdp.task_reward = Mat::Zero(n_states, n_actions);
    for (int s = 0; s < n_states; ++s)
        for (int a = 0; a < n_actions; ++a)
            if (unit(rng) < 0.35) mdp.task_reward(s, a) = unit(rng);
    mdp.start_dist = Vec::Constant(n_states, 1.0 / n_states);
    mdp.validate();
    return mdp;
}

// Fixed-horizon episodic wrapper around a TabularMDP. Observation layout:
// one-hot state indicator (n_states entries).
class TabularEnv final : public Env {
public:
    TabularEnv(TabularMDP mdp, int horizon, std::uint64_t seed)
        : mdp_(std::move(mdp)), horizon_(horizon), rng_(make_rng(seed, "env/tabular")) {
        reset();
    }

    int obs_dim() const override { return mdp_.n_states; }
    int n_actions() const override { return mdp_.n_actions; }
    int n_channels() const override { return mdp_.n_channels(); }

    void reset() override {
        state_ = sample_from(mdp_.start_dist);
        step_count_ = 0;
        done_ = false;
        reached_end_ = false;
        refresh_obs();
    }

    StepResult step(int action) override {
        if (done_) throw std::logic_error("TabularEnv: step on terminal state");
        if (action < 0 || action >= mdp_.n_actions) throw std::invalid_argument("TabularEnv: bad action");
        RewardVector r;
        r.channels.resize(mdp_.n_channels());
        for (int c = 0; c < mdp_.n_channels(); ++c)
            r.channels[c] = mdp_.channel_rewards[static_cast<std::size_t>(c)](state_, action);
        r.task = mdp_.task_reward(state_, action);
        state_ = sample_from(mdp_.transitions[static_cast<std::size_t>(action)].row(state_));
        if (state_ == mdp_.n_states - 1) reached_end_ = true;
        ++step_count_;
        done_ = step_count_ >= horizon_;
        refresh_obs();
        return {std::move(r), done_};
    }

    const Vec& obs() const override { return obs_; }
    bool done() const override { return done_; }
    int state() const { return state_; }

    std::vector<std::string> milestones() const override {
        std::vector<std::string> m;
        if (reached_end_) m.push_back("reached-right-end");
        return m;
    }

private:
    template <typename Derived>
    int sample_from(const Eigen::MatrixBase<Derived>& dist) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double u = unit(rng_);
        for (Eigen::Index s = 0; s < dist.size(); ++s) {
            u -= dist(s);
            if (u <= 0.0) return static_cast<int>(s);
        }
        return static_cast<int>(dist.size() - 1);
    }

    void refresh_obs() {
        obs_ = Vec::Zero(mdp_.n_states);
        obs_[state_] = 1.0;
    }

    TabularMDP mdp_;
    int horizon_;
    std::mt19937_64 rng_;
    int state_ = 0;
    int step_count_ = 0;
    bool done_ = false;
    bool reached_end_ = false;
    Vec obs_;
};

}  // namespace bsrl
