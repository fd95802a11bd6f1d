#pragma once

#include "bsrl/core/types.hpp"

#include <stdexcept>
#include <vector>

namespace bsrl {

// A contiguous run of primitive transitions (one episode, or a rollout
// window of one). observations has one column per step; final_obs is the
// observation after the last step.
struct EpisodeStream {
    Mat observations;   // obs_dim x T
    std::vector<int> actions;
    std::vector<RewardVector> rewards;
    std::vector<bool> dones;
    std::vector<double> action_log_probs;
    Vec final_obs;

    int length() const { return static_cast<int>(actions.size()); }
};

// Partition an episode into per-command segments. Each command covers up to
// command.length steps and is cut short by a done flag. The command stream
// must cover the episode exactly; anything else is a caller bug.
inline std::vector<TrajectorySegment> split_segments(const EpisodeStream& episode,
                                                     const std::vector<OptionCommand>& commands) {
    const int total = episode.length();
    std::vector<TrajectorySegment> segments;
    segments.reserve(commands.size());
    int t = 0;
    for (const OptionCommand& cmd : commands) {
        if (t >= total) throw std::logic_error("split_segments: command starts past episode end");
        TrajectorySegment seg;
        seg.command = cmd;
        int take = 0;
        while (take < cmd.length && t + take < total) {
            const bool done = episode.dones[static_cast<std::size_t>(t + take)];
            ++take;
            if (done) break;
        }
        seg.steps_executed = take;
        seg.observations = episode.observations.middleCols(t, take);
        seg.actions.assign(episode.actions.begin() + t, episode.actions.begin() + t + take);
        seg.rewards.assign(episode.rewards.begin() + t, episode.rewards.begin() + t + take);
        seg.dones.assign(episode.dones.begin() + t, episode.dones.begin() + t + take);
        seg.action_log_probs.assign(episode.action_log_probs.begin() + t,
                                    episode.action_log_probs.begin() + t + take);
        seg.final_obs = (t + take < total) ? Vec(episode.observations.col(t + take)) : episode.final_obs;
        seg.validate();
        const bool ended = seg.dones.back();
        segments.push_back(std::move(seg));
        t += take;
        if (ended && t < total) throw std::logic_error("split_segments: steps remain after a done");
    }
    if (t != total) throw std::logic_error("split_segments: commands do not cover the episode");
    return segments;
}

// Inverse of split_segments; used to check the partition is exact.
inline EpisodeStream concat_segments(const std::vector<TrajectorySegment>& segments) {
    EpisodeStream out;
    int total = 0;
    for (const auto& s : segments) total += s.steps_executed;
    if (segments.empty()) return out;
    out.observations.resize(segments.front().observations.rows(), total);
    int t = 0;
    for (const auto& s : segments) {
        out.observations.middleCols(t, s.steps_executed) = s.observations;
        out.actions.insert(out.actions.end(), s.actions.begin(), s.actions.end());
        out.rewards.insert(out.rewards.end(), s.rewards.begin(), s.rewards.end());
        out.dones.insert(out.dones.end(), s.dones.begin(), s.dones.end());
        out.action_log_probs.insert(out.action_log_probs.end(), s.action_log_probs.begin(),
                                    s.action_log_probs.end());
        t += s.steps_executed;
    }
    out.final_obs = segments.back().final_obs;
    return out;
}

}  // namespace bsrl
