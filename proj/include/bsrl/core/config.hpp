#pragma once

#include "bsrl/core/bins.hpp"
#include "bsrl/core/types.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsrl {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_name(field) {}
    std::string field_name;
};

// Environment block of the run config.
struct EnvSpec {
    std::string type = "chain";  // chain | dungeon

    // chain
    int n_states = 5;
    int horizon = 64;

    // dungeon
    int floors = 6;
    int branch_floor = 2;
    int branch_depth = 2;
    int grid_size = 9;
    int max_steps = 400;
    int reveal_radius = 1;
    int max_hunger = 160;
    int food_per_floor = 2;
    int armour_per_floor = 1;
    int monsters_per_floor = 2;
    std::vector<std::string> channels = {"scout", "dlvl"};  // selection + order
};

struct RunConfig {
    int version = 1;
    std::string mode = "hbs";  // hbs | sol | flat
    std::uint64_t seed = 0;

    int n_channels = 2;
    int bin_count = 3;
    std::string bin_spacing = "linear";
    std::vector<int> option_lengths = {1, 2, 4, 8, 16, 32, 64, 128};

    double gamma_controller = 0.999;
    double gamma_option = 0.999;
    double gamma_flat = 0.999;
    double gae_lambda = 0.95;
    bool use_vtrace = true;
    double clip_epsilon = 0.2;
    double entropy_coef = 0.003;
    double controller_exploration_scale = 1.0;
    double value_coef = 0.5;
    double learning_rate = 2e-4;
    int batch_size = 4096;  // primitive steps per update, num_envs * rollout_len
    int num_envs = 16;
    double reward_scale = 0.01;
    double controller_reward_scale = 0.001;
    std::vector<double> channel_scales;  // length n_channels; defaults to ones
    std::vector<double> static_rho;      // flat mode coefficient vector
    bool restrict_one_hot = false;       // hbs restricted to the one-hot vertices
    bool normalize_advantages = true;
    int hidden_dim = 128;

    std::int64_t total_steps = 1'000'000;
    std::int64_t eval_every = 100'000;
    int eval_episodes = 16;
    bool eval_greedy = false;

    EnvSpec env;

    int rollout_len() const { return batch_size / num_envs; }
    Vec bins() const { return quantize_bins(bin_count, bin_spacing); }
    Vec scales_vec() const {
        if (channel_scales.empty()) return Vec::Ones(n_channels);
        return Eigen::Map<const Vec>(channel_scales.data(), static_cast<Eigen::Index>(channel_scales.size()));
    }
    Vec static_rho_vec() const {
        return Eigen::Map<const Vec>(static_rho.data(), static_cast<Eigen::Index>(static_rho.size()));
    }

    void validate() const;
};

// Implemented in config.cpp (JSON parsing, strict unknown-key rejection,
// dot-path overrides).
RunConfig parse_run_config(const std::string& json_text,
                           const std::vector<std::string>& overrides = {});
RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides = {});
std::string run_config_to_json(const RunConfig& cfg);

}  // namespace bsrl
