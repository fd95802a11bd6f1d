#pragma once

#include "bsrl/core/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace bsrl {

struct StepResult {
    RewardVector reward;
    bool done = false;
};

// Environment interface. Observations are flat fixed-size real vectors; each
// environment documents its own feature layout. Instances are independent
// and never shared between execution contexts.
class Env {
public:
    virtual ~Env() = default;

    virtual int obs_dim() const = 0;
    virtual int n_actions() const = 0;
    virtual int n_channels() const = 0;

    virtual void reset() = 0;
    virtual StepResult step(int action) = 0;

    virtual const Vec& obs() const = 0;
    virtual bool done() const = 0;

    // Milestones achieved so far in the current episode (monotone).
    virtual std::vector<std::string> milestones() const { return {}; }

    virtual std::string render() const { return {}; }
};

}  // namespace bsrl
