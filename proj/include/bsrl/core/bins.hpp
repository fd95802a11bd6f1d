#pragma once

#include "bsrl/core/types.hpp"

#include <stdexcept>
#include <string_view>

namespace bsrl {

// Quantized coefficient bins B subset of [0,1]. Linear spacing:
// B = { k/(bin_count-1) : k = 0..bin_count-1 }, so B always contains 0 and 1.
inline Vec quantize_bins(int bin_count, std::string_view spacing = "linear") {
    if (bin_count < 2) throw std::invalid_argument("quantize_bins: bin_count must be >= 2");
    if (spacing != "linear") throw std::invalid_argument("quantize_bins: unknown spacing");
    Vec bins(bin_count);
    for (int k = 0; k < bin_count; ++k) bins[k] = static_cast<double>(k) / (bin_count - 1);
    return bins;
}

// rho^T diag(scales) r.channels — the linear combination the intra-option
// policy maximises. Channel scales live here, learner-side, so the same
// environment serves flat/SOL/HBS modes.
template <typename DRho, typename DChan, typename DScale>
double combine_rewards(const Eigen::MatrixBase<DRho>& rho_coeffs,
                       const Eigen::MatrixBase<DChan>& channels,
                       const Eigen::MatrixBase<DScale>& scales) {
    if (rho_coeffs.size() != channels.size() || channels.size() != scales.size())
        throw std::invalid_argument("combine_rewards: length mismatch");
    const double out = (rho_coeffs.array() * scales.array() * channels.array()).sum();
    if (!std::isfinite(out)) throw std::invalid_argument("combine_rewards: non-finite result");
    return out;
}

inline double combine_rewards(const BehaviourVector& rho, const RewardVector& r, const Vec& scales) {
    return combine_rewards(rho.coeffs, r.channels, scales);
}

}  // namespace bsrl
