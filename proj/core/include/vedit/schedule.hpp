#pragma once

#include <vector>

namespace vedit {

/// Variance schedule of the pretrained diffusion backbone plus the map from
/// sampler steps onto training timesteps. Read-only after construction.
///
/// Timesteps are 1-based training indices; alpha_bar(0) == 1 represents the
/// clean state.
class NoiseSchedule {
public:
    static NoiseSchedule linear(int train_steps = 1000, double beta_start = 8.5e-4,
                                double beta_end = 1.2e-2);
    static NoiseSchedule from_betas(std::vector<double> betas);

    int train_steps() const { return static_cast<int>(betas_.size()); }
    double beta(int t) const;       // t in [1, train_steps]
    double alpha(int t) const;      // 1 - beta(t)
    double alpha_bar(int t) const;  // t in [0, train_steps]

    /// Ascending sampler timesteps with uniform stride over the training
    /// range; the last entry is train_steps. Sampling walks them in reverse.
    std::vector<int> sampler_timesteps(int num_steps) const;

private:
    std::vector<double> betas_;
    std::vector<double> alpha_bars_;  // alpha_bars_[t], t in [0, train_steps]
};

}  // namespace vedit
