#pragma once

#include "vedit/schedule.hpp"
#include "vedit/tensor.hpp"

namespace vedit {

/// Deterministic DDIM transport of a latent between two cumulative-alpha
/// levels with a fixed noise estimate:
///
///   z' = sqrt(abar_to) * (z - sqrt(1-abar_from) * eps) / sqrt(abar_from)
///        + sqrt(1-abar_to) * eps
///
/// The map is affine in z and exactly self-inverse for a frozen eps: moving
/// from -> to -> from returns the input up to float rounding. abar_to ==
/// abar_from is the identity for any eps.
Tensor ddim_transport(const Tensor& z, const Tensor& eps, double alpha_bar_from,
                      double alpha_bar_to);

/// One reverse (denoising) step: t must be a later timestep than t_prev.
/// t_prev == 0 lands on the clean state.
Tensor ddim_sample_step(const Tensor& z_t, const Tensor& eps, int t, int t_prev,
                        const NoiseSchedule& schedule);

/// One inversion step, the mirror of ddim_sample_step with indices advanced:
/// t < t_next <= train_steps; t == 0 starts from the clean state.
Tensor ddim_invert_step(const Tensor& z_t, const Tensor& eps, int t, int t_next,
                        const NoiseSchedule& schedule);

}  // namespace vedit
