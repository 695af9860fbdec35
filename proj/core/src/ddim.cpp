#include "vedit/ddim.hpp"

#include <cmath>
#include <string>

#include "vedit/error.hpp"

namespace vedit {

Tensor ddim_transport(const Tensor& z, const Tensor& eps, double alpha_bar_from,
                      double alpha_bar_to) {
    require_same_shape(z, eps, "ddim_transport");
    if (!(alpha_bar_from > 0.0 && alpha_bar_from <= 1.0) ||
        !(alpha_bar_to > 0.0 && alpha_bar_to <= 1.0)) {
        throw ContractError("ddim_transport: cumulative alphas must lie in (0, 1]");
    }
    const double scale = std::sqrt(alpha_bar_to / alpha_bar_from);
    const double noise_scale =
        std::sqrt(1.0 - alpha_bar_to) - scale * std::sqrt(1.0 - alpha_bar_from);
    Tensor out = zeros_like(z);
    for (int64_t i = 0; i < z.size(); ++i) {
        out[i] = scale * z[i] + noise_scale * eps[i];
    }
    return out;
}

Tensor ddim_sample_step(const Tensor& z_t, const Tensor& eps, int t, int t_prev,
                        const NoiseSchedule& schedule) {
    if (t < 1 || t > schedule.train_steps()) {
        throw ContractError("ddim_sample_step: t=" + std::to_string(t) + " outside [1, " +
                            std::to_string(schedule.train_steps()) + "]");
    }
    if (t_prev < 0 || t_prev >= t) {
        throw ContractError("ddim_sample_step: t_prev=" + std::to_string(t_prev) +
                            " must lie in [0, t)");
    }
    return ddim_transport(z_t, eps, schedule.alpha_bar(t), schedule.alpha_bar(t_prev));
}

Tensor ddim_invert_step(const Tensor& z_t, const Tensor& eps, int t, int t_next,
                        const NoiseSchedule& schedule) {
    if (t < 0 || t > schedule.train_steps() - 1) {
        throw ContractError("ddim_invert_step: t=" + std::to_string(t) + " outside [0, " +
                            std::to_string(schedule.train_steps() - 1) + "]");
    }
    if (t_next <= t || t_next > schedule.train_steps()) {
        throw ContractError("ddim_invert_step: t_next=" + std::to_string(t_next) +
                            " must lie in (t, " + std::to_string(schedule.train_steps()) + "]");
    }
    return ddim_transport(z_t, eps, schedule.alpha_bar(t), schedule.alpha_bar(t_next));
}

}  // namespace vedit
