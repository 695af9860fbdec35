#include "vedit/schedule.hpp"

#include <cmath>
#include <string>

#include "vedit/error.hpp"

namespace vedit {

NoiseSchedule NoiseSchedule::linear(int train_steps, double beta_start, double beta_end) {
    if (train_steps < 1) {
        throw ContractError("schedule needs at least one training step");
    }
    if (!(beta_start > 0.0) || !(beta_end < 1.0) || !(beta_start < beta_end)) {
        throw ContractError("linear schedule requires 0 < beta_start < beta_end < 1");
    }
    std::vector<double> betas(static_cast<size_t>(train_steps));
    for (int t = 0; t < train_steps; ++t) {
        const double frac = train_steps == 1 ? 0.0
                                             : static_cast<double>(t) /
                                                   static_cast<double>(train_steps - 1);
        betas[static_cast<size_t>(t)] = beta_start + (beta_end - beta_start) * frac;
    }
    return from_betas(std::move(betas));
}

NoiseSchedule NoiseSchedule::from_betas(std::vector<double> betas) {
    if (betas.empty()) {
        throw ContractError("schedule needs at least one beta");
    }
    NoiseSchedule schedule;
    schedule.alpha_bars_.resize(betas.size() + 1);
    schedule.alpha_bars_[0] = 1.0;
    double previous_beta = 0.0;
    for (size_t i = 0; i < betas.size(); ++i) {
        const double beta = betas[i];
        if (!(beta > 0.0 && beta < 1.0)) {
            throw ContractError("beta out of (0, 1) at t=" + std::to_string(i + 1));
        }
        if (i > 0 && !(beta > previous_beta)) {
            throw ContractError("betas must be strictly increasing (violated at t=" +
                                std::to_string(i + 1) + ")");
        }
        previous_beta = beta;
        schedule.alpha_bars_[i + 1] = schedule.alpha_bars_[i] * (1.0 - beta);
        if (!(schedule.alpha_bars_[i + 1] > 0.0)) {
            throw ContractError("cumulative alpha underflowed to zero at t=" +
                                std::to_string(i + 1));
        }
    }
    schedule.betas_ = std::move(betas);
    return schedule;
}

double NoiseSchedule::beta(int t) const {
    if (t < 1 || t > train_steps()) {
        throw ContractError("beta(t): t=" + std::to_string(t) + " outside [1, " +
                            std::to_string(train_steps()) + "]");
    }
    return betas_[static_cast<size_t>(t - 1)];
}

double NoiseSchedule::alpha(int t) const {
    return 1.0 - beta(t);
}

double NoiseSchedule::alpha_bar(int t) const {
    if (t < 0 || t > train_steps()) {
        throw ContractError("alpha_bar(t): t=" + std::to_string(t) + " outside [0, " +
                            std::to_string(train_steps()) + "]");
    }
    return alpha_bars_[static_cast<size_t>(t)];
}

std::vector<int> NoiseSchedule::sampler_timesteps(int num_steps) const {
    if (num_steps < 1 || num_steps > train_steps()) {
        throw ContractError("num_steps must lie in [1, " + std::to_string(train_steps()) +
                            "], got " + std::to_string(num_steps));
    }
    std::vector<int> taus(static_cast<size_t>(num_steps));
    for (int k = 1; k <= num_steps; ++k) {
        taus[static_cast<size_t>(k - 1)] = static_cast<int>(std::llround(
            static_cast<double>(k) * static_cast<double>(train_steps()) /
            static_cast<double>(num_steps)));
    }
    return taus;
}

}  // namespace vedit
