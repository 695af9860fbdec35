#include <string>

#include "vedit/backend.hpp"
#include "vedit/error.hpp"

namespace vedit {

Tensor guided_noise(const BackboneAdapter& backend, const Tensor& latent, int timestep,
                    const PromptEmbedding& cond, const PromptEmbedding& uncond,
                    const Tensor* control, double control_scale, double guidance_scale,
                    AttentionHooks* hooks) {
    Tensor eps_uncond, eps_cond;
    try {
        eps_uncond = backend.predict_noise(latent, timestep, uncond, control, control_scale,
                                           nullptr);
        eps_cond = backend.predict_noise(latent, timestep, cond, control, control_scale, hooks);
    } catch (const std::exception& e) {
        throw AdapterError("backbone failed at timestep " + std::to_string(timestep) + ": " +
                           e.what());
    }
    require_same_shape(eps_uncond, eps_cond, "guided_noise");
    require_same_shape(eps_uncond, latent, "guided_noise");
    Tensor eps = zeros_like(eps_uncond);
    for (int64_t i = 0; i < eps.size(); ++i) {
        eps[i] = eps_uncond[i] + guidance_scale * (eps_cond[i] - eps_uncond[i]);
    }
    return eps;
}

}  // namespace vedit
