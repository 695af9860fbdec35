#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "vedit/schedule.hpp"
#include "vedit/tensor.hpp"

namespace vedit {

/// Tokenized prompt plus whatever feature payload the backbone derives from
/// it. Opaque to the pipeline; produced and consumed by the same adapter.
struct PromptEmbedding {
    std::string text;
    std::vector<std::string> tokens;
    Tensor features;
};

/// Observation and override points the pipeline installs into a noise
/// prediction. All callbacks are optional (leave them empty for a plain pass).
struct AttentionHooks {
    /// Returns replacement key/value features for the self-attention at
    /// (layer, timestep), given the frame's own features [L,D]. Returning an
    /// empty tensor keeps plain self-attention.
    std::function<Tensor(int layer, int timestep, const Tensor& features)> extend_kv;

    /// Observes the frame's own self-attention features before any extension.
    std::function<void(int layer, int timestep, const Tensor& features)> on_features;

    /// Observes raw cross-attention weights [heads, positions, text_tokens]
    /// on a grid_h x grid_w spatial layer. Weights are nonnegative and each
    /// position's distribution over text tokens sums to one.
    std::function<void(int layer, int timestep, const Tensor& weights, int grid_h, int grid_w)>
        on_cross_attention;
};

/// Contract with a pretrained latent-diffusion backbone: latent codec, prompt
/// handling and noise prediction with optional structural control. Adapters
/// must be deterministic given identical inputs; the pipeline relies on it.
class BackboneAdapter {
public:
    virtual ~BackboneAdapter() = default;

    virtual std::string name() const = 0;

    /// The schedule is owned by the pretrained model; adapters override when
    /// theirs differs from the default linear one.
    virtual NoiseSchedule schedule() const { return NoiseSchedule::linear(); }

    virtual std::vector<int64_t> latent_shape(int height, int width) const = 0;

    /// decode(encode(x)) must land within this bound (max-abs).
    virtual double reconstruction_tolerance() const = 0;
    virtual Tensor encode(const Tensor& frame) const = 0;
    virtual Tensor decode(const Tensor& latent) const = 0;

    virtual std::vector<std::string> tokenize(const std::string& prompt) const = 0;
    virtual PromptEmbedding embed_prompt(const std::string& prompt) const = 0;

    virtual int attention_layer_count() const = 0;
    virtual std::array<int64_t, 2> feature_shape(int layer) const = 0;  // [L, D]

    /// Predicts the noise residual for `latent` at training timestep
    /// `timestep`. `control` may be null; `hooks` may be null.
    virtual Tensor predict_noise(const Tensor& latent, int timestep, const PromptEmbedding& prompt,
                                 const Tensor* control, double control_scale,
                                 AttentionHooks* hooks) const = 0;
};

/// Classifier-free guidance: eps_uncond + scale * (eps_cond - eps_uncond),
/// with the control signal forwarded to both branches. Hooks are forwarded to
/// the conditional branch only. Backbone failures are rethrown with timestep
/// context.
Tensor guided_noise(const BackboneAdapter& backend, const Tensor& latent, int timestep,
                    const PromptEmbedding& cond, const PromptEmbedding& uncond,
                    const Tensor* control, double control_scale, double guidance_scale,
                    AttentionHooks* hooks = nullptr);

}  // namespace vedit
