#include "vedit/toy_backend.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "vedit/attention.hpp"
#include "vedit/error.hpp"

namespace vedit {

namespace {

uint64_t fnv1a(const std::string& text) {
    uint64_t hash = 1469598103934665603ull;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    return hash;
}

class ToyBackend final : public BackboneAdapter {
public:
    explicit ToyBackend(ToyBackendOptions options) : options_(options) {
        for (double s : options_.channel_scale) {
            if (s <= 0.0) {
                throw ContractError("toy backend channel scales must be positive");
            }
        }
        // channel_permutation must be a permutation of {0,1,2}.
        std::array<bool, 3> seen{false, false, false};
        for (int p : options_.channel_permutation) {
            if (p < 0 || p > 2 || seen[static_cast<size_t>(p)]) {
                throw ContractError("toy backend channel_permutation must permute {0,1,2}");
            }
            seen[static_cast<size_t>(p)] = true;
        }
    }

    std::string name() const override { return "toy-linear-v1"; }

    std::vector<int64_t> latent_shape(int height, int width) const override {
        return {3, height, width};
    }

    double reconstruction_tolerance() const override { return 0.0; }

    Tensor encode(const Tensor& frame) const override {
        if (frame.rank() != 3 || frame.dim(2) != 3) {
            throw ContractError("toy encode expects [H,W,3], got " + shape_string(frame));
        }
        const int64_t h = frame.dim(0), w = frame.dim(1);
        Tensor z({3, h, w});
        for (int64_t c = 0; c < 3; ++c) {
            const int64_t out_c = options_.channel_permutation[static_cast<size_t>(c)];
            const double scale = options_.channel_scale[static_cast<size_t>(c)];
            for (int64_t y = 0; y < h; ++y) {
                for (int64_t x = 0; x < w; ++x) {
                    z.at(out_c, y, x) = frame.at(y, x, c) * scale;
                }
            }
        }
        return z;
    }

    Tensor decode(const Tensor& latent) const override {
        if (latent.rank() != 3 || latent.dim(0) != 3) {
            throw ContractError("toy decode expects [3,h,w], got " + shape_string(latent));
        }
        const int64_t h = latent.dim(1), w = latent.dim(2);
        Tensor frame({h, w, 3});
        for (int64_t c = 0; c < 3; ++c) {
            const int64_t in_c = options_.channel_permutation[static_cast<size_t>(c)];
            const double scale = options_.channel_scale[static_cast<size_t>(c)];
            for (int64_t y = 0; y < h; ++y) {
                for (int64_t x = 0; x < w; ++x) {
                    frame.at(y, x, c) = latent.at(in_c, y, x) / scale;
                }
            }
        }
        return frame;
    }

    std::vector<std::string> tokenize(const std::string& prompt) const override {
        std::vector<std::string> tokens;
        std::string current;
        for (char ch : prompt) {
            if (std::isalnum(static_cast<unsigned char>(ch))) {
                current.push_back(ch);
            } else if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        }
        if (!current.empty()) {
            tokens.push_back(std::move(current));
        }
        return tokens;
    }

    PromptEmbedding embed_prompt(const std::string& prompt) const override {
        PromptEmbedding embedding;
        embedding.text = prompt;
        embedding.tokens = tokenize(prompt);
        const double centered =
            static_cast<double>(static_cast<int64_t>(fnv1a(prompt) % 2001ull) - 1000) / 1000.0;
        embedding.features = Tensor::from_data({1}, {options_.noise_gain * centered});
        return embedding;
    }

    int attention_layer_count() const override {
        return static_cast<int>(options_.layer_grids.size());
    }

    std::array<int64_t, 2> feature_shape(int layer) const override {
        const int grid = grid_of(layer);
        return {static_cast<int64_t>(grid) * grid, options_.feature_dim};
    }

    Tensor predict_noise(const Tensor& latent, int timestep, const PromptEmbedding& prompt,
                         const Tensor* /*control*/, double /*control_scale*/,
                         AttentionHooks* hooks) const override {
        if (latent.rank() != 3 || latent.dim(0) != 3) {
            throw ContractError("toy predict_noise expects [3,h,w], got " + shape_string(latent));
        }
        if (prompt.features.size() != 1) {
            throw ContractError("toy predict_noise needs an embedding from this backend");
        }
        if (hooks != nullptr) {
            run_attention_layers(latent, timestep, prompt, *hooks);
        }
        const double gain = prompt.features[0];
        Tensor eps = zeros_like(latent);
        for (int64_t i = 0; i < latent.size(); ++i) {
            eps[i] = gain * latent[i];
        }
        return eps;
    }

private:
    int grid_of(int layer) const {
        if (layer < 0 || layer >= attention_layer_count()) {
            throw ContractError("toy backend layer " + std::to_string(layer) + " out of range");
        }
        return options_.layer_grids[static_cast<size_t>(layer)];
    }

    // Point-sampled latent values modulated by a deterministic (d, t, layer)
    // weight; shaped [grid^2, feature_dim].
    Tensor synth_features(const Tensor& latent, int timestep, int layer) const {
        const int grid = grid_of(layer);
        const int64_t h = latent.dim(1), w = latent.dim(2);
        const int64_t positions = static_cast<int64_t>(grid) * grid;
        Tensor features({positions, options_.feature_dim});
        for (int64_t p = 0; p < positions; ++p) {
            const int64_t row = p / grid, col = p % grid;
            const int64_t y = std::min(row * h / grid, h - 1);
            const int64_t x = std::min(col * w / grid, w - 1);
            for (int64_t d = 0; d < options_.feature_dim; ++d) {
                const uint64_t mix = static_cast<uint64_t>(d) * 31ull +
                                     static_cast<uint64_t>(layer) * 17ull +
                                     static_cast<uint64_t>(timestep);
                const double weight = 1.0 + 0.25 * static_cast<double>(mix % 7ull) / 7.0;
                features.at(p, d) = latent.at(d % 3, y, x) * weight;
            }
        }
        return features;
    }

    void run_attention_layers(const Tensor& latent, int timestep, const PromptEmbedding& prompt,
                              AttentionHooks& hooks) const {
        for (int layer = 0; layer < attention_layer_count(); ++layer) {
            const Tensor features = synth_features(latent, timestep, layer);
            if (hooks.on_features) {
                hooks.on_features(layer, timestep, features);
            }
            if (hooks.extend_kv) {
                const Tensor kv = hooks.extend_kv(layer, timestep, features);
                if (!kv.empty()) {
                    // The toy noise model stays c_p * z; the attention output
                    // only exercises the extended-KV path.
                    const Tensor attended = attention_with_context(features, kv);
                    if (!attended.all_finite()) {
                        throw AdapterError("toy attention produced non-finite values");
                    }
                }
            }
            if (hooks.on_cross_attention && !prompt.tokens.empty()) {
                const int grid = grid_of(layer);
                const int64_t positions = static_cast<int64_t>(grid) * grid;
                const int64_t tokens = static_cast<int64_t>(prompt.tokens.size());
                // Uniform attention: every position attends equally to every
                // prompt token.
                Tensor weights({options_.cross_attention_heads, positions, tokens});
                const double value = 1.0 / static_cast<double>(tokens);
                for (double& v : weights) {
                    v = value;
                }
                hooks.on_cross_attention(layer, timestep, weights, grid, grid);
            }
        }
    }

    ToyBackendOptions options_;
};

}  // namespace

std::shared_ptr<BackboneAdapter> make_toy_backend(ToyBackendOptions options) {
    return std::make_shared<ToyBackend>(options);
}

}  // namespace vedit
