#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vedit {

enum class TaskKind { Attribute, Style, Background };
enum class ControlType { Canny, Hed, Depth };

std::string to_string(TaskKind kind);
std::string to_string(ControlType type);
TaskKind task_kind_from_string(const std::string& name);
ControlType control_type_from_string(const std::string& name);

/// Full description of one editing job. Immutable after validation; safe to
/// share across threads by value.
///
/// Step-index convention: gamma_cutoff_step (T0) and fusion_cutoff_step (T1)
/// count completed reverse-process steps, step 1 being the first denoising
/// step at t = T. Latent fusion runs while step_index <= T1 and blends with
/// the trade-off gamma while step_index <= T0 (gamma is forced to 1 after T0).
struct EditConfig {
    TaskKind task_kind = TaskKind::Attribute;
    std::string source_prompt;
    std::string target_prompt;
    std::vector<std::string> object_tokens;

    int window_size = 8;
    int num_steps = 50;
    double guidance_scale = 12.0;
    double control_scale = 1.0;

    double fusion_gamma = 0.97;
    int gamma_cutoff_step = 30;   // T0
    int fusion_cutoff_step = 40;  // T1
    bool use_mask = true;
    bool mask_inverted = false;
    double mask_threshold = 0.3;

    ControlType control_type = ControlType::Canny;
    uint64_t seed = 0;
    int height = 512;
    int width = 512;

    // Frame-interpolation smoothing stage on/off (the paper's ablation switch).
    bool use_interpolation = true;
};

/// Paper defaults per editing category. All presets use 50 steps, guidance 12
/// and control scale 1.
EditConfig preset_for_task(TaskKind kind);

struct ValidationIssue {
    std::string field;
    std::string message;
};

/// Checks every EditConfig invariant and reports all violations at once.
/// An empty result means the config is valid.
std::vector<ValidationIssue> validate(const EditConfig& config);

/// Returns the config unchanged if valid, otherwise throws ConfigError listing
/// every violation.
EditConfig validated(EditConfig config);

void to_json(nlohmann::json& j, const EditConfig& config);
void from_json(const nlohmann::json& j, EditConfig& config);

EditConfig load_config(const std::string& path);
void save_config(const EditConfig& config, const std::string& path);

/// FNV-1a hash of the canonical JSON serialization, hex-encoded. Used to tag
/// provenance records and inversion caches.
std::string config_hash(const EditConfig& config);

}  // namespace vedit
