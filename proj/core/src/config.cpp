#include "vedit/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "vedit/error.hpp"

namespace vedit {

namespace {

// Splits on anything that is not alphanumeric, keeping case. Good enough for
// the "appears verbatim in the source prompt" invariant; position resolution
// against a real backbone goes through the adapter tokenizer instead.
std::vector<std::string> words_of(const std::string& text) {
    std::vector<std::string> words;
    std::string current;
    for (char ch : text) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            current.push_back(ch);
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        words.push_back(std::move(current));
    }
    return words;
}

}  // namespace

std::string to_string(TaskKind kind) {
    switch (kind) {
        case TaskKind::Attribute: return "attribute";
        case TaskKind::Style: return "style";
        case TaskKind::Background: return "background";
    }
    throw ConfigError("unknown task kind value");
}

std::string to_string(ControlType type) {
    switch (type) {
        case ControlType::Canny: return "canny";
        case ControlType::Hed: return "hed";
        case ControlType::Depth: return "depth";
    }
    throw ConfigError("unknown control type value");
}

TaskKind task_kind_from_string(const std::string& name) {
    if (name == "attribute") return TaskKind::Attribute;
    if (name == "style") return TaskKind::Style;
    if (name == "background") return TaskKind::Background;
    throw ConfigError("unknown task kind \"" + name + "\" (expected attribute|style|background)");
}

ControlType control_type_from_string(const std::string& name) {
    if (name == "canny") return ControlType::Canny;
    if (name == "hed") return ControlType::Hed;
    if (name == "depth") return ControlType::Depth;
    throw ConfigError("unknown control type \"" + name + "\" (expected canny|hed|depth)");
}

EditConfig preset_for_task(TaskKind kind) {
    EditConfig config;
    config.task_kind = kind;
    config.num_steps = 50;
    config.guidance_scale = 12.0;
    config.control_scale = 1.0;
    config.fusion_gamma = 0.97;
    switch (kind) {
        case TaskKind::Attribute:
            config.gamma_cutoff_step = 30;
            config.fusion_cutoff_step = 40;
            config.use_mask = true;
            config.mask_inverted = false;
            break;
        case TaskKind::Style:
            config.gamma_cutoff_step = 0;
            config.fusion_cutoff_step = 10;
            config.use_mask = false;
            config.mask_inverted = false;
            break;
        case TaskKind::Background:
            config.gamma_cutoff_step = 0;
            config.fusion_cutoff_step = 20;
            config.use_mask = true;
            // The mask marks the edit object; for background replacement the
            // object is what must be preserved, so the roles invert.
            config.mask_inverted = true;
            break;
    }
    return config;
}

std::vector<ValidationIssue> validate(const EditConfig& config) {
    std::vector<ValidationIssue> issues;
    const auto add = [&issues](const char* field, std::string message) {
        issues.push_back({field, std::move(message)});
    };

    if (config.window_size < 2) {
        add("window_size", "must be >= 2 (the interpolation recursion needs two anchor endpoints)");
    }
    if (config.num_steps < 1) {
        add("num_steps", "must be >= 1");
    }
    if (config.guidance_scale < 0.0) {
        add("guidance_scale", "must be nonnegative");
    }
    if (config.control_scale < 0.0 || config.control_scale > 1.0) {
        add("control_scale", "must lie in [0, 1]");
    }
    if (!(config.fusion_gamma > 0.0 && config.fusion_gamma <= 1.0)) {
        add("fusion_gamma", "must lie in (0, 1]");
    }
    if (!(config.mask_threshold > 0.0 && config.mask_threshold < 1.0)) {
        add("mask_threshold", "must lie in (0, 1)");
    }
    if (config.gamma_cutoff_step < 0) {
        add("gamma_cutoff_step", "must be >= 0");
    }
    if (config.gamma_cutoff_step > config.fusion_cutoff_step) {
        add("gamma_cutoff_step", "must not exceed fusion_cutoff_step");
    }
    if (config.fusion_cutoff_step > config.num_steps) {
        add("fusion_cutoff_step", "must not exceed num_steps");
    }
    if (config.height <= 0 || config.width <= 0) {
        add("resolution", "height and width must be positive");
    }
    if (config.task_kind != TaskKind::Style) {
        const auto prompt_words = words_of(config.source_prompt);
        for (const auto& token : config.object_tokens) {
            bool found = false;
            for (const auto& word : prompt_words) {
                if (word == token) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                add("object_tokens", "token \"" + token + "\" does not appear verbatim in source_prompt");
            }
        }
    }
    return issues;
}

EditConfig validated(EditConfig config) {
    const auto issues = validate(config);
    if (!issues.empty()) {
        std::ostringstream os;
        os << "invalid edit config:";
        for (const auto& issue : issues) {
            os << "\n  " << issue.field << ": " << issue.message;
        }
        throw ConfigError(os.str());
    }
    return config;
}

void to_json(nlohmann::json& j, const EditConfig& config) {
    j = nlohmann::json{
        {"task_kind", to_string(config.task_kind)},
        {"source_prompt", config.source_prompt},
        {"target_prompt", config.target_prompt},
        {"object_tokens", config.object_tokens},
        {"window_size", config.window_size},
        {"num_steps", config.num_steps},
        {"guidance_scale", config.guidance_scale},
        {"control_scale", config.control_scale},
        {"fusion_gamma", config.fusion_gamma},
        {"gamma_cutoff_step", config.gamma_cutoff_step},
        {"fusion_cutoff_step", config.fusion_cutoff_step},
        {"use_mask", config.use_mask},
        {"mask_inverted", config.mask_inverted},
        {"mask_threshold", config.mask_threshold},
        {"control_type", to_string(config.control_type)},
        {"seed", config.seed},
        {"resolution", {config.height, config.width}},
        {"use_interpolation", config.use_interpolation},
    };
}

void from_json(const nlohmann::json& j, EditConfig& config) {
    EditConfig defaults;
    config = defaults;
    if (j.contains("task_kind")) config.task_kind = task_kind_from_string(j.at("task_kind").get<std::string>());
    if (j.contains("source_prompt")) j.at("source_prompt").get_to(config.source_prompt);
    if (j.contains("target_prompt")) j.at("target_prompt").get_to(config.target_prompt);
    if (j.contains("object_tokens")) j.at("object_tokens").get_to(config.object_tokens);
    if (j.contains("window_size")) j.at("window_size").get_to(config.window_size);
    if (j.contains("num_steps")) j.at("num_steps").get_to(config.num_steps);
    if (j.contains("guidance_scale")) j.at("guidance_scale").get_to(config.guidance_scale);
    if (j.contains("control_scale")) j.at("control_scale").get_to(config.control_scale);
    if (j.contains("fusion_gamma")) j.at("fusion_gamma").get_to(config.fusion_gamma);
    if (j.contains("gamma_cutoff_step")) j.at("gamma_cutoff_step").get_to(config.gamma_cutoff_step);
    if (j.contains("fusion_cutoff_step")) j.at("fusion_cutoff_step").get_to(config.fusion_cutoff_step);
    if (j.contains("use_mask")) j.at("use_mask").get_to(config.use_mask);
    if (j.contains("mask_inverted")) j.at("mask_inverted").get_to(config.mask_inverted);
    if (j.contains("mask_threshold")) j.at("mask_threshold").get_to(config.mask_threshold);
    if (j.contains("control_type")) config.control_type = control_type_from_string(j.at("control_type").get<std::string>());
    if (j.contains("seed")) j.at("seed").get_to(config.seed);
    if (j.contains("resolution")) {
        const auto& res = j.at("resolution");
        if (!res.is_array() || res.size() != 2) {
            throw ConfigError("resolution must be a [height, width] pair");
        }
        config.height = res[0].get<int>();
        config.width = res[1].get<int>();
    }
    if (j.contains("use_interpolation")) j.at("use_interpolation").get_to(config.use_interpolation);
}

EditConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse config file " + path + ": " + e.what());
    }
    try {
        return j.get<EditConfig>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad config field in " + path + ": " + e.what());
    }
}

void save_config(const EditConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write config file: " + path);
    }
    nlohmann::json j = config;
    out << j.dump(2) << "\n";
}

std::string config_hash(const EditConfig& config) {
    nlohmann::json j = config;
    const std::string canonical = j.dump();
    uint64_t hash = 1469598103934665603ull;
    for (unsigned char ch : canonical) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

}  // namespace vedit
