#include "vedit/video.hpp"

#include <string>

#include "vedit/error.hpp"

namespace vedit {

void check_clip(const VideoClip& clip, int window_size_hint) {
    if (clip.frames.empty()) {
        throw ContractError("video clip has no frames");
    }
    const int64_t h = clip.frames.front().dim(0);
    const int64_t w = clip.frames.front().dim(1);
    for (size_t i = 0; i < clip.frames.size(); ++i) {
        const Tensor& f = clip.frames[i];
        if (f.rank() != 3 || f.dim(2) != 3) {
            throw ContractError("frame " + std::to_string(i) + " is not [H,W,3]: " + shape_string(f));
        }
        if (f.dim(0) != h || f.dim(1) != w) {
            throw ContractError("frame " + std::to_string(i) + " size differs from frame 0");
        }
        for (double v : f) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ContractError("frame " + std::to_string(i) + " has values outside [0, 1]");
            }
        }
    }
    if (clip.pad_count < 0 || (window_size_hint > 0 && clip.pad_count >= window_size_hint)) {
        throw ContractError("pad_count " + std::to_string(clip.pad_count) + " out of range");
    }
    if (clip.frame_rate <= 0.0) {
        throw ContractError("frame_rate must be positive");
    }
}

int WindowPlan::frame_index(int window, int slot) const {
    if (window < 0 || window >= window_count) {
        throw ContractError("window index " + std::to_string(window) + " out of range [0, " +
                            std::to_string(window_count) + ")");
    }
    if (slot < 0 || slot >= window_size) {
        throw ContractError("window slot " + std::to_string(slot) + " out of range [0, " +
                            std::to_string(window_size) + ")");
    }
    return window * window_size + slot;
}

std::pair<VideoClip, WindowPlan> plan_windows(VideoClip clip, int window_size) {
    if (window_size < 2) {
        throw ContractError("window_size must be >= 2, got " + std::to_string(window_size));
    }
    if (clip.frames.empty()) {
        throw ContractError("cannot window an empty clip");
    }
    WindowPlan plan;
    plan.window_size = window_size;
    plan.source_frame_count = clip.frame_count();
    const int remainder = plan.source_frame_count % window_size;
    clip.pad_count = remainder == 0 ? 0 : window_size - remainder;
    for (int i = 0; i < clip.pad_count; ++i) {
        clip.frames.push_back(clip.frames[static_cast<size_t>(plan.source_frame_count - 1)]);
    }
    plan.padded_frame_count = clip.frame_count();
    plan.window_count = plan.padded_frame_count / window_size;
    return {std::move(clip), plan};
}

std::vector<std::vector<Tensor>> split_windows(const VideoClip& clip, const WindowPlan& plan) {
    if (clip.frame_count() != plan.padded_frame_count) {
        throw ContractError("clip frame count " + std::to_string(clip.frame_count()) +
                            " does not match plan (" + std::to_string(plan.padded_frame_count) + ")");
    }
    std::vector<std::vector<Tensor>> windows(static_cast<size_t>(plan.window_count));
    for (int i = 0; i < plan.window_count; ++i) {
        windows[static_cast<size_t>(i)].reserve(static_cast<size_t>(plan.window_size));
        for (int j = 0; j < plan.window_size; ++j) {
            windows[static_cast<size_t>(i)].push_back(
                clip.frames[static_cast<size_t>(plan.frame_index(i, j))]);
        }
    }
    return windows;
}

VideoClip merge_windows(const std::vector<std::vector<Tensor>>& windows, const WindowPlan& plan,
                        double frame_rate) {
    if (static_cast<int>(windows.size()) != plan.window_count) {
        throw ContractError("window count " + std::to_string(windows.size()) +
                            " does not match plan (" + std::to_string(plan.window_count) + ")");
    }
    VideoClip out;
    out.frame_rate = frame_rate;
    out.pad_count = 0;
    out.frames.reserve(static_cast<size_t>(plan.source_frame_count));
    const Tensor* reference = nullptr;
    for (int i = 0; i < plan.window_count; ++i) {
        const auto& window = windows[static_cast<size_t>(i)];
        if (static_cast<int>(window.size()) != plan.window_size) {
            throw ContractError("window " + std::to_string(i) + " has " +
                                std::to_string(window.size()) + " frames, plan expects " +
                                std::to_string(plan.window_size));
        }
        for (int j = 0; j < plan.window_size; ++j) {
            const Tensor& frame = window[static_cast<size_t>(j)];
            if (reference == nullptr) {
                reference = &window.front();
            }
            if (!frame.same_shape(*reference)) {
                throw ContractError("window " + std::to_string(i) + " slot " + std::to_string(j) +
                                    " shape " + shape_string(frame) + " differs from " +
                                    shape_string(*reference));
            }
            if (plan.frame_index(i, j) < plan.source_frame_count) {
                out.frames.push_back(frame);
            }
        }
    }
    return out;
}

Tensor frame_grid(const VideoClip& clip, int count) {
    check_clip(clip);
    if (count < 1) {
        throw ContractError("frame_grid: count must be >= 1");
    }
    count = std::min(count, clip.frame_count());
    const int64_t h = clip.height(), w = clip.width();
    Tensor grid({h, w * count, 3});
    for (int k = 0; k < count; ++k) {
        // Evenly sampled, first and last included when count > 1.
        const int idx = count == 1 ? 0
                                   : static_cast<int>((static_cast<int64_t>(k) *
                                                       (clip.frame_count() - 1)) /
                                                      (count - 1));
        const Tensor& frame = clip.frames[static_cast<size_t>(idx)];
        for (int64_t y = 0; y < h; ++y) {
            for (int64_t x = 0; x < w; ++x) {
                for (int64_t c = 0; c < 3; ++c) {
                    grid.at(y, static_cast<int64_t>(k) * w + x, c) = frame.at(y, x, c);
                }
            }
        }
    }
    return grid;
}

}  // namespace vedit
