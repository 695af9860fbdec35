#pragma once

#include <utility>
#include <vector>

#include "vedit/tensor.hpp"

namespace vedit {

/// Ordered frame stack in pixel space. Frames are [H,W,3] tensors with values
/// in [0, 1]; immutable once constructed (treat as value).
struct VideoClip {
    std::vector<Tensor> frames;
    double frame_rate = 25.0;
    // Trailing frames appended by plan_windows for divisibility.
    int pad_count = 0;

    int frame_count() const { return static_cast<int>(frames.size()); }
    int64_t height() const { return frames.empty() ? 0 : frames.front().dim(0); }
    int64_t width() const { return frames.empty() ? 0 : frames.front().dim(1); }
};

/// Throws ContractError unless every frame is [H,W,3], same size, values in
/// [0,1], at least one frame and pad_count in range.
void check_clip(const VideoClip& clip, int window_size_hint = 0);

/// Consecutive disjoint windows of a fixed size covering all padded frames.
/// Windows and slots are 0-based.
struct WindowPlan {
    int window_size = 0;
    int window_count = 0;
    int padded_frame_count = 0;
    int source_frame_count = 0;

    int frame_index(int window, int slot) const;
};

/// Pads the clip by repeating the last frame until the frame count divides by
/// window_size, and returns the per-window index map.
std::pair<VideoClip, WindowPlan> plan_windows(VideoClip clip, int window_size);

/// Views the padded clip as window_count stacks of window_size frames.
std::vector<std::vector<Tensor>> split_windows(const VideoClip& clip, const WindowPlan& plan);

/// Concatenates windows in order and drops the trailing pad frames;
/// merge(plan(split(v))) == v exactly.
VideoClip merge_windows(const std::vector<std::vector<Tensor>>& windows, const WindowPlan& plan,
                        double frame_rate = 25.0);

/// Horizontal strip of `count` evenly sampled frames (preview grid).
Tensor frame_grid(const VideoClip& clip, int count);

}  // namespace vedit
