#pragma once

#include <string>

#include "vedit/video.hpp"

namespace vedit {

/// Loads a video container file or a directory of image frames (sorted by
/// filename), center-crops to the target aspect ratio and scales to exactly
/// (height, width). Values land in [0, 1].
VideoClip load_video(const std::string& path, int height, int width);

/// Writes an MJPG-encoded .avi container.
void save_video(const VideoClip& clip, const std::string& path);

/// Dumps one image per frame (frame_000000.png, ...) into the directory,
/// creating it when needed.
void save_frames(const VideoClip& clip, const std::string& directory);

Tensor load_image(const std::string& path);
void save_image(const Tensor& image, const std::string& path);

}  // namespace vedit
