#pragma once

#include "vedit/tensor.hpp"

namespace vedit {

// Small pure-image helpers shared by video normalization, the canny detector
// and attention-map resizing. Images are [H,W] or [H,W,C] tensors.

// Rec.601 luminance of an RGB frame: [H,W,3] -> [H,W].
Tensor to_gray(const Tensor& frame);

// Bilinear resampling with the pixel-center convention; values never overshoot
// the input range. Accepts [H,W] or [H,W,C].
Tensor resize_bilinear(const Tensor& image, int64_t out_h, int64_t out_w);

// Nearest-neighbor resampling, same shapes as resize_bilinear.
Tensor resize_nearest(const Tensor& image, int64_t out_h, int64_t out_w);

// Aspect-preserving center crop to the target aspect ratio followed by a
// bilinear scale to exactly (out_h, out_w).
Tensor center_crop_resize(const Tensor& frame, int64_t out_h, int64_t out_w);

// Separable Gaussian blur with replicate borders, kernel radius ceil(3*sigma).
// sigma <= 0 returns the input unchanged. [H,W] only.
Tensor gaussian_blur(const Tensor& image, double sigma);

Tensor clamp01(Tensor image);

}  // namespace vedit
