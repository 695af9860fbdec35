#include "vedit/image.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vedit/error.hpp"

namespace vedit {

namespace {

void require_image(const Tensor& t, const char* context) {
    if (t.rank() != 2 && t.rank() != 3) {
        throw ContractError(std::string(context) + ": expected [H,W] or [H,W,C], got " +
                            shape_string(t));
    }
}

int64_t channels_of(const Tensor& t) {
    return t.rank() == 3 ? t.dim(2) : 1;
}

}  // namespace

Tensor to_gray(const Tensor& frame) {
    if (frame.rank() != 3 || frame.dim(2) != 3) {
        throw ContractError("to_gray: expected [H,W,3], got " + shape_string(frame));
    }
    const int64_t h = frame.dim(0), w = frame.dim(1);
    Tensor out({h, w});
    for (int64_t y = 0; y < h; ++y) {
        for (int64_t x = 0; x < w; ++x) {
            out.at(y, x) = 0.299 * frame.at(y, x, 0) + 0.587 * frame.at(y, x, 1) +
                           0.114 * frame.at(y, x, 2);
        }
    }
    return out;
}

Tensor resize_bilinear(const Tensor& image, int64_t out_h, int64_t out_w) {
    require_image(image, "resize_bilinear");
    if (out_h <= 0 || out_w <= 0) {
        throw ContractError("resize_bilinear: target size must be positive");
    }
    const int64_t h = image.dim(0), w = image.dim(1), c = channels_of(image);
    if (h == out_h && w == out_w) {
        return image;
    }
    Tensor out(image.rank() == 3 ? std::vector<int64_t>{out_h, out_w, c}
                                 : std::vector<int64_t>{out_h, out_w});
    const double sy = static_cast<double>(h) / static_cast<double>(out_h);
    const double sx = static_cast<double>(w) / static_cast<double>(out_w);
    for (int64_t y = 0; y < out_h; ++y) {
        double fy = (static_cast<double>(y) + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(h - 1));
        const int64_t y0 = static_cast<int64_t>(fy);
        const int64_t y1 = std::min(y0 + 1, h - 1);
        const double wy = fy - static_cast<double>(y0);
        for (int64_t x = 0; x < out_w; ++x) {
            double fx = (static_cast<double>(x) + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(w - 1));
            const int64_t x0 = static_cast<int64_t>(fx);
            const int64_t x1 = std::min(x0 + 1, w - 1);
            const double wx = fx - static_cast<double>(x0);
            for (int64_t k = 0; k < c; ++k) {
                const double v00 = image.rank() == 3 ? image.at(y0, x0, k) : image.at(y0, x0);
                const double v01 = image.rank() == 3 ? image.at(y0, x1, k) : image.at(y0, x1);
                const double v10 = image.rank() == 3 ? image.at(y1, x0, k) : image.at(y1, x0);
                const double v11 = image.rank() == 3 ? image.at(y1, x1, k) : image.at(y1, x1);
                const double top = v00 + (v01 - v00) * wx;
                const double bot = v10 + (v11 - v10) * wx;
                const double v = top + (bot - top) * wy;
                if (image.rank() == 3) {
                    out.at(y, x, k) = v;
                } else {
                    out.at(y, x) = v;
                }
            }
        }
    }
    return out;
}

Tensor resize_nearest(const Tensor& image, int64_t out_h, int64_t out_w) {
    require_image(image, "resize_nearest");
    if (out_h <= 0 || out_w <= 0) {
        throw ContractError("resize_nearest: target size must be positive");
    }
    const int64_t h = image.dim(0), w = image.dim(1), c = channels_of(image);
    if (h == out_h && w == out_w) {
        return image;
    }
    Tensor out(image.rank() == 3 ? std::vector<int64_t>{out_h, out_w, c}
                                 : std::vector<int64_t>{out_h, out_w});
    for (int64_t y = 0; y < out_h; ++y) {
        int64_t sy = (y * h + h / 2) / out_h;
        sy = std::min(sy, h - 1);
        for (int64_t x = 0; x < out_w; ++x) {
            int64_t sx = (x * w + w / 2) / out_w;
            sx = std::min(sx, w - 1);
            for (int64_t k = 0; k < c; ++k) {
                if (image.rank() == 3) {
                    out.at(y, x, k) = image.at(sy, sx, k);
                } else {
                    out.at(y, x) = image.at(sy, sx);
                }
            }
        }
    }
    return out;
}

Tensor center_crop_resize(const Tensor& frame, int64_t out_h, int64_t out_w) {
    require_image(frame, "center_crop_resize");
    const int64_t h = frame.dim(0), w = frame.dim(1), c = channels_of(frame);
    // Largest centered region with the target aspect ratio.
    int64_t crop_h = h, crop_w = w;
    if (w * out_h > h * out_w) {
        crop_w = std::max<int64_t>(1, h * out_w / out_h);
    } else {
        crop_h = std::max<int64_t>(1, w * out_h / out_w);
    }
    const int64_t y0 = (h - crop_h) / 2;
    const int64_t x0 = (w - crop_w) / 2;
    Tensor cropped(frame.rank() == 3 ? std::vector<int64_t>{crop_h, crop_w, c}
                                     : std::vector<int64_t>{crop_h, crop_w});
    for (int64_t y = 0; y < crop_h; ++y) {
        for (int64_t x = 0; x < crop_w; ++x) {
            for (int64_t k = 0; k < c; ++k) {
                if (frame.rank() == 3) {
                    cropped.at(y, x, k) = frame.at(y0 + y, x0 + x, k);
                } else {
                    cropped.at(y, x) = frame.at(y0 + y, x0 + x);
                }
            }
        }
    }
    return resize_bilinear(cropped, out_h, out_w);
}

Tensor gaussian_blur(const Tensor& image, double sigma) {
    if (image.rank() != 2) {
        throw ContractError("gaussian_blur: expected [H,W], got " + shape_string(image));
    }
    if (sigma <= 0.0) {
        return image;
    }
    const int64_t radius = static_cast<int64_t>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int64_t i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * (static_cast<double>(i) / sigma) * (static_cast<double>(i) / sigma));
        kernel[static_cast<size_t>(i + radius)] = v;
        sum += v;
    }
    for (double& v : kernel) {
        v /= sum;
    }
    const int64_t h = image.dim(0), w = image.dim(1);
    const auto clampi = [](int64_t v, int64_t lo, int64_t hi) { return std::clamp(v, lo, hi); };
    Tensor tmp({h, w});
    for (int64_t y = 0; y < h; ++y) {
        for (int64_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int64_t i = -radius; i <= radius; ++i) {
                acc += kernel[static_cast<size_t>(i + radius)] * image.at(y, clampi(x + i, 0, w - 1));
            }
            tmp.at(y, x) = acc;
        }
    }
    Tensor out({h, w});
    for (int64_t y = 0; y < h; ++y) {
        for (int64_t x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int64_t i = -radius; i <= radius; ++i) {
                acc += kernel[static_cast<size_t>(i + radius)] * tmp.at(clampi(y + i, 0, h - 1), x);
            }
            out.at(y, x) = acc;
        }
    }
    return out;
}

Tensor clamp01(Tensor image) {
    for (double& v : image) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return image;
}

}  // namespace vedit
