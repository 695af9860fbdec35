#include "vedit/video_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/videoio.hpp>

#include "vedit/error.hpp"
#include "vedit/image.hpp"

namespace vedit {

namespace fs = std::filesystem;

namespace {

Tensor tensor_from_mat(const cv::Mat& bgr) {
    cv::Mat mat;
    if (bgr.type() == CV_8UC3) {
        mat = bgr;
    } else if (bgr.channels() == 1) {
        cv::Mat tmp;
        cv::merge(std::vector<cv::Mat>{bgr, bgr, bgr}, tmp);
        tmp.convertTo(mat, CV_8UC3);
    } else {
        bgr.convertTo(mat, CV_8UC3);
    }
    Tensor out({mat.rows, mat.cols, 3});
    for (int y = 0; y < mat.rows; ++y) {
        const auto* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < mat.cols; ++x) {
            // BGR -> RGB, 8-bit -> [0, 1].
            out.at(y, x, 0) = row[x][2] / 255.0;
            out.at(y, x, 1) = row[x][1] / 255.0;
            out.at(y, x, 2) = row[x][0] / 255.0;
        }
    }
    return out;
}

cv::Mat mat_from_tensor(const Tensor& image) {
    if (image.rank() != 3 || image.dim(2) != 3) {
        throw ContractError("expected an [H,W,3] image, got " + shape_string(image));
    }
    cv::Mat mat(static_cast<int>(image.dim(0)), static_cast<int>(image.dim(1)), CV_8UC3);
    for (int y = 0; y < mat.rows; ++y) {
        auto* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < mat.cols; ++x) {
            const auto quantize = [&](int c) {
                const double v = std::clamp(image.at(y, x, c), 0.0, 1.0);
                return static_cast<unsigned char>(std::lround(v * 255.0));
            };
            row[x][2] = quantize(0);
            row[x][1] = quantize(1);
            row[x][0] = quantize(2);
        }
    }
    return mat;
}

Tensor normalize_frame(Tensor frame, int height, int width) {
    if (frame.dim(0) != height || frame.dim(1) != width) {
        frame = center_crop_resize(frame, height, width);
    }
    return clamp01(std::move(frame));
}

VideoClip load_from_directory(const fs::path& dir, int height, int width) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    VideoClip clip;
    for (const auto& file : files) {
        cv::Mat mat = cv::imread(file.string(), cv::IMREAD_COLOR);
        if (mat.empty()) {
            // Skip non-image files (e.g. stray metadata) rather than failing.
            continue;
        }
        clip.frames.push_back(normalize_frame(tensor_from_mat(mat), height, width));
    }
    if (clip.frames.empty()) {
        throw IoError("no readable image frames in directory: " + dir.string());
    }
    return clip;
}

VideoClip load_from_container(const fs::path& file, int height, int width) {
    cv::VideoCapture capture(file.string());
    if (!capture.isOpened()) {
        throw IoError("cannot open video file: " + file.string());
    }
    VideoClip clip;
    const double fps = capture.get(cv::CAP_PROP_FPS);
    if (fps > 0.0) {
        clip.frame_rate = fps;
    }
    cv::Mat mat;
    while (capture.read(mat)) {
        clip.frames.push_back(normalize_frame(tensor_from_mat(mat), height, width));
    }
    if (clip.frames.empty()) {
        throw IoError("video file has zero decodable frames: " + file.string());
    }
    return clip;
}

}  // namespace

VideoClip load_video(const std::string& path, int height, int width) {
    if (height <= 0 || width <= 0) {
        throw ContractError("target resolution must be positive");
    }
    const fs::path p(path);
    if (!fs::exists(p)) {
        throw IoError("input path does not exist: " + path);
    }
    VideoClip clip = fs::is_directory(p) ? load_from_directory(p, height, width)
                                         : load_from_container(p, height, width);
    clip.pad_count = 0;
    check_clip(clip);
    return clip;
}

void save_video(const VideoClip& clip, const std::string& path) {
    check_clip(clip);
    const fs::path p(path);
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    cv::VideoWriter writer(path, cv::VideoWriter::fourcc('M', 'J', 'P', 'G'), clip.frame_rate,
                           cv::Size(static_cast<int>(clip.width()), static_cast<int>(clip.height())));
    if (!writer.isOpened()) {
        throw IoError("cannot open video writer for: " + path);
    }
    for (const Tensor& frame : clip.frames) {
        writer.write(mat_from_tensor(frame));
    }
}

void save_frames(const VideoClip& clip, const std::string& directory) {
    check_clip(clip);
    fs::create_directories(directory);
    char name[32];
    for (int i = 0; i < clip.frame_count(); ++i) {
        std::snprintf(name, sizeof(name), "frame_%06d.png", i);
        save_image(clip.frames[static_cast<size_t>(i)], (fs::path(directory) / name).string());
    }
}

Tensor load_image(const std::string& path) {
    cv::Mat mat = cv::imread(path, cv::IMREAD_COLOR);
    if (mat.empty()) {
        throw IoError("cannot read image: " + path);
    }
    return tensor_from_mat(mat);
}

void save_image(const Tensor& image, const std::string& path) {
    const fs::path p(path);
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    if (!cv::imwrite(path, mat_from_tensor(image))) {
        throw IoError("cannot write image: " + path);
    }
}

}  // namespace vedit
