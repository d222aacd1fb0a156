#include "cdcp/imaging/io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>

namespace cdcp::imaging {

namespace {

cv::Mat read_or_throw(const std::string& path) {
    cv::Mat mat = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (mat.empty()) throw Error("cannot decode image: " + path);
    if (mat.depth() != CV_8U && mat.depth() != CV_16U)
        throw Error("unsupported bit depth in " + path + " (want 8- or 16-bit)");
    return mat;
}

double depth_scale(const cv::Mat& mat) {
    return mat.depth() == CV_16U ? 1.0 / 65535.0 : 1.0 / 255.0;
}

// OpenCV decodes color as BGR(A); collapse whatever arrived to RGB triples.
RgbImage to_rgb(const cv::Mat& mat, const std::string& path) {
    const int ch = mat.channels();
    if (ch != 1 && ch != 3 && ch != 4)
        throw Error("unsupported channel count in " + path + ": " + std::to_string(ch));
    const double scale = depth_scale(mat);
    RgbImage out(mat.cols, mat.rows);
    for (int y = 0; y < mat.rows; ++y) {
        for (int x = 0; x < mat.cols; ++x) {
            double r, g, b;
            if (mat.depth() == CV_8U) {
                const uint8_t* p = mat.ptr<uint8_t>(y) + static_cast<size_t>(x) * ch;
                b = p[0];
                g = ch >= 3 ? p[1] : p[0];
                r = ch >= 3 ? p[2] : p[0];
            } else {
                const uint16_t* p = mat.ptr<uint16_t>(y) + static_cast<size_t>(x) * ch;
                b = p[0];
                g = ch >= 3 ? p[1] : p[0];
                r = ch >= 3 ? p[2] : p[0];
            }
            out.at(x, y) = {r * scale, g * scale, b * scale};
        }
    }
    return out;
}

ScalarMap to_gray(const cv::Mat& mat, const std::string& path) {
    const int ch = mat.channels();
    if (ch != 1 && ch != 3 && ch != 4)
        throw Error("unsupported channel count in " + path + ": " + std::to_string(ch));
    const double scale = depth_scale(mat);
    ScalarMap out(mat.cols, mat.rows);
    for (int y = 0; y < mat.rows; ++y) {
        for (int x = 0; x < mat.cols; ++x) {
            double v;
            if (mat.depth() == CV_8U)
                v = mat.ptr<uint8_t>(y)[static_cast<size_t>(x) * ch];
            else
                v = mat.ptr<uint16_t>(y)[static_cast<size_t>(x) * ch];
            out.at(x, y) = v * scale;
        }
    }
    return out;
}

void write_or_throw(const cv::Mat& mat, const std::string& path) {
    if (!cv::imwrite(path, mat)) throw Error("cannot write image: " + path);
}

}  // namespace

RgbImage load_rgb(const std::string& path) { return to_rgb(read_or_throw(path), path); }

ScalarMap load_gray(const std::string& path) { return to_gray(read_or_throw(path), path); }

RgbdPair load_rgbd(const std::string& rgb_path, const std::string& depth_path, bool invert_depth) {
    RgbdPair pair;
    pair.rgb = load_rgb(rgb_path);
    pair.depth = load_gray(depth_path);
    if (pair.rgb.width != pair.depth.width || pair.rgb.height != pair.depth.height)
        throw Error("rgb/depth size mismatch: " + rgb_path + " is " +
                    size_string(pair.rgb.width, pair.rgb.height) + ", " + depth_path + " is " +
                    size_string(pair.depth.width, pair.depth.height));
    if (invert_depth)
        for (double& v : pair.depth.values) v = 1.0 - v;
    return pair;
}

GroundTruth load_ground_truth(const std::string& path) {
    ScalarMap gray = load_gray(path);
    GroundTruth gt;
    gt.width = gray.width;
    gt.height = gray.height;
    gt.mask.resize(gray.size());
    for (size_t i = 0; i < gray.size(); ++i) {
        gt.mask[i] = gray.values[i] >= 0.5 ? 1 : 0;
        gt.positive_count += gt.mask[i];
    }
    return gt;
}

void save_gray_png(const ScalarMap& map, const std::string& path) {
    cv::Mat mat(map.height, map.width, CV_8UC1);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x) {
            const double v = std::clamp(map.at(x, y), 0.0, 1.0);
            mat.at<uint8_t>(y, x) = static_cast<uint8_t>(std::lround(v * 255.0));
        }
    write_or_throw(mat, path);
}

void save_gray16_png(const ScalarMap& map, const std::string& path) {
    cv::Mat mat(map.height, map.width, CV_16UC1);
    for (int y = 0; y < map.height; ++y)
        for (int x = 0; x < map.width; ++x) {
            const double v = std::clamp(map.at(x, y), 0.0, 1.0);
            mat.at<uint16_t>(y, x) = static_cast<uint16_t>(std::lround(v * 65535.0));
        }
    write_or_throw(mat, path);
}

void save_rgb_png(const RgbImage& image, const std::string& path) {
    cv::Mat mat(image.height, image.width, CV_8UC3);
    for (int y = 0; y < image.height; ++y)
        for (int x = 0; x < image.width; ++x) {
            const Color3& c = image.at(x, y);
            auto to8 = [](double v) {
                return static_cast<uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
            };
            mat.at<cv::Vec3b>(y, x) = cv::Vec3b(to8(c[2]), to8(c[1]), to8(c[0]));  // BGR
        }
    write_or_throw(mat, path);
}

}  // namespace cdcp::imaging
