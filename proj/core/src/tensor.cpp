#include "vedit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

#include "vedit/error.hpp"

namespace vedit {

namespace {

int64_t element_count(const std::vector<int64_t>& shape) {
    if (shape.empty() || shape.size() > 4) {
        throw ContractError("tensor rank must be 1..4, got rank " + std::to_string(shape.size()));
    }
    int64_t n = 1;
    for (int64_t d : shape) {
        if (d <= 0) {
            throw ContractError("tensor dimensions must be positive");
        }
        n *= d;
    }
    return n;
}

}  // namespace

Tensor::Tensor(std::vector<int64_t> shape, double fill)
    : shape_(std::move(shape)), data_(static_cast<size_t>(element_count(shape_)), fill) {}

Tensor Tensor::from_data(std::vector<int64_t> shape, std::vector<double> data) {
    const int64_t n = element_count(shape);
    if (n != static_cast<int64_t>(data.size())) {
        throw ContractError("tensor data size " + std::to_string(data.size()) +
                            " does not match shape element count " + std::to_string(n));
    }
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = std::move(data);
    return t;
}

int64_t Tensor::dim(int axis) const {
    if (axis < 0 || axis >= rank()) {
        throw ContractError("tensor axis " + std::to_string(axis) + " out of range for rank " +
                            std::to_string(rank()));
    }
    return shape_[static_cast<size_t>(axis)];
}

double& Tensor::at(int64_t i0, int64_t i1) {
    return data_[static_cast<size_t>(i0 * shape_[1] + i1)];
}
double Tensor::at(int64_t i0, int64_t i1) const {
    return data_[static_cast<size_t>(i0 * shape_[1] + i1)];
}
double& Tensor::at(int64_t i0, int64_t i1, int64_t i2) {
    return data_[static_cast<size_t>((i0 * shape_[1] + i1) * shape_[2] + i2)];
}
double Tensor::at(int64_t i0, int64_t i1, int64_t i2) const {
    return data_[static_cast<size_t>((i0 * shape_[1] + i1) * shape_[2] + i2)];
}
double& Tensor::at(int64_t i0, int64_t i1, int64_t i2, int64_t i3) {
    return data_[static_cast<size_t>(((i0 * shape_[1] + i1) * shape_[2] + i2) * shape_[3] + i3)];
}
double Tensor::at(int64_t i0, int64_t i1, int64_t i2, int64_t i3) const {
    return data_[static_cast<size_t>(((i0 * shape_[1] + i1) * shape_[2] + i2) * shape_[3] + i3)];
}

bool Tensor::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double Tensor::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

Tensor zeros_like(const Tensor& t) {
    return Tensor(t.shape(), 0.0);
}

Tensor full_like(const Tensor& t, double value) {
    return Tensor(t.shape(), value);
}

bool bit_equal(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) {
        return false;
    }
    return std::memcmp(a.data(), b.data(), static_cast<size_t>(a.size()) * sizeof(double)) == 0;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (int64_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* context) {
    if (!a.same_shape(b)) {
        throw ContractError(std::string(context) + ": shape mismatch " + shape_string(a) +
                            " vs " + shape_string(b));
    }
}

std::string shape_string(const Tensor& t) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < t.rank(); ++i) {
        os << (i ? ", " : "") << t.shape()[static_cast<size_t>(i)];
    }
    os << "]";
    return os.str();
}

}  // namespace vedit
