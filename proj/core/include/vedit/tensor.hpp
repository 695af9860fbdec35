#pragma once

#include <cstdint>
#include <vector>

namespace vedit {

/// Dense row-major tensor of doubles, rank 1..4.
///
/// The numeric core runs in double precision so the brute-force oracles in the
/// test suites can be compared at tight tolerances. Shapes are small by design
/// (frames, latents, feature maps); no expression templates, just storage.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> shape, double fill = 0.0);
    static Tensor from_data(std::vector<int64_t> shape, std::vector<double> data);

    const std::vector<int64_t>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int64_t dim(int axis) const;
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    double& at(int64_t i0, int64_t i1);
    double at(int64_t i0, int64_t i1) const;
    double& at(int64_t i0, int64_t i1, int64_t i2);
    double at(int64_t i0, int64_t i1, int64_t i2) const;
    double& at(int64_t i0, int64_t i1, int64_t i2, int64_t i3);
    double at(int64_t i0, int64_t i1, int64_t i2, int64_t i3) const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;
    double max_abs() const;

    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

private:
    std::vector<int64_t> shape_;
    std::vector<double> data_;
};

Tensor zeros_like(const Tensor& t);
Tensor full_like(const Tensor& t, double value);

bool bit_equal(const Tensor& a, const Tensor& b);
double max_abs_diff(const Tensor& a, const Tensor& b);

// Throws ContractError with `context` if shapes differ.
void require_same_shape(const Tensor& a, const Tensor& b, const char* context);

std::string shape_string(const Tensor& t);

}  // namespace vedit
