#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flakelab {

//! Row-major dense raster plane; indexed (y, x) with rows = image height.
template <class T>
using Plane = Eigen::Array<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GrayImage = Plane<std::uint8_t>;   // luminance in [0, 255]
using MaskImage = Plane<std::uint8_t>;   // 0 or 1
using LabelImage = Plane<std::int32_t>;  // component labels, 0 = background
using LayerMap = Plane<std::int32_t>;    // per-pixel layer counts

//! Planar RGB raster. Channel planes always share dimensions.
template <class T>
struct RgbImage {
  Plane<T> r, g, b;

  RgbImage() = default;
  RgbImage(Eigen::Index height, Eigen::Index width) { resize(height, width); }

  void resize(Eigen::Index height, Eigen::Index width) {
    r.setZero(height, width);
    g.setZero(height, width);
    b.setZero(height, width);
  }
  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }

  Eigen::Matrix<double, 3, 1> at(Eigen::Index y, Eigen::Index x) const {
    return {static_cast<double>(r(y, x)), static_cast<double>(g(y, x)),
            static_cast<double>(b(y, x))};
  }
};

using RgbImageU8 = RgbImage<std::uint8_t>;
using RgbImageF = RgbImage<float>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

}  // namespace flakelab
