#pragma once

#include <cstdint>
#include <vector>

#include "bagwise/core.hpp"

namespace bagwise {

// 8-bit RGB raster, row major. Decoding from PNG/JPEG lives in the tools
// layer; this module only sees decoded pixels.
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // 3 * width * height, RGB interleaved

  static RgbImage filled(int width, int height, std::uint8_t r,
                         std::uint8_t g, std::uint8_t b);

  std::uint8_t& at(int x, int y, int channel) {
    return pixels[static_cast<std::size_t>(3) * (static_cast<std::size_t>(y) * width + x) + channel];
  }
  std::uint8_t at(int x, int y, int channel) const {
    return pixels[static_cast<std::size_t>(3) * (static_cast<std::size_t>(y) * width + x) + channel];
  }
};

// Reference configuration of the three descriptors. Defaults give
// dimensionalities 512 (HoC), 2304 (HoG) and 512 (GIST).
struct DescriptorConfig {
  int hoc_bins_per_channel = 8;
  int hog_cell = 8;
  int hog_orientations = 9;
  int hog_resize = 128;
  int gist_grid = 4;
  int gist_orientations = 8;
  int gist_scales = 4;

  void validate() const;  // throws invalid_spec
};

// Joint RGB color histogram with bins^3 entries, L1-normalized. Invariant to
// any permutation of pixel positions.
FeatureVector extract_hoc(const RgbImage& img, const DescriptorConfig& cfg);

// Histogram of oriented gradients: grayscale (Rec.601 luma), bilinear resize
// to hog_resize^2, central-difference gradients, per-cell unsigned
// orientation histograms over [0, pi), globally L2-normalized. A constant
// image yields the all-zero vector.
FeatureVector extract_hog(const RgbImage& img, const DescriptorConfig& cfg);

// Simplified GIST: oriented gradient-energy responses on a Gaussian pyramid
// (gist_scales octaves of the 128^2 grayscale image), gist_orientations
// directions, averaged over a gist_grid x gist_grid spatial grid. Layout is
// scale-major, then orientation, then grid cell (row major). L2-normalized
// unless all-zero.
FeatureVector extract_gist(const RgbImage& img, const DescriptorConfig& cfg);

// Dispatch on space; FeatureSpace::deep is not computable here.
FeatureVector extract(FeatureSpace space, const RgbImage& img,
                      const DescriptorConfig& cfg);

}  // namespace bagwise
