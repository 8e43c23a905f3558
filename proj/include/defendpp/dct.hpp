#pragma once

#include <torch/torch.h>

#include <cstdint>
#include <vector>

namespace defendpp::dct {

// Orthonormal DCT-II basis matrix of size n x n, double precision.
// Row k is s_k * cos(pi * (2i + 1) * k / (2n)) with s_0 = sqrt(1/n),
// s_k = sqrt(2/n) otherwise, so B * B^T = I.
torch::Tensor dct_basis(int64_t n);

// 2-D type-II DCT / inverse over the last two dimensions. Any leading batch
// shape is allowed. Input must be real and finite; output is double.
torch::Tensor dct2(const torch::Tensor& x);
torch::Tensor idct2(const torch::Tensor& f);

// Largest pyramid depth M such that every level down to 2^(M-1)-fold
// decimation keeps both sides integral and at least min_size.
int64_t max_levels(int64_t width, int64_t height, int64_t min_size = 7);

// Multi-scale low-frequency ground truth. Level 0 is the input itself;
// level m keeps the top-left (H/2^m) x (W/2^m) DCT coefficients, rescaled
// by sqrt((H_m * W_m) / (H * W)) so intensity is preserved, then inverted.
// Returned tensors are double, sizes [.., H/2^m, W/2^m].
std::vector<torch::Tensor> lowpass_ground_truth(const torch::Tensor& image, int64_t levels);

// Baseline pyramid built by repeated 2x2 box averaging instead of DCT.
std::vector<torch::Tensor> linear_interp_ground_truth(const torch::Tensor& image, int64_t levels);

// Bilinear x2 upsampler (align_corners = false) over the last two dims.
torch::Tensor bilinear_x2(const torch::Tensor& x);

using Upsampler = std::function<torch::Tensor(const torch::Tensor&)>;

// Laplacian detail stack: details[m] = pyramid[m] - U(pyramid[m+1]) for
// m < M-1, and the base band pyramid[M-1] as the last entry.
std::vector<torch::Tensor> laplacian_decompose(const std::vector<torch::Tensor>& pyramid,
                                               const Upsampler& up = bilinear_x2);

// Inverse of laplacian_decompose under the same upsampler.
std::vector<torch::Tensor> laplacian_reconstruct(const std::vector<torch::Tensor>& stack,
                                                 const Upsampler& up = bilinear_x2);

// log(1 + |dct2(image)|) scaled into [0, 1] for inspection dumps.
torch::Tensor frequency_map_visual(const torch::Tensor& image);

}  // namespace defendpp::dct
