#include "defendpp/dct.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

namespace defendpp::dct {

namespace {

const torch::Tensor& cached_basis(int64_t n) {
  static std::unordered_map<int64_t, torch::Tensor> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, dct_basis(n)).first;
  }
  return it->second;
}

void check_image(const torch::Tensor& x, const char* who) {
  TORCH_CHECK(x.defined() && x.dim() >= 2, who, ": expected a tensor with at least 2 dims");
  TORCH_CHECK(x.is_floating_point() || x.scalar_type() == torch::kLong ||
                  x.scalar_type() == torch::kInt,
              who, ": expected a real-valued tensor");
  if (x.is_floating_point()) {
    TORCH_CHECK(x.isfinite().all().item<bool>(), who, ": input has non-finite values");
  }
}

}  // namespace

torch::Tensor dct_basis(int64_t n) {
  TORCH_CHECK(n >= 1, "dct_basis: size must be positive, got ", n);
  auto i = torch::arange(n, torch::kDouble);
  auto k = i.view({n, 1});
  auto basis = torch::cos(M_PI * (2.0 * i + 1.0) * k / (2.0 * n));
  basis *= std::sqrt(2.0 / n);
  basis[0] *= std::sqrt(0.5);
  return basis;
}

torch::Tensor dct2(const torch::Tensor& x) {
  check_image(x, "dct2");
  auto xd = x.to(torch::kDouble);
  const auto& bh = cached_basis(xd.size(-2));
  const auto& bw = cached_basis(xd.size(-1));
  return torch::matmul(torch::matmul(bh, xd), bw.transpose(0, 1));
}

torch::Tensor idct2(const torch::Tensor& f) {
  check_image(f, "idct2");
  auto fd = f.to(torch::kDouble);
  const auto& bh = cached_basis(fd.size(-2));
  const auto& bw = cached_basis(fd.size(-1));
  return torch::matmul(torch::matmul(bh.transpose(0, 1), fd), bw);
}

int64_t max_levels(int64_t width, int64_t height, int64_t min_size) {
  TORCH_CHECK(min_size >= 1, "max_levels: min_size must be positive");
  TORCH_CHECK(width >= min_size && height >= min_size,
              "max_levels: image ", width, "x", height, " is below the minimum level size ",
              min_size, "x", min_size);
  int64_t m = 1;
  int64_t w = width, h = height;
  while (w % 2 == 0 && h % 2 == 0 && w / 2 >= min_size && h / 2 >= min_size) {
    w /= 2;
    h /= 2;
    ++m;
  }
  return m;
}

std::vector<torch::Tensor> lowpass_ground_truth(const torch::Tensor& image, int64_t levels) {
  check_image(image, "lowpass_ground_truth");
  const int64_t h = image.size(-2);
  const int64_t w = image.size(-1);
  TORCH_CHECK(levels >= 1, "lowpass_ground_truth: levels must be >= 1, got ", levels);
  const int64_t scale = int64_t(1) << (levels - 1);
  TORCH_CHECK(h % scale == 0 && w % scale == 0 && h / scale >= 7 && w / scale >= 7,
              "lowpass_ground_truth: ", levels, " levels need the image divisible by ", scale,
              " with the smallest level at least 7x7, got ", h, "x", w);

  std::vector<torch::Tensor> pyr;
  pyr.reserve(levels);
  pyr.push_back(image.to(torch::kDouble));
  if (levels == 1) return pyr;

  auto freq = dct2(image);
  for (int64_t m = 1; m < levels; ++m) {
    const int64_t hm = h >> m;
    const int64_t wm = w >> m;
    auto crop = freq.index({torch::indexing::Ellipsis, torch::indexing::Slice(0, hm),
                            torch::indexing::Slice(0, wm)});
    crop = crop * std::sqrt(double(hm * wm) / double(h * w));
    pyr.push_back(idct2(crop));
  }
  return pyr;
}

std::vector<torch::Tensor> linear_interp_ground_truth(const torch::Tensor& image, int64_t levels) {
  check_image(image, "linear_interp_ground_truth");
  const int64_t h = image.size(-2);
  const int64_t w = image.size(-1);
  TORCH_CHECK(levels >= 1, "linear_interp_ground_truth: levels must be >= 1, got ", levels);
  const int64_t scale = int64_t(1) << (levels - 1);
  TORCH_CHECK(h % scale == 0 && w % scale == 0 && h / scale >= 7 && w / scale >= 7,
              "linear_interp_ground_truth: ", levels, " levels need the image divisible by ",
              scale, " with the smallest level at least 7x7, got ", h, "x", w);

  std::vector<torch::Tensor> pyr;
  pyr.reserve(levels);
  pyr.push_back(image.to(torch::kDouble));
  for (int64_t m = 1; m < levels; ++m) {
    const auto& prev = pyr.back();
    auto shape = prev.sizes().vec();
    const int64_t ph = shape[shape.size() - 2];
    const int64_t pw = shape[shape.size() - 1];
    shape[shape.size() - 2] = ph / 2;
    shape.insert(shape.end() - 1, 2);
    shape[shape.size() - 1] = pw / 2;
    shape.push_back(2);
    // [.., H/2, 2, W/2, 2] -> mean over the two size-2 axes
    auto grouped = prev.reshape(shape);
    pyr.push_back(grouped.mean(-1).mean(-2));
  }
  return pyr;
}

torch::Tensor bilinear_x2(const torch::Tensor& x) {
  TORCH_CHECK(x.defined() && x.dim() >= 2 && x.dim() <= 4,
              "bilinear_x2: expected 2 to 4 dims, got ", x.dim());
  auto y = x;
  int64_t added = 0;
  while (y.dim() < 4) {
    y = y.unsqueeze(0);
    ++added;
  }
  y = torch::nn::functional::interpolate(
      y, torch::nn::functional::InterpolateFuncOptions()
             .scale_factor(std::vector<double>{2.0, 2.0})
             .mode(torch::kBilinear)
             .align_corners(false));
  while (added-- > 0) y = y.squeeze(0);
  return y;
}

std::vector<torch::Tensor> laplacian_decompose(const std::vector<torch::Tensor>& pyramid,
                                               const Upsampler& up) {
  TORCH_CHECK(!pyramid.empty(), "laplacian_decompose: empty pyramid");
  std::vector<torch::Tensor> stack;
  stack.reserve(pyramid.size());
  for (size_t m = 0; m + 1 < pyramid.size(); ++m) {
    auto upped = up(pyramid[m + 1]);
    TORCH_CHECK(upped.sizes() == pyramid[m].sizes(),
                "laplacian_decompose: upsampled level ", m + 1, " has shape ", upped.sizes(),
                " but level ", m, " has shape ", pyramid[m].sizes());
    stack.push_back(pyramid[m] - upped);
  }
  stack.push_back(pyramid.back());
  return stack;
}

std::vector<torch::Tensor> laplacian_reconstruct(const std::vector<torch::Tensor>& stack,
                                                 const Upsampler& up) {
  TORCH_CHECK(!stack.empty(), "laplacian_reconstruct: empty stack");
  std::vector<torch::Tensor> pyr(stack.size());
  pyr.back() = stack.back();
  for (int64_t m = int64_t(stack.size()) - 2; m >= 0; --m) {
    auto upped = up(pyr[m + 1]);
    TORCH_CHECK(upped.sizes() == stack[m].sizes(),
                "laplacian_reconstruct: upsampled level ", m + 1, " has shape ", upped.sizes(),
                " but detail ", m, " has shape ", stack[m].sizes());
    pyr[m] = stack[m] + upped;
  }
  return pyr;
}

torch::Tensor frequency_map_visual(const torch::Tensor& image) {
  auto mag = torch::log1p(torch::abs(dct2(image)));
  auto peak = mag.max();
  if (peak.item<double>() > 0) mag = mag / peak;
  return mag;
}

}  // namespace defendpp::dct
