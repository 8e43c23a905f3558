#pragma once

#include <torch/torch.h>

#include <cmath>

// Direct-summation orthonormal DCT-II, O(N^4). Deliberately independent of
// the library implementation so the fast path is checked against first
// principles.
inline torch::Tensor oracle_dct2(const torch::Tensor& x) {
  auto xd = x.to(torch::kDouble).contiguous();
  const int64_t h = xd.size(-2);
  const int64_t w = xd.size(-1);
  auto flat = xd.reshape({-1, h, w});
  auto out = torch::zeros_like(flat);
  auto in = flat.accessor<double, 3>();
  auto acc = out.accessor<double, 3>();
  for (int64_t b = 0; b < flat.size(0); ++b) {
    for (int64_t u = 0; u < h; ++u) {
      for (int64_t v = 0; v < w; ++v) {
        double sum = 0.0;
        for (int64_t i = 0; i < h; ++i) {
          for (int64_t j = 0; j < w; ++j) {
            sum += in[b][i][j] * std::cos(M_PI * (2.0 * i + 1.0) * u / (2.0 * h)) *
                   std::cos(M_PI * (2.0 * j + 1.0) * v / (2.0 * w));
          }
        }
        const double su = u == 0 ? std::sqrt(1.0 / h) : std::sqrt(2.0 / h);
        const double sv = v == 0 ? std::sqrt(1.0 / w) : std::sqrt(2.0 / w);
        acc[b][u][v] = su * sv * sum;
      }
    }
  }
  return out.reshape(xd.sizes());
}
