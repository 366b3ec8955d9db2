// Compresses a synthetic 2-D ramp to a quarter of its size and back, then
// prints the round-trip error for both sides.

#include <cstdio>

#include "xdp/xdp.hpp"

int main() {
  const xdp::dim_t rows = 12, cols = 18;
  std::vector<double> px(rows * cols);
  for (xdp::dim_t i = 0; i < rows; ++i)
    for (xdp::dim_t j = 0; j < cols; ++j) px[i * cols + j] = 10.0 * i + j;
  const xdp::Hypermatrix image({rows, cols}, px);

  for (xdp::Side side : {xdp::Side::Left, xdp::Side::Right}) {
    const xdp::CodecSpec spec{{rows, cols}, {6, 9}, side};
    const auto rt = xdp::roundtrip(image, spec);
    std::printf("%-5s ratio=%.3f l2=%.6f rmse=%.6f\n",
                std::string(xdp::to_string(side)).c_str(),
                rt.report.compression_ratio, rt.report.l2_error,
                rt.report.rmse);
  }
  return 0;
}
