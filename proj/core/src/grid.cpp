#include "heatsmc/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace heatsmc {

double inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.grid != g.grid) {
    throw std::invalid_argument("inner_product: grid mismatch");
  }
  const std::size_t n = f.values.size();
  if (n != g.values.size() || n != static_cast<std::size_t>(f.grid.n_nodes)) {
    throw std::invalid_argument("inner_product: value length does not match grid");
  }
  double acc = 0.5 * (f.values.front() * g.values.front() + f.values.back() * g.values.back());
  for (std::size_t i = 1; i + 1 < n; ++i) {
    acc += f.values[i] * g.values[i];
  }
  return acc * f.grid.dx();
}

double l2_norm(const SampledFunction& f) { return std::sqrt(inner_product(f, f)); }

}  // namespace heatsmc
