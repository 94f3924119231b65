#include "nilcent/adjoint.hpp"

namespace nilcent {

std::optional<Partition> partition_from_weights(const std::map<int, std::size_t>& dims) {
  auto dim = [&](int m) -> long {
    const auto it = dims.find(m);
    return it == dims.end() ? 0 : static_cast<long>(it->second);
  };
  for (const auto& [m, d] : dims) {
    if (dim(-m) != static_cast<long>(d)) return std::nullopt;
  }
  std::vector<std::size_t> parts;
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
    const int m = it->first;
    if (m < 0) break;
    const long chains = dim(m) - dim(m + 2);
    if (chains < 0) return std::nullopt;
    for (long c = 0; c < chains; ++c) parts.push_back(static_cast<std::size_t>(m) + 1);
  }
  return Partition(std::move(parts));
}

}  // namespace nilcent
