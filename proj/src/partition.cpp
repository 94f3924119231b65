#include "nilcent/partition.hpp"

#include <algorithm>
#include <numeric>

#include "nilcent/error.hpp"

namespace nilcent {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      std::string listed;
      for (auto p : parts_) listed += (listed.empty() ? "" : ",") + std::to_string(p);
      throw PreconditionError(PreconditionError::Kind::BadPartition,
                              "parts must be positive and weakly decreasing: (" + listed + ")");
    }
  }
}

Partition Partition::from_conjugate(const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> parts;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k > 0 && counts[k] > counts[k - 1]) {
      throw PreconditionError(PreconditionError::Kind::BadPartition, "conjugate counts must be weakly decreasing");
    }
  }
  const std::size_t n = counts.empty() ? 0 : counts.front();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t len = 0;
    while (len < counts.size() && counts[len] > i) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::size_t Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

Partition Partition::conjugate() const {
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k < largest(); ++k) {
    std::size_t c = 0;
    for (auto p : parts_) c += p > k ? 1 : 0;
    counts.push_back(c);
  }
  return Partition(std::move(counts));
}

bool Partition::dominated_by(const Partition& other) const {
  if (size() != other.size()) {
    throw PreconditionError(PreconditionError::Kind::BadPartition, "dominance needs partitions of equal size");
  }
  std::size_t a = 0;
  std::size_t b = 0;
  const std::size_t len = std::max(length(), other.length());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < length() ? parts_[i] : 0;
    b += i < other.length() ? other.parts_[i] : 0;
    if (a > b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

}  // namespace nilcent
