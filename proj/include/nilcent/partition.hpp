#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nilcent {

/// Weakly decreasing list of positive integers; the Jordan type of a
/// nilpotent endomorphism. The empty partition is the type of dim V = 0.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError(BadPartition) unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<std::size_t> parts);

  /// Partition whose conjugate has the given column heights, i.e. counts[k]
  /// = #{i : part_i >= k+1}. The counts must be weakly decreasing.
  static Partition from_conjugate(const std::vector<std::size_t>& counts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::size_t size() const;  ///< sum of the parts
  std::size_t largest() const { return parts_.empty() ? 0 : parts_.front(); }
  std::size_t operator[](std::size_t i) const { return parts_[i]; }

  Partition conjugate() const;

  /// Dominance order: every prefix sum of *this is <= that of other.
  /// Both partitions must have the same size.
  bool dominated_by(const Partition& other) const;

  /// "(6,4)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<std::size_t> parts_;
};

}  // namespace nilcent
