#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace spectral {

/// Weakly decreasing tuple of positive integers. Trailing zeros are stripped on
/// construction, so (2,0) and (2) are the same value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based), zero past the length.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Rectangle {
  int rows;
  int cols;

  Rectangle(int rows_, int cols_);
  int area() const { return rows * cols; }
};

class BinaryString {
 public:
  BinaryString() = default;
  explicit BinaryString(std::vector<std::uint8_t> bits);
  explicit BinaryString(std::string_view text);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  int size() const { return static_cast<int>(bits_.size()); }
  int weight() const;
  std::uint8_t operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  std::string str() const;

  auto operator<=>(const BinaryString&) const = default;
  bool operator==(const BinaryString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

bool fits_in(const Partition& alpha, const Rectangle& rect);

/// Young-diagram containment: inner ⊆ outer.
bool contains(const Partition& outer, const Partition& inner);

Partition conjugate(const Partition& alpha);

/// Complement of alpha inside rect, i.e. the unfilled region rotated by 180°.
/// Throws std::invalid_argument if alpha does not fit.
Partition complement(const Partition& alpha, const Rectangle& rect);

/// a_i = number of zeros before the i-th one; result (a_k, ..., a_1).
Partition partition_from_string(const BinaryString& pi);

/// Inverse of partition_from_string on the k x (n-k) rectangle.
BinaryString string_from_partition(const Partition& alpha, int n, int k);

/// Partitions of weight w inside rect, lexicographically descending.
std::vector<Partition> enumerate_in_rectangle(const Rectangle& rect, int w);

/// All partitions of n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

/// Multiplicity of part value r.
int multiplicity(const Partition& alpha, int r);

std::string to_string(const Partition& alpha);
Partition parse_partition(std::string_view text);

}  // namespace spectral
