#include "spectral/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spectral {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Rectangle::Rectangle(int rows_, int cols_) : rows(rows_), cols(cols_) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("rectangle sides must be positive");
}

BinaryString::BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("binary string entries must be 0 or 1");
  }
}

BinaryString::BinaryString(std::string_view text) {
  bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary string must contain only 0/1");
    bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
}

int BinaryString::weight() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

std::string BinaryString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

bool fits_in(const Partition& alpha, const Rectangle& rect) {
  return alpha.length() <= rect.rows && alpha[0] <= rect.cols;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

Partition conjugate(const Partition& alpha) {
  std::vector<int> out(static_cast<std::size_t>(alpha[0]), 0);
  for (int part : alpha.parts()) {
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

Partition complement(const Partition& alpha, const Rectangle& rect) {
  if (!fits_in(alpha, rect)) {
    throw std::invalid_argument("partition " + to_string(alpha) + " does not fit in the rectangle");
  }
  std::vector<int> out(static_cast<std::size_t>(rect.rows));
  for (int i = 0; i < rect.rows; ++i) {
    out[static_cast<std::size_t>(i)] = rect.cols - alpha[rect.rows - 1 - i];
  }
  return Partition(std::move(out));
}

Partition partition_from_string(const BinaryString& pi) {
  std::vector<int> zeros_before;
  int zeros = 0;
  for (int i = 0; i < pi.size(); ++i) {
    if (pi[i] == 0) {
      ++zeros;
    } else {
      zeros_before.push_back(zeros);
    }
  }
  std::reverse(zeros_before.begin(), zeros_before.end());
  return Partition(std::move(zeros_before));
}

BinaryString string_from_partition(const Partition& alpha, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("string weight must satisfy 0 <= k <= n");
  if (alpha.length() > k || (k < n && alpha[0] > n - k) || (k == n && !alpha.empty())) {
    throw std::invalid_argument("partition " + to_string(alpha) + " does not fit in the k x (n-k) rectangle");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  // 1-based position of the j-th one is j + alpha_{k+1-j}.
  for (int j = 1; j <= k; ++j) {
    bits[static_cast<std::size_t>(j + alpha[k - j] - 1)] = 1;
  }
  return BinaryString(std::move(bits));
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left, std::vector<int>& current,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // Remaining rows cannot absorb more than part * rows_left boxes.
    if (part * rows_left < remaining) break;
    current.push_back(part);
    enumerate_rec(remaining - part, part, rows_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_in_rectangle(const Rectangle& rect, int w) {
  if (w < 0) throw std::invalid_argument("weight must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_rec(w, rect.cols, rect.rows, current, out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_rec(n, n, n, current, out);
  return out;
}

int multiplicity(const Partition& alpha, int r) {
  return static_cast<int>(std::count(alpha.parts().begin(), alpha.parts().end(), r));
}

std::string to_string(const Partition& alpha) {
  std::string out = "[";
  for (int i = 0; i < alpha.length(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must be written as [a,b,...]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

}  // namespace spectral
