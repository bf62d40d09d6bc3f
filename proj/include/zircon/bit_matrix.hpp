#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zircon {

/// Dense square boolean matrix, one packed row per element.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t row, std::size_t col) const {
    return (data_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }
  void set(std::size_t row, std::size_t col) {
    data_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }

  /// row(dst) |= row(src)
  void merge_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) data_[dst * words_ + w] |= data_[src * words_ + w];
  }

  std::size_t row_count(std::size_t row) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(data_[row * words_ + w]);
    return c;
  }

  /// True when row `ra` of `a` and row `rb` of `b` share a column other than
  /// `skip1` and `skip2`.
  static bool rows_meet_except(const BitMatrix& a, std::size_t ra, const BitMatrix& b,
                               std::size_t rb, std::size_t skip1, std::size_t skip2) {
    for (std::size_t w = 0; w < a.words_; ++w) {
      std::uint64_t m = a.data_[ra * a.words_ + w] & b.data_[rb * b.words_ + w];
      if (skip1 / 64 == w) m &= ~(std::uint64_t{1} << (skip1 % 64));
      if (skip2 / 64 == w) m &= ~(std::uint64_t{1} << (skip2 % 64));
      if (m != 0) return true;
    }
    return false;
  }

  /// Columns set in `row`, ascending.
  std::vector<std::size_t> row_indices(std::size_t row) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t m = data_[row * words_ + w];
      while (m != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
      }
    }
    return out;
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace zircon
