#ifndef POWSGP_BITVEC_HPP
#define POWSGP_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace powsgp {

// Dense bit set over non-negative positions. Backs membership sieves, set
// heads, and the shift-OR sumset kernel. The word vector carries no zero
// words at the top, so operator== compares denoted sets.
class BitVec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;

  bool operator==(const BitVec& other) const = default;

  bool any() const { return !words_.empty(); }

  void set(std::size_t pos) {
    std::size_t w = pos >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (pos & 63);
  }

  void reset(std::size_t pos) {
    std::size_t w = pos >> 6;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (pos & 63));
    trim();
  }

  bool test(std::size_t pos) const {
    std::size_t w = pos >> 6;
    return w < words_.size() && ((words_[w] >> (pos & 63)) & 1) != 0;
  }

  // Sets every position in [lo, hi).
  void set_range(std::size_t lo, std::size_t hi) {
    if (lo >= hi) return;
    std::size_t wt = (hi - 1) >> 6;
    if (wt >= words_.size()) words_.resize(wt + 1, 0);
    for (std::size_t pos = lo; pos < hi && (pos & 63) != 0; ++pos) set(pos);
    std::size_t lo2 = (lo + 63) & ~std::size_t{63};
    std::size_t w = lo2 >> 6;
    while (lo2 + 64 <= hi) {
      words_[w++] = ~std::uint64_t{0};
      lo2 += 64;
    }
    for (std::size_t pos = lo2; pos < hi; ++pos) set(pos);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t find_first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return npos;
  }

  // First set position strictly greater than pos.
  std::size_t find_next(std::size_t pos) const {
    ++pos;
    std::size_t w = pos >> 6;
    if (w >= words_.size()) return npos;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
      if (cur != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= words_.size()) return npos;
      cur = words_[w];
    }
  }

  std::size_t find_last() const {
    if (words_.empty()) return npos;
    std::size_t w = words_.size() - 1;  // top word is non-zero by the trim invariant
    return (w << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
  }

  // *this |= (other << shift). The word-parallel inner loop of the sumset
  // convolution; `other` may alias *this.
  void or_shifted(const BitVec& other, std::size_t shift) {
    if (&other == this) {
      BitVec copy = other;
      or_shifted(copy, shift);
      return;
    }
    if (other.words_.empty()) return;
    std::size_t wq = shift >> 6;
    unsigned r = static_cast<unsigned>(shift & 63);
    std::size_t need = other.words_.size() + wq + (r != 0 ? 1 : 0);
    if (words_.size() < need) words_.resize(need, 0);
    if (r == 0) {
      for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[i + wq] |= other.words_[i];
      }
    } else {
      for (std::size_t i = other.words_.size(); i-- > 0;) {
        words_[i + wq + 1] |= other.words_[i] >> (64 - r);
        words_[i + wq] |= other.words_[i] << r;
      }
    }
    trim();
  }

  // Drops every position >= limit.
  void truncate(std::size_t limit) {
    if (limit == 0) {
      words_.clear();
      return;
    }
    std::size_t keep = (limit + 63) >> 6;
    if (words_.size() > keep) words_.resize(keep);
    // only the boundary word needs masking, and only when it is present
    if (words_.size() == keep && (limit & 63) != 0) {
      words_.back() &= ~std::uint64_t{0} >> (64 - (limit & 63));
    }
    trim();
  }

  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    out.reserve(count());
    for (std::size_t p = find_first(); p != npos; p = find_next(p)) {
      out.push_back(static_cast<std::int64_t>(p));
    }
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words_) {
      h = (h ^ w) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ words_.size());
  }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

}  // namespace powsgp

#endif  // POWSGP_BITVEC_HPP
