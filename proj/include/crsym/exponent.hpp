#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace crsym {

/// Multi-index of non-negative exponents with a fixed number of slots.
///
/// Slots are packed into a small inline array so exponents can be used as
/// ordered map keys without heap traffic. Each entry is limited to 255.
class Exponent {
 public:
  static constexpr std::size_t kMaxSlots = 17;

  Exponent() = default;
  explicit Exponent(std::size_t slots);
  Exponent(std::initializer_list<unsigned> entries);
  explicit Exponent(const std::vector<unsigned>& entries);

  std::size_t size() const { return size_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned total() const { return total_; }
  std::vector<unsigned> to_vector() const;

  /// Sum of the entries in slots [first, first + count).
  unsigned partial_total(std::size_t first, std::size_t count) const;

  /// Slot-wise sum; throws DimensionError on mismatched sizes.
  Exponent operator+(const Exponent& other) const;
  /// True when every slot of *this is <= the matching slot of other.
  bool divides(const Exponent& other) const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }

  /// Graded lexicographic order: total degree first, then the first
  /// differing slot decides (larger exponent is larger).
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxSlots> e_{};
  std::uint8_t size_ = 0;
  std::uint16_t total_ = 0;
};

/// Map comparator putting the largest exponent first.
struct DescendingGrlex {
  bool operator()(const Exponent& a, const Exponent& b) const { return (a <=> b) > 0; }
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const { return e.hash(); }
};

/// All exponents of `slots` entries and total degree `degree`, in
/// descending graded-lex order.
std::vector<Exponent> exponents_of_degree(std::size_t slots, unsigned degree);

}  // namespace crsym
