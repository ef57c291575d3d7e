#include "crsym/exponent.hpp"

#include <algorithm>

#include "crsym/errors.hpp"

namespace crsym {

Exponent::Exponent(std::size_t slots) {
  if (slots > kMaxSlots) throw DimensionError("Exponent: too many slots");
  size_ = static_cast<std::uint8_t>(slots);
}

Exponent::Exponent(std::initializer_list<unsigned> entries) : Exponent(entries.size()) {
  std::size_t i = 0;
  for (unsigned v : entries) set(i++, v);
}

Exponent::Exponent(const std::vector<unsigned>& entries) : Exponent(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) set(i, entries[i]);
}

void Exponent::set(std::size_t i, unsigned value) {
  if (i >= size_) throw DimensionError("Exponent: slot out of range");
  if (value > 255) throw DimensionError("Exponent: entry exceeds 255");
  total_ = static_cast<std::uint16_t>(total_ - e_[i] + value);
  e_[i] = static_cast<std::uint8_t>(value);
}

std::vector<unsigned> Exponent::to_vector() const {
  return std::vector<unsigned>(e_.begin(), e_.begin() + size_);
}

unsigned Exponent::partial_total(std::size_t first, std::size_t count) const {
  unsigned s = 0;
  for (std::size_t i = first; i < first + count; ++i) s += e_[i];
  return s;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (size_ != other.size_) throw DimensionError("Exponent: size mismatch");
  Exponent r(size_);
  for (std::size_t i = 0; i < size_; ++i) r.set(i, e_[i] + other.e_[i]);
  return r;
}

bool Exponent::divides(const Exponent& other) const {
  if (size_ != other.size_) throw DimensionError("Exponent: size mismatch");
  for (std::size_t i = 0; i < size_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  if (a.total_ != b.total_) return a.total_ <=> b.total_;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Exponent::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 131 + e_[i];
  return h;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

namespace {

void fill(std::vector<Exponent>& out, Exponent& cur, std::size_t slot, unsigned remaining) {
  if (slot + 1 == cur.size()) {
    cur.set(slot, remaining);
    out.push_back(cur);
    cur.set(slot, 0);
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    cur.set(slot, v);
    fill(out, cur, slot + 1, remaining - v);
  }
  cur.set(slot, 0);
}

}  // namespace

std::vector<Exponent> exponents_of_degree(std::size_t slots, unsigned degree) {
  std::vector<Exponent> out;
  if (slots == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Exponent cur(slots);
  fill(out, cur, 0, degree);
  return out;
}

}  // namespace crsym
