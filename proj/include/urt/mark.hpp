#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace urt {

/// A point of the mark space: a small integer tag and up to eight finite
/// reals. Distance between marks is the max of the componentwise absolute
/// differences, infinite when tags or lengths differ.
///
/// Labeled percolations keep the edge color (1 = open, 0 = closed) in
/// values[0].
class Mark {
 public:
  static constexpr std::size_t kMaxValues = 8;

  Mark() = default;
  explicit Mark(std::uint32_t tag) : tag_(tag) {}
  Mark(std::uint32_t tag, std::initializer_list<double> values);
  Mark(std::uint32_t tag, std::span<const double> values);

  std::uint32_t tag() const { return tag_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::span<const double> values() const { return {values_.data(), size_}; }
  double operator[](std::size_t i) const { return values_[i]; }

  Mark with_front(double v) const;
  Mark with_back(double v) const;
  Mark without_front() const;
  Mark with_value(std::size_t i, double v) const;

  friend bool operator==(const Mark& a, const Mark& b);

 private:
  std::uint32_t tag_ = 0;
  std::uint8_t size_ = 0;
  std::array<double, kMaxValues> values_{};
};

double mark_distance(const Mark& a, const Mark& b);

inline constexpr double kOpen = 1.0;
inline constexpr double kClosed = 0.0;

}  // namespace urt
