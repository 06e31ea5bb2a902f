#include "urt/mark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "urt/errors.hpp"

namespace urt {

namespace {

void check_values(std::span<const double> values) {
  if (values.size() > Mark::kMaxValues) {
    throw MarkError("mark holds " + std::to_string(values.size()) +
                    " values; at most 8 allowed");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw MarkError("mark value is not finite");
  }
}

}  // namespace

Mark::Mark(std::uint32_t tag, std::initializer_list<double> values)
    : Mark(tag, std::span<const double>(values.begin(), values.size())) {}

Mark::Mark(std::uint32_t tag, std::span<const double> values) : tag_(tag) {
  check_values(values);
  size_ = static_cast<std::uint8_t>(values.size());
  std::copy(values.begin(), values.end(), values_.begin());
}

Mark Mark::with_front(double v) const {
  if (size_ == kMaxValues) throw MarkError("mark is full; cannot prepend");
  if (!std::isfinite(v)) throw MarkError("mark value is not finite");
  Mark out = *this;
  std::copy_backward(values_.begin(), values_.begin() + size_,
                     out.values_.begin() + size_ + 1);
  out.values_[0] = v;
  ++out.size_;
  return out;
}

Mark Mark::with_back(double v) const {
  if (size_ == kMaxValues) throw MarkError("mark is full; cannot append");
  if (!std::isfinite(v)) throw MarkError("mark value is not finite");
  Mark out = *this;
  out.values_[size_] = v;
  ++out.size_;
  return out;
}

Mark Mark::without_front() const {
  if (size_ == 0) throw MarkError("mark has no values to drop");
  Mark out(tag_);
  out.size_ = static_cast<std::uint8_t>(size_ - 1);
  std::copy(values_.begin() + 1, values_.begin() + size_, out.values_.begin());
  return out;
}

Mark Mark::with_value(std::size_t i, double v) const {
  if (i >= size_) throw MarkError("mark index out of range");
  if (!std::isfinite(v)) throw MarkError("mark value is not finite");
  Mark out = *this;
  out.values_[i] = v;
  return out;
}

bool operator==(const Mark& a, const Mark& b) {
  return a.tag_ == b.tag_ && a.size_ == b.size_ &&
         std::equal(a.values_.begin(), a.values_.begin() + a.size_,
                    b.values_.begin());
}

double mark_distance(const Mark& a, const Mark& b) {
  if (a.tag() != b.tag() || a.size() != b.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

}  // namespace urt
