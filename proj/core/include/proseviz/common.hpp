#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proseviz {

// Half-open range [begin, end) of Unicode scalar values.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t size() const { return end - begin; }
  [[nodiscard]] bool empty() const { return end == begin; }
  [[nodiscard]] bool contains(const CharSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  [[nodiscard]] CharSpan shifted(std::size_t offset) const {
    return {begin + offset, end + offset};
  }

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

// Raised for invalid inputs and contract violations across the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace proseviz
