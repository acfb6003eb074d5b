#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace latmod {

/// Dense row-major table indexed by two element handles.
template <class Row, class Col, class Value>
class Table2D {
 public:
  Table2D() = default;
  Table2D(std::size_t rows, std::size_t cols, Value fill = Value{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] Value const& operator()(Row r, Col c) const noexcept {
    assert(r.index() < rows_ && c.index() < cols_);
    return data_[r.index() * cols_ + c.index()];
  }
  Value& operator()(Row r, Col c) noexcept {
    assert(r.index() < rows_ && c.index() < cols_);
    return data_[r.index() * cols_ + c.index()];
  }

  friend bool operator==(Table2D const&, Table2D const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
};

}  // namespace latmod
