#pragma once

// Strongly typed element handles.  A lattice stores its elements sorted
// lexicographically by name; an Element is the position in that order, so
// iterating indices visits elements in name order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace latmod {

struct scalar_tag {};
struct carrier_tag {};

template <class Tag>
class Element {
 public:
  using tag_type = Tag;

  constexpr Element() = default;
  constexpr explicit Element(std::size_t i) : index_(static_cast<std::uint32_t>(i)) {}

  [[nodiscard]] constexpr std::size_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Element of the multiplicative lattice L.
using Scalar = Element<scalar_tag>;
/// Element of the module carrier M.
using Carrier = Element<carrier_tag>;

}  // namespace latmod

template <class Tag>
struct std::hash<latmod::Element<Tag>> {
  std::size_t operator()(latmod::Element<Tag> e) const noexcept { return e.index(); }
};
