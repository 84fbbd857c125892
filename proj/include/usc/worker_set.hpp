#pragma once
// Worker subsets as dense bitmasks: bit i set <=> worker index i is a member.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace usc {

using Mask = std::uint32_t;

// Operations that walk the full subset lattice refuse universes above this
// many workers unless the caller raises the cap explicitly.
inline constexpr int kDefaultEnumCap = 20;

class InstanceTooLarge : public std::runtime_error {
 public:
  InstanceTooLarge(int n_workers, int cap)
      : std::runtime_error("instance too large: " + std::to_string(n_workers) +
                           " workers exceeds enumeration cap " +
                           std::to_string(cap)) {}
};

inline void require_enumerable(int n_workers, int cap = kDefaultEnumCap) {
  if (n_workers < 0) throw std::invalid_argument("negative worker count");
  if (n_workers > cap) throw InstanceTooLarge(n_workers, cap);
}

inline constexpr Mask unit(int i) { return Mask{1} << i; }
inline constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }
inline constexpr bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline constexpr Mask with(Mask m, int i) { return m | unit(i); }
inline constexpr Mask without(Mask m, int i) { return m & ~unit(i); }
inline int set_size(Mask m) { return std::popcount(m); }

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

template <typename F>
void for_each_member(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Visits every subset of m in ascending numeric order, starting with 0.
template <typename F>
void for_each_subset(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace usc
