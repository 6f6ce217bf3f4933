#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace refchoice {

/// Canonical index of an alternative inside its Universe.
using Alt = int;

/// A subset of the universe stored as a bitmask (bit i = alternative i).
/// Menus order by their mask value; that ordering is the canonical order used
/// for every enumeration and report.
class Menu {
 public:
  using Bits = std::uint32_t;

  constexpr Menu() = default;
  constexpr explicit Menu(Bits bits) : bits_(bits) {}

  static constexpr Menu singleton(Alt a) { return Menu(Bits{1} << a); }
  static constexpr Menu full(int n) { return Menu(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1); }
  static Menu of(std::initializer_list<Alt> members);

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Alt a) const { return (bits_ >> a) & 1U; }
  constexpr bool subset_of(Menu other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Menu other) const { return (bits_ & other.bits_) != 0; }

  constexpr Menu with(Alt a) const { return Menu(bits_ | (Bits{1} << a)); }
  constexpr Menu without(Alt a) const { return Menu(bits_ & ~(Bits{1} << a)); }

  constexpr Menu operator|(Menu o) const { return Menu(bits_ | o.bits_); }
  constexpr Menu operator&(Menu o) const { return Menu(bits_ & o.bits_); }
  /// Set difference.
  constexpr Menu operator-(Menu o) const { return Menu(bits_ & ~o.bits_); }

  constexpr bool operator==(const Menu&) const = default;
  constexpr auto operator<=>(const Menu&) const = default;

  /// Lowest-index member; undefined on the empty menu.
  constexpr Alt first() const { return std::countr_zero(bits_); }

  class iterator {
   public:
    using value_type = Alt;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr Alt operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Alt> members() const;

 private:
  Bits bits_ = 0;
};

/// Calls f(D) for every D with lo ⊆ D ⊆ hi, in ascending mask order.
/// Precondition: lo ⊆ hi.
template <class F>
void for_each_subset_between(Menu lo, Menu hi, F&& f) {
  const Menu::Bits free = hi.bits() & ~lo.bits();
  Menu::Bits sub = 0;
  do {
    f(Menu(lo.bits() | sub));
    sub = (sub - free) & free;
  } while (sub != 0);
}

/// All D with lo ⊆ D ⊆ hi in ascending mask order; 2^{|hi|-|lo|} entries.
/// Throws std::invalid_argument when lo is not a subset of hi.
std::vector<Menu> subsets_between(Menu lo, Menu hi);

/// (-1)^{|hi \ lo|}, the sign of a Mobius term.
constexpr int mobius_sign(Menu lo, Menu hi) { return ((hi - lo).size() % 2 == 0) ? 1 : -1; }

}  // namespace refchoice
