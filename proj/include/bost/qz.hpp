#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bost {

/// An element of Q/Z, stored as the reduced fraction num/den with 0 <= num < den.
///
/// The ordering is the canonical one used for sparse supports: by denominator,
/// then numerator. Use `value_less` to order by the real representative.
class QZ {
 public:
  constexpr QZ() = default;

  /// Reduces num/den mod 1. Negative inputs wrap; den = 0 throws InvalidInput.
  QZ(std::int64_t num, std::int64_t den);

  static QZ parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  /// Order of r in Q/Z, which equals the reduced denominator.
  std::int64_t order() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// n·r in Q/Z.
  QZ times(std::int64_t n) const;

  QZ operator+(const QZ& other) const;
  QZ operator-() const { return QZ(-num_, den_); }
  QZ operator-(const QZ& other) const { return *this + (-other); }

  std::string str() const;

  friend bool operator==(const QZ&, const QZ&) = default;
  friend std::strong_ordering operator<=>(const QZ& a, const QZ& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline bool value_less(const QZ& a, const QZ& b) {
  return static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
}

/// {k/n : 0 <= k < n}, reduced, sorted by value.
std::vector<QZ> division_points(std::int64_t n);

/// The n solutions r' of n·r' = r, sorted by value.
std::vector<QZ> preimages(const QZ& r, std::int64_t n);

}  // namespace bost
