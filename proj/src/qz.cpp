#include "bost/qz.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "bost/errors.hpp"
#include "bost/number.hpp"

namespace bost {

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("Q/Z element with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);  // gcd(0, den) = den
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::parse(std::string_view text) {
  auto slash = text.find('/');
  std::int64_t p = 0, q = 1;
  auto parse_part = [&](std::string_view part, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw InvalidInput("bad Q/Z literal '" + std::string(text) + "'");
  };
  if (slash == std::string_view::npos) {
    parse_part(text, p);
  } else {
    parse_part(text.substr(0, slash), p);
    parse_part(text.substr(slash + 1), q);
  }
  return QZ(p, q);
}

QZ QZ::times(std::int64_t n) const {
  // Reduce n mod den first so the product stays in range.
  std::int64_t m = n % den_;
  if (m < 0) m += den_;
  return QZ(static_cast<std::int64_t>((static_cast<__int128>(num_) * m) % den_), den_);
}

QZ QZ::operator+(const QZ& other) const {
  const std::int64_t l = lcm64(den_, other.den_);
  const __int128 sum = static_cast<__int128>(num_) * (l / den_) + static_cast<__int128>(other.num_) * (l / other.den_);
  return QZ(static_cast<std::int64_t>(sum % l), l);
}

std::string QZ::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::vector<QZ> division_points(std::int64_t n) {
  if (n < 1) throw InvalidInput("division_points: n must be positive");
  std::vector<QZ> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.emplace_back(k, n);
  return out;  // k/n is increasing in k
}

std::vector<QZ> preimages(const QZ& r, std::int64_t n) {
  if (n < 1) throw InvalidInput("preimages: n must be positive");
  const std::int64_t big = checked_mul(n, r.den());
  std::vector<QZ> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.emplace_back(r.num() + k * r.den(), big);
  return out;  // (num + k·den)/(n·den) < 1 and increasing in k
}

}  // namespace bost
