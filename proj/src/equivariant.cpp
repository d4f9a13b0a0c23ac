#include "bost/equivariant.hpp"

#include <charconv>
#include <numeric>

#include "bost/errors.hpp"

namespace bost {

OrbitSum OrbitSum::orbit(std::int64_t d, const Integer& mult) {
  OrbitSum x;
  x.add_orbits(d, mult);
  return x;
}

Integer OrbitSum::multiplicity(std::int64_t d) const {
  auto it = orbits_.find(d);
  return it == orbits_.end() ? Integer(0) : it->second;
}

std::int64_t OrbitSum::level() const {
  std::int64_t l = 1;
  for (const auto& [d, m] : orbits_) l = lcm64(l, d);
  return l;
}

Integer OrbitSum::cardinality() const {
  Integer n = 0;
  for (const auto& [d, m] : orbits_) n += m * d;
  return n;
}

bool OrbitSum::is_genuine() const {
  for (const auto& [d, m] : orbits_)
    if (m < 0) return false;
  return true;
}

void OrbitSum::add_orbits(std::int64_t d, const Integer& mult) {
  if (d < 1) throw InvalidInput("orbit length must be positive");
  if (mult == 0) return;
  auto [it, inserted] = orbits_.try_emplace(d, mult);
  if (inserted) return;
  it->second += mult;
  if (it->second == 0) orbits_.erase(it);
}

OrbitSum& OrbitSum::operator+=(const OrbitSum& o) {
  for (const auto& [d, m] : o.orbits_) add_orbits(d, m);
  return *this;
}

OrbitSum& OrbitSum::operator-=(const OrbitSum& o) {
  for (const auto& [d, m] : o.orbits_) add_orbits(d, -m);
  return *this;
}

OrbitSum& OrbitSum::operator*=(const Integer& k) {
  if (k == 0) {
    orbits_.clear();
    return *this;
  }
  for (auto& [d, m] : orbits_) m *= k;
  return *this;
}

OrbitSum operator*(const OrbitSum& a, const OrbitSum& b) {
  OrbitSum out;
  for (const auto& [d, m] : a.orbits_)
    for (const auto& [e, k] : b.orbits_) out.add_orbits(lcm64(d, e), m * k * std::gcd(d, e));
  return out;
}

std::string OrbitSum::label() const {
  if (orbits_.empty()) return "0";
  std::string out;
  for (const auto& [d, m] : orbits_) {
    if (!out.empty()) out += "+";
    if (m < 0) out += "(" + m.str() + ")";
    out += "Z/" + std::to_string(d);
    if (m > 1) out += "^" + m.str();
  }
  return out;
}

OrbitSum OrbitSum::parse_label(const std::string& text) {
  OrbitSum x;
  if (text == "0") return x;
  std::size_t pos = 0;
  auto fail = [&]() { throw InvalidInput("bad orbit label '" + text + "'"); };
  while (pos < text.size()) {
    Integer mult = 1;
    bool negative_prefix = false;
    if (text[pos] == '(') {
      auto close = text.find(')', pos);
      if (close == std::string::npos) fail();
      mult = parse_integer(text.substr(pos + 1, close - pos - 1));
      negative_prefix = true;
      pos = close + 1;
    }
    if (text.compare(pos, 2, "Z/") != 0) fail();
    pos += 2;
    std::int64_t d = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), d);
    if (ec != std::errc() || d < 1) fail();
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && text[pos] == '^') {
      if (negative_prefix) fail();
      auto end = text.find('+', pos);
      if (end == std::string::npos) end = text.size();
      mult = parse_integer(text.substr(pos + 1, end - pos - 1));
      pos = end;
    }
    x.add_orbits(d, mult);
    if (pos < text.size()) {
      if (text[pos] != '+') fail();
      ++pos;
      if (pos == text.size()) fail();
    }
  }
  return x;
}

OrbitSum sigma(std::int64_t n, const OrbitSum& x) {
  if (n < 1) throw InvalidInput("sigma: n must be positive");
  OrbitSum out;
  for (const auto& [d, m] : x.orbits()) {
    const std::int64_t g = std::gcd(n, d);
    out.add_orbits(d / g, m * g);
  }
  return out;
}

OrbitSum rho_tilde(std::int64_t n, const OrbitSum& x) {
  if (n < 1) throw InvalidInput("rho_tilde: n must be positive");
  OrbitSum out;
  for (const auto& [d, m] : x.orbits()) out.add_orbits(checked_mul(n, d), m);
  return out;
}

GroupRingZ chi_hat_z(const OrbitSum& x) {
  GroupRingZ out;
  for (const auto& [d, m] : x.orbits()) out += m * division_sum(d);
  return out;
}

}  // namespace bost
