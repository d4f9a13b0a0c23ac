#include "bost/group_ring.hpp"

#include <set>

namespace bost {

GroupRingZ to_integer(const GroupRingQ& x) {
  GroupRingZ out;
  for (const auto& [r, c] : x.terms()) {
    if (!is_integral(c)) throw CoefficientModeError("coefficient " + to_string(c) + " is not an integer");
    out.add_term(r, numerator(c));
  }
  return out;
}

SubringMembership fixed_subring_membership(const GroupRingZ& x) {
  SubringMembership out;
  const std::int64_t level = x.level();

  // Coefficient as a function of the order; it must be constant on each order class.
  std::map<std::int64_t, Integer> by_order;
  std::map<std::int64_t, std::int64_t> count;
  for (const auto& [r, c] : x.terms()) {
    auto [it, inserted] = by_order.try_emplace(r.order(), c);
    if (!inserted && it->second != c) return out;
    ++count[r.order()];
  }
  for (const auto& [m, k] : count)
    if (k != euler_phi(m)) return out;  // some element of order m is missing

  const auto divs = divisors(level);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const std::int64_t m = *it;
    Integer a = by_order.count(m) ? by_order[m] : Integer(0);
    for (const auto& [d, ad] : out.coefficients)
      if (d % m == 0) a -= ad;
    if (a != 0) out.coefficients.emplace(m, a);
  }
  out.member = true;
  return out;
}

GroupRingZ from_division_sums(const std::map<std::int64_t, Integer>& coefficients) {
  GroupRingZ out;
  for (const auto& [d, a] : coefficients) out += a * division_sum(d);
  return out;
}

}  // namespace bost
