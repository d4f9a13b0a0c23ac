#include "bost/witt.hpp"

#include <boost/multiprecision/integer.hpp>

#include "bost/errors.hpp"

namespace bost {

TruncationSet::TruncationSet(std::set<std::int64_t> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw InvalidInput("truncation set must be non-empty");
  for (std::int64_t m : elems_) {
    if (m < 1) throw InvalidInput("truncation set elements must be positive");
    for (std::int64_t d : divisors(m))
      if (!elems_.count(d))
        throw InvalidInput("truncation set is not divisor closed: " + std::to_string(d) + " divides " +
                           std::to_string(m));
  }
}

TruncationSet TruncationSet::divisors_of(std::int64_t n) {
  if (n < 1) throw InvalidInput("truncation level must be positive");
  auto divs = divisors(n);
  return TruncationSet(std::set<std::int64_t>(divs.begin(), divs.end()));
}

WittVector::WittVector(TruncationSet trunc, const std::map<std::int64_t, Integer>& coords)
    : trunc_(std::move(trunc)) {
  for (std::int64_t d : trunc_.elements()) coords_.emplace(d, 0);
  for (const auto& [d, x] : coords) {
    if (!trunc_.contains(d)) throw InvalidInput("coordinate " + std::to_string(d) + " outside truncation set");
    coords_[d] = x;
  }
}

WittVector WittVector::teichmuller(const TruncationSet& trunc, const Integer& a) {
  return WittVector(trunc, {{1, a}});
}

const Integer& WittVector::coord(std::int64_t d) const {
  auto it = coords_.find(d);
  if (it == coords_.end()) throw InvalidInput("coordinate " + std::to_string(d) + " outside truncation set");
  return it->second;
}

Ghost witt_ghost(const WittVector& w) {
  Ghost g;
  for (std::int64_t m : w.trunc().elements()) {
    Integer s = 0;
    for (std::int64_t d : divisors(m))
      s += d * boost::multiprecision::pow(w.coord(d), static_cast<unsigned>(m / d));
    g.emplace(m, std::move(s));
  }
  return g;
}

WittVector witt_from_ghost(const TruncationSet& trunc, const Ghost& ghosts) {
  std::map<std::int64_t, Integer> x;
  for (std::int64_t m : trunc.elements()) {
    auto it = ghosts.find(m);
    if (it == ghosts.end()) throw InvalidInput("missing ghost component " + std::to_string(m));
    Integer r = it->second;
    for (std::int64_t d : divisors(m))
      if (d < m) r -= d * boost::multiprecision::pow(x.at(d), static_cast<unsigned>(m / d));
    if (r % m != 0)
      throw NotWittVector("ghost data not integral: coordinate " + std::to_string(m) + " would be " + r.str() +
                          "/" + std::to_string(m));
    x.emplace(m, r / m);
  }
  return WittVector(trunc, x);
}

namespace {

void require_same(const WittVector& a, const WittVector& b) {
  if (!(a.trunc() == b.trunc())) throw TruncationError("Witt vectors have different truncation sets");
}

template <class Op>
WittVector ghostwise(const WittVector& a, const WittVector& b, Op op) {
  require_same(a, b);
  Ghost ga = witt_ghost(a), gb = witt_ghost(b), g;
  for (const auto& [m, v] : ga) g.emplace(m, op(v, gb.at(m)));
  return witt_from_ghost(a.trunc(), g);
}

}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b) {
  return ghostwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); });
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
  return ghostwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); });
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  return ghostwise(a, b, [](const Integer& x, const Integer& y) { return Integer(x * y); });
}

WittVector witt_frobenius(std::int64_t n, const WittVector& w) {
  if (n < 1) throw InvalidInput("frobenius: n must be positive");
  std::set<std::int64_t> out;
  for (std::int64_t m : w.trunc().elements())
    if (m % n == 0) out.insert(m / n);
  if (out.empty()) throw TruncationError("frobenius: no m with n·m in the truncation set");
  const Ghost g = witt_ghost(w);
  Ghost h;
  for (std::int64_t m : out) h.emplace(m, g.at(m * n));
  return witt_from_ghost(TruncationSet(out), h);
}

WittVector witt_verschiebung(std::int64_t n, const WittVector& w) {
  return witt_verschiebung(n, w, w.trunc());
}

WittVector witt_verschiebung(std::int64_t n, const WittVector& w, const TruncationSet& out) {
  if (n < 1) throw InvalidInput("verschiebung: n must be positive");
  const Ghost g = witt_ghost(w);
  Ghost h;
  for (std::int64_t m : out.elements()) {
    if (m % n != 0) {
      h.emplace(m, 0);
      continue;
    }
    auto it = g.find(m / n);
    if (it == g.end()) throw TruncationError("verschiebung: component " + std::to_string(m / n) + " is missing");
    h.emplace(m, n * it->second);
  }
  return witt_from_ghost(out, h);
}

WittVector witt_verschiebung_shift(std::int64_t n, const WittVector& w, const TruncationSet& out) {
  if (n < 1) throw InvalidInput("verschiebung: n must be positive");
  std::map<std::int64_t, Integer> x;
  for (std::int64_t m : out.elements()) {
    if (m % n != 0) continue;
    if (!w.trunc().contains(m / n))
      throw TruncationError("verschiebung: component " + std::to_string(m / n) + " is missing");
    x.emplace(m, w.coord(m / n));
  }
  return WittVector(out, x);
}

Integer fixed_points(const OrbitSum& x, std::int64_t m) {
  if (m < 1) throw InvalidInput("fixed_points: m must be positive");
  Integer s = 0;
  for (const auto& [d, k] : x.orbits())
    if (m % d == 0) s += d * k;
  return s;
}

WittVector burnside_to_witt(const OrbitSum& x, const TruncationSet& trunc) {
  Ghost g;
  for (std::int64_t m : trunc.elements()) g.emplace(m, fixed_points(x, m));
  return witt_from_ghost(trunc, g);
}

}  // namespace bost
