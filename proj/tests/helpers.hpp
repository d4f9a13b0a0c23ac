#pragma once

#include <doctest.h>

#include <initializer_list>

#include "bost/graded_endo.hpp"
#include "bost/group_ring.hpp"

namespace bost::test {

inline GroupRingZ e(std::int64_t num, std::int64_t den, long c = 1) { return GroupRingZ::basis(QZ(num, den), c); }

inline GroupRingQ eq(std::int64_t num, std::int64_t den, Rational c = 1) { return GroupRingQ::basis(QZ(num, den), c); }

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace bost::test
