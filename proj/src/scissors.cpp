#include "bost/scissors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "bost/errors.hpp"

namespace bost {

AssemblerPresentation::AssemblerPresentation(std::vector<std::string> objects, std::vector<CoveringFamily> families)
    : objects_(std::move(objects)), families_(std::move(families)) {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (!index_.emplace(objects_[i], i).second) throw InvalidInput("duplicate object '" + objects_[i] + "'");
  for (std::size_t f = 0; f < families_.size(); ++f) {
    auto check = [&](const std::string& label) {
      if (!index_.count(label))
        throw InvalidInput("family " + std::to_string(f) + " mentions unknown object '" + label + "'");
    };
    check(families_[f].target);
    for (const auto& part : families_[f].parts) check(part);
  }
}

std::optional<std::size_t> AssemblerPresentation::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Integer> K0Presentation::reduce(std::vector<Integer> y) const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    y[i] %= torsion[i];
    if (y[i] < 0) y[i] += torsion[i];
  }
  return y;
}

std::vector<Integer> K0Presentation::class_of(const ObjectCombination& x) const {
  std::vector<Integer> y(coordinates(), 0);
  for (const auto& [label, m] : x) {
    auto it = basis_map.find(label);
    if (it == basis_map.end()) throw InvalidInput("unknown object '" + label + "'");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += m * it->second[i];
  }
  return reduce(std::move(y));
}

bool K0Presentation::is_zero_class(const std::vector<Integer>& y) const {
  return std::all_of(y.begin(), y.end(), [](const Integer& v) { return v == 0; });
}

namespace {

using SparseRow = std::map<std::size_t, Integer>;

/// Eliminates columns that carry a ±1 entry, rewriting every other row.
class UnitPivotEliminator {
 public:
  UnitPivotEliminator(std::size_t columns, std::vector<SparseRow> rows)
      : rows_(std::move(rows)), col_rows_(columns), active_(rows_.size(), true), eliminated_(columns, false) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) col_rows_[c].insert(r);
  }

  void run() {
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t c = col_rows_.size(); c-- > 0;)
        if (!eliminated_[c] && try_eliminate(c)) progress = true;
    }
  }

  bool eliminated(std::size_t c) const { return eliminated_[c]; }
  /// (column, expression in the other columns), in elimination order.
  const std::vector<std::pair<std::size_t, SparseRow>>& substitutions() const { return subs_; }

  std::vector<SparseRow> residual_rows() const {
    std::vector<SparseRow> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (active_[r] && !rows_[r].empty()) out.push_back(rows_[r]);
    return out;
  }

 private:
  bool try_eliminate(std::size_t c) {
    std::size_t best = rows_.size();
    for (std::size_t r : col_rows_[c]) {
      const Integer& v = rows_[r].at(c);
      if ((v == 1 || v == -1) && (best == rows_.size() || rows_[r].size() < rows_[best].size())) best = r;
    }
    if (best == rows_.size()) return false;

    const SparseRow pivot = rows_[best];
    const Integer u = pivot.at(c);
    SparseRow expr;
    for (const auto& [j, v] : pivot)
      if (j != c) expr.emplace(j, -u * v);

    deactivate(best);
    const std::vector<std::size_t> touched(col_rows_[c].begin(), col_rows_[c].end());
    for (std::size_t s : touched) {
      const Integer f = rows_[s].at(c) * u;
      for (const auto& [j, v] : pivot) add_entry(s, j, -f * v);
    }
    eliminated_[c] = true;
    subs_.emplace_back(c, std::move(expr));
    return true;
  }

  void add_entry(std::size_t r, std::size_t c, const Integer& v) {
    if (v == 0) return;
    auto [it, inserted] = rows_[r].try_emplace(c, v);
    if (inserted) {
      col_rows_[c].insert(r);
      return;
    }
    it->second += v;
    if (it->second == 0) {
      rows_[r].erase(it);
      col_rows_[c].erase(r);
    }
  }

  void deactivate(std::size_t r) {
    for (const auto& [c, v] : rows_[r]) col_rows_[c].erase(r);
    active_[r] = false;
  }

  std::vector<SparseRow> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::vector<bool> active_;
  std::vector<bool> eliminated_;
  std::vector<std::pair<std::size_t, SparseRow>> subs_;
};

/// Smith normal form D = U·A·V of a dense matrix. Only V and V⁻¹ are kept:
/// the cokernel of the row space needs column operations alone.
struct SmithForm {
  IntMatrix d;
  IntMatrix v;
  IntMatrix v_inv;
};

SmithForm smith_normal_form(IntMatrix a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  IntMatrix v = IntMatrix::Identity(n, n), v_inv = IntMatrix::Identity(n, n);

  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    v_inv.row(i).swap(v_inv.row(j));
  };
  // col_j -= q·col_t
  auto col_op = [&](Eigen::Index j, Eigen::Index t, const Integer& q) {
    for (Eigen::Index i = 0; i < m; ++i) a(i, j) -= q * a(i, t);
    for (Eigen::Index i = 0; i < n; ++i) v(i, j) -= q * v(i, t);
    for (Eigen::Index k = 0; k < n; ++k) v_inv(t, k) += q * v_inv(j, k);
  };
  auto row_op = [&](Eigen::Index i, Eigen::Index t, const Integer& q) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) -= q * a(t, j);
  };

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    a.row(t).swap(a.row(pi));
    swap_cols(t, pj);

    for (;;) {
      bool clear = true;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (a(i, t) != 0) {
          row_op(i, t, Integer(a(i, t) / a(t, t)));
          if (a(i, t) != 0) clear = false;
        }
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (a(t, j) != 0) {
          col_op(j, t, Integer(a(t, j) / a(t, t)));
          if (a(t, j) != 0) clear = false;
        }
      if (!clear) {
        Eigen::Index bi = t, bj = t;
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        a.row(t).swap(a.row(bi));
        swap_cols(t, bj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Integer(-1));
    }
    if (a(t, t) < 0) a.row(t) *= Integer(-1);
  }
  return {std::move(a), std::move(v), std::move(v_inv)};
}

}  // namespace

K0Presentation k0_from_presentation(const AssemblerPresentation& p) {
  const std::size_t n = p.objects().size();
  std::vector<SparseRow> rows;
  rows.reserve(p.families().size());
  for (const auto& fam : p.families()) {
    SparseRow row;
    auto add = [&](const std::string& label, int sign) {
      const std::size_t c = *p.index_of(label);
      auto [it, inserted] = row.try_emplace(c, sign);
      if (!inserted && (it->second += sign) == 0) row.erase(it);
    };
    add(fam.target, 1);
    for (const auto& part : fam.parts) add(part, -1);
    if (!row.empty()) rows.push_back(std::move(row));
  }

  UnitPivotEliminator elim(n, std::move(rows));
  elim.run();

  std::vector<std::size_t> remaining;
  std::vector<std::size_t> position(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (!elim.eliminated(c)) {
      position[c] = remaining.size();
      remaining.push_back(c);
    }
  const auto k = static_cast<Eigen::Index>(remaining.size());

  const auto residual = elim.residual_rows();
  IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(residual.size()), k);
  for (std::size_t r = 0; r < residual.size(); ++r)
    for (const auto& [c, v] : residual[r]) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(position[c])) = v;
  const SmithForm snf = smith_normal_form(std::move(a));

  // Raw coordinates y = V^T v for every object, resolving substitutions last to first.
  std::vector<std::vector<Integer>> raw(n);
  for (std::size_t c : remaining) {
    const auto jj = static_cast<Eigen::Index>(position[c]);
    raw[c].resize(remaining.size());
    for (Eigen::Index i = 0; i < k; ++i) raw[c][static_cast<std::size_t>(i)] = snf.v(jj, i);
  }
  const auto& subs = elim.substitutions();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    std::vector<Integer> y(remaining.size(), 0);
    for (const auto& [j, coef] : it->second)
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += coef * raw[j][i];
    raw[it->first] = std::move(y);
  }

  K0Presentation out;
  std::vector<std::size_t> torsion_idx, free_idx;
  const Eigen::Index diag = std::min(snf.d.rows(), snf.d.cols());
  for (Eigen::Index i = 0; i < k; ++i) {
    const Integer d = i < diag ? snf.d(i, i) : Integer(0);
    if (d == 0) {
      free_idx.push_back(static_cast<std::size_t>(i));
    } else if (d != 1) {
      torsion_idx.push_back(static_cast<std::size_t>(i));
      out.torsion.push_back(d);
    }
  }
  out.rank = static_cast<std::int64_t>(free_idx.size());

  std::vector<std::size_t> order = torsion_idx;
  order.insert(order.end(), free_idx.begin(), free_idx.end());
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Integer> y;
    y.reserve(order.size());
    for (std::size_t i : order) y.push_back(raw[c][i]);
    out.basis_map.emplace(p.objects()[c], out.reduce(std::move(y)));
  }
  for (std::size_t i : order) {
    ObjectCombination g;
    for (Eigen::Index j = 0; j < k; ++j) {
      const Integer& coef = snf.v_inv(static_cast<Eigen::Index>(i), j);
      if (coef != 0) g.emplace(p.objects()[remaining[static_cast<std::size_t>(j)]], coef);
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

IntMatrix induced_k0_map(const AssemblerPresentation& p, const K0Presentation& kp, const AssemblerPresentation& q,
                         const K0Presentation& kq, const std::map<std::string, ObjectCombination>& images) {
  auto image_of = [&](const std::string& label) -> const ObjectCombination& {
    auto it = images.find(label);
    if (it == images.end()) throw InvalidInput("no image given for object '" + label + "'");
    for (const auto& [target, m] : it->second)
      if (!q.index_of(target)) throw InvalidInput("image '" + target + "' is not an object of the codomain");
    return it->second;
  };
  auto accumulate = [](ObjectCombination& acc, const ObjectCombination& x, const Integer& k) {
    for (const auto& [label, m] : x) acc[label] += k * m;
  };

  for (std::size_t f = 0; f < p.families().size(); ++f) {
    const auto& fam = p.families()[f];
    ObjectCombination img;
    accumulate(img, image_of(fam.target), 1);
    for (const auto& part : fam.parts) accumulate(img, image_of(part), -1);
    if (!kq.is_zero_class(kq.class_of(img)))
      throw RelationViolation("family " + std::to_string(f) + " (target '" + fam.target +
                                  "') is not sent to a relation of the codomain",
                              f);
  }

  IntMatrix out = IntMatrix::Zero(static_cast<Eigen::Index>(kq.coordinates()),
                                  static_cast<Eigen::Index>(kp.coordinates()));
  for (std::size_t j = 0; j < kp.generators.size(); ++j) {
    ObjectCombination img;
    for (const auto& [label, m] : kp.generators[j]) accumulate(img, image_of(label), m);
    const auto y = kq.class_of(img);
    for (std::size_t i = 0; i < y.size(); ++i)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = y[i];
  }
  return out;
}

IntMatrix induced_k0_map(const AssemblerPresentation& p, const AssemblerPresentation& q,
                         const std::map<std::string, std::string>& object_map,
                         const std::map<std::string, Integer>& multiplicity_map) {
  std::map<std::string, ObjectCombination> images;
  for (const auto& [from, to] : object_map) {
    auto it = multiplicity_map.find(from);
    images[from] = {{to, it == multiplicity_map.end() ? Integer(1) : it->second}};
  }
  return induced_k0_map(p, k0_from_presentation(p), q, k0_from_presentation(q), images);
}

AssemblerPresentation finite_set_assembler(const std::vector<std::int64_t>& lengths, std::int64_t max_size) {
  std::vector<std::int64_t> ds(lengths);
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  for (std::int64_t d : ds)
    if (d < 1) throw InvalidInput("orbit lengths must be positive");

  struct Obj {
    std::vector<std::int64_t> mult;
    std::int64_t size, count;
    std::string label;
  };
  std::vector<Obj> objs;
  std::vector<std::int64_t> mult(ds.size(), 0);
  auto label_of = [&](const std::vector<std::int64_t>& m) {
    OrbitSum x;
    for (std::size_t i = 0; i < ds.size(); ++i) x.add_orbits(ds[i], m[i]);
    return x.label();
  };
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t size,
                                                                          std::int64_t count) {
    if (i == ds.size()) {
      if (count > 0) objs.push_back({mult, size, count, label_of(mult)});
      return;
    }
    for (std::int64_t k = 0; size + k * ds[i] <= max_size; ++k) {
      mult[i] = k;
      rec(i + 1, size + k * ds[i], count + k);
    }
    mult[i] = 0;
  };
  rec(0, 0, 0);
  std::sort(objs.begin(), objs.end(), [](const Obj& a, const Obj& b) {
    return std::tie(a.size, a.count, a.label) < std::tie(b.size, b.count, b.label);
  });

  std::vector<std::string> labels;
  std::vector<CoveringFamily> families;
  for (const auto& o : objs) labels.push_back(o.label);
  for (const auto& o : objs) {
    // Parts B and C = A − B, each unordered pair once (B <= C lexicographically).
    std::vector<std::int64_t> b(ds.size(), 0);
    std::function<void(std::size_t)> split = [&](std::size_t i) {
      if (i == ds.size()) {
        std::vector<std::int64_t> c(ds.size());
        for (std::size_t t = 0; t < ds.size(); ++t) c[t] = o.mult[t] - b[t];
        const bool b_empty = std::all_of(b.begin(), b.end(), [](auto v) { return v == 0; });
        const bool c_empty = std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; });
        if (!b_empty && !c_empty && b <= c) families.push_back({o.label, {label_of(b), label_of(c)}});
        return;
      }
      for (std::int64_t k = 0; k <= o.mult[i]; ++k) {
        b[i] = k;
        split(i + 1);
      }
      b[i] = 0;
    };
    split(0);
  }
  return AssemblerPresentation(std::move(labels), std::move(families));
}

AssemblerPresentation finite_set_assembler(std::int64_t n) {
  if (n < 1) throw InvalidInput("finite_set_assembler: N must be positive");
  return finite_set_assembler(divisors(n), checked_mul(2, n));
}

}  // namespace bost
