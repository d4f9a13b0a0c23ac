#include "bost/json_io.hpp"

#include <charconv>
#include <set>

namespace bost {

namespace {

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at_key(const std::string& path, const std::string& key) { return path + "." + key; }

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

const Json& expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw SchemaError(at_key(path, k), "unexpected field");
  for (const char* k : keys)
    if (!j.contains(k)) throw SchemaError(at_key(path, k), "missing field");
  return j;
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

int int_from_json(const Json& j, const std::string& path) {
  const std::int64_t v = int64_from_json(j, path);
  if (v < 0 || v > (1 << 30)) throw SchemaError(path, "expected a small non-negative integer");
  return static_cast<int>(v);
}

std::int64_t positive_key(const std::string& key, const std::string& path) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || ptr != key.data() + key.size() || v < 1)
    throw SchemaError(at_key(path, key), "key must be a positive integer");
  return v;
}

template <class F>
auto rethrow_as_schema(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

template <class Scalar>
Json group_ring_to_json(const GroupRing<Scalar>& x) {
  Json out = Json::array();
  for (const auto& [r, c] : x.terms()) out.push_back(Json{{"r", to_json(r)}, {"c", to_json(c)}});
  return out;
}

template <class Scalar, class Coef>
GroupRing<Scalar> group_ring_from_json(const Json& j, const std::string& path, Coef coef) {
  expect_array(j, path);
  GroupRing<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at_index(path, i);
    expect_object(j[i], p, {"r", "c"});
    out.add_term(qz_from_json(j[i]["r"], at_key(p, "r")), coef(j[i]["c"], at_key(p, "c")));
  }
  return out;
}

template <class Elem>
Json words_to_json(const Elem& u) {
  Json out = Json::array();
  for (const auto& [k, x] : u.terms()) out.push_back(Json{{"a", k.first}, {"b", k.second}, {"x", to_json(x)}});
  return out;
}

template <class Elem, class Coef>
Elem words_from_json(const Json& j, const std::string& path, Coef coef) {
  expect_array(j, path);
  Elem out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at_index(path, i);
    expect_object(j[i], p, {"a", "b", "x"});
    const std::int64_t a = int64_from_json(j[i]["a"], at_key(p, "a"));
    const std::int64_t b = int64_from_json(j[i]["b"], at_key(p, "b"));
    if (a < 1) throw SchemaError(at_key(p, "a"), "must be positive");
    if (b < 1) throw SchemaError(at_key(p, "b"), "must be positive");
    out.add_word(a, coef(j[i]["x"], at_key(p, "x")), b);
  }
  return out;
}

std::vector<Integer> integer_vector_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], at_index(path, i)));
  return out;
}

Json integer_vector_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Integer& x) {
  if (fits_int64(x)) return Json(to_int64(x));
  return Json(x.str());
}

Json to_json(const Rational& x) {
  if (is_integral(x)) return to_json(Integer(numerator(x)));
  return Json(to_string(x));
}

Json to_json(const QZ& r) { return Json(r.str()); }

Json to_json(const IntPoly& p) { return integer_vector_to_json(p.coeffs()); }

Json to_json(const GroupRingZ& x) { return group_ring_to_json(x); }
Json to_json(const GroupRingQ& x) { return group_ring_to_json(x); }
Json to_json(const BCElem& u) { return words_to_json(u); }
Json to_json(const BCElemQ& u) { return words_to_json(u); }

Json to_json(const OrbitSum& x) {
  Json orbits = Json::object();
  for (const auto& [d, m] : x.orbits()) orbits[std::to_string(d)] = to_json(m);
  return Json{{"orbits", orbits}};
}

Json to_json(const BoldK0Elem& u) { return words_to_json(u); }

Json to_json(const TruncationSet& t) {
  Json out = Json::array();
  for (std::int64_t d : t.elements()) out.push_back(d);
  return out;
}

Json to_json(const WittVector& w) {
  Json coords = Json::object();
  for (const auto& [d, x] : w.coords()) coords[std::to_string(d)] = to_json(x);
  return Json{{"trunc", to_json(w.trunc())}, {"coords", coords}};
}

Json to_json(const Ghost& g) {
  Json out = Json::object();
  for (const auto& [m, v] : g) out[std::to_string(m)] = to_json(v);
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const GradedEndo& g) {
  Json blocks = Json::array();
  for (const auto& [k, m] : g.blocks()) blocks.push_back(Json{{"degree", k}, {"matrix", to_json(m)}});
  return Json{{"blocks", blocks}};
}

Json to_json(const CycloFactorization& f) {
  Json cyclo = Json::object();
  for (const auto& [d, m] : f.cyclo) cyclo[std::to_string(d)] = m;
  return Json{{"zero_mult", f.zero_mult}, {"cyclo", cyclo}, {"remainder", to_json(f.remainder)}};
}

Json to_json(const QuasiUnipotenceReport& r) {
  Json degrees = Json::array();
  for (const auto& [k, f] : r.per_degree)
    degrees.push_back(Json{{"degree", k}, {"charpoly", to_json(f.product())}, {"factorization", to_json(f)}});
  return Json{{"quasi_unipotent", r.ok}, {"degrees", degrees}};
}

Json to_json(const HodgeTable& t) {
  Json out = Json::array();
  for (const auto& [pq, x] : t) out.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"x", to_json(x)}});
  return out;
}

Json to_json(const AssemblerPresentation& p) {
  Json families = Json::array();
  for (const auto& f : p.families()) families.push_back(Json{{"target", f.target}, {"parts", f.parts}});
  return Json{{"objects", p.objects()}, {"families", families}};
}

Json to_json(const K0Presentation& k) {
  Json basis = Json::object();
  for (const auto& [label, y] : k.basis_map) basis[label] = integer_vector_to_json(y);
  Json gens = Json::array();
  for (const auto& g : k.generators) gens.push_back(to_json(g));
  return Json{{"rank", k.rank}, {"torsion", integer_vector_to_json(k.torsion)}, {"basis_map", basis},
              {"generators", gens}};
}

Json to_json(const ObjectCombination& c) {
  Json out = Json::object();
  for (const auto& [label, m] : c) out[label] = to_json(m);
  return out;
}

Json to_json(const SubringMembership& s) {
  Json coeffs = Json::object();
  for (const auto& [d, a] : s.coefficients) coeffs[std::to_string(d)] = to_json(a);
  return Json{{"member", s.member}, {"coefficients", coeffs}};
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return rethrow_as_schema(path, [&] { return parse_integer(j.get<std::string>()); });
  throw SchemaError(path, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return rethrow_as_schema(path, [&] { return parse_rational(j.get<std::string>()); });
  return Rational(integer_from_json(j, path));
}

std::int64_t int64_from_json(const Json& j, const std::string& path) {
  const Integer x = integer_from_json(j, path);
  if (!fits_int64(x)) throw SchemaError(path, "integer out of range");
  return to_int64(x);
}

QZ qz_from_json(const Json& j, const std::string& path) {
  const std::string s = expect_string(j, path);
  return rethrow_as_schema(path, [&] { return QZ::parse(s); });
}

IntPoly int_poly_from_json(const Json& j, const std::string& path) {
  return IntPoly(integer_vector_from_json(j, path));
}

GroupRingZ group_ring_z_from_json(const Json& j, const std::string& path) {
  return group_ring_from_json<Integer>(j, path, [](const Json& c, const std::string& p) {
    const Rational q = rational_from_json(c, p);
    if (!is_integral(q)) throw SchemaError(p, "integer coefficient expected, got " + to_string(q));
    return Integer(numerator(q));
  });
}

GroupRingQ group_ring_q_from_json(const Json& j, const std::string& path) {
  return group_ring_from_json<Rational>(j, path, rational_from_json);
}

bool group_ring_json_is_rational(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("c") || !t["c"].is_string()) continue;
    try {
      if (!is_integral(parse_rational(t["c"].get<std::string>()))) return true;
    } catch (const std::invalid_argument&) {
    }
  }
  return false;
}

BCElem bc_from_json(const Json& j, const std::string& path) {
  return words_from_json<BCElem>(j, path, group_ring_z_from_json);
}

BCElemQ bc_q_from_json(const Json& j, const std::string& path) {
  return words_from_json<BCElemQ>(j, path, group_ring_q_from_json);
}

OrbitSum orbit_sum_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"orbits"});
  const std::string p = at_key(path, "orbits");
  if (!j["orbits"].is_object()) throw SchemaError(p, "expected an object");
  OrbitSum out;
  for (const auto& [k, v] : j["orbits"].items()) out.add_orbits(positive_key(k, p), integer_from_json(v, at_key(p, k)));
  return out;
}

BoldK0Elem bold_k0_from_json(const Json& j, const std::string& path) {
  return words_from_json<BoldK0Elem>(j, path, orbit_sum_from_json);
}

TruncationSet truncation_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::set<std::int64_t> elems;
  for (std::size_t i = 0; i < j.size(); ++i) elems.insert(int64_from_json(j[i], at_index(path, i)));
  return rethrow_as_schema(path, [&] { return TruncationSet(elems); });
}

WittVector witt_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"trunc", "coords"});
  TruncationSet t = truncation_from_json(j["trunc"], at_key(path, "trunc"));
  const std::string p = at_key(path, "coords");
  if (!j["coords"].is_object()) throw SchemaError(p, "expected an object");
  std::map<std::int64_t, Integer> coords;
  for (const auto& [k, v] : j["coords"].items()) {
    const std::int64_t d = positive_key(k, p);
    if (!t.contains(d)) throw SchemaError(at_key(p, k), "coordinate outside the truncation set");
    coords[d] = integer_from_json(v, at_key(p, k));
  }
  return WittVector(std::move(t), coords);
}

Ghost ghost_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  Ghost g;
  for (const auto& [k, v] : j.items()) g[positive_key(k, path)] = integer_from_json(v, at_key(path, k));
  return g;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  for (std::size_t i = 0; i < j.size(); ++i) {
    expect_array(j[i], at_index(path, i));
    if (cols < 0) cols = static_cast<Eigen::Index>(j[i].size());
    if (static_cast<Eigen::Index>(j[i].size()) != cols) throw SchemaError(at_index(path, i), "ragged matrix row");
  }
  IntMatrix m(rows, cols < 0 ? 0 : cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& row = j[static_cast<std::size_t>(r)];
      m(r, c) = integer_from_json(row[static_cast<std::size_t>(c)],
                                  at_index(at_index(path, static_cast<std::size_t>(r)), static_cast<std::size_t>(c)));
    }
  return m;
}

GradedEndo graded_endo_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"blocks"});
  const std::string p = at_key(path, "blocks");
  expect_array(j["blocks"], p);
  GradedEndo g;
  for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
    const std::string bp = at_index(p, i);
    const Json& b = j["blocks"][i];
    expect_object(b, bp, {"degree", "matrix"});
    const int k = int_from_json(b["degree"], at_key(bp, "degree"));
    IntMatrix m = matrix_from_json(b["matrix"], at_key(bp, "matrix"));
    if (m.rows() != m.cols()) throw SchemaError(at_key(bp, "matrix"), "matrix must be square");
    rethrow_as_schema(bp, [&] {
      g.add_block(k, std::move(m));
      return 0;
    });
  }
  return g;
}

HodgeTable hodge_from_json(const Json& j, const std::string& path) {
  expect_array(j, path);
  HodgeTable t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at_index(path, i);
    expect_object(j[i], p, {"p", "q", "x"});
    const int a = int_from_json(j[i]["p"], at_key(p, "p"));
    const int b = int_from_json(j[i]["q"], at_key(p, "q"));
    t[{a, b}] += group_ring_z_from_json(j[i]["x"], at_key(p, "x"));
    if (t[{a, b}].is_zero()) t.erase({a, b});
  }
  return t;
}

AssemblerPresentation assembler_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"objects", "families"});
  const std::string op = at_key(path, "objects"), fp = at_key(path, "families");
  expect_array(j["objects"], op);
  std::vector<std::string> objects;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j["objects"].size(); ++i) {
    objects.push_back(expect_string(j["objects"][i], at_index(op, i)));
    if (!seen.insert(objects.back()).second) throw SchemaError(at_index(op, i), "duplicate object");
  }
  expect_array(j["families"], fp);
  std::vector<CoveringFamily> families;
  for (std::size_t i = 0; i < j["families"].size(); ++i) {
    const std::string p = at_index(fp, i);
    const Json& f = j["families"][i];
    expect_object(f, p, {"target", "parts"});
    CoveringFamily fam;
    fam.target = expect_string(f["target"], at_key(p, "target"));
    if (!seen.count(fam.target)) throw SchemaError(at_key(p, "target"), "unknown object '" + fam.target + "'");
    const std::string pp = at_key(p, "parts");
    expect_array(f["parts"], pp);
    for (std::size_t k = 0; k < f["parts"].size(); ++k) {
      fam.parts.push_back(expect_string(f["parts"][k], at_index(pp, k)));
      if (!seen.count(fam.parts.back()))
        throw SchemaError(at_index(pp, k), "unknown object '" + fam.parts.back() + "'");
    }
    families.push_back(std::move(fam));
  }
  return AssemblerPresentation(std::move(objects), std::move(families));
}

K0Presentation k0_from_json(const Json& j, const std::string& path) {
  expect_object(j, path, {"rank", "torsion", "basis_map", "generators"});
  K0Presentation k;
  k.rank = int64_from_json(j["rank"], at_key(path, "rank"));
  if (k.rank < 0) throw SchemaError(at_key(path, "rank"), "must be non-negative");
  k.torsion = integer_vector_from_json(j["torsion"], at_key(path, "torsion"));
  const std::string bp = at_key(path, "basis_map");
  if (!j["basis_map"].is_object()) throw SchemaError(bp, "expected an object");
  for (const auto& [label, y] : j["basis_map"].items()) {
    auto v = integer_vector_from_json(y, at_key(bp, label));
    if (v.size() != k.coordinates()) throw SchemaError(at_key(bp, label), "wrong number of coordinates");
    k.basis_map.emplace(label, std::move(v));
  }
  const std::string gp = at_key(path, "generators");
  expect_array(j["generators"], gp);
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    const Json& g = j["generators"][i];
    if (!g.is_object()) throw SchemaError(at_index(gp, i), "expected an object");
    ObjectCombination c;
    for (const auto& [label, m] : g.items()) c.emplace(label, integer_from_json(m, at_key(at_index(gp, i), label)));
    k.generators.push_back(std::move(c));
  }
  return k;
}

InducedMapRequest induced_request_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (k != "p" && k != "q" && k != "object_map" && k != "multiplicity_map")
      throw SchemaError(at_key(path, k), "unexpected field");
  for (const char* k : {"p", "q", "object_map"})
    if (!j.contains(k)) throw SchemaError(at_key(path, k), "missing field");
  InducedMapRequest r;
  r.p = assembler_from_json(j["p"], at_key(path, "p"));
  r.q = assembler_from_json(j["q"], at_key(path, "q"));
  const std::string op = at_key(path, "object_map");
  if (!j["object_map"].is_object()) throw SchemaError(op, "expected an object");
  for (const auto& [label, target] : j["object_map"].items()) r.object_map[label] = expect_string(target, at_key(op, label));
  if (j.contains("multiplicity_map")) {
    const std::string mp = at_key(path, "multiplicity_map");
    if (!j["multiplicity_map"].is_object()) throw SchemaError(mp, "expected an object");
    for (const auto& [label, m] : j["multiplicity_map"].items())
      r.multiplicity_map[label] = integer_from_json(m, at_key(mp, label));
  }
  return r;
}

}  // namespace bost
