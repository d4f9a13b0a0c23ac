#include "bost/json_io.hpp"
#include "bost/verify/random.hpp"
#include "bost/verify/suites.hpp"

namespace bost::verify {

namespace {

/// Encode, print, re-parse, decode and encode again; the two texts must match
/// and the decoded value must equal the original.
template <class T, class Parse>
void roundtrip(Recorder& rec, const std::string& name, const T& x, Parse parse) {
  const std::string text = to_json(x).dump();
  const T back = parse(parse_json_text(text));
  rec.expect(name + " round-trips byte for byte", to_json(back).dump() == text && back == x, text);
}

template <class Parse>
std::string schema_path(const std::string& text, Parse parse) {
  try {
    parse(parse_json_text(text));
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<accepted>";
}

void roundtrip_group(Recorder& rec, std::uint64_t seed) {
  Gen gen(seed ^ 0x150);
  const auto z = [](const Json& j) { return group_ring_z_from_json(j); };
  const auto q = [](const Json& j) { return group_ring_q_from_json(j); };
  for (int t = 0; t < 200; ++t) {
    roundtrip(rec, "Z[Q/Z] element", gen.group_ring(), z);
    roundtrip(rec, "Q[Q/Z] element", gen.group_ring_q(), q);
    roundtrip(rec, "BC element", gen.bc(3), [](const Json& j) { return bc_from_json(j); });
    roundtrip(rec, "rational BC element", rationalize(gen.bc(2)), [](const Json& j) { return bc_q_from_json(j); });
    roundtrip(rec, "orbit sum", gen.orbit_sum(), [](const Json& j) { return orbit_sum_from_json(j); });
    roundtrip(rec, "orbit-coefficient BC element", gen.bold_word() + gen.bold_word(),
              [](const Json& j) { return bold_k0_from_json(j); });
    const TruncationSet trunc = TruncationSet::divisors_of(gen.range(1, 36));
    roundtrip(rec, "truncation set", trunc, [](const Json& j) { return truncation_from_json(j); });
    const WittVector w = gen.witt(trunc, 50);
    roundtrip(rec, "Witt vector", w, [](const Json& j) { return witt_from_json(j); });
    roundtrip(rec, "ghost vector", witt_ghost(w), [](const Json& j) { return ghost_from_json(j); });
    roundtrip(rec, "matrix", gen.matrix(gen.range(1, 4), 1000), [](const Json& j) { return matrix_from_json(j); });
    roundtrip(rec, "graded endomorphism", gen.graded(), [](const Json& j) { return graded_endo_from_json(j); });
    HodgeTable h;
    for (int i = 0; i < 3; ++i) h[{static_cast<int>(gen.range(0, 3)), static_cast<int>(gen.range(0, 3))}] = gen.group_ring();
    roundtrip(rec, "Hodge table", h, [](const Json& j) { return hodge_from_json(j); });
  }
  Integer huge = 1;
  for (int i = 0; i < 40; ++i) huge *= 97;
  roundtrip(rec, "integer beyond 64 bits", GroupRingZ::basis(QZ(1, 3), -huge), z);
  roundtrip(rec, "rational with large parts", GroupRingQ::basis(QZ(5, 7), Rational(huge, huge + 2)), q);
  const AssemblerPresentation p = finite_set_assembler(4);
  roundtrip(rec, "assembler presentation", p, [](const Json& j) { return assembler_from_json(j); });
  const K0Presentation k = k0_from_presentation(p);
  const std::string text = to_json(k).dump();
  rec.expect("K₀ presentation round-trips byte for byte", to_json(k0_from_json(parse_json_text(text))).dump() == text);
}

void canonical_group(Recorder& rec, std::uint64_t) {
  rec.expect("e(1/3) encodes as [{\"r\":\"1/3\",\"c\":1}]",
             to_json(GroupRingZ::basis(QZ(1, 3))).dump() == R"([{"r":"1/3","c":1}])");
  rec.expect("0 encodes as []", to_json(GroupRingZ()).dump() == "[]");
  rec.expect("integral rationals encode as integers", to_json(Rational(4, 2)) == Json(2));
  rec.expect("fractions encode as strings", to_json(Rational(-3, 6)) == Json("-1/2"));
  rec.expect("large integers encode as strings", to_json(Integer("123456789012345678901234567890")) ==
                                                     Json("123456789012345678901234567890"));
  const auto z = [](const Json& j) { return group_ring_z_from_json(j); };
  rec.expect("unsorted and duplicate terms are normalised",
             to_json(z(parse_json_text(R"([{"r":"2/3","c":1},{"r":"1/3","c":2},{"r":"-1/3","c":1}])"))).dump() ==
                 R"([{"r":"1/3","c":2},{"r":"2/3","c":2}])");
}

void schema_group(Recorder& rec, std::uint64_t) {
  const auto z = [](const Json& j) { return group_ring_z_from_json(j); };
  rec.expect("a missing coefficient names its path", schema_path(R"([{"r":"1/2"}])", z) == "$[0].c");
  rec.expect("an unknown field names its path", schema_path(R"([{"r":"1/2","c":1,"x":0}])", z) == "$[0].x");
  rec.expect("a non-integral coefficient is rejected in Z[Q/Z]", schema_path(R"([{"r":"1/2","c":"1/2"}])", z) == "$[0].c");
  rec.expect("zero denominators are rejected", schema_path(R"([{"r":"1/0","c":1}])", z) == "$[0].r");
  rec.expect("malformed text is reported at the root", schema_path("[{", z) == "$");
  rec.expect("a non-array element is rejected", schema_path(R"({"r":"1/2"})", z) == "$");
  rec.expect("non-divisor-closed truncations are rejected",
             schema_path("[1, 4]", [](const Json& j) { return truncation_from_json(j); }) != "<accepted>");
  rec.expect("ragged matrices are rejected",
             schema_path("[[1, 2], [3]]", [](const Json& j) { return matrix_from_json(j); }) != "<accepted>");
}

}  // namespace

void register_json(std::vector<Group>& out) {
  out.push_back({"json", "roundtrip", roundtrip_group});
  out.push_back({"json", "canonical-form", canonical_group});
  out.push_back({"json", "schema-errors", schema_group});
}

}  // namespace bost::verify
