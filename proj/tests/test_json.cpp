#include "helpers.hpp"

#include "bost/json_io.hpp"

using namespace bost;
using bost::test::e;

namespace {

template <class F>
std::string failing_path(const std::string& text, F&& parse) {
  try {
    parse(parse_json_text(text));
  } catch (const SchemaError& err) {
    return err.path();
  }
  return "<accepted>";
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("group ring encoding") {
    CHECK(to_json(e(0, 1) + e(1, 3, -2)).dump() == R"([{"r":"0/1","c":1},{"r":"1/3","c":-2}])");
    CHECK(to_json(bost::test::eq(1, 2, Rational(1, 3))).dump() == R"([{"r":"1/2","c":"1/3"}])");
    const GroupRingZ x = group_ring_z_from_json(parse_json_text(R"([{"r":"5/4","c":"7"},{"r":"1/4","c":1}])"));
    CHECK(x == e(1, 4, 8));
    CHECK(group_ring_z_from_json(parse_json_text(R"([{"r":"1/2","c":1},{"r":"1/2","c":-1}])")).is_zero());
    CHECK(group_ring_json_is_rational(parse_json_text(R"([{"r":"1/2","c":"1/2"}])")));
    CHECK_FALSE(group_ring_json_is_rational(parse_json_text(R"([{"r":"1/2","c":3}])")));
  }

  TEST_CASE("BC words") {
    const BCElem u = BCElem::word(2, e(1, 3), 3);
    const std::string text = to_json(u).dump();
    CHECK(text == R"([{"a":2,"b":3,"x":[{"r":"1/3","c":1}]}])");
    CHECK(bc_from_json(parse_json_text(text)) == u);
    // Non-coprime words are brought into normal form on input.
    CHECK(bc_from_json(parse_json_text(R"([{"a":2,"b":4,"x":[{"r":"0/1","c":1}]}])")) ==
          BCElem::word(2, GroupRingZ::one(), 4));
    CHECK(failing_path(R"([{"a":0,"b":1,"x":[]}])", [](const Json& j) { return bc_from_json(j); }) == "$[0].a");
  }

  TEST_CASE("Witt vectors") {
    const TruncationSet t = TruncationSet::divisors_of(6);
    CHECK(to_json(t).dump() == "[1,2,3,6]");
    const WittVector w = WittVector::teichmuller(t, 2);
    const std::string text = to_json(w).dump();
    CHECK(witt_from_json(parse_json_text(text)) == w);
    CHECK(to_json(witt_ghost(w)).dump() == R"({"1":2,"2":4,"3":8,"6":64})");
  }

  TEST_CASE("matrices and graded endomorphisms") {
    CHECK(to_json(bost::test::mat({{0, -1}, {1, 0}})).dump() == "[[0,-1],[1,0]]");
    const GradedEndo g = graded_endo_from_json(parse_json_text(R"({"blocks":[{"degree":1,"matrix":[[2]]},{"degree":0,"matrix":[[1,0],[0,1]]}]})"));
    CHECK(g.blocks().size() == 2);
    CHECK(to_json(g).dump() == R"({"blocks":[{"degree":0,"matrix":[[1,0],[0,1]]},{"degree":1,"matrix":[[2]]}]})");
  }

  TEST_CASE("schema paths") {
    const auto z = [](const Json& j) { return group_ring_z_from_json(j); };
    CHECK(failing_path(R"([{"c":1}])", z) == "$[0].r");
    CHECK(failing_path(R"([{"r":"1/2","c":1},{"r":"x","c":1}])", z) == "$[1].r");
    CHECK(failing_path(R"([{"r":"1/2","c":true}])", z) == "$[0].c");
    CHECK(failing_path("nope", z) == "$");
    CHECK(failing_path(R"({"blocks":[{"degree":0,"matrix":[[1,2]]}]})", [](const Json& j) { return graded_endo_from_json(j); }) != "<accepted>");
    CHECK(failing_path(R"({"0":[[1]]})", [](const Json& j) { return witt_from_json(j); }) != "<accepted>");
  }

  TEST_CASE("assembler and induced-map requests") {
    const AssemblerPresentation p({"a", "b", "c"}, {{"c", {"a", "b"}}});
    const std::string text = to_json(p).dump();
    CHECK(assembler_from_json(parse_json_text(text)) == p);
    const Json request = {{"p", to_json(p)}, {"q", to_json(p)}, {"object_map", {{"a", "a"}, {"b", "b"}, {"c", "c"}}}};
    const InducedMapRequest r = induced_request_from_json(request);
    CHECK(r.multiplicity_map.empty());
    CHECK(r.object_map.at("c") == "c");
    Json extra = request;
    extra["bogus"] = 1;
    CHECK_THROWS_AS(induced_request_from_json(extra), SchemaError);
  }
}
