#include "helpers.hpp"

#include "bost/errors.hpp"
#include "bost/scissors.hpp"

using namespace bost;

TEST_SUITE("scissors") {
  TEST_CASE("small presentations") {
    const K0Presentation free_one = k0_from_presentation(AssemblerPresentation({"a"}, {}));
    CHECK(free_one.rank == 1);
    CHECK(free_one.torsion.empty());
    CHECK(free_one.basis_map.at("a") == std::vector<Integer>{1});

    const K0Presentation abc = k0_from_presentation(AssemblerPresentation({"a", "b", "c"}, {{"c", {"a", "b"}}}));
    CHECK(abc.rank == 2);
    CHECK(abc.class_of({{"c", 1}}) == abc.class_of({{"a", 1}, {"b", 1}}));

    const K0Presentation killed = k0_from_presentation(AssemblerPresentation({"a"}, {{"a", {"a", "a"}}}));
    CHECK(killed.rank == 0);
    CHECK(killed.coordinates() == 0);
    CHECK(killed.is_zero_class(killed.class_of({{"a", 5}})));
  }

  TEST_CASE("torsion") {
    const K0Presentation k = k0_from_presentation(AssemblerPresentation({"a", "b"}, {{"b", {"a", "a", "a", "a", "a", "a"}}}));
    CHECK(k.rank == 1);
    CHECK(k.torsion.empty());
    const K0Presentation t =
        k0_from_presentation(AssemblerPresentation({"a", "b"}, {{"a", {"b", "b"}}, {"b", {"a", "a"}}}));
    CHECK(t.torsion == std::vector<Integer>{3});
    CHECK(t.reduce({Integer(4)}) == std::vector<Integer>{1});
    CHECK(t.is_zero_class(t.class_of({{"a", 3}})));
    CHECK_FALSE(t.is_zero_class(t.class_of({{"a", 1}})));
  }

  TEST_CASE("presentations are validated") {
    CHECK_THROWS_AS(AssemblerPresentation({"a", "a"}, {}), InvalidInput);
    CHECK_THROWS_AS(AssemblerPresentation({"a"}, {{"a", {"b"}}}), InvalidInput);
    const K0Presentation k = k0_from_presentation(AssemblerPresentation({"a"}, {}));
    CHECK_THROWS_AS(k.class_of({{"z", 1}}), InvalidInput);
  }

  TEST_CASE("finite-set assemblers") {
    const AssemblerPresentation p1 = finite_set_assembler(1);
    CHECK(p1.objects() == std::vector<std::string>{"Z/1", "Z/1^2"});
    const K0Presentation k2 = k0_from_presentation(finite_set_assembler(2));
    CHECK(k2.rank == 2);
    CHECK(k2.generators == std::vector<ObjectCombination>{{{"Z/1", 1}}, {{"Z/2", 1}}});
    const K0Presentation k6 = k0_from_presentation(finite_set_assembler(6));
    CHECK(k6.rank == 4);
    CHECK(k6.torsion.empty());
    CHECK(k6.basis_map.at("Z/2^2+Z/6") == std::vector<Integer>{0, 2, 0, 1});
  }

  TEST_CASE("induced maps") {
    const AssemblerPresentation p = finite_set_assembler(2);
    std::map<std::string, std::string> identity;
    for (const auto& label : p.objects()) identity[label] = label;
    CHECK(induced_k0_map(p, p, identity) == IntMatrix::Identity(2, 2));

    const AssemblerPresentation p4 = finite_set_assembler(4);
    const K0Presentation k4 = k0_from_presentation(p4);
    const IntMatrix s2 = induced_k0_map(p4, k4, p4, k4, orbit_functor_images(p4, [](const OrbitSum& x) { return sigma(2, x); }));
    CHECK(s2 == bost::test::mat({{1, 2, 0}, {0, 0, 2}, {0, 0, 0}}));

    const K0Presentation k2 = k0_from_presentation(p);
    const AssemblerPresentation q = finite_set_assembler({2, 4}, 8);
    const K0Presentation kq = k0_from_presentation(q);
    const IntMatrix r2 = induced_k0_map(p, k2, q, kq, orbit_functor_images(p, [](const OrbitSum& x) { return rho_tilde(2, x); }));
    CHECK(kq.generators == std::vector<ObjectCombination>{{{"Z/2", 1}}, {{"Z/4", 1}}});
    CHECK(r2 == IntMatrix::Identity(2, 2));
  }

  TEST_CASE("relation violations name the family") {
    const AssemblerPresentation p({"a", "b", "c"}, {{"c", {"a", "b"}}});
    const AssemblerPresentation q({"x", "y"}, {});
    try {
      induced_k0_map(p, q, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
      FAIL("expected a relation violation");
    } catch (const RelationViolation& v) {
      CHECK(v.family() == 0);
    }
    CHECK_THROWS_AS(induced_k0_map(p, q, {{"a", "x"}}), InvalidInput);
    // Scaling c by 2 sends the relation c = a + b to 2x = x + x.
    CHECK(induced_k0_map(p, q, {{"a", "x"}, {"b", "x"}, {"c", "x"}}, {{"c", 2}}).rows() == 2);
  }
}
