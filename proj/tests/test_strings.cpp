#include <doctest.h>

#include <set>

#include "repdim/strings.hpp"
#include "testutil.hpp"

using namespace repdim;
using testutil::qs;

TEST_CASE("classification of the worked example and its split") {
    auto A = testutil::dihedral_socle();
    AlgebraClass ca = classify(*A);
    CHECK(ca.special_biserial);
    CHECK(ca.string);
    CHECK(ca.c_value == 2);
    CHECK_FALSE(ca.serial_type);

    auto B = testutil::nakayama_asp();
    AlgebraClass cb = classify(*B);
    CHECK(cb.string);
    CHECK(cb.c_value == 0);
    CHECK(cb.serial_type);
}

TEST_CASE("binomial relation breaks the string property but not biseriality") {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    RelationExpr comm;
    comm.terms.push_back({qs(1), testutil::make_path(q, {"b", "a"})});
    comm.terms.push_back({qs(-1), testutil::make_path(q, {"d", "c"})});
    auto alg = build_algebra_ptr(q, {comm}, 3, FieldSpec{});
    AlgebraClass c = classify(*alg);
    CHECK(c.special_biserial);
    CHECK_FALSE(c.string);
}

TEST_CASE("c invariant of the Kronecker quiver") {
    auto K = testutil::kronecker();
    CHECK(c_invariant(*K) == 2);  // one double source, one double sink
    CHECK(classify(*K).string);
}

TEST_CASE("serial modules of the worked example") {
    auto A = testutil::dihedral_socle();
    auto mods = serial_modules(A);
    REQUIRE(mods.size() == 7);
    std::multiset<int> dims;
    for (const auto& m : mods) {
        dims.insert(m.rep.total_dim());
        CHECK(m.rep.total_dim() == int(m.word.length()) + 1);
        CHECK(is_indecomposable(m.rep));
    }
    CHECK(dims == std::multiset<int>{1, 2, 2, 3, 3, 4, 4});
}

TEST_CASE("serial modules of the Nakayama split and of semisimple algebras") {
    auto B = testutil::nakayama_asp();
    CHECK(serial_modules(B).size() == 8);

    auto S = testutil::semisimple(3);
    auto mods = serial_modules(S);
    CHECK(mods.size() == 3);
    for (const auto& m : mods)
        CHECK(m.rep.total_dim() == 1);
}

TEST_CASE("M(ab) has the expected shape") {
    auto A = testutil::dihedral_socle();
    Representation m = serial_module_for_word(A, testutil::make_path(A->quiver, {"a", "b"}));
    CHECK(m.total_dim() == 3);
    Layers L = layers(m);
    CHECK(L.top.rep.total_dim() == 1);
    CHECK(L.socle.rep.total_dim() == 1);
}

TEST_CASE("no projective-injective over the worked example") {
    auto A = testutil::dihedral_socle();
    CHECK_FALSE(socle_reduction_step(A).has_value());
}

TEST_CASE("socle reduction of the truncated loop algebra") {
    auto N = testutil::loop_cubed();  // k[t]/t^3, self-injective
    auto red = socle_reduction_step(N);
    REQUIRE(red.has_value());
    CHECK(red->kind == SocleReduction::Kind::RelationAdded);
    CHECK(red->reduced->dim() == 2);  // k[t]/t^2
    CHECK(red->socle_desc == "t*t");
    // lifting the reduced regular module keeps the quiver aligned
    Representation reg = projective_module(red->reduced, 0);
    Representation lifted = lift_reduced_module(N, *red, reg);
    CHECK(lifted.total_dim() == 2);
}

TEST_CASE("socle reduction removes an isolated semisimple block") {
    auto S = testutil::semisimple(2);
    auto red = socle_reduction_step(S);
    REQUIRE(red.has_value());
    CHECK(red->kind == SocleReduction::Kind::VertexRemoved);
    CHECK(red->reduced->dim() == 1);
}

TEST_CASE("socle reduction removes the arrow of the A2 quiver") {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"f", 0, 1}};
    auto A2 = build_algebra_ptr(q, {}, 2, FieldSpec{});
    auto red = socle_reduction_step(A2);
    REQUIRE(red.has_value());
    CHECK(red->kind == SocleReduction::Kind::ArrowRemoved);
    CHECK(red->reduced->dim() == 2);
    CHECK(red->reduced->quiver.arrows.empty());
}

TEST_CASE("iterating socle reduction terminates in a string algebra") {
    // commutative square: one projective-injective, quotient is the square
    // with both length-2 paths zero, which is a string algebra
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    RelationExpr comm;
    comm.terms.push_back({qs(1), testutil::make_path(q, {"b", "a"})});
    comm.terms.push_back({qs(-1), testutil::make_path(q, {"d", "c"})});
    auto alg = build_algebra_ptr(q, {comm}, 3, FieldSpec{});

    AlgebraPtr cur = alg;
    int steps = 0;
    while (auto red = socle_reduction_step(cur)) {
        cur = red->reduced;
        ++steps;
        REQUIRE(steps < 20);
    }
    CHECK(steps >= 1);
    CHECK(classify(*cur).string);
}
