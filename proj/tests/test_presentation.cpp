#include <doctest.h>

#include <random>

#include "repdim/algebra.hpp"
#include "testutil.hpp"

using namespace repdim;
using testutil::qs;

TEST_CASE("one vertex, no arrows is one-dimensional") {
    auto alg = testutil::semisimple(1);
    CHECK(alg->dim() == 1);
    CHECK(alg->basis[0].is_trivial());
    CHECK(alg->radical_basis().empty());
}

TEST_CASE("dihedral socle quotient has the seven expected basis words") {
    auto A = testutil::dihedral_socle();
    CHECK(A->dim() == 7);
    std::vector<std::string> words;
    for (const auto& p : A->basis)
        words.push_back(p.str(A->quiver));
    CHECK(words == std::vector<std::string>{"e_x", "a", "b", "a*b", "b*a", "a*b*a", "b*a*b"});
    CHECK(A->radical_basis().size() == 6);
}

TEST_CASE("split Nakayama algebra has dimension 8") {
    auto B = testutil::nakayama_asp();
    CHECK(B->dim() == 8);
    CHECK(B->radical_basis().size() == 6);
}

TEST_CASE("normal forms vanish on relations and are idempotent") {
    auto A = testutil::dihedral_socle();
    const Quiver& q = A->quiver;

    Vec ex = A->path_normal_form(Path::trivial(0));
    CHECK(ex == A->basis_vec(A->trivial_index(0)));

    CHECK(vec_is_zero(A->path_normal_form(testutil::make_path(q, {"a", "a"}))));
    CHECK(vec_is_zero(A->path_normal_form(testutil::make_path(q, {"a", "b", "a", "b"}))));

    // idempotent + linear: reducing a combination of already-reduced paths is stable
    Vec x = A->normal_form({{qs(2), testutil::make_path(q, {"a", "b"})},
                            {qs(-1, 3), testutil::make_path(q, {"b", "a", "b"})}});
    Vec expect(std::size_t(A->dim()), Scalar(A->field));
    expect[std::size_t(A->basis_index(testutil::make_path(q, {"a", "b"})))] = qs(2);
    expect[std::size_t(A->basis_index(testutil::make_path(q, {"b", "a", "b"})))] = qs(-1, 3);
    CHECK(x == expect);
}

TEST_CASE("multiplication matches concatenation plus reduction") {
    auto A = testutil::dihedral_socle();
    const Quiver& q = A->quiver;
    int ia = A->basis_index(testutil::make_path(q, {"a"}));
    int ib = A->basis_index(testutil::make_path(q, {"b"}));
    int iab = A->basis_index(testutil::make_path(q, {"a", "b"}));
    int ie = A->trivial_index(0);

    CHECK(A->multiply(A->basis_vec(ie), A->basis_vec(ia)) == A->basis_vec(ia));
    CHECK(A->multiply(A->basis_vec(ia), A->basis_vec(ib)) == A->basis_vec(iab));
    CHECK(vec_is_zero(A->multiply(A->basis_vec(ib), A->basis_vec(ib))));
}

TEST_CASE("multiplication is associative on random triples") {
    auto A = testutil::dihedral_socle();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Vec x(std::size_t(A->dim()), Scalar(A->field)), y = x, z = x;
        for (int i = 0; i < A->dim(); ++i) {
            x[std::size_t(i)] = qs(d(rng));
            y[std::size_t(i)] = qs(d(rng));
            z[std::size_t(i)] = qs(d(rng));
        }
        CHECK(A->multiply(A->multiply(x, y), z) == A->multiply(x, A->multiply(y, z)));
    }
}

TEST_CASE("trivial paths are orthogonal idempotents summing to one") {
    auto B = testutil::nakayama_asp();
    Vec e0 = B->basis_vec(B->trivial_index(0));
    Vec e1 = B->basis_vec(B->trivial_index(1));
    CHECK(B->multiply(e0, e0) == e0);
    CHECK(B->multiply(e1, e1) == e1);
    CHECK(vec_is_zero(B->multiply(e0, e1)));
    CHECK(vec_add(e0, e1) == B->unit());
}

TEST_CASE("products of bound many radical elements vanish") {
    auto A = testutil::dihedral_socle();
    auto rad = A->radical_basis();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, rad.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        Vec acc = A->basis_vec(rad[pick(rng)]);
        for (int k = 1; k < A->bound; ++k)
            acc = A->multiply(acc, A->basis_vec(rad[pick(rng)]));
        CHECK(vec_is_zero(acc));
    }
}

TEST_CASE("admissibility violations are reported") {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"t", 0, 0}};
    // loop with no relation killing t^2
    CHECK_THROWS_AS(build_algebra(q, {}, 2, FieldSpec{}), Error);
}

TEST_CASE("non-parallel relation terms are rejected") {
    auto B = testutil::nakayama_asp();
    Quiver q = B->quiver;
    RelationExpr bad;
    bad.terms.push_back({qs(1), testutil::make_path(q, {"a", "b"})});   // l2 -> l2
    bad.terms.push_back({qs(1), testutil::make_path(q, {"b", "a"})});   // l1 -> l1
    CHECK_THROWS_AS(build_algebra(q, {bad}, 4, FieldSpec{}), Error);
}

TEST_CASE("binomial relation is handled exactly") {
    // commutative square: p - q with p, q the two length-2 paths
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    RelationExpr comm;
    comm.terms.push_back({qs(1), testutil::make_path(q, {"b", "a"})});
    comm.terms.push_back({qs(-1), testutil::make_path(q, {"d", "c"})});
    auto alg = build_algebra(q, {comm}, 3, FieldSpec{});
    // paths: 4 trivial + 4 arrows + one surviving length-2 class
    CHECK(alg.dim() == 9);
    Vec ba = alg.path_normal_form(testutil::make_path(q, {"b", "a"}));
    Vec dc = alg.path_normal_form(testutil::make_path(q, {"d", "c"}));
    CHECK(ba == dc);
    CHECK_FALSE(vec_is_zero(ba));
}
