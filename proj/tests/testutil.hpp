#pragma once

#include <random>
#include <string>
#include <vector>

#include "repdim/algebra.hpp"

namespace testutil {

using namespace repdim;

inline Scalar qs(long n, long d = 1) { return Scalar(mpq_class(n, d), FieldSpec{}); }

inline Path make_path(const Quiver& q, const std::vector<std::string>& labels) {
    Path p;
    p.arrows.reserve(labels.size());
    for (const auto& l : labels)
        p.arrows.push_back(q.arrow_index(l));
    p.source = labels.empty() ? -1 : q.arrows[std::size_t(p.arrows.back())].src;
    return p;
}

inline RelationExpr mono(const Quiver& q, const std::vector<std::string>& labels) {
    return RelationExpr{{{Scalar::one(FieldSpec{}), make_path(q, labels)}}};
}

// One vertex x, two loops a,b, relations a^2, b^2, abab, baba, bound 4.
// The socle quotient of the dihedral order-8 group algebra presentation.
inline AlgebraPtr dihedral_socle() {
    Quiver q;
    q.vertices = {"x"};
    q.arrows = {{"a", 0, 0}, {"b", 0, 0}};
    std::vector<RelationExpr> rels = {
        mono(q, {"a", "a"}),
        mono(q, {"b", "b"}),
        mono(q, {"a", "b", "a", "b"}),
        mono(q, {"b", "a", "b", "a"}),
    };
    return build_algebra_ptr(q, rels, 4, FieldSpec{});
}

// The split of dihedral_socle: two vertices, a: l1 -> l2, b: l2 -> l1,
// all length-4 paths zero.
inline AlgebraPtr nakayama_asp() {
    Quiver q;
    q.vertices = {"l1", "l2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    std::vector<RelationExpr> rels = {
        mono(q, {"a", "b", "a", "b"}),
        mono(q, {"b", "a", "b", "a"}),
    };
    return build_algebra_ptr(q, rels, 4, FieldSpec{});
}

// Two parallel arrows 1 -> 2, no relations, bound 2.
inline AlgebraPtr kronecker() {
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
    return build_algebra_ptr(q, {}, 2, FieldSpec{});
}

// One vertex, one loop t, t^3 = 0.
inline AlgebraPtr loop_cubed() {
    Quiver q;
    q.vertices = {"v"};
    q.arrows = {{"t", 0, 0}};
    return build_algebra_ptr(q, {mono(q, {"t", "t", "t"})}, 3, FieldSpec{});
}

// Semisimple: n isolated vertices.
inline AlgebraPtr semisimple(int n) {
    Quiver q;
    for (int i = 0; i < n; ++i)
        q.vertices.push_back("v" + std::to_string(i));
    return build_algebra_ptr(q, {}, 2, FieldSpec{});
}

inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng, FieldSpec f) {
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = Scalar(d(rng), f);
        if (rank_of(m) == n)
            return m;
    }
}

}  // namespace testutil
