#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "repdim/matrix.hpp"
#include "repdim/quiver.hpp"

namespace repdim {

// Basic algebra A = kQ/I presented by a quiver, a set of relations and an
// explicit nilpotency bound N with J^N = 0 (verified, not discovered). The
// basis consists of the normal-form monomial paths of length < N.
class PresentedAlgebra {
public:
    Quiver quiver;
    std::vector<RelationExpr> relations;
    int bound = 0;
    FieldSpec field;

    std::vector<Path> basis;  // ascending monomial order; trivial paths first

    int dim() const { return int(basis.size()); }
    int num_vertices() const { return int(quiver.vertices.size()); }

    // Index of a path in the basis, or -1 when it is not a normal form.
    int basis_index(const Path& p) const;
    int trivial_index(int vertex) const { return trivial_index_[std::size_t(vertex)]; }

    // Normal form of a single path as a vector over the basis (zero for paths
    // of length >= bound).
    const Vec& path_normal_form(const Path& p) const;
    Vec normal_form(const std::vector<std::pair<Scalar, Path>>& combo) const;

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec multiply_basis(int i, int j, Scalar coeff) const;

    Vec unit() const;
    Vec basis_vec(int i) const;

    // Indices of the positive-length basis paths; their span is J_A because
    // the ideal is admissible.
    std::vector<int> radical_basis() const;

    int source_of(int i) const { return basis[std::size_t(i)].source; }
    int target_of(int i) const { return basis[std::size_t(i)].target(quiver); }
    std::vector<int> basis_from(int vertex) const;  // s(p) = vertex
    std::vector<int> basis_into(int vertex) const;  // e(p) = vertex

    bool monomial_presentation() const;

    // Internal tables, filled by build_algebra.
    struct MultEntry {
        int idx;
        Scalar coeff;
    };
    std::vector<std::vector<std::vector<MultEntry>>> mult_table;  // [i][j]

    friend PresentedAlgebra build_algebra(const Quiver& q, const std::vector<RelationExpr>& rels,
                                          int bound, FieldSpec field);

private:
    std::vector<int> trivial_index_;
    // normal forms of every valid path of length < bound, keyed by path
    std::vector<std::pair<Path, Vec>> nf_;
    std::map<std::string, int> nf_index_;
    Vec zero_;
    std::string path_key(const Path& p) const;
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

PresentedAlgebra build_algebra(const Quiver& q, const std::vector<RelationExpr>& rels, int bound,
                               FieldSpec field);
AlgebraPtr build_algebra_ptr(const Quiver& q, const std::vector<RelationExpr>& rels, int bound,
                             FieldSpec field);

// All paths of the quiver with length <= max_len, in ascending monomial order.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);

// Row-reduces each parallel class of relation expressions against the
// monomial order. Generates the same ideal; monomializable classes come out
// monomial (a binomial p - q together with p becomes {p, q}).
std::vector<RelationExpr> canonicalize_relations(const Quiver& q,
                                                 const std::vector<RelationExpr>& rels,
                                                 FieldSpec field);

}  // namespace repdim
