#pragma once

#include <string>
#include <vector>

#include "repdim/scalar.hpp"

namespace repdim {

// Directed multigraph Q = (Q0, Q1, s, e). Vertices and arrows are addressed
// by index; labels are unique across each kind.
struct Quiver {
    struct Arrow {
        std::string label;
        int src;
        int dst;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& label) const;
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_into(int v) const;
    void validate() const;  // unique labels, endpoints in range
};

// A path is stored in word order: arrows[0] α1, arrows[1] α2, ... with
// s(α_i) = e(α_{i+1}); the rightmost arrow acts first. `source` is the start
// vertex of the walk (equal to s(arrows.back()) for nonempty paths).
struct Path {
    int source = -1;
    std::vector<int> arrows;

    static Path trivial(int vertex) { return Path{vertex, {}}; }
    std::size_t length() const { return arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }
    int target(const Quiver& q) const { return arrows.empty() ? source : q.arrows[arrows.front()].dst; }
    bool valid_in(const Quiver& q) const;
    std::string str(const Quiver& q) const;

    bool operator==(const Path&) const = default;
};

// Product p*q of paths (q acts first); requires s(p) = e(q).
Path concat(const Path& p, const Path& q, const Quiver& qv);

// Monomial order: by length, then lexicographically on arrow labels
// (trivial paths compare by vertex label).
bool path_less(const Quiver& q, const Path& a, const Path& b);

struct RelationTerm {
    Scalar coeff;
    Path path;
};

// Linear combination of parallel paths of length >= 2.
struct RelationExpr {
    std::vector<RelationTerm> terms;
    std::string str(const Quiver& q) const;
};

}  // namespace repdim
