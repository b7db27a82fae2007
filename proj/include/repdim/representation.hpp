#pragma once

#include <optional>
#include <vector>

#include "repdim/algebra.hpp"

namespace repdim {

// Left A-module presented as a representation of the quiver: a space per
// vertex and a matrix per arrow going from the source component to the
// target component. Relations must evaluate to the zero map.
struct Representation {
    AlgebraPtr alg;
    std::vector<int> dims;
    std::vector<Matrix> arrow_maps;
    std::optional<Path> word;  // set for serial modules M(C)

    int total_dim() const;
    std::vector<int> offsets() const;
    bool is_zero_rep() const { return total_dim() == 0; }
    // dims[target] x dims[source] matrix of the path acting on components
    Matrix path_component_action(const Path& p) const;
    void validate() const;
};

Representation make_representation(AlgebraPtr alg, std::vector<int> dims,
                                   std::vector<Matrix> arrow_maps);
Representation zero_rep(AlgebraPtr alg);
Representation simple_module(AlgebraPtr alg, int vertex);
// Ae_i with basis the normal-form paths starting at i, graded by target vertex.
Representation projective_module(AlgebraPtr alg, int vertex);
// (e_i A)^* with the left action (a.phi)(x) = phi(x a).
Representation injective_module(AlgebraPtr alg, int vertex);

// Homomorphism between representations: one matrix per vertex,
// dst.dims[v] x src.dims[v].
struct RepMap {
    std::vector<Matrix> comps;
};

RepMap zero_map(const Representation& src, const Representation& dst);
RepMap identity_map(const Representation& x);
RepMap map_add(const RepMap& f, const RepMap& g);
RepMap map_scale(const RepMap& f, const Scalar& c);
// Composition "f then g" (f applied first).
RepMap then(const RepMap& f, const RepMap& g);
bool is_intertwiner(const Representation& src, const Representation& dst, const RepMap& f);
bool map_is_zero(const RepMap& f);
bool map_is_invertible(const Representation& src, const Representation& dst, const RepMap& f);
// Block-diagonal matrix on total coordinates.
Matrix map_total_matrix(const Representation& src, const Representation& dst, const RepMap& f);
Vec flatten_map(const RepMap& f);
std::size_t map_flat_size(const Representation& src, const Representation& dst);

struct HomBasis {
    std::vector<RepMap> elems;
    std::size_t dim() const { return elems.size(); }
};

// Basis of the intertwiner space Hom_A(X, Y).
HomBasis hom_basis(const Representation& x, const Representation& y);
std::size_t hom_dim(const Representation& x, const Representation& y);

struct SubRep {
    Representation rep;
    RepMap incl;  // rep -> ambient
};
struct QuotRep {
    Representation rep;
    RepMap proj;  // ambient -> rep
};

SubRep sub_from_vertex_spans(const Representation& x, const std::vector<std::vector<Vec>>& spans);
QuotRep quotient_by(const Representation& x, const std::vector<std::vector<Vec>>& spans);

SubRep kernel_of(const Representation& x, const Representation& y, const RepMap& f);
SubRep image_of(const Representation& x, const Representation& y, const RepMap& f);
QuotRep cokernel_of(const Representation& x, const Representation& y, const RepMap& f);

struct Layers {
    SubRep radical;
    SubRep socle;
    QuotRep top;
    bool is_semisimple;
};
Layers layers(const Representation& x);

struct DirectSum {
    Representation rep;
    std::vector<RepMap> incls;
    std::vector<RepMap> projs;
};
DirectSum direct_sum(AlgebraPtr alg, const std::vector<const Representation*>& parts);

// End_A(X) with composition table and the radical computed as the kernel of
// the trace form of the regular representation (valid in characteristic 0 or
// p > dim End).
struct EndRing {
    HomBasis basis;
    std::vector<std::vector<Vec>> mult;  // coords of (g_i then g_j)
    Vec id_coords;
    std::vector<Vec> radical;  // canonical basis of rad End in coordinates
    std::size_t dim() const { return basis.dim(); }
    std::size_t top_dim() const { return dim() - radical.size(); }
    bool is_local() const { return top_dim() == 1; }
};
EndRing end_ring_with_radical(const Representation& x);

// Splits off a direct summand isomorphic to C, when one exists. C must be
// indecomposable (local endomorphism ring); the test is the exact unit
// criterion: some composite C -> V -> C is invertible.
struct SummandSplit {
    RepMap incl;        // C -> V
    RepMap retraction;  // V -> C, with incl then retraction = id_C
    SubRep complement;  // kernel of the retraction
};
std::optional<SummandSplit> split_off_summand(const Representation& v, const Representation& c);

struct Summand {
    Representation rep;
    int multiplicity;
};
// Direct-sum decomposition. Known indecomposables may be supplied as
// candidates to peel off first; the remainder is handled by locality of the
// endomorphism ring and Fitting splits.
std::vector<Summand> decompose(const Representation& x,
                               const std::vector<const Representation*>& candidates = {});
bool is_indecomposable(const Representation& x);

struct IsoResult {
    bool iso = false;
    bool uncertain = false;  // filters passed but randomized search failed
    std::optional<RepMap> certificate;
};
IsoResult is_isomorphic(const Representation& x, const Representation& y);

// Arrow word of a uniserial module (all radical layers one-dimensional and a
// unique arrow continuing at each step); nullopt when not of that shape.
std::optional<Path> uniserial_word(const Representation& x);

}  // namespace repdim
