#pragma once

#include <optional>
#include <string>

#include "repdim/representation.hpp"

namespace repdim {

struct AlgebraClass {
    bool special_biserial = false;
    bool string = false;
    int c_value = 0;
    bool serial_type = false;  // string with c = 0: every indecomposable is serial
};

// Special biserial: every vertex starts and ends at most two arrows, and every
// arrow has at most one nonzero continuation on each side. String: additionally
// the supplied presentation is monomial.
AlgebraClass classify(const PresentedAlgebra& alg);

// (#vertices with exactly two outgoing arrows) + (#vertices with exactly two
// incoming arrows); each vertex split drops this by at least one.
int c_invariant(const PresentedAlgebra& alg);

struct SerialModule {
    Path word;
    Representation rep;
};

// The uniserial module M(C) with basis the right subwords of C.
Representation serial_module_for_word(AlgebraPtr alg, const Path& word);

// One serial module per nonzero normal-form monomial path; for a string
// algebra with c = 0 this is the complete list of indecomposables.
std::vector<SerialModule> serial_modules(AlgebraPtr alg);

// One step of the socle-quotient reduction: peels an indecomposable
// projective-injective P(i) and passes to A/soc(P(i)).
struct SocleReduction {
    enum class Kind { RelationAdded, ArrowRemoved, VertexRemoved };
    AlgebraPtr reduced;
    int vertex = -1;  // vertex of the peeled projective-injective
    Representation peeled;
    std::string socle_desc;
    Kind kind = Kind::RelationAdded;
    std::string removed_label;  // arrow or vertex label for the removal cases
};

std::optional<SocleReduction> socle_reduction_step(AlgebraPtr alg);

// A module over the reduced algebra viewed over the original one (matching
// components by label; removed arrows act as zero).
Representation lift_reduced_module(AlgebraPtr orig, const SocleReduction& red,
                                   const Representation& x);

}  // namespace repdim
