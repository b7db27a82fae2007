#include "repdim/strings.hpp"

#include <algorithm>

#include "repdim/errors.hpp"

namespace repdim {

AlgebraClass classify(const PresentedAlgebra& alg) {
    const Quiver& q = alg.quiver;
    AlgebraClass cls;
    bool deg_ok = true;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.arrows_from(int(v)).size() > 2 || q.arrows_into(int(v)).size() > 2)
            deg_ok = false;
    }
    bool cont_ok = true;
    for (std::size_t b = 0; b < q.arrows.size() && cont_ok; ++b) {
        int left = 0, right = 0;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            // alpha beta: beta acts first
            if (q.arrows[a].src == q.arrows[b].dst) {
                Path p{q.arrows[b].src, {int(a), int(b)}};
                if (!vec_is_zero(alg.path_normal_form(p)))
                    ++left;
            }
            if (q.arrows[a].dst == q.arrows[b].src) {
                Path p{q.arrows[a].src, {int(b), int(a)}};
                if (!vec_is_zero(alg.path_normal_form(p)))
                    ++right;
            }
        }
        if (left > 1 || right > 1)
            cont_ok = false;
    }
    cls.special_biserial = deg_ok && cont_ok;
    cls.string = cls.special_biserial && alg.monomial_presentation();
    cls.c_value = c_invariant(alg);
    if (cls.string && cls.c_value == 0) {
        // with c = 0 every vertex has at most one arrow in and out, so each
        // component is a linearly oriented line or a cyclically oriented cycle
        bool shape_ok = true;
        for (std::size_t v = 0; v < q.vertices.size(); ++v)
            if (q.arrows_from(int(v)).size() > 1 || q.arrows_into(int(v)).size() > 1)
                shape_ok = false;
        cls.serial_type = shape_ok;
    }
    return cls;
}

int c_invariant(const PresentedAlgebra& alg) {
    const Quiver& q = alg.quiver;
    int c = 0;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.arrows_from(int(v)).size() == 2)
            ++c;
        if (q.arrows_into(int(v)).size() == 2)
            ++c;
    }
    return c;
}

Representation serial_module_for_word(AlgebraPtr alg, const Path& word) {
    const Quiver& q = alg->quiver;
    check(word.valid_in(q), ErrorCode::UnknownArrow, "serial word invalid in quiver");
    check(!vec_is_zero(alg->path_normal_form(word)), ErrorCode::InvalidArgument,
          "serial word is zero in the algebra");
    std::size_t n = word.length();
    // suffix k: the last k arrows of the word
    std::vector<int> suffix_vertex(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        suffix_vertex[k] = (k == 0) ? word.source : q.arrows[std::size_t(word.arrows[n - k])].dst;
    std::vector<std::vector<std::size_t>> comp(q.vertices.size());
    std::vector<int> local(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        auto& c = comp[std::size_t(suffix_vertex[k])];
        local[k] = int(c.size());
        c.push_back(k);
    }
    Representation r;
    r.alg = alg;
    r.dims.resize(q.vertices.size());
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        r.dims[v] = int(comp[v].size());
    r.arrow_maps.assign(q.arrows.size(), Matrix());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
        Matrix m(std::size_t(r.dims[ve]), std::size_t(r.dims[vs]), alg->field);
        for (std::size_t k = 0; k < n; ++k) {
            if (word.arrows[n - 1 - k] != int(a))
                continue;  // only the next letter of the word acts
            if (suffix_vertex[k] != int(vs))
                continue;
            m.at(std::size_t(local[k + 1]), std::size_t(local[k])) = Scalar::one(alg->field);
        }
        r.arrow_maps[a] = std::move(m);
    }
    r.word = word;
    r.validate();
    return r;
}

std::vector<SerialModule> serial_modules(AlgebraPtr alg) {
    AlgebraClass cls = classify(*alg);
    check(cls.string, ErrorCode::NotStringAlgebra, "serial modules require a string algebra");
    std::vector<SerialModule> out;
    for (const Path& c : alg->basis)
        out.push_back({c, serial_module_for_word(alg, c)});
    return out;
}

namespace {

// Quiver with one vertex removed (must have no arrows attached).
Quiver drop_vertex(const Quiver& q, int v) {
    Quiver r;
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        if (int(i) != v)
            r.vertices.push_back(q.vertices[i]);
    for (const auto& a : q.arrows) {
        check(a.src != v && a.dst != v, ErrorCode::VerificationFailed,
              "dropped vertex still has arrows");
        Quiver::Arrow na = a;
        na.src -= (a.src > v) ? 1 : 0;
        na.dst -= (a.dst > v) ? 1 : 0;
        r.arrows.push_back(na);
    }
    return r;
}

Quiver drop_arrow(const Quiver& q, int a) {
    Quiver r;
    r.vertices = q.vertices;
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (int(i) != a)
            r.arrows.push_back(q.arrows[i]);
    return r;
}

Path translate_path(const Path& p, const Quiver& from, const Quiver& to) {
    Path r;
    r.source = to.vertex_index(from.vertices[std::size_t(p.source)]);
    for (int a : p.arrows) {
        int na = to.arrow_index(from.arrows[std::size_t(a)].label);
        check(na >= 0, ErrorCode::UnknownArrow, "path uses removed arrow");
        r.arrows.push_back(na);
    }
    return r;
}

}  // namespace

std::optional<SocleReduction> socle_reduction_step(AlgebraPtr alg) {
    const Quiver& q = alg->quiver;
    for (int i = 0; i < int(q.vertices.size()); ++i) {
        Representation P = projective_module(alg, i);
        bool injective = false;
        for (int j = 0; j < int(q.vertices.size()) && !injective; ++j) {
            Representation I = injective_module(alg, j);
            if (I.total_dim() != P.total_dim())
                continue;
            if (is_isomorphic(P, I).iso)
                injective = true;
        }
        if (!injective)
            continue;

        Layers L = layers(P);
        verify_internal(L.socle.rep.total_dim() == 1,
                        "projective-injective with non-simple socle");
        // express the socle generator as an algebra element: P's component at
        // w is spanned by the basis paths i -> w in algebra order
        std::vector<std::vector<int>> comp(q.vertices.size());
        for (int b : alg->basis_from(i))
            comp[std::size_t(alg->target_of(b))].push_back(b);
        Vec w(std::size_t(alg->dim()), Scalar(alg->field));
        for (std::size_t v = 0; v < q.vertices.size(); ++v) {
            const Matrix& incl = L.socle.incl.comps[v];
            for (std::size_t cc = 0; cc < incl.cols(); ++cc)
                for (std::size_t r = 0; r < incl.rows(); ++r)
                    if (!incl.at(r, cc).is_zero())
                        w[std::size_t(comp[v][r])] += incl.at(r, cc);
        }
        // two-sidedness: J w = 0 holds (w is in the socle); the span is a
        // two-sided ideal iff w J = 0
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            Path alpha{q.arrows[a].src, {int(a)}};
            Vec prod = alg->multiply(w, alg->normal_form({{Scalar::one(alg->field), alpha}}));
            check(vec_is_zero(prod), ErrorCode::SocleNotTwoSidedIdeal,
                  "socle of P(" + q.vertices[std::size_t(i)] +
                      ") does not generate a one-dimensional two-sided ideal");
        }

        // classify the generator by the lengths of its supporting paths
        std::vector<int> support;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (!w[k].is_zero())
                support.push_back(int(k));
        verify_internal(!support.empty(), "zero socle generator");
        bool all_long = true, single_arrow = support.size() == 1, trivial = support.size() == 1;
        for (int k : support) {
            std::size_t len = alg->basis[std::size_t(k)].length();
            all_long = all_long && len >= 2;
            single_arrow = single_arrow && len == 1;
            trivial = trivial && len == 0;
        }

        SocleReduction red;
        red.vertex = i;
        red.peeled = P;
        {
            std::string desc;
            for (int k : support) {
                if (!desc.empty())
                    desc += " + ";
                if (!w[std::size_t(k)].is_one())
                    desc += w[std::size_t(k)].str() + " ";
                desc += alg->basis[std::size_t(k)].str(q);
            }
            red.socle_desc = desc;
        }

        if (trivial) {
            // P(i) simple projective-injective: the vertex is an isolated block
            red.kind = SocleReduction::Kind::VertexRemoved;
            red.removed_label = q.vertices[std::size_t(i)];
            Quiver nq = drop_vertex(q, i);
            std::vector<RelationExpr> rels;
            for (const auto& rel : alg->relations) {
                RelationExpr nr;
                for (const auto& t : rel.terms)
                    nr.terms.push_back({t.coeff, translate_path(t.path, q, nq)});
                rels.push_back(std::move(nr));
            }
            red.reduced = build_algebra_ptr(nq, rels, alg->bound, alg->field);
        } else if (single_arrow) {
            // socle spanned by an arrow: the quotient lives on the quiver
            // without it; relation terms through the arrow vanish
            int arrow = alg->basis[std::size_t(support[0])].arrows[0];
            red.kind = SocleReduction::Kind::ArrowRemoved;
            red.removed_label = q.arrows[std::size_t(arrow)].label;
            Quiver nq = drop_arrow(q, arrow);
            std::vector<RelationExpr> rels;
            for (const auto& rel : alg->relations) {
                RelationExpr nr;
                for (const auto& t : rel.terms) {
                    if (std::find(t.path.arrows.begin(), t.path.arrows.end(), arrow) !=
                        t.path.arrows.end())
                        continue;
                    nr.terms.push_back({t.coeff, translate_path(t.path, q, nq)});
                }
                if (!nr.terms.empty())
                    rels.push_back(std::move(nr));
            }
            rels = canonicalize_relations(nq, rels, alg->field);
            red.reduced = build_algebra_ptr(nq, rels, alg->bound, alg->field);
        } else {
            check(all_long, ErrorCode::NotApplicable,
                  "socle generator mixes path lengths; quotient has no admissible "
                  "presentation on this quiver");
            red.kind = SocleReduction::Kind::RelationAdded;
            std::vector<RelationExpr> rels = alg->relations;
            RelationExpr extra;
            for (int k : support)
                extra.terms.push_back({w[std::size_t(k)], alg->basis[std::size_t(k)]});
            rels.push_back(std::move(extra));
            rels = canonicalize_relations(q, rels, alg->field);
            red.reduced = build_algebra_ptr(q, rels, alg->bound, alg->field);
        }
        verify_internal(red.reduced->dim() + 1 == alg->dim(),
                        "socle reduction must drop the dimension by exactly one");
        return red;
    }
    return std::nullopt;
}

Representation lift_reduced_module(AlgebraPtr orig, const SocleReduction& red,
                                   const Representation& x) {
    const Quiver& oq = orig->quiver;
    const Quiver& rq = red.reduced->quiver;
    Representation r;
    r.alg = orig;
    r.dims.assign(oq.vertices.size(), 0);
    for (std::size_t v = 0; v < rq.vertices.size(); ++v)
        r.dims[std::size_t(oq.vertex_index(rq.vertices[v]))] = x.dims[v];
    r.arrow_maps.assign(oq.arrows.size(), Matrix());
    for (std::size_t a = 0; a < oq.arrows.size(); ++a) {
        int ra = rq.arrow_index(oq.arrows[a].label);
        std::size_t vs = std::size_t(oq.arrows[a].src), ve = std::size_t(oq.arrows[a].dst);
        if (ra < 0) {
            r.arrow_maps[a] = Matrix(std::size_t(r.dims[ve]), std::size_t(r.dims[vs]), orig->field);
        } else {
            r.arrow_maps[a] = x.arrow_maps[std::size_t(ra)];
        }
    }
    if (x.word) {
        Path w;
        w.source = oq.vertex_index(rq.vertices[std::size_t(x.word->source)]);
        bool ok = w.source >= 0;
        for (int a : x.word->arrows) {
            int na = oq.arrow_index(rq.arrows[std::size_t(a)].label);
            ok = ok && na >= 0;
            w.arrows.push_back(na);
        }
        if (ok)
            r.word = w;
    }
    r.validate();
    return r;
}

}  // namespace repdim
