#include "repdim/representation.hpp"

#include <algorithm>
#include <random>

#include "repdim/errors.hpp"

namespace repdim {

namespace {

void check_same_algebra(const Representation& x, const Representation& y) {
    check(x.alg.get() == y.alg.get(), ErrorCode::AlgebraMismatch,
          "representations over different algebras");
}

std::vector<std::vector<Vec>> canonical_spans(const Representation& x,
                                              const std::vector<std::vector<Vec>>& spans) {
    std::vector<std::vector<Vec>> out(x.dims.size());
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        RowSpace rs(std::size_t(x.dims[v]), x.alg->field);
        for (const Vec& w : spans[v])
            rs.add(w);
        out[v] = rs.rows();
    }
    return out;
}

}  // namespace

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims)
        t += d;
    return t;
}

std::vector<int> Representation::offsets() const {
    std::vector<int> off(dims.size() + 1, 0);
    for (std::size_t v = 0; v < dims.size(); ++v)
        off[v + 1] = off[v] + dims[v];
    return off;
}

Matrix Representation::path_component_action(const Path& p) const {
    if (p.is_trivial())
        return Matrix::identity(std::size_t(dims[std::size_t(p.source)]), alg->field);
    Matrix m = arrow_maps[std::size_t(p.arrows.back())];
    for (std::size_t i = p.arrows.size() - 1; i-- > 0;)
        m = arrow_maps[std::size_t(p.arrows[i])] * m;
    return m;
}

void Representation::validate() const {
    const Quiver& q = alg->quiver;
    check(dims.size() == q.vertices.size(), ErrorCode::ShapeMismatch, "dims per vertex mismatch");
    check(arrow_maps.size() == q.arrows.size(), ErrorCode::ShapeMismatch, "map per arrow mismatch");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        check(arrow_maps[a].rows() == std::size_t(dims[std::size_t(q.arrows[a].dst)]) &&
                  arrow_maps[a].cols() == std::size_t(dims[std::size_t(q.arrows[a].src)]),
              ErrorCode::ShapeMismatch, "arrow map shape mismatch: " + q.arrows[a].label);
    }
    for (const auto& rel : alg->relations) {
        Matrix acc = path_component_action(rel.terms.front().path).scaled(rel.terms.front().coeff);
        for (std::size_t t = 1; t < rel.terms.size(); ++t)
            acc = acc + path_component_action(rel.terms[t].path).scaled(rel.terms[t].coeff);
        check(acc.is_zero(), ErrorCode::RelationViolated,
              "relation does not vanish on representation: " + rel.str(q));
    }
}

Representation make_representation(AlgebraPtr alg, std::vector<int> dims,
                                   std::vector<Matrix> arrow_maps) {
    Representation r;
    r.alg = std::move(alg);
    r.dims = std::move(dims);
    r.arrow_maps = std::move(arrow_maps);
    r.validate();
    return r;
}

Representation zero_rep(AlgebraPtr alg) {
    Representation r;
    r.alg = alg;
    r.dims.assign(alg->quiver.vertices.size(), 0);
    for (std::size_t a = 0; a < alg->quiver.arrows.size(); ++a)
        r.arrow_maps.emplace_back(0, 0, alg->field);
    return r;
}

Representation simple_module(AlgebraPtr alg, int vertex) {
    Representation r = zero_rep(alg);
    r.dims[std::size_t(vertex)] = 1;
    const Quiver& q = alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        r.arrow_maps[a] = Matrix(std::size_t(r.dims[std::size_t(q.arrows[a].dst)]),
                                 std::size_t(r.dims[std::size_t(q.arrows[a].src)]), alg->field);
    r.word = Path::trivial(vertex);
    return r;
}

Representation projective_module(AlgebraPtr alg, int vertex) {
    const Quiver& q = alg->quiver;
    std::vector<int> paths = alg->basis_from(vertex);
    // component of P at w: basis paths i -> w, kept in algebra basis order
    std::vector<std::vector<int>> comp(q.vertices.size());
    std::vector<int> local(std::size_t(alg->dim()), -1);
    for (int b : paths) {
        auto& c = comp[std::size_t(alg->target_of(b))];
        local[std::size_t(b)] = int(c.size());
        c.push_back(b);
    }
    Representation r;
    r.alg = alg;
    r.dims.resize(q.vertices.size());
    r.arrow_maps.assign(q.arrows.size(), Matrix());
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        r.dims[v] = int(comp[v].size());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int vs = q.arrows[a].src, ve = q.arrows[a].dst;
        Matrix m(std::size_t(r.dims[std::size_t(ve)]), std::size_t(r.dims[std::size_t(vs)]),
                 alg->field);
        Path alpha{vs, {int(a)}};
        for (std::size_t c = 0; c < comp[std::size_t(vs)].size(); ++c) {
            int b = comp[std::size_t(vs)][c];
            Path w = concat(alpha, alg->basis[std::size_t(b)], q);
            if (int(w.length()) >= alg->bound)
                continue;
            const Vec& nf = alg->path_normal_form(w);
            for (std::size_t k = 0; k < nf.size(); ++k)
                if (!nf[k].is_zero())
                    m.at(std::size_t(local[k]), c) = nf[k];
        }
        r.arrow_maps[a] = std::move(m);
    }
    r.validate();
    return r;
}

Representation injective_module(AlgebraPtr alg, int vertex) {
    const Quiver& q = alg->quiver;
    std::vector<int> paths = alg->basis_into(vertex);  // e(p) = vertex
    // component of I at w: duals of basis paths w -> vertex
    std::vector<std::vector<int>> comp(q.vertices.size());
    std::vector<int> local(std::size_t(alg->dim()), -1);
    for (int b : paths) {
        auto& c = comp[std::size_t(alg->source_of(b))];
        local[std::size_t(b)] = int(c.size());
        c.push_back(b);
    }
    Representation r;
    r.alg = alg;
    r.dims.resize(q.vertices.size());
    r.arrow_maps.assign(q.arrows.size(), Matrix());
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        r.dims[v] = int(comp[v].size());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int vs = q.arrows[a].src, ve = q.arrows[a].dst;
        Matrix m(std::size_t(r.dims[std::size_t(ve)]), std::size_t(r.dims[std::size_t(vs)]),
                 alg->field);
        // (alpha . q*)(x) = coefficient of q in NF(x alpha), x: e(alpha) -> vertex
        Path alpha{vs, {int(a)}};
        for (std::size_t row = 0; row < comp[std::size_t(ve)].size(); ++row) {
            int bx = comp[std::size_t(ve)][row];
            Path w = concat(alg->basis[std::size_t(bx)], alpha, q);
            if (int(w.length()) >= alg->bound)
                continue;
            const Vec& nf = alg->path_normal_form(w);
            for (std::size_t k = 0; k < nf.size(); ++k)
                if (!nf[k].is_zero() && local[k] >= 0 && alg->source_of(int(k)) == vs)
                    m.at(row, std::size_t(local[k])) = nf[k];
        }
        r.arrow_maps[a] = std::move(m);
    }
    r.validate();
    return r;
}

RepMap zero_map(const Representation& src, const Representation& dst) {
    RepMap f;
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        f.comps.emplace_back(std::size_t(dst.dims[v]), std::size_t(src.dims[v]), src.alg->field);
    return f;
}

RepMap identity_map(const Representation& x) {
    RepMap f;
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        f.comps.push_back(Matrix::identity(std::size_t(x.dims[v]), x.alg->field));
    return f;
}

RepMap map_add(const RepMap& f, const RepMap& g) {
    RepMap r;
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        r.comps.push_back(f.comps[v] + g.comps[v]);
    return r;
}

RepMap map_scale(const RepMap& f, const Scalar& c) {
    RepMap r;
    for (const auto& m : f.comps)
        r.comps.push_back(m.scaled(c));
    return r;
}

RepMap then(const RepMap& f, const RepMap& g) {
    RepMap r;
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        r.comps.push_back(g.comps[v] * f.comps[v]);
    return r;
}

bool is_intertwiner(const Representation& src, const Representation& dst, const RepMap& f) {
    const Quiver& q = src.alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
        if (!(f.comps[ve] * src.arrow_maps[a] == dst.arrow_maps[a] * f.comps[vs]))
            return false;
    }
    return true;
}

bool map_is_zero(const RepMap& f) {
    return std::all_of(f.comps.begin(), f.comps.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool map_is_invertible(const Representation& src, const Representation& dst, const RepMap& f) {
    for (std::size_t v = 0; v < src.dims.size(); ++v) {
        if (src.dims[v] != dst.dims[v])
            return false;
        if (rank_of(f.comps[v]) != std::size_t(src.dims[v]))
            return false;
    }
    return true;
}

Matrix map_total_matrix(const Representation& src, const Representation& dst, const RepMap& f) {
    auto so = src.offsets(), to = dst.offsets();
    Matrix m(std::size_t(dst.total_dim()), std::size_t(src.total_dim()), src.alg->field);
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        for (std::size_t r = 0; r < f.comps[v].rows(); ++r)
            for (std::size_t c = 0; c < f.comps[v].cols(); ++c)
                m.at(std::size_t(to[v]) + r, std::size_t(so[v]) + c) = f.comps[v].at(r, c);
    return m;
}

Vec flatten_map(const RepMap& f) {
    Vec out;
    for (const auto& m : f.comps)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                out.push_back(m.at(r, c));
    return out;
}

std::size_t map_flat_size(const Representation& src, const Representation& dst) {
    std::size_t n = 0;
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        n += std::size_t(src.dims[v]) * std::size_t(dst.dims[v]);
    return n;
}

HomBasis hom_basis(const Representation& x, const Representation& y) {
    check_same_algebra(x, y);
    const Quiver& q = x.alg->quiver;
    FieldSpec f = x.alg->field;
    // variable layout: for each vertex v the entries of g_v, row-major
    std::vector<std::size_t> off(x.dims.size() + 1, 0);
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        off[v + 1] = off[v] + std::size_t(x.dims[v]) * std::size_t(y.dims[v]);
    std::size_t nvars = off.back();

    std::size_t nrows = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        nrows += std::size_t(y.dims[std::size_t(q.arrows[a].dst)]) *
                 std::size_t(x.dims[std::size_t(q.arrows[a].src)]);

    Matrix sys(nrows, nvars, f);
    std::size_t row = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
        const Matrix& Xa = x.arrow_maps[a];
        const Matrix& Ya = y.arrow_maps[a];
        std::size_t dxs = std::size_t(x.dims[vs]);
        // equation g_e X_a - Y_a g_s = 0, entry (r, c)
        for (std::size_t r = 0; r < std::size_t(y.dims[ve]); ++r) {
            for (std::size_t c = 0; c < dxs; ++c) {
                for (std::size_t j = 0; j < std::size_t(x.dims[ve]); ++j)
                    if (!Xa.at(j, c).is_zero())
                        sys.at(row, off[ve] + r * std::size_t(x.dims[ve]) + j) += Xa.at(j, c);
                for (std::size_t i = 0; i < std::size_t(y.dims[vs]); ++i)
                    if (!Ya.at(r, i).is_zero())
                        sys.at(row, off[vs] + i * dxs + c) -= Ya.at(r, i);
                ++row;
            }
        }
    }

    HomBasis hb;
    for (const Vec& k : kernel_basis(sys)) {
        RepMap g;
        for (std::size_t v = 0; v < x.dims.size(); ++v) {
            Matrix m(std::size_t(y.dims[v]), std::size_t(x.dims[v]), f);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    m.at(r, c) = k[off[v] + r * std::size_t(x.dims[v]) + c];
            g.comps.push_back(std::move(m));
        }
        hb.elems.push_back(std::move(g));
    }
    return hb;
}

std::size_t hom_dim(const Representation& x, const Representation& y) {
    return hom_basis(x, y).dim();
}

SubRep sub_from_vertex_spans(const Representation& x, const std::vector<std::vector<Vec>>& spans) {
    FieldSpec f = x.alg->field;
    auto bases = canonical_spans(x, spans);
    SubRep s;
    s.rep.alg = x.alg;
    s.rep.dims.resize(x.dims.size());
    std::vector<std::optional<CoordSolver>> solvers(x.dims.size());
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        s.rep.dims[v] = int(bases[v].size());
        s.incl.comps.push_back(Matrix::from_cols(bases[v], std::size_t(x.dims[v]), f));
        if (!bases[v].empty())
            solvers[v].emplace(bases[v], std::size_t(x.dims[v]), f);
    }
    const Quiver& q = x.alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
        Matrix m(std::size_t(s.rep.dims[ve]), std::size_t(s.rep.dims[vs]), f);
        for (std::size_t c = 0; c < std::size_t(s.rep.dims[vs]); ++c) {
            Vec img = x.arrow_maps[a].apply(bases[vs][c]);
            if (vec_is_zero(img))
                continue;
            verify_internal(solvers[ve].has_value(), "span not arrow-stable");
            Vec coords = solvers[ve]->coords(img);
            for (std::size_t r = 0; r < coords.size(); ++r)
                m.at(r, c) = coords[r];
        }
        s.rep.arrow_maps.push_back(std::move(m));
    }
    s.rep.validate();
    return s;
}

QuotRep quotient_by(const Representation& x, const std::vector<std::vector<Vec>>& spans) {
    FieldSpec f = x.alg->field;
    auto bases = canonical_spans(x, spans);
    QuotRep qr;
    qr.rep.alg = x.alg;
    qr.rep.dims.resize(x.dims.size());
    std::vector<Matrix> section(x.dims.size());  // unit complement columns
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        std::size_t n = std::size_t(x.dims[v]);
        RowSpace rs(n, f);
        for (const Vec& w : bases[v])
            rs.add(w);
        std::vector<Vec> comp_units;
        for (std::size_t j = 0; j < n; ++j) {
            if (rs.has_pivot(j))
                continue;
            Vec u(n, Scalar(f));
            u[j] = Scalar::one(f);
            comp_units.push_back(std::move(u));
        }
        qr.rep.dims[v] = int(comp_units.size());
        // projection: coordinates on the complement after reducing mod the span
        std::vector<Vec> cols;
        cols.insert(cols.end(), bases[v].begin(), bases[v].end());
        cols.insert(cols.end(), comp_units.begin(), comp_units.end());
        Matrix b = Matrix::from_cols(cols, n, f);
        auto binv = matrix_inverse(b);
        verify_internal(binv.has_value(), "quotient basis not invertible");
        Matrix proj(comp_units.size(), n, f);
        for (std::size_t r = 0; r < comp_units.size(); ++r)
            for (std::size_t c2 = 0; c2 < n; ++c2)
                proj.at(r, c2) = binv->at(bases[v].size() + r, c2);
        qr.proj.comps.push_back(std::move(proj));
        section[v] = Matrix::from_cols(comp_units, n, f);
    }
    const Quiver& q = x.alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
        // well-defined iff the span is arrow-stable
        for (const Vec& w : bases[vs])
            verify_internal(vec_is_zero(qr.proj.comps[ve].apply(x.arrow_maps[a].apply(w))),
                            "quotient span not arrow-stable");
        qr.rep.arrow_maps.push_back(qr.proj.comps[ve] * x.arrow_maps[a] * section[vs]);
    }
    qr.rep.validate();
    return qr;
}

SubRep kernel_of(const Representation& x, const Representation& y, const RepMap& f) {
    (void)y;
    std::vector<std::vector<Vec>> spans(x.dims.size());
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        spans[v] = kernel_basis(f.comps[v]);
    return sub_from_vertex_spans(x, spans);
}

SubRep image_of(const Representation& x, const Representation& y, const RepMap& f) {
    std::vector<std::vector<Vec>> spans(y.dims.size());
    for (std::size_t v = 0; v < y.dims.size(); ++v)
        for (std::size_t c = 0; c < f.comps[v].cols(); ++c)
            spans[v].push_back(f.comps[v].col(c));
    return sub_from_vertex_spans(y, spans);
}

QuotRep cokernel_of(const Representation& x, const Representation& y, const RepMap& f) {
    std::vector<std::vector<Vec>> spans(y.dims.size());
    for (std::size_t v = 0; v < y.dims.size(); ++v)
        for (std::size_t c = 0; c < f.comps[v].cols(); ++c)
            spans[v].push_back(f.comps[v].col(c));
    (void)x;
    return quotient_by(y, spans);
}

Layers layers(const Representation& x) {
    const Quiver& q = x.alg->quiver;
    Layers L;
    // radical = sum of arrow images (J is generated by the arrows)
    std::vector<std::vector<Vec>> rad_spans(x.dims.size());
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t ve = std::size_t(q.arrows[a].dst);
        for (std::size_t c = 0; c < x.arrow_maps[a].cols(); ++c)
            rad_spans[ve].push_back(x.arrow_maps[a].col(c));
    }
    L.radical = sub_from_vertex_spans(x, rad_spans);
    L.top = quotient_by(x, rad_spans);
    // socle = joint kernel of all arrows out of each vertex
    std::vector<std::vector<Vec>> soc_spans(x.dims.size());
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        std::vector<int> out = q.arrows_from(int(v));
        std::size_t rows = 0;
        for (int a : out)
            rows += x.arrow_maps[std::size_t(a)].rows();
        Matrix stack(rows, std::size_t(x.dims[v]), x.alg->field);
        std::size_t r0 = 0;
        for (int a : out) {
            const Matrix& m = x.arrow_maps[std::size_t(a)];
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    stack.at(r0 + r, c) = m.at(r, c);
            r0 += m.rows();
        }
        soc_spans[v] = kernel_basis(stack);
    }
    L.socle = sub_from_vertex_spans(x, soc_spans);
    L.is_semisimple = L.radical.rep.total_dim() == 0;
    return L;
}

DirectSum direct_sum(AlgebraPtr alg, const std::vector<const Representation*>& parts) {
    DirectSum ds;
    ds.rep.alg = alg;
    std::size_t nv = alg->quiver.vertices.size();
    ds.rep.dims.assign(nv, 0);
    std::vector<std::vector<int>> part_off(parts.size(), std::vector<int>(nv, 0));
    for (std::size_t p = 0; p < parts.size(); ++p) {
        check(parts[p]->alg.get() == alg.get(), ErrorCode::AlgebraMismatch,
              "direct sum over mixed algebras");
        for (std::size_t v = 0; v < nv; ++v) {
            part_off[p][v] = ds.rep.dims[v];
            ds.rep.dims[v] += parts[p]->dims[v];
        }
    }
    const Quiver& q = alg->quiver;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
        Matrix m(std::size_t(ds.rep.dims[ve]), std::size_t(ds.rep.dims[vs]), alg->field);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const Matrix& pm = parts[p]->arrow_maps[a];
            for (std::size_t r = 0; r < pm.rows(); ++r)
                for (std::size_t c = 0; c < pm.cols(); ++c)
                    m.at(std::size_t(part_off[p][ve]) + r, std::size_t(part_off[p][vs]) + c) =
                        pm.at(r, c);
        }
        ds.rep.arrow_maps.push_back(std::move(m));
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        RepMap incl, proj;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix mi(std::size_t(ds.rep.dims[v]), std::size_t(parts[p]->dims[v]), alg->field);
            Matrix mp(std::size_t(parts[p]->dims[v]), std::size_t(ds.rep.dims[v]), alg->field);
            for (int r = 0; r < parts[p]->dims[v]; ++r) {
                mi.at(std::size_t(part_off[p][v] + r), std::size_t(r)) = Scalar::one(alg->field);
                mp.at(std::size_t(r), std::size_t(part_off[p][v] + r)) = Scalar::one(alg->field);
            }
            incl.comps.push_back(std::move(mi));
            proj.comps.push_back(std::move(mp));
        }
        ds.incls.push_back(std::move(incl));
        ds.projs.push_back(std::move(proj));
    }
    ds.rep.validate();
    return ds;
}

EndRing end_ring_with_radical(const Representation& x) {
    EndRing e;
    e.basis = hom_basis(x, x);
    std::size_t d = e.basis.dim();
    FieldSpec f = x.alg->field;
    check(f.p == 0 || f.p > d, ErrorCode::CharacteristicTooSmall,
          "trace-form radical needs characteristic 0 or p > dim End");
    if (d == 0) {
        e.id_coords = Vec{};
        return e;
    }
    std::vector<Vec> flats;
    for (const auto& g : e.basis.elems)
        flats.push_back(flatten_map(g));
    CoordSolver cs(flats, flats.front().size(), f);
    e.mult.assign(d, std::vector<Vec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            e.mult[i][j] = cs.coords(flatten_map(then(e.basis.elems[i], e.basis.elems[j])));
    e.id_coords = cs.coords(flatten_map(identity_map(x)));
    // trace of left multiplication by each basis element
    Vec tau(d, Scalar(f));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j)
            tau[k] += e.mult[k][j][j];
    Matrix gram(d, d, f);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!e.mult[i][j][k].is_zero())
                    gram.at(i, j) += e.mult[i][j][k] * tau[k];
    RowSpace rad(d, f);
    for (const Vec& k : kernel_basis(gram))
        rad.add(k);
    e.radical = rad.rows();
    return e;
}

std::optional<SummandSplit> split_off_summand(const Representation& v, const Representation& c) {
    check_same_algebra(v, c);
    if (c.total_dim() == 0 || c.total_dim() > v.total_dim())
        return std::nullopt;
    for (std::size_t w = 0; w < v.dims.size(); ++w)
        if (c.dims[w] > v.dims[w])
            return std::nullopt;
    HomBasis cv = hom_basis(c, v);
    if (cv.dim() == 0)
        return std::nullopt;
    HomBasis vc = hom_basis(v, c);
    if (vc.dim() == 0)
        return std::nullopt;
    // C indecomposable: some composite C -> V -> C invertible iff C splits off,
    // and bilinearity lets us scan basis pairs only.
    for (const auto& sigma : cv.elems) {
        for (const auto& pi : vc.elems) {
            RepMap e = then(sigma, pi);
            if (!map_is_invertible(c, c, e))
                continue;
            RepMap einv;
            for (const auto& m : e.comps)
                einv.comps.push_back(*matrix_inverse(m));
            RepMap retraction = then(pi, einv);
            SummandSplit s;
            s.incl = sigma;
            s.retraction = retraction;
            s.complement = kernel_of(v, c, retraction);
            verify_internal(s.complement.rep.total_dim() + c.total_dim() == v.total_dim(),
                            "summand split dimension mismatch");
            return s;
        }
    }
    return std::nullopt;
}

namespace {

// Fitting split: for an endomorphism g, V = ker(g^m) + im(g^m) once the rank
// stabilizes. Returns the two parts when both are proper.
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& v,
                                                                       const RepMap& g) {
    auto total_rank = [&](const RepMap& h) {
        std::size_t r = 0;
        for (const auto& m : h.comps)
            r += rank_of(m);
        return r;
    };
    RepMap h = g;
    std::size_t steps = 0;
    while (true) {
        RepMap h2 = then(h, h);
        std::size_t r1 = total_rank(h), r2 = total_rank(h2);
        if (r1 == r2) {
            if (r1 == 0 || r1 == std::size_t(v.total_dim()))
                return std::nullopt;
            Representation ker = kernel_of(v, v, h).rep;
            Representation img = image_of(v, v, h).rep;
            verify_internal(ker.total_dim() + img.total_dim() == v.total_dim(),
                            "Fitting parts do not fill the module");
            return std::make_pair(std::move(ker), std::move(img));
        }
        h = std::move(h2);
        if (++steps > 40)
            return std::nullopt;
    }
}

void decompose_into(const Representation& x, const std::vector<const Representation*>& candidates,
                    std::vector<Representation>& out) {
    Representation v = x;
    // peel known indecomposables first
    bool peeled = true;
    while (peeled && v.total_dim() > 0) {
        peeled = false;
        for (const Representation* c : candidates) {
            while (auto s = split_off_summand(v, *c)) {
                out.push_back(*c);
                v = s->complement.rep;
                peeled = true;
                if (v.total_dim() == 0)
                    break;
            }
            if (v.total_dim() == 0)
                break;
        }
    }
    if (v.total_dim() == 0)
        return;
    EndRing e = end_ring_with_radical(v);
    if (e.is_local()) {
        out.push_back(std::move(v));
        return;
    }
    // search for a splitting endomorphism
    std::vector<RepMap> tries;
    for (const auto& g : e.basis.elems)
        tries.push_back(g);
    for (std::size_t i = 0; i + 1 < e.basis.elems.size() && i < 12; ++i)
        tries.push_back(map_add(e.basis.elems[i], e.basis.elems[i + 1]));
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int t = 0; t < 40; ++t) {
        RepMap g = zero_map(v, v);
        for (const auto& b : e.basis.elems)
            g = map_add(g, map_scale(b, Scalar(coef(rng), v.alg->field)));
        tries.push_back(std::move(g));
    }
    for (const auto& g : tries) {
        if (auto parts = fitting_split(v, g)) {
            decompose_into(parts->first, candidates, out);
            decompose_into(parts->second, candidates, out);
            return;
        }
    }
    throw Error(ErrorCode::DecompositionUndecided,
                "could not certify a decomposition; endomorphism top has dimension " +
                    std::to_string(e.top_dim()));
}

}  // namespace

std::vector<Summand> decompose(const Representation& x,
                               const std::vector<const Representation*>& candidates) {
    std::vector<const Representation*> cands = candidates;
    std::sort(cands.begin(), cands.end(), [](const Representation* a, const Representation* b) {
        return a->total_dim() > b->total_dim();
    });
    std::vector<Representation> flat;
    decompose_into(x, cands, flat);
    std::vector<Summand> out;
    for (auto& r : flat) {
        bool merged = false;
        for (auto& s : out) {
            if (is_isomorphic(s.rep, r).iso) {
                ++s.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged)
            out.push_back({std::move(r), 1});
    }
    return out;
}

bool is_indecomposable(const Representation& x) {
    if (x.total_dim() == 0)
        return false;
    return end_ring_with_radical(x).is_local();
}

IsoResult is_isomorphic(const Representation& x, const Representation& y) {
    check_same_algebra(x, y);
    IsoResult res;
    if (x.dims != y.dims)
        return res;
    if (x.total_dim() == 0) {
        res.iso = true;
        res.certificate = identity_map(x);
        return res;
    }
    // serial modules are determined by their words
    if (x.word && y.word && !(*x.word == *y.word))
        return res;
    HomBasis h = hom_basis(x, y);
    if (h.dim() == 0)
        return res;
    if (hom_dim(y, x) != h.dim())
        return res;
    for (const auto& g : h.elems) {
        if (map_is_invertible(x, y, g)) {
            res.iso = true;
            res.certificate = g;
            return res;
        }
    }
    // random combinations over growing coefficient ranges; over the rationals
    // the non-invertible locus is a proper closed subset
    std::mt19937_64 rng(0xfeed5);
    long range = 1;
    for (int trial = 0; trial < 20; ++trial) {
        if (trial % 5 == 4)
            range *= 2;
        std::uniform_int_distribution<long> coef(-range, range);
        RepMap g = zero_map(x, y);
        for (const auto& b : h.elems)
            g = map_add(g, map_scale(b, Scalar(coef(rng), x.alg->field)));
        if (map_is_invertible(x, y, g)) {
            res.iso = true;
            res.certificate = g;
            return res;
        }
    }
    res.uncertain = true;
    return res;
}

std::optional<Path> uniserial_word(const Representation& x) {
    if (x.total_dim() == 0)
        return std::nullopt;
    const Quiver& q = x.alg->quiver;
    FieldSpec f = x.alg->field;
    // radical filtration must have one-dimensional layers
    std::vector<RowSpace> cur;  // J^k X, per vertex
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        RowSpace rs(std::size_t(x.dims[v]), f);
        for (int j = 0; j < x.dims[v]; ++j) {
            Vec u(std::size_t(x.dims[v]), Scalar(f));
            u[std::size_t(j)] = Scalar::one(f);
            rs.add(std::move(u));
        }
        cur.push_back(std::move(rs));
    }
    auto total_rank = [&](const std::vector<RowSpace>& spaces) {
        std::size_t r = 0;
        for (const auto& s : spaces)
            r += s.rank();
        return r;
    };
    std::size_t prev = total_rank(cur);
    while (prev > 0) {
        std::vector<RowSpace> next;
        for (std::size_t v = 0; v < x.dims.size(); ++v)
            next.emplace_back(std::size_t(x.dims[v]), f);
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            std::size_t vs = std::size_t(q.arrows[a].src), ve = std::size_t(q.arrows[a].dst);
            for (const Vec& w : cur[vs].rows())
                next[ve].add(x.arrow_maps[a].apply(w));
        }
        std::size_t r = total_rank(next);
        if (r + 1 != prev)
            return std::nullopt;
        cur = std::move(next);
        prev = r;
    }
    // walk from a top generator along the unique nonzero arrow action
    Layers L = layers(x);
    int gen_vertex = -1;
    Vec gen;
    for (std::size_t v = 0; v < x.dims.size() && gen_vertex < 0; ++v) {
        RowSpace rad_v(std::size_t(x.dims[v]), f);
        for (std::size_t c = 0; c < L.radical.incl.comps[v].cols(); ++c)
            rad_v.add(L.radical.incl.comps[v].col(c));
        for (int j = 0; j < x.dims[v]; ++j) {
            Vec u(std::size_t(x.dims[v]), Scalar(f));
            u[std::size_t(j)] = Scalar::one(f);
            if (!rad_v.contains(u)) {
                gen_vertex = int(v);
                gen = std::move(u);
                break;
            }
        }
    }
    verify_internal(gen_vertex >= 0, "uniserial module without top generator");
    int start = gen_vertex;
    std::vector<int> collected;
    int vertex = gen_vertex;
    Vec curv = gen;
    for (int step = 0; step < x.total_dim(); ++step) {
        int chosen = -1;
        Vec img;
        for (int a : q.arrows_from(vertex)) {
            Vec w = x.arrow_maps[std::size_t(a)].apply(curv);
            if (vec_is_zero(w))
                continue;
            if (chosen >= 0)
                return std::nullopt;  // two arrows continue: not a single word
            chosen = a;
            img = std::move(w);
        }
        if (chosen < 0)
            break;
        collected.push_back(chosen);
        curv = std::move(img);
        vertex = q.arrows[std::size_t(chosen)].dst;
    }
    if (int(collected.size()) + 1 != x.total_dim())
        return std::nullopt;
    Path p;
    p.source = start;
    p.arrows.assign(collected.rbegin(), collected.rend());
    return p;
}

}  // namespace repdim
