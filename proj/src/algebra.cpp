#include "repdim/algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "repdim/errors.hpp"

namespace repdim {

namespace {

constexpr std::size_t kPathCap = 200000;

std::string key_of(const Path& p) {
    std::string k = std::to_string(p.source) + ":";
    for (int a : p.arrows) {
        k += std::to_string(a);
        k += ',';
    }
    return k;
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
    std::vector<Path> all;
    std::vector<Path> frontier;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        frontier.push_back(Path::trivial(int(v)));
    all = frontier;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier) {
            int head = p.target(q);
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != head)
                    continue;
                Path np;
                np.source = p.source;
                np.arrows.reserve(p.arrows.size() + 1);
                np.arrows.push_back(int(a));
                np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
                next.push_back(std::move(np));
            }
        }
        check(all.size() + next.size() <= kPathCap, ErrorCode::PathExplosion,
              "path enumeration exceeds cap; quiver too dense for the given bound");
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }
    std::sort(all.begin(), all.end(), [&q](const Path& a, const Path& b) { return path_less(q, a, b); });
    return all;
}

std::string PresentedAlgebra::path_key(const Path& p) const { return key_of(p); }

int PresentedAlgebra::basis_index(const Path& p) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == p)
            return int(i);
    return -1;
}

const Vec& PresentedAlgebra::path_normal_form(const Path& p) const {
    check(p.valid_in(quiver), ErrorCode::UnknownArrow, "path invalid in quiver");
    if (int(p.length()) >= bound)
        return zero_;
    auto it = nf_index_.find(key_of(p));
    check(it != nf_index_.end(), ErrorCode::VerificationFailed, "path missing from normal form table");
    return nf_[std::size_t(it->second)].second;
}

Vec PresentedAlgebra::normal_form(const std::vector<std::pair<Scalar, Path>>& combo) const {
    Vec r(static_cast<std::size_t>(dim()), Scalar(field));
    for (const auto& [c, p] : combo) {
        if (int(p.length()) >= bound)
            continue;
        const Vec& nf = path_normal_form(p);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!nf[i].is_zero())
                r[i] += c * nf[i];
    }
    return r;
}

Vec PresentedAlgebra::multiply(const Vec& x, const Vec& y) const {
    check(x.size() == std::size_t(dim()) && y.size() == std::size_t(dim()), ErrorCode::ShapeMismatch,
          "multiply: vector dimension mismatch");
    Vec r(static_cast<std::size_t>(dim()), Scalar(field));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero())
                continue;
            Scalar c = x[i] * y[j];
            for (const MultEntry& e : mult_table[i][j])
                r[std::size_t(e.idx)] += c * e.coeff;
        }
    }
    return r;
}

Vec PresentedAlgebra::multiply_basis(int i, int j, Scalar coeff) const {
    Vec r(static_cast<std::size_t>(dim()), Scalar(field));
    for (const MultEntry& e : mult_table[std::size_t(i)][std::size_t(j)])
        r[std::size_t(e.idx)] = coeff * e.coeff;
    return r;
}

Vec PresentedAlgebra::unit() const {
    Vec r(static_cast<std::size_t>(dim()), Scalar(field));
    for (int t : trivial_index_)
        r[std::size_t(t)] = Scalar::one(field);
    return r;
}

Vec PresentedAlgebra::basis_vec(int i) const {
    Vec r(static_cast<std::size_t>(dim()), Scalar(field));
    r[std::size_t(i)] = Scalar::one(field);
    return r;
}

std::vector<int> PresentedAlgebra::radical_basis() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!basis[i].is_trivial())
            r.push_back(int(i));
    return r;
}

std::vector<int> PresentedAlgebra::basis_from(int vertex) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].source == vertex)
            r.push_back(int(i));
    return r;
}

std::vector<int> PresentedAlgebra::basis_into(int vertex) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].target(quiver) == vertex)
            r.push_back(int(i));
    return r;
}

bool PresentedAlgebra::monomial_presentation() const {
    for (const auto& rel : relations)
        if (rel.terms.size() != 1)
            return false;
    return true;
}

PresentedAlgebra build_algebra(const Quiver& q, const std::vector<RelationExpr>& rels, int bound,
                               FieldSpec field) {
    q.validate();
    check(bound >= 2, ErrorCode::InvalidArgument, "nilpotency bound must be >= 2");

    for (const auto& rel : rels) {
        check(!rel.terms.empty(), ErrorCode::InvalidRelation, "empty relation");
        int src = rel.terms.front().path.source;
        int dst = rel.terms.front().path.target(q);
        for (const auto& t : rel.terms) {
            check(!t.coeff.is_zero(), ErrorCode::InvalidRelation, "zero coefficient in relation");
            check(t.path.valid_in(q), ErrorCode::UnknownArrow,
                  "relation path invalid: " + t.path.str(q));
            check(t.path.length() >= 2, ErrorCode::InvalidRelation,
                  "relation term of length < 2: " + t.path.str(q));
            check(t.path.source == src && t.path.target(q) == dst, ErrorCode::InvalidRelation,
                  "relation terms not parallel: " + rel.str(q));
        }
    }

    std::vector<Path> paths = enumerate_paths(q, bound);  // ascending order
    std::size_t total = paths.size();
    std::size_t low = 0;
    while (low < total && int(paths[low].length()) < bound)
        ++low;
    // ascending index of each path
    std::unordered_map<std::string, std::size_t> asc;
    asc.reserve(total * 2);
    for (std::size_t i = 0; i < total; ++i)
        asc[key_of(paths[i])] = i;

    // Columns in descending monomial order so the leftmost pivot is the
    // leading (largest) monomial of each ideal element.
    auto col_full = [&](std::size_t ai) { return total - 1 - ai; };
    auto col_low = [&](std::size_t ai) { return low - 1 - ai; };

    RowSpace acc_full(total, field);  // span of u r v truncated at length <= N
    RowSpace acc_low(low, field);     // the same span projected below N

    std::vector<std::vector<const Path*>> by_source(q.vertices.size()), by_target(q.vertices.size());
    for (const Path& p : paths)
        if (int(p.length()) <= bound - 2) {
            by_source[std::size_t(p.source)].push_back(&p);
            by_target[std::size_t(p.target(q))].push_back(&p);
        }

    for (const auto& rel : rels) {
        int sigma = rel.terms.front().path.source;
        int tau = rel.terms.front().path.target(q);
        std::size_t min_len = rel.terms.front().path.length();
        for (const auto& t : rel.terms)
            min_len = std::min(min_len, t.path.length());
        for (const Path* u : by_source[std::size_t(tau)]) {
            for (const Path* v : by_target[std::size_t(sigma)]) {
                if (u->length() + v->length() + min_len > std::size_t(bound))
                    continue;
                Vec gen_full(total, Scalar(field));
                Vec gen_low(low, Scalar(field));
                bool nonzero = false;
                for (const auto& t : rel.terms) {
                    std::size_t len = u->length() + t.path.length() + v->length();
                    if (len > std::size_t(bound))
                        continue;
                    Path w;
                    w.source = v->source;
                    w.arrows.reserve(len);
                    w.arrows.insert(w.arrows.end(), u->arrows.begin(), u->arrows.end());
                    w.arrows.insert(w.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
                    w.arrows.insert(w.arrows.end(), v->arrows.begin(), v->arrows.end());
                    std::size_t ai = asc.at(key_of(w));
                    gen_full[col_full(ai)] += t.coeff;
                    if (len < std::size_t(bound))
                        gen_low[col_low(ai)] += t.coeff;
                    nonzero = true;
                }
                if (!nonzero)
                    continue;
                acc_full.add(std::move(gen_full));
                acc_low.add(std::move(gen_low));
            }
        }
    }

    // Admissibility: each path of length N must lie in the ideal.
    for (std::size_t ai = low; ai < total; ++ai) {
        Vec unit(total, Scalar(field));
        unit[col_full(ai)] = Scalar::one(field);
        check(acc_full.contains(unit), ErrorCode::AdmissibilityViolated,
              "path of length " + std::to_string(bound) + " not in the ideal: " + paths[ai].str(q));
    }

    PresentedAlgebra alg;
    alg.quiver = q;
    alg.relations = rels;
    alg.bound = bound;
    alg.field = field;

    // Basis: standard monomials below the bound.
    std::vector<int> col_to_basis(low, -1);
    for (std::size_t ai = 0; ai < low; ++ai)
        if (!acc_low.has_pivot(col_low(ai)))
            alg.basis.push_back(paths[ai]);
    for (std::size_t b = 0; b < alg.basis.size(); ++b)
        col_to_basis[col_low(asc.at(key_of(alg.basis[b])))] = int(b);

    std::size_t d = alg.basis.size();
    alg.zero_ = Vec(d, Scalar(field));
    alg.trivial_index_.assign(q.vertices.size(), -1);
    for (std::size_t b = 0; b < d; ++b)
        if (alg.basis[b].is_trivial())
            alg.trivial_index_[std::size_t(alg.basis[b].source)] = int(b);
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        verify_internal(alg.trivial_index_[v] >= 0, "trivial path eliminated from basis");

    // Normal forms of all paths below the bound.
    alg.nf_.reserve(low);
    for (std::size_t ai = 0; ai < low; ++ai) {
        Vec unit(low, Scalar(field));
        unit[col_low(ai)] = Scalar::one(field);
        Vec red = acc_low.reduce(std::move(unit));
        Vec coords(d, Scalar(field));
        for (std::size_t c = 0; c < low; ++c) {
            if (red[c].is_zero())
                continue;
            verify_internal(col_to_basis[c] >= 0, "reduced vector supported on pivot column");
            coords[std::size_t(col_to_basis[c])] = red[c];
        }
        alg.nf_index_[key_of(paths[ai])] = int(alg.nf_.size());
        alg.nf_.emplace_back(paths[ai], std::move(coords));
    }

    // Multiplication table on basis pairs.
    alg.mult_table.assign(d, std::vector<std::vector<PresentedAlgebra::MultEntry>>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Path& p = alg.basis[i];
            const Path& pj = alg.basis[j];
            if (p.source != pj.target(q))
                continue;
            if (p.length() + pj.length() >= std::size_t(bound))
                continue;
            Path w = concat(p, pj, q);
            const Vec& nf = alg.nf_[std::size_t(alg.nf_index_.at(key_of(w)))].second;
            for (std::size_t k = 0; k < d; ++k)
                if (!nf[k].is_zero())
                    alg.mult_table[i][j].push_back({int(k), nf[k]});
        }
    }

    // Every supplied relation must reduce to zero.
    for (const auto& rel : rels) {
        std::vector<std::pair<Scalar, Path>> combo;
        for (const auto& t : rel.terms)
            combo.emplace_back(t.coeff, t.path);
        verify_internal(vec_is_zero(alg.normal_form(combo)), "relation has nonzero normal form");
    }

    return alg;
}

AlgebraPtr build_algebra_ptr(const Quiver& q, const std::vector<RelationExpr>& rels, int bound,
                             FieldSpec field) {
    return std::make_shared<PresentedAlgebra>(build_algebra(q, rels, bound, field));
}

std::vector<RelationExpr> canonicalize_relations(const Quiver& q,
                                                 const std::vector<RelationExpr>& rels,
                                                 FieldSpec field) {
    // group by parallel class (source, target)
    std::map<std::pair<int, int>, std::vector<const RelationExpr*>> classes;
    for (const auto& r : rels)
        classes[{r.terms.front().path.source, r.terms.front().path.target(q)}].push_back(&r);
    std::vector<RelationExpr> out;
    for (const auto& [key, group] : classes) {
        (void)key;
        std::vector<Path> cols;
        for (const RelationExpr* r : group)
            for (const auto& t : r->terms)
                if (std::find(cols.begin(), cols.end(), t.path) == cols.end())
                    cols.push_back(t.path);
        std::sort(cols.begin(), cols.end(),
                  [&](const Path& a, const Path& b) { return path_less(q, b, a); });  // descending
        RowSpace rs(cols.size(), field);
        for (const RelationExpr* r : group) {
            Vec v(cols.size(), Scalar(field));
            for (const auto& t : r->terms) {
                std::size_t c = std::size_t(
                    std::find(cols.begin(), cols.end(), t.path) - cols.begin());
                v[c] += t.coeff;
            }
            rs.add(std::move(v));
        }
        for (const Vec& row : rs.rows()) {
            RelationExpr r;
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!row[c].is_zero())
                    r.terms.push_back({row[c], cols[c]});
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace repdim
