#include "repdim/quiver.hpp"

#include <algorithm>
#include <set>

#include "repdim/errors.hpp"

namespace repdim {

int Quiver::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label)
            return int(i);
    return -1;
}

int Quiver::arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label)
            return int(i);
    return -1;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].src == v)
            r.push_back(int(i));
    return r;
}

std::vector<int> Quiver::arrows_into(int v) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].dst == v)
            r.push_back(int(i));
    return r;
}

void Quiver::validate() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        check(seen.insert(v).second, ErrorCode::DuplicateLabel, "duplicate vertex label: " + v);
    std::set<std::string> aseen;
    for (const auto& a : arrows) {
        check(aseen.insert(a.label).second, ErrorCode::DuplicateLabel,
              "duplicate arrow label: " + a.label);
        check(a.src >= 0 && a.src < int(vertices.size()) && a.dst >= 0 && a.dst < int(vertices.size()),
              ErrorCode::UnknownSymbol, "arrow endpoint out of range: " + a.label);
    }
}

bool Path::valid_in(const Quiver& q) const {
    if (source < 0 || source >= int(q.vertices.size()))
        return false;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i] < 0 || arrows[i] >= int(q.arrows.size()))
            return false;
        int s = q.arrows[std::size_t(arrows[i])].src;
        int next_end = (i + 1 < arrows.size()) ? q.arrows[std::size_t(arrows[i + 1])].dst : source;
        if (s != next_end)
            return false;
    }
    return true;
}

std::string Path::str(const Quiver& q) const {
    if (is_trivial())
        return "e_" + q.vertices[std::size_t(source)];
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i)
            s += "*";
        s += q.arrows[std::size_t(arrows[i])].label;
    }
    return s;
}

Path concat(const Path& p, const Path& q, const Quiver& qv) {
    check(p.source == q.target(qv), ErrorCode::ShapeMismatch, "paths not composable");
    Path r;
    r.source = q.source;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.is_trivial())
        return q.vertices[std::size_t(a.source)] < q.vertices[std::size_t(b.source)];
    for (std::size_t i = 0; i < a.length(); ++i) {
        const std::string& la = q.arrows[std::size_t(a.arrows[i])].label;
        const std::string& lb = q.arrows[std::size_t(b.arrows[i])].label;
        if (la != lb)
            return la < lb;
    }
    return false;
}

std::string RelationExpr::str(const Quiver& q) const {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            s += " + ";
        if (!terms[i].coeff.is_one())
            s += terms[i].coeff.str() + " ";
        s += terms[i].path.str(q);
    }
    return s;
}

}  // namespace repdim
