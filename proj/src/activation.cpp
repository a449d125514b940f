#include "lhnet/activation.hpp"

#include <algorithm>
#include <set>

#include "lhnet/errors.hpp"

namespace lhnet {
namespace {

std::vector<Cell> sorted_unique(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

bool intersects(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    // Both lex-sorted.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else return true;
    }
    return false;
}

}  // namespace

bool Stalk::has(VertexId n) const {
    return n == kBottom || std::binary_search(members.begin(), members.end(), n);
}

std::vector<VertexId> Section::transmitters() const {
    std::vector<VertexId> out;
    for (const auto& [cell, value] : assignment)
        if (cell.size() == 1 && value == cell[0]) out.push_back(cell[0]);
    std::sort(out.begin(), out.end());
    return out;
}

Stalk stalk(const Complex& x, const Cell& c) {
    if (!x.contains(c)) throw not_in_complex("stalk: cell not in complex");
    std::set<VertexId> members;
    for (int k = static_cast<int>(c.size()) - 1; k <= x.dim(); ++k)
        for (const Cell& d : x.cells(k))
            if (is_face(c, d)) members.insert(d.begin(), d.end());
    return {c, {members.begin(), members.end()}};
}

VertexId restrict_value(const Complex& x, const Cell& c, const Cell& d, VertexId n) {
    if (!x.contains(c) || !x.contains(d) || !is_face(c, d))
        throw invalid_restriction("restriction requires a face pair within the complex");
    if (n == kBottom) return kBottom;
    return stalk(x, d).has(n) ? n : kBottom;
}

bool is_global_section(const Complex& x, const Section& s) {
    for (const Cell& c : x.all_cells())
        if (!s.assignment.count(c))
            throw incomplete_section("section missing an assignment for a cell of the complex");
    for (const Cell& c : x.all_cells())
        if (!stalk(x, c).has(s.assignment.at(c))) return false;
    // Codim-1 pairs suffice; restrictions compose.
    for (int k = 0; k < x.dim(); ++k) {
        for (const Cell& c : x.cells(k)) {
            const VertexId vc = s.assignment.at(c);
            for (const Cell& d : x.cells(k + 1)) {
                if (!is_face(c, d)) continue;
                if (restrict_value(x, c, d, vc) != s.assignment.at(d)) return false;
            }
        }
    }
    return true;
}

std::vector<Cell> active_region(const Complex& x, VertexId n) {
    const Cell v{n};
    if (!x.contains(v)) throw not_in_complex("active_region: unknown node");
    return sorted_unique(closure_cells(x.star({v})));
}

std::vector<Cell> region_of_influence(const Complex& x, const std::vector<Cell>& f) {
    std::vector<Cell> out;
    for (const Cell& c : f) {
        if (!x.contains(c)) throw not_in_complex("region_of_influence: cell not in complex");
        auto part = x.star(closure_cells({c}));
        out.insert(out.end(), part.begin(), part.end());
    }
    return sorted_unique(std::move(out));
}

Complex complement_complex(const Complex& x, const std::vector<Cell>& roi) {
    std::vector<Cell> roi_sorted = sorted_unique(roi);
    std::vector<Cell> rest;
    for (const Cell& c : x.all_cells())
        if (!std::binary_search(roi_sorted.begin(), roi_sorted.end(), c))
            rest.push_back(c);
    std::sort(rest.begin(), rest.end());
    for (const Cell& c : rest) {
        if (c.size() == 1) continue;
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Cell face;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) face.push_back(c[i]);
            if (!std::binary_search(rest.begin(), rest.end(), face))
                throw invariant_violation("complement of region of influence is not closed");
        }
    }
    if (rest.empty()) return Complex();
    return Complex::closure_of(rest);
}

std::vector<Section> enumerate_global_sections(const Complex& x, int cap) {
    const auto verts = x.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > cap)
        throw cap_exceeded("complex has " + std::to_string(n) +
                           " vertices, above the enumeration cap of " + std::to_string(cap));

    std::vector<std::vector<Cell>> region(n), influence(n);
    for (int i = 0; i < n; ++i) {
        region[i] = active_region(x, verts[i]);
        influence[i] = sorted_unique(x.star(region[i]));
    }
    std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            conflict[i][j] = conflict[j][i] =
                intersects(influence[i], region[j]) || intersects(influence[j], region[i]);

    // Transmitter sets are exactly the independent sets of the conflict
    // relation; recover each section's cell assignment from the active
    // regions of its transmitters.
    std::vector<std::vector<int>> chosen_sets;
    std::vector<int> current;
    auto extend = [&](auto&& self, int next) -> void {
        chosen_sets.push_back(current);
        for (int v = next; v < n; ++v) {
            bool ok = true;
            for (int u : current)
                if (conflict[u][v]) { ok = false; break; }
            if (!ok) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    std::sort(chosen_sets.begin(), chosen_sets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });

    const auto cells = x.all_cells();
    std::vector<Section> out;
    out.reserve(chosen_sets.size());
    for (const auto& set : chosen_sets) {
        Section s;
        for (const Cell& c : cells) s.assignment[c] = kBottom;
        for (int i : set)
            for (const Cell& c : region[i]) s.assignment[c] = verts[i];
        if (!is_global_section(x, s))
            throw invariant_violation("reconstructed assignment failed the section check");
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace lhnet
