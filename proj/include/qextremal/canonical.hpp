#ifndef QEXTREMAL_CANONICAL_HPP
#define QEXTREMAL_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qextremal/graph.hpp"

namespace qext {

// Labeling-invariant encoding: byte 0 holds the order, the rest pack the
// upper-triangle bits of the canonically relabeled graph (column-major, MSB
// first). Equal bytes <=> isomorphic graphs.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(bytes.size() * 2);
        for (std::uint8_t b : bytes) {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 15]);
        }
        return out;
    }
};

struct CanonicalAnalysis {
    CanonicalForm form;
    Graph canonical_graph = single_vertex();        // the graph relabeled canonically
    std::vector<int> canonical_labeling;            // vertex -> canonical position
    std::vector<std::vector<int>> minimal_labelings;  // every labeling that attains the form
    std::vector<int> orbit;                         // vertex -> smallest vertex in its Aut-orbit
    std::uint64_t automorphism_count = 0;           // == minimal_labelings.size()
};

namespace detail {

// Ordered partition of the vertex set. Refinement splits cells by neighbor
// counts against every current cell; sub-cells are ordered by their count
// signature, so the evolution depends only on the isomorphism class plus the
// individualization choices made so far.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
        words_per_string_ = (static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 63) / 64;
    }

    void run() {
        std::vector<int> all(static_cast<std::size_t>(n_));
        std::iota(all.begin(), all.end(), 0);
        dfs({all});
    }

    std::vector<std::uint64_t> best_words;
    std::vector<std::vector<int>> best_labelings;

private:
    using Cells = std::vector<std::vector<int>>;

    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<VertexSet> masks(cells.size(), 0);
            for (std::size_t i = 0; i < cells.size(); ++i)
                for (int v : cells[i]) masks[i] |= vs_bit(v);
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() < 2) continue;
                // Signature of v = counts of neighbors inside each cell.
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cells[ci].size());
                for (int v : cells[ci]) {
                    std::vector<int> sig(cells.size());
                    for (std::size_t cj = 0; cj < cells.size(); ++cj)
                        sig[cj] = vs_size(g_.row(v) & masks[cj]);
                    keyed.emplace_back(std::move(sig), v);
                }
                bool uniform = std::all_of(keyed.begin(), keyed.end(),
                                           [&](const auto& kv) { return kv.first == keyed[0].first; });
                if (uniform) continue;
                std::sort(keyed.begin(), keyed.end());
                Cells rebuilt;
                rebuilt.reserve(cells.size() + 1);
                for (std::size_t cj = 0; cj < ci; ++cj) rebuilt.push_back(std::move(cells[cj]));
                std::vector<int> group{keyed[0].second};
                for (std::size_t k = 1; k < keyed.size(); ++k) {
                    if (keyed[k].first != keyed[k - 1].first) {
                        rebuilt.push_back(std::move(group));
                        group.clear();
                    }
                    group.push_back(keyed[k].second);
                }
                rebuilt.push_back(std::move(group));
                for (std::size_t cj = ci + 1; cj < cells.size(); ++cj) rebuilt.push_back(std::move(cells[cj]));
                cells = std::move(rebuilt);
                changed = true;
                break;
            }
        }
    }

    void dfs(Cells cells) {
        refine(cells);
        std::size_t branch_cell = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                branch_cell = i;
                break;
            }
        if (branch_cell == cells.size()) {
            record_leaf(cells);
            return;
        }
        // Branch over every vertex of the first non-singleton cell; exploring
        // all choices keeps the minimum exact and collects every tie.
        for (int v : cells[branch_cell]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < branch_cell; ++i) child.push_back(cells[i]);
            child.push_back({v});
            std::vector<int> rest;
            for (int u : cells[branch_cell])
                if (u != v) rest.push_back(u);
            child.push_back(std::move(rest));
            for (std::size_t i = branch_cell + 1; i < cells.size(); ++i) child.push_back(cells[i]);
            dfs(std::move(child));
        }
    }

    void record_leaf(const Cells& cells) {
        std::vector<int> at_position(static_cast<std::size_t>(n_));
        std::vector<int> position(static_cast<std::size_t>(n_));
        int p = 0;
        for (const auto& cell : cells)
            for (int v : cell) {
                at_position[static_cast<std::size_t>(p)] = v;
                position[static_cast<std::size_t>(v)] = p;
                ++p;
            }
        std::vector<std::uint64_t> words(words_per_string_, 0);
        std::size_t bit = 0;
        for (int col = 1; col < n_; ++col) {
            VertexSet crow = g_.row(at_position[static_cast<std::size_t>(col)]);
            for (int row = 0; row < col; ++row, ++bit) {
                if (vs_contains(crow, at_position[static_cast<std::size_t>(row)]))
                    words[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
            }
        }
        if (best_labelings.empty() || words < best_words) {
            best_words = std::move(words);
            best_labelings.clear();
            best_labelings.push_back(std::move(position));
        } else if (words == best_words) {
            best_labelings.push_back(std::move(position));
        }
    }

    const Graph& g_;
    int n_;
    std::size_t words_per_string_;
};

inline CanonicalForm pack_form(int n, const std::vector<std::uint64_t>& words) {
    CanonicalForm form;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    form.bytes.reserve(1 + (nbits + 7) / 8);
    form.bytes.push_back(static_cast<std::uint8_t>(n));
    for (std::size_t byte = 0; byte * 8 < nbits; ++byte) {
        std::size_t bit = byte * 8;  // always a multiple of 8, so never straddles a word
        form.bytes.push_back(static_cast<std::uint8_t>((words[bit / 64] >> (56 - bit % 64)) & 0xff));
    }
    return form;
}

}  // namespace detail

// Exact canonical analysis by iterated refinement plus full backtracking over
// discrete refinements, keeping the lexicographically smallest adjacency
// bit-string and every labeling that attains it. The tied labelings give the
// automorphism group, hence the vertex orbits.
inline CanonicalAnalysis canonical_analysis(const Graph& g) {
    detail::CanonSearch search(g);
    search.run();
    int n = g.vertex_count();

    CanonicalAnalysis out;
    out.form = detail::pack_form(n, search.best_words);
    out.minimal_labelings = std::move(search.best_labelings);
    out.canonical_labeling = out.minimal_labelings.front();
    out.canonical_graph = g.permuted(out.canonical_labeling);
    out.automorphism_count = out.minimal_labelings.size();

    // Vertices landing on a common canonical position across tied labelings
    // form one Aut-orbit; union over positions.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    std::vector<int> inv0(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv0[static_cast<std::size_t>(out.canonical_labeling[static_cast<std::size_t>(v)])] = v;
    for (const auto& lab : out.minimal_labelings) {
        for (int v = 0; v < n; ++v) {
            int mate = inv0[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])];
            int a = find(v), b = find(mate);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    out.orbit.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.orbit[static_cast<std::size_t>(v)] = find(v);
    return out;
}

inline CanonicalForm canonical_form(const Graph& g) {
    detail::CanonSearch search(g);
    search.run();
    return detail::pack_form(g.vertex_count(), search.best_words);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace qext

#endif
