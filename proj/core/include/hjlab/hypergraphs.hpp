#pragma once

#include "hjlab/lines.hpp"
#include "hjlab/words.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hjlab {

/// Default cap on m^n for the word-level builders.
inline constexpr std::size_t kDefaultBuildBudget = 4782969;  // 3^14
/// Default cap on (q+1)^3 for the cube builder (q <= 6).
inline constexpr std::size_t kDefaultCubeBudget = 343;

struct Hypergraph {
    enum class Kind { H, P, C };

    Kind kind = Kind::H;
    int m = 0;
    std::size_t n = 0;
    int q = 0;
    std::vector<std::string> labels;                  // canonical label per vertex
    std::vector<std::vector<std::uint32_t>> edges;    // each sorted; list sorted

    std::size_t vertex_count() const { return labels.size(); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Buffer-length parameter: k0(q) = 10q + 6.
int k0_for(int q);

/// Maximum length of a buffered pattern under literal repetition: 13*k0 + 4.
std::size_t buffered_length_max(int q);

/// Word hypergraph: vertices [m]^n in base-m order, one edge per q-fold line.
Hypergraph build_H(int m, std::size_t n, int q,
                   std::size_t vertex_budget = kDefaultBuildBudget);

enum class PStrategy {
    FromLines,         // contract the edges of the word hypergraph
    FromStarPatterns,  // generate edges directly from star patterns
};

/// Pattern hypergraph: vertices are the patterns of length <= n in
/// length-lexicographic order; edges are line edges identified under
/// contraction. Both strategies produce the same hypergraph.
Hypergraph build_P(int m, std::size_t n, int q,
                   PStrategy strategy = PStrategy::FromStarPatterns,
                   std::size_t vertex_budget = kDefaultBuildBudget);

/// A core x (over [3], |x| <= k0, x_1 != 1, x_last != 2) together with its
/// buffered form 1 x (23)^{2k0} (13)^{2k0} (21)^{2k0} 231.
struct BufferedPattern {
    Pattern core;
    Pattern full;
    int k0 = 0;
    int q = 0;
};

bool is_bufferable(const Pattern& core, int q);
BufferedPattern make_buffered(const Pattern& core, int q);

/// Base point and axis offsets of a cube hyperedge:
/// 0 < a1+a2+a3 <= q and ai+aj >= 0 for i != j.
struct CEdgeSpec {
    std::array<int, 3> base;
    std::array<int, 3> offsets;
};

struct CGeneratedEdge {
    CEdgeSpec spec;
    StarPattern witness;
    std::array<std::array<int, 3>, 3> members;  // (base + offsets[i] e_i) mod q+1
};

/// Streams every admissible (base, offsets) spec together with its witness
/// star pattern. Each emitted edge is self-checked: the reduced count of
/// contract(witness[i]) must equal members[i-1] for i in {1,2,3}; a mismatch
/// aborts with std::logic_error.
class CEdgeGenerator {
public:
    explicit CEdgeGenerator(int q);
    std::optional<CGeneratedEdge> next();

private:
    bool advance_offsets();
    bool admissible() const;

    int q_;
    std::array<int, 3> base_{0, 0, 0};
    std::array<int, 3> offsets_;
    bool fresh_ = true;
    bool done_ = false;
};

template <class F>
void for_each_C_edge(int q, F&& f) {
    CEdgeGenerator g(q);
    while (auto e = g.next()) f(*e);
}

/// Cube hypergraph on Z_{q+1}^3: all (q+1)^3 vertices in lexicographic label
/// order, edges generated by CEdgeGenerator (deduplicated).
Hypergraph build_C(int q, std::size_t vertex_budget = kDefaultCubeBudget);

/// Axis cliques {x, x+e_i, ..., x+q e_i}: one per axis and coset, i.e.
/// 3*(q+1)^2 cliques, each listed as ascending vertex indices.
std::vector<std::vector<std::uint32_t>> latin_cliques(int q);

std::uint32_t c_vertex_index(const std::array<int, 3>& x, int q);
std::array<int, 3> c_vertex_label(std::uint32_t index, int q);

}  // namespace hjlab
