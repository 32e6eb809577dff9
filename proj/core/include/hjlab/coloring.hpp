#pragma once

#include "hjlab/hypergraphs.hpp"
#include "hjlab/lines.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hjlab {

/// A total assignment of colours 0..r-1 to a hypergraph's vertices.
struct Colouring {
    int r = 0;
    std::vector<int> assignment;
};

struct PropernessReport {
    bool proper = false;
    std::optional<std::size_t> violating_edge;  // first monochromatic edge
};

PropernessReport is_proper(const Hypergraph& g, const Colouring& chi);

enum class Verdict { Colourable, NotColourable, Inconclusive };

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct ColourCertificate {
    Verdict verdict = Verdict::Inconclusive;
    int r = 0;
    std::string digest;
    std::optional<Colouring> witness;  // present iff colourable
    SearchStats stats;
    std::string note;
};

struct SearchOptions {
    std::size_t vertex_budget = 216;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    bool clique_seeding = true;     // effective for cube hypergraphs only
};

/// Complete backtracking decision of r-colourability. Deterministic: static
/// vertex order by descending degree, colours tried in increasing order, new
/// colours introduced in order; for cube hypergraphs the first axis clique is
/// pre-assigned the colours 0..q. A budget overrun yields Inconclusive and is
/// never reported as uncolourable.
ColourCertificate exact_colourability(const Hypergraph& g, int r,
                                      const SearchOptions& options = {});

/// The colouring x -> c.x mod (q+1) over the cube's vertices.
Colouring functional_colouring(const std::array<int, 3>& c, int q);

/// All functionals c whose colouring is proper on build_C(q), in
/// lexicographic order of c.
std::vector<std::array<int, 3>> linear_colouring_search(int q);

/// Word colouring w -> f(reduced_count(contract(w))) over [3]^n.
DenseColouring lift_colouring(const Colouring& f, std::size_t n, int q,
                              std::size_t budget = kDefaultBuildBudget);

struct ColourMoveReport {
    std::uint64_t premises = 0;   // (x, axes, a, b) premises that held
    std::uint64_t points = 0;     // lattice points checked
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// For every base point, axis assignment and admissible (a, b): if x and
/// x - a e_ia + b e_ib share a colour, the whole generated lattice
/// x + s0(-(a+b)e_i0 - b e_ib) + s1(-a e_ia + b e_ib) must carry it.
ColourMoveReport check_colour_move(const Hypergraph& cube, const Colouring& chi, int q);

struct GcdObstructionReport {
    std::vector<int> j0_candidates;  // all j with chi(j e2) == chi(-e1)
    int j0 = -1;
    int gcd_j0 = 0;
    int gcd_j0_minus_1 = 0;
    std::size_t proj_a = 0, proj_b = 0, proj_0 = 0;
    bool projections_equal = false;
    bool lattice_monochromatic = false;
    bool matches_plus_formula = false;   // proj_0 == (q+1)/gcd(j0-1, q+1)
    bool matches_minus_formula = false;  // proj_0 == (q-1)/gcd(j0-1, q+1)
    bool ok = false;  // unique j0 != 0, both gcds 1, equal projections
};

/// Locates the unique j0 with chi(j0 e2) = chi(-e1), then audits the move
/// lattice for (a, b) = (-1, j0): projection sizes onto the three axes and
/// the gcd conditions gcd(j0, q+1) = gcd(j0-1, q+1) = 1.
GcdObstructionReport check_gcd_obstruction(const Hypergraph& cube,
                                           const Colouring& chi, int q);

/// CNF encoding of r-colourability: variables x_{v,c} = v*r + c + 1,
/// at-least-one and pairwise at-most-one per vertex, and one clause per
/// (edge, colour) forbidding a monochromatic edge.
std::string export_dimacs(const Hypergraph& g, int r);

}  // namespace hjlab
