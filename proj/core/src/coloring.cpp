#include "hjlab/coloring.hpp"

#include "hjlab/serialize.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hjlab {

namespace {

void check_total(const Hypergraph& g, const Colouring& chi) {
    if (chi.r < 1) throw std::invalid_argument("colour count must be >= 1");
    if (chi.assignment.size() != g.vertex_count())
        throw std::invalid_argument("colouring is not total on the vertex set");
    for (int c : chi.assignment)
        if (c < 0 || c >= chi.r)
            throw std::invalid_argument("colour index out of range");
}

}  // namespace

PropernessReport is_proper(const Hypergraph& g, const Colouring& chi) {
    check_total(g, chi);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        const int c0 = chi.assignment[edge.front()];
        bool mono = true;
        for (std::uint32_t v : edge) {
            if (chi.assignment[v] != c0) {
                mono = false;
                break;
            }
        }
        if (mono) return {false, e};
    }
    return {true, std::nullopt};
}

namespace {

struct Searcher {
    const Hypergraph& g;
    int r;
    const SearchOptions& opt;

    std::vector<std::vector<std::uint32_t>> incident;  // edge ids per vertex
    std::vector<int> colour;
    std::vector<std::uint32_t> forbidden;  // bitmask per vertex
    std::vector<std::pair<std::uint32_t, std::uint32_t>> trail;  // (vertex, bit)
    std::vector<std::uint32_t> order;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    Searcher(const Hypergraph& graph, int colours, const SearchOptions& options)
        : g(graph), r(colours), opt(options) {
        const std::size_t v_count = g.vertex_count();
        incident.resize(v_count);
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            for (std::uint32_t v : g.edges[e])
                incident[v].push_back(static_cast<std::uint32_t>(e));
        colour.assign(v_count, -1);
        forbidden.assign(v_count, 0);
    }

    bool completes_monochrome(std::uint32_t v, int c) const {
        for (std::uint32_t e : incident[v]) {
            bool mono = true;
            for (std::uint32_t u : g.edges[e]) {
                if (u == v) continue;
                if (colour[u] != c) {
                    mono = false;
                    break;
                }
            }
            if (mono) return true;
        }
        return false;
    }

    // Forward checking: after colouring v with c, forbid forced colours on
    // the single unassigned vertex of any almost-monochromatic edge.
    bool propagate(std::uint32_t v, int c) {
        for (std::uint32_t e : incident[v]) {
            std::uint32_t unassigned = UINT32_MAX;
            bool all_c = true;
            for (std::uint32_t u : g.edges[e]) {
                if (colour[u] == -1) {
                    if (unassigned != UINT32_MAX) {
                        all_c = false;
                        break;
                    }
                    unassigned = u;
                } else if (colour[u] != c) {
                    all_c = false;
                    break;
                }
            }
            if (!all_c || unassigned == UINT32_MAX) continue;
            const std::uint32_t bit = 1u << c;
            if (forbidden[unassigned] & bit) continue;
            forbidden[unassigned] |= bit;
            trail.emplace_back(unassigned, bit);
            if (std::popcount(forbidden[unassigned]) >= r) return false;
        }
        return true;
    }

    void rollback(std::size_t mark) {
        while (trail.size() > mark) {
            auto [v, bit] = trail.back();
            trail.pop_back();
            forbidden[v] &= ~bit;
        }
    }

    bool dfs(std::size_t pos, int max_used) {
        if (pos == order.size()) return true;
        const std::uint32_t v = order[pos];
        const int cap = std::min(r - 1, max_used + 1);
        for (int c = 0; c <= cap; ++c) {
            if (forbidden[v] & (1u << c)) continue;
            if (completes_monochrome(v, c)) continue;
            if (opt.node_budget && nodes >= opt.node_budget) {
                budget_hit = true;
                return false;
            }
            ++nodes;
            colour[v] = c;
            const std::size_t mark = trail.size();
            if (propagate(v, c) && dfs(pos + 1, std::max(max_used, c))) return true;
            rollback(mark);
            colour[v] = -1;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

ColourCertificate exact_colourability(const Hypergraph& g, int r,
                                      const SearchOptions& options) {
    if (r < 1) throw std::invalid_argument("colour count must be >= 1");
    if (r > 30) throw std::invalid_argument("colour count above solver limit (30)");

    ColourCertificate cert;
    cert.r = r;
    cert.digest = hypergraph_digest(g);

    if (g.vertex_count() > options.vertex_budget) {
        cert.verdict = Verdict::Inconclusive;
        std::ostringstream os;
        os << "vertex budget exceeded: " << g.vertex_count() << " > "
           << options.vertex_budget;
        cert.note = os.str();
        return cert;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Searcher s(g, r, options);

    // Symmetry-breaking seed for cube hypergraphs: the first axis clique is
    // rainbow in any proper colouring, so its colours can be fixed to 0..q.
    std::vector<std::uint32_t> seed;
    if (g.kind == Hypergraph::Kind::C && options.clique_seeding &&
        g.vertex_count() >= static_cast<std::size_t>(g.q) + 1) {
        std::set<std::vector<std::uint32_t>> pair_edges;
        for (const auto& e : g.edges)
            if (e.size() == 2) pair_edges.insert(e);
        bool clique_ok = true;
        for (std::uint32_t i = 0; clique_ok && i <= static_cast<std::uint32_t>(g.q); ++i)
            for (std::uint32_t j = i + 1; clique_ok && j <= static_cast<std::uint32_t>(g.q); ++j)
                clique_ok = pair_edges.contains({i, j});
        if (clique_ok) {
            if (r < g.q + 1) {
                cert.verdict = Verdict::NotColourable;
                cert.note = "axis clique exceeds the colour count";
                cert.stats.seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
                return cert;
            }
            for (int i = 0; i <= g.q; ++i) seed.push_back(static_cast<std::uint32_t>(i));
        }
    }

    std::vector<std::uint32_t> rest(g.vertex_count());
    std::iota(rest.begin(), rest.end(), 0u);
    std::stable_sort(rest.begin(), rest.end(), [&](std::uint32_t a, std::uint32_t b) {
        return s.incident[a].size() > s.incident[b].size();
    });
    s.order = seed;
    for (std::uint32_t v : rest)
        if (std::find(seed.begin(), seed.end(), v) == seed.end()) s.order.push_back(v);

    int max_used = -1;
    bool seed_consistent = true;
    for (std::size_t i = 0; i < seed.size(); ++i) {
        const std::uint32_t v = seed[i];
        const int c = static_cast<int>(i);
        if ((s.forbidden[v] & (1u << c)) || s.completes_monochrome(v, c) ) {
            seed_consistent = false;
            break;
        }
        s.colour[v] = c;
        if (!s.propagate(v, c)) {
            seed_consistent = false;
            break;
        }
        max_used = c;
    }

    bool found = seed_consistent && s.dfs(seed.size(), max_used);
    cert.stats.nodes = s.nodes;
    cert.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (found) {
        cert.verdict = Verdict::Colourable;
        cert.witness = Colouring{r, s.colour};
        if (!is_proper(g, *cert.witness).proper)
            throw std::logic_error("search returned an improper witness");
    } else if (s.budget_hit) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = "node budget exhausted";
    } else {
        cert.verdict = Verdict::NotColourable;
    }
    return cert;
}

Colouring functional_colouring(const std::array<int, 3>& c, int q) {
    const int mod = q + 1;
    const std::size_t total = static_cast<std::size_t>(mod) * mod * mod;
    Colouring chi;
    chi.r = mod;
    chi.assignment.reserve(total);
    for (std::uint32_t i = 0; i < total; ++i) {
        const auto x = c_vertex_label(i, q);
        int v = 0;
        for (int k = 0; k < 3; ++k) v += c[k] * x[k];
        chi.assignment.push_back(((v % mod) + mod) % mod);
    }
    return chi;
}

std::vector<std::array<int, 3>> linear_colouring_search(int q) {
    const Hypergraph cube = build_C(q);
    const int mod = q + 1;
    std::vector<std::array<int, 3>> proper;
    for (int c1 = 0; c1 < mod; ++c1)
        for (int c2 = 0; c2 < mod; ++c2)
            for (int c3 = 0; c3 < mod; ++c3) {
                const std::array<int, 3> c{c1, c2, c3};
                if (is_proper(cube, functional_colouring(c, q)).proper)
                    proper.push_back(c);
            }
    return proper;
}

DenseColouring lift_colouring(const Colouring& f, std::size_t n, int q,
                              std::size_t budget) {
    const int mod = q + 1;
    const std::size_t cube = static_cast<std::size_t>(mod) * mod * mod;
    if (f.assignment.size() != cube)
        throw std::invalid_argument("colouring is not total on Z_{q+1}^3");
    const std::size_t total = pow_size(3, n);
    if (total > budget) throw std::runtime_error("budget exceeded: 3^n too large");

    DenseColouring out;
    out.m = 3;
    out.n = n;
    out.r = f.r;
    out.values.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        const Word w = word_from_rank(i, 3, n);
        const std::vector<int> rc = reduced_count(contract(w), mod);
        const std::uint32_t idx = c_vertex_index({rc[0], rc[1], rc[2]}, q);
        out.values.push_back(static_cast<std::uint8_t>(f.assignment[idx]));
    }
    return out;
}

namespace {

std::array<int, 3> mod_add(std::array<int, 3> x, const std::array<int, 3>& d, int mod) {
    for (int i = 0; i < 3; ++i) x[i] = ((x[i] + d[i]) % mod + mod) % mod;
    return x;
}

void check_cube(const Hypergraph& g, int q) {
    const std::size_t p = static_cast<std::size_t>(q) + 1;
    if (g.kind != Hypergraph::Kind::C || g.q != q || g.vertex_count() != p * p * p)
        throw std::invalid_argument("expected the cube hypergraph for this q");
}

}  // namespace

ColourMoveReport check_colour_move(const Hypergraph& cube, const Colouring& chi, int q) {
    check_cube(cube, q);
    if (!is_proper(cube, chi).proper)
        throw std::invalid_argument("colouring is not proper on the cube");

    const int mod = q + 1;
    ColourMoveReport report;
    constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::uint32_t xi = 0; xi < cube.vertex_count(); ++xi) {
        const auto x = c_vertex_label(xi, q);
        const int colour_x = chi.assignment[xi];
        for (const auto& perm : kPerms) {
            const int ia = perm[0], ib = perm[1], i0 = perm[2];
            for (int b = 0; b <= q; ++b) {
                for (int a = -b; a <= b; ++a) {
                    if (std::max(b, a + b) > q) continue;
                    std::array<int, 3> step1{0, 0, 0};  // -a e_ia + b e_ib
                    step1[ia] -= a;
                    step1[ib] += b;
                    const auto y = mod_add(x, step1, mod);
                    if (chi.assignment[c_vertex_index(y, q)] != colour_x) continue;
                    ++report.premises;
                    std::array<int, 3> step0{0, 0, 0};  // -(a+b) e_i0 - b e_ib
                    step0[i0] -= a + b;
                    step0[ib] -= b;
                    for (int s0 = 0; s0 < mod; ++s0) {
                        for (int s1 = 0; s1 < mod; ++s1) {
                            std::array<int, 3> p = x;
                            for (int t = 0; t < s0; ++t) p = mod_add(p, step0, mod);
                            for (int t = 0; t < s1; ++t) p = mod_add(p, step1, mod);
                            ++report.points;
                            if (chi.assignment[c_vertex_index(p, q)] != colour_x) {
                                std::ostringstream os;
                                os << "lattice point (" << p[0] << "," << p[1] << ","
                                   << p[2] << ") breaks colour of (" << x[0] << ","
                                   << x[1] << "," << x[2] << ") with a=" << a
                                   << " b=" << b << " axes=(" << ia + 1 << ","
                                   << ib + 1 << "," << i0 + 1 << ") s0=" << s0
                                   << " s1=" << s1;
                                report.violations.push_back(os.str());
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

GcdObstructionReport check_gcd_obstruction(const Hypergraph& cube,
                                           const Colouring& chi, int q) {
    check_cube(cube, q);
    if (!is_proper(cube, chi).proper)
        throw std::invalid_argument("colouring is not proper on the cube");

    const int mod = q + 1;
    GcdObstructionReport rep;
    const std::array<int, 3> minus_e1{mod - 1, 0, 0};
    const int target = chi.assignment[c_vertex_index(minus_e1, q)];
    for (int j = 0; j <= q; ++j) {
        if (chi.assignment[c_vertex_index({0, j, 0}, q)] == target)
            rep.j0_candidates.push_back(j);
    }
    if (rep.j0_candidates.size() != 1 || rep.j0_candidates.front() == 0) {
        rep.ok = false;
        return rep;
    }
    rep.j0 = rep.j0_candidates.front();
    rep.gcd_j0 = std::gcd(rep.j0, mod);
    rep.gcd_j0_minus_1 = std::gcd(rep.j0 - 1, mod);

    // Move lattice for a = -1, b = j0, axes (i_a, i_b, i_0) = (1, 2, 3),
    // based at -e1.
    const int a = -1, b = rep.j0;
    std::array<int, 3> step0{0, 0, 0};
    step0[2] -= a + b;
    step0[1] -= b;
    std::array<int, 3> step1{0, 0, 0};
    step1[0] -= a;
    step1[1] += b;

    std::set<int> proj[3];
    rep.lattice_monochromatic = true;
    for (int s0 = 0; s0 < mod; ++s0) {
        for (int s1 = 0; s1 < mod; ++s1) {
            std::array<int, 3> p = minus_e1;
            for (int t = 0; t < s0; ++t) p = mod_add(p, step0, mod);
            for (int t = 0; t < s1; ++t) p = mod_add(p, step1, mod);
            for (int k = 0; k < 3; ++k) proj[k].insert(p[k]);
            if (chi.assignment[c_vertex_index(p, q)] != target)
                rep.lattice_monochromatic = false;
        }
    }
    rep.proj_a = proj[0].size();
    rep.proj_b = proj[1].size();
    rep.proj_0 = proj[2].size();
    rep.projections_equal = rep.proj_a == rep.proj_b && rep.proj_b == rep.proj_0;
    rep.matches_plus_formula =
        rep.proj_0 == static_cast<std::size_t>((q + 1) / rep.gcd_j0_minus_1);
    rep.matches_minus_formula =
        rep.gcd_j0_minus_1 != 0 &&
        rep.proj_0 == static_cast<std::size_t>((q - 1) / rep.gcd_j0_minus_1);
    rep.ok = rep.gcd_j0 == 1 && rep.gcd_j0_minus_1 == 1 && rep.projections_equal &&
             rep.lattice_monochromatic;
    return rep;
}

std::string export_dimacs(const Hypergraph& g, int r) {
    if (r < 1) throw std::invalid_argument("colour count must be >= 1");
    const std::size_t v_count = g.vertex_count();
    const std::size_t vars = v_count * static_cast<std::size_t>(r);
    const std::size_t clauses =
        v_count + v_count * static_cast<std::size_t>(r) * (r - 1) / 2 +
        g.edges.size() * static_cast<std::size_t>(r);

    auto var = [r](std::size_t v, int c) {
        return v * static_cast<std::size_t>(r) + static_cast<std::size_t>(c) + 1;
    };

    std::ostringstream os;
    os << "c hjlab colourability encoding\n";
    os << "c kind=" << (g.kind == Hypergraph::Kind::H   ? "H"
                        : g.kind == Hypergraph::Kind::P ? "P"
                                                        : "C")
       << " m=" << g.m << " n=" << g.n << " q=" << g.q << " r=" << r << "\n";
    os << "c digest=" << hypergraph_digest(g) << "\n";
    os << "c var(v,c) = v*r + c + 1 with v, c zero-based\n";
    os << "p cnf " << vars << ' ' << clauses << "\n";
    for (std::size_t v = 0; v < v_count; ++v) {
        for (int c = 0; c < r; ++c) os << var(v, c) << ' ';
        os << "0\n";
    }
    for (std::size_t v = 0; v < v_count; ++v)
        for (int c1 = 0; c1 < r; ++c1)
            for (int c2 = c1 + 1; c2 < r; ++c2)
                os << '-' << var(v, c1) << " -" << var(v, c2) << " 0\n";
    for (const auto& e : g.edges) {
        for (int c = 0; c < r; ++c) {
            for (std::uint32_t v : e) os << '-' << var(v, c) << ' ';
            os << "0\n";
        }
    }
    return os.str();
}

}  // namespace hjlab
