#include "hjlab/hypergraphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hjlab {

namespace {

void check_q(int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
}

std::size_t checked_word_space(int m, std::size_t n, std::size_t budget) {
    const std::size_t total = pow_size(static_cast<std::size_t>(m), n);
    if (total > budget) {
        std::ostringstream os;
        os << "budget exceeded: " << m << "^" << n << " = " << total
           << " vertices > budget " << budget;
        throw std::runtime_error(os.str());
    }
    return total;
}

std::vector<std::vector<std::uint32_t>> finish_edges(
    std::set<std::vector<std::uint32_t>>&& edges) {
    return {edges.begin(), edges.end()};
}

}  // namespace

int k0_for(int q) {
    check_q(q);
    return 10 * q + 6;
}

std::size_t buffered_length_max(int q) {
    return 13 * static_cast<std::size_t>(k0_for(q)) + 4;
}

Hypergraph build_H(int m, std::size_t n, int q, std::size_t vertex_budget) {
    check_q(q);
    const std::size_t total = checked_word_space(m, n, vertex_budget);

    Hypergraph g;
    g.kind = Hypergraph::Kind::H;
    g.m = m;
    g.n = n;
    g.q = q;
    g.labels.reserve(total);
    for (std::size_t i = 0; i < total; ++i)
        g.labels.push_back(word_from_rank(i, m, n).str());

    std::set<std::vector<std::uint32_t>> edges;
    for_each_line(m, n, q, [&](const Line& l) {
        std::vector<std::uint32_t> e;
        e.reserve(static_cast<std::size_t>(m));
        for (int a = 1; a <= m; ++a)
            e.push_back(static_cast<std::uint32_t>(
                word_rank(substitute(l, static_cast<Letter>(a)))));
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() >= 2) edges.insert(std::move(e));
    });
    g.edges = finish_edges(std::move(edges));
    return g;
}

Hypergraph build_P(int m, std::size_t n, int q, PStrategy strategy,
                   std::size_t vertex_budget) {
    check_q(q);
    checked_word_space(m, n, vertex_budget);

    Hypergraph g;
    g.kind = Hypergraph::Kind::P;
    g.m = m;
    g.n = n;
    g.q = q;

    std::unordered_map<std::string, std::uint32_t> index;
    for_each_pattern(m, n, [&](const Pattern& p) {
        index.emplace(p.str(), static_cast<std::uint32_t>(g.labels.size()));
        g.labels.push_back(p.str());
    });

    std::set<std::vector<std::uint32_t>> edges;
    auto insert_members = [&](const std::vector<Pattern>& members) {
        std::vector<std::uint32_t> e;
        e.reserve(members.size());
        for (const Pattern& p : members) e.push_back(index.at(p.str()));
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.size() >= 2) edges.insert(std::move(e));
    };

    if (strategy == PStrategy::FromLines) {
        for_each_line(m, n, q, [&](const Line& l) {
            std::vector<Pattern> members;
            members.reserve(static_cast<std::size_t>(m));
            for (int a = 1; a <= m; ++a)
                members.push_back(contract(substitute(l, static_cast<Letter>(a))));
            insert_members(members);
        });
    } else {
        // Star patterns are the patterns over the extended alphabet where the
        // extra letter m+1 plays the star; adjacent-distinctness makes every
        // star its own run, so the run count is the star count.
        for_each_pattern(m + 1, n, [&](const Pattern& sp_raw) {
            int stars = 0;
            for (Letter c : sp_raw.letters())
                if (static_cast<int>(c) == m + 1) ++stars;
            if (stars == 0 || stars > q) return;
            std::vector<Letter> symbols(sp_raw.letters());
            for (Letter& c : symbols)
                if (static_cast<int>(c) == m + 1) c = kStar;
            StarPattern sp(std::move(symbols), m);
            insert_members(star_pattern_to_edge(sp, n, q).members);
        });
    }
    g.edges = finish_edges(std::move(edges));
    return g;
}

bool is_bufferable(const Pattern& core, int q) {
    check_q(q);
    if (core.alphabet() != 3) return false;
    if (core.size() > static_cast<std::size_t>(k0_for(q))) return false;
    return core[0] != 1 && core[core.size() - 1] != 2;
}

BufferedPattern make_buffered(const Pattern& core, int q) {
    if (core.alphabet() != 3)
        throw std::invalid_argument("buffered patterns live over the alphabet [3]");
    const int k0 = k0_for(q);
    if (core.size() > static_cast<std::size_t>(k0))
        throw std::invalid_argument("core longer than k0");
    if (core[0] == 1 || core[core.size() - 1] == 2)
        throw std::invalid_argument(
            "core not bufferable: needs first letter != 1 and last letter != 2");

    std::vector<Letter> full;
    full.reserve(buffered_length_max(q));
    full.push_back(1);
    full.insert(full.end(), core.letters().begin(), core.letters().end());
    auto rep = [&](Letter a, Letter b, int times) {
        for (int i = 0; i < times; ++i) {
            full.push_back(a);
            full.push_back(b);
        }
    };
    rep(2, 3, 2 * k0);
    rep(1, 3, 2 * k0);
    rep(2, 1, 2 * k0);
    full.push_back(2);
    full.push_back(3);
    full.push_back(1);

    return BufferedPattern{core, Pattern(std::move(full), 3), k0, q};
}

std::uint32_t c_vertex_index(const std::array<int, 3>& x, int q) {
    const int p = q + 1;
    for (int v : x)
        if (v < 0 || v >= p) throw std::invalid_argument("cube label out of range");
    return static_cast<std::uint32_t>((x[0] * p + x[1]) * p + x[2]);
}

std::array<int, 3> c_vertex_label(std::uint32_t index, int q) {
    const std::uint32_t p = static_cast<std::uint32_t>(q + 1);
    if (index >= p * p * p) throw std::invalid_argument("cube index out of range");
    return {static_cast<int>(index / (p * p)), static_cast<int>(index / p % p),
            static_cast<int>(index % p)};
}

namespace {

// Per-axis building blocks of the cube-edge witnesses: the starred unit,
// the letter triple, and the plain pair.
constexpr Letter kStarUnit[3][3] = {{2, kStar, 3}, {1, kStar, 3}, {2, kStar, 1}};
constexpr Letter kTriple[3][3] = {{2, 1, 3}, {1, 2, 3}, {2, 3, 1}};
constexpr Letter kPair[3][2] = {{2, 3}, {1, 3}, {2, 1}};

StarPattern c_witness(const CEdgeSpec& spec, int q) {
    const int mod = q + 1;
    const auto& x = spec.base;
    const auto& a = spec.offsets;

    int neg = -1;
    for (int i = 0; i < 3; ++i)
        if (a[i] < 0) neg = i;
    const int t = neg >= 0 ? -a[neg] : 0;

    std::vector<Letter> s;
    auto push = [&](const Letter* unit, int width, int times) {
        for (int i = 0; i < times; ++i)
            for (int j = 0; j < width; ++j) s.push_back(unit[j]);
    };
    // A block that collapses to a single letter under the substitution
    // star -> beta and to beta(alpha beta)^t under the other two.
    auto collapse_block = [&](Letter beta) {
        s.push_back(beta);
        for (int i = 0; i < t; ++i) {
            s.push_back(kStar);
            s.push_back(beta);
        }
    };

    for (int i = 0; i < 3; ++i) {
        if (neg == i && i == 0) collapse_block(1);
        if (neg == i && i == 1) collapse_block(2);
        int star_exp, tri_exp, pair_exp;
        if (i == neg) {
            star_exp = 0;
            tri_exp = x[i] + t - 1;
            pair_exp = q + 2 - x[i];
        } else {
            star_exp = a[i] - t;
            tri_exp = x[i];
            pair_exp = q + 1 - x[i] - a[i];
            if (pair_exp < 0) pair_exp += mod;  // uniform mod-(q+1) count shift
        }
        if (star_exp < 0 || tri_exp < 0 || pair_exp < 0)
            throw std::logic_error("cube witness exponent underflow");
        push(kStarUnit[i], 3, star_exp);
        push(kTriple[i], 3, tri_exp);
        push(kPair[i], 2, pair_exp);
        if (neg == i && i == 2) collapse_block(3);
    }
    return StarPattern(std::move(s), 3);
}

}  // namespace

CEdgeGenerator::CEdgeGenerator(int q) : q_(q), offsets_{-q, -q, -q} { check_q(q); }

bool CEdgeGenerator::admissible() const {
    const auto& a = offsets_;
    const int sum = a[0] + a[1] + a[2];
    if (sum <= 0 || sum > q_) return false;
    return a[0] + a[1] >= 0 && a[0] + a[2] >= 0 && a[1] + a[2] >= 0;
}

bool CEdgeGenerator::advance_offsets() {
    for (int k = 2; k >= 0; --k) {
        if (offsets_[k] < q_) {
            ++offsets_[k];
            for (int j = k + 1; j < 3; ++j) offsets_[j] = -q_;
            return true;
        }
    }
    // Offsets exhausted: move to the next base point.
    offsets_ = {-q_, -q_, -q_};
    for (int k = 2; k >= 0; --k) {
        if (base_[k] < q_) {
            ++base_[k];
            for (int j = k + 1; j < 3; ++j) base_[j] = 0;
            return true;
        }
    }
    return false;
}

std::optional<CGeneratedEdge> CEdgeGenerator::next() {
    if (done_) return std::nullopt;
    while (true) {
        if (fresh_) {
            fresh_ = false;
        } else if (!advance_offsets()) {
            done_ = true;
            return std::nullopt;
        }
        if (!admissible()) continue;

        const CEdgeSpec spec{base_, offsets_};
        const int mod = q_ + 1;
        std::array<std::array<int, 3>, 3> members;
        for (int i = 0; i < 3; ++i) {
            members[i] = base_;
            members[i][i] = ((base_[i] + offsets_[i]) % mod + mod) % mod;
        }
        CGeneratedEdge out{spec, c_witness(spec, q_), members};

        // The construction is only trusted after checking the reduced count
        // of every substitution against the intended edge member.
        Line l = out.witness.as_line();
        if (active_intervals(l) > q_)
            throw std::logic_error("cube witness has more than q star runs");
        for (int i = 0; i < 3; ++i) {
            std::vector<int> rc =
                reduced_count(contract(substitute(l, static_cast<Letter>(i + 1))), mod);
            if (!(rc[0] == out.members[i][0] && rc[1] == out.members[i][1] &&
                  rc[2] == out.members[i][2])) {
                std::ostringstream os;
                os << "cube witness self-check failed for base (" << base_[0] << ","
                   << base_[1] << "," << base_[2] << "), offsets (" << offsets_[0]
                   << "," << offsets_[1] << "," << offsets_[2] << "), substitution "
                   << i + 1;
                throw std::logic_error(os.str());
            }
        }
        return out;
    }
}

Hypergraph build_C(int q, std::size_t vertex_budget) {
    check_q(q);
    const std::size_t p = static_cast<std::size_t>(q) + 1;
    const std::size_t total = p * p * p;
    if (total > vertex_budget) {
        std::ostringstream os;
        os << "budget exceeded: (q+1)^3 = " << total << " vertices > budget "
           << vertex_budget;
        throw std::runtime_error(os.str());
    }

    Hypergraph g;
    g.kind = Hypergraph::Kind::C;
    g.m = 3;
    g.n = 0;
    g.q = q;
    g.labels.reserve(total);
    for (std::uint32_t i = 0; i < total; ++i) {
        const auto x = c_vertex_label(i, q);
        std::ostringstream os;
        os << x[0] << ',' << x[1] << ',' << x[2];
        g.labels.push_back(os.str());
    }

    std::set<std::vector<std::uint32_t>> edges;
    for_each_C_edge(q, [&](const CGeneratedEdge& e) {
        std::vector<std::uint32_t> idx;
        idx.reserve(3);
        for (const auto& v : e.members) idx.push_back(c_vertex_index(v, q));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.size() >= 2) edges.insert(std::move(idx));
    });
    g.edges = finish_edges(std::move(edges));
    return g;
}

std::vector<std::vector<std::uint32_t>> latin_cliques(int q) {
    check_q(q);
    const int p = q + 1;
    std::vector<std::vector<std::uint32_t>> cliques;
    cliques.reserve(3 * static_cast<std::size_t>(p) * p);
    for (int axis = 0; axis < 3; ++axis) {
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(p * p * p); ++i) {
            auto x = c_vertex_label(i, q);
            if (x[axis] != 0) continue;
            std::vector<std::uint32_t> clique;
            clique.reserve(static_cast<std::size_t>(p));
            for (int j = 0; j < p; ++j) {
                x[axis] = j;
                clique.push_back(c_vertex_index(x, q));
            }
            cliques.push_back(std::move(clique));
        }
    }
    return cliques;
}

}  // namespace hjlab
