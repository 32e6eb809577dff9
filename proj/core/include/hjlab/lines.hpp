#pragma once

#include "hjlab/words.hpp"

#include <iosfwd>
#include <istream>
#include <optional>

namespace hjlab {

/// The wildcard symbol of a combinatorial line, serialized as '*'.
inline constexpr Letter kStar = 0;

/// A word over {1..m} u {*} containing at least one star. Substituting a
/// letter for every star yields the m words of the combinatorial line.
class Line {
public:
    Line(std::vector<Letter> symbols, int alphabet);
    static Line parse(std::string_view text, int alphabet);

    const std::vector<Letter>& symbols() const noexcept { return symbols_; }
    int alphabet() const noexcept { return m_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    Letter operator[](std::size_t i) const { return symbols_[i]; }

    std::string str() const;

    friend bool operator==(const Line&, const Line&) = default;

private:
    std::vector<Letter> symbols_;
    int m_;
};

std::ostream& operator<<(std::ostream&, const Line&);

/// A line equal to its own star-contraction: no equal adjacent symbols,
/// where runs of stars contract as well.
class StarPattern {
public:
    StarPattern(std::vector<Letter> symbols, int alphabet);
    static StarPattern parse(std::string_view text, int alphabet);

    const std::vector<Letter>& symbols() const noexcept { return symbols_; }
    int alphabet() const noexcept { return m_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    Letter operator[](std::size_t i) const { return symbols_[i]; }

    Line as_line() const { return Line(symbols_, m_); }
    std::string str() const;

    friend bool operator==(const StarPattern&, const StarPattern&) = default;

private:
    std::vector<Letter> symbols_;
    int m_;
};

std::ostream& operator<<(std::ostream&, const StarPattern&);

/// The word l[alpha]: every star replaced by `alpha`.
Word substitute(const Line& l, Letter alpha);

/// Number of maximal runs of consecutive star positions (>= 1).
int active_intervals(const Line& l);

/// True iff the active coordinates form at most q intervals.
bool is_q_fold(const Line& l, int q);

/// Run-contraction of `l`, treating the star as an ordinary extra letter.
StarPattern contract_star(const Line& l);

/// Extends a star pattern to a line of length n by repeating its last
/// symbol; the result star-contracts back to the input.
Line extend_to_length(const StarPattern& sp, std::size_t n);

/// Enumerates the q-fold lines of [m]^n exactly once, in lexicographic
/// order with the star sorted after the letter m.
class LineEnumerator {
public:
    LineEnumerator(int alphabet, std::size_t length, int q);
    std::optional<Line> next();

private:
    bool advance();

    int m_;
    std::size_t n_;
    int q_;
    std::vector<int> digits_;  // 0..m-1 are letters 1..m, m is the star
    bool fresh_ = true;
    bool done_ = false;
};

template <class F>
void for_each_line(int alphabet, std::size_t length, int q, F&& f) {
    LineEnumerator e(alphabet, length, q);
    while (auto l = e.next()) f(*l);
}

/// An edge of the pattern hypergraph: the deduplicated contractions of the
/// witness's substitutions, sorted length-lexicographically.
struct PatternEdge {
    std::vector<Pattern> members;
    StarPattern witness;
};

/// The edge {contract(sp[1]), ..., contract(sp[m])}. Requires |sp| <= n and
/// star-run count <= q, and rejects degenerate (single-member) results.
PatternEdge star_pattern_to_edge(const StarPattern& sp, std::size_t ambient_len, int q);

/// A total colouring of [m]^n, stored densely in base-m word order.
struct DenseColouring {
    int m = 0;
    std::size_t n = 0;
    int r = 0;
    std::vector<std::uint8_t> values;  // size m^n, entries in 0..r-1

    std::size_t index_of(const Word& w) const;
    void validate() const;

    /// Text format: header "m n r", then m^n colour indices, whitespace
    /// separated. Binary variant: same header line, then m^n raw bytes.
    static DenseColouring load_text(std::istream& in);
    static DenseColouring load_binary(std::istream& in);
    void save_text(std::ostream& out) const;
    void save_binary(std::ostream& out) const;
};

/// First q-fold line (in enumeration order) whose substitutions are all the
/// same colour, or nullopt after an exhaustive scan. The result does not
/// depend on the worker count.
std::optional<Line> find_monochromatic_line(const DenseColouring& colouring, int q,
                                            int threads = 1);

}  // namespace hjlab
