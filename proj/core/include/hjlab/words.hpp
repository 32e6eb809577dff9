#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hjlab {

/// Letters are 1-based: a word over the alphabet [m] uses the values 1..m.
using Letter = std::uint8_t;

/// `base^exp`, throwing on overflow. Used for word-space sizes.
std::size_t pow_size(std::size_t base, std::size_t exp);

/// A finite word over the alphabet {1..m}, length >= 1.
class Word {
public:
    Word(std::vector<Letter> letters, int alphabet);

    /// Parses a digit string such as "11233322" (requires alphabet <= 9).
    static Word parse(std::string_view text, int alphabet);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    int alphabet() const noexcept { return m_; }
    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
    int m_;
};

std::ostream& operator<<(std::ostream&, const Word&);

/// A word equal to its own contraction: no two adjacent letters coincide.
class Pattern {
public:
    Pattern(std::vector<Letter> letters, int alphabet);

    static Pattern parse(std::string_view text, int alphabet);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    int alphabet() const noexcept { return m_; }
    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word as_word() const { return Word(letters_, m_); }
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    // Plain lexicographic order (useful for containers). The enumeration
    // order of patterns is length-then-lexicographic; see length_lex_less.
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<Letter> letters_;
    int m_;
};

std::ostream& operator<<(std::ostream&, const Pattern&);

bool length_lex_less(const Pattern& a, const Pattern& b);

/// Collapses every maximal constant run of `w` to a single letter.
Pattern contract(const Word& w);

/// Letter multiplicities of `p` as a length-m vector.
std::vector<int> count(const Pattern& p);

/// count(p) taken entrywise mod `modulus` (modulus >= 2).
std::vector<int> reduced_count(const Pattern& p, int modulus);

/// Positions where the letter changes, as "number of letters before the
/// break": a value a in {1..n-1} means w[a-1] != w[a] (0-based letters).
/// |breakpoints(w)| = |contract(w)| - 1.
std::vector<std::size_t> breakpoints(const Word& w);

/// Expands `w` of length n to length `target_len` along the strictly
/// increasing break set `breaks` (|breaks| = n-1, values in 1..target_len-1):
/// letters i of the result in the half-open run (breaks[i-1], breaks[i]]
/// (1-based) all equal w_i.  contract(expand(w,A,N)) == contract(w).
Word expand(const Word& w, std::span<const std::size_t> breaks,
            std::size_t target_len);

/// Yields every pattern over [alphabet] of length <= max_len exactly once,
/// in length-then-lexicographic order. Restartable by constructing anew.
class PatternEnumerator {
public:
    PatternEnumerator(int alphabet, std::size_t max_len);
    std::optional<Pattern> next();

private:
    int m_;
    std::size_t max_len_;
    std::vector<Letter> cur_;
    bool fresh_ = true;
    bool done_ = false;
};

template <class F>
void for_each_pattern(int alphabet, std::size_t max_len, F&& f) {
    PatternEnumerator e(alphabet, max_len);
    while (auto p = e.next()) f(*p);
}

/// Rank of `w` in the lexicographic order of [m]^n (base-m integer value).
std::size_t word_rank(const Word& w);
Word word_from_rank(std::size_t rank, int alphabet, std::size_t length);

}  // namespace hjlab
