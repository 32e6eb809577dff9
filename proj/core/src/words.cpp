#include "hjlab/words.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hjlab {

namespace {

void check_alphabet(int m) {
    if (m < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (m > 250) throw std::invalid_argument("alphabet size too large");
}

void check_letters(const std::vector<Letter>& letters, int m) {
    if (letters.empty()) throw std::invalid_argument("words have length >= 1");
    for (Letter c : letters) {
        if (c < 1 || static_cast<int>(c) > m)
            throw std::invalid_argument("letter out of alphabet range");
    }
}

std::vector<Letter> parse_digits(std::string_view text, int m) {
    if (m > 9) throw std::invalid_argument("digit parsing requires alphabet <= 9");
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch < '1' || ch > '0' + m)
            throw std::invalid_argument("invalid letter character in word text");
        out.push_back(static_cast<Letter>(ch - '0'));
    }
    return out;
}

std::string render_digits(const std::vector<Letter>& letters) {
    std::string s;
    s.reserve(letters.size());
    for (Letter c : letters) s.push_back(static_cast<char>('0' + c));
    return s;
}

}  // namespace

std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base)
            throw std::overflow_error("word space size overflows size_t");
        r *= base;
    }
    return r;
}

Word::Word(std::vector<Letter> letters, int alphabet)
    : letters_(std::move(letters)), m_(alphabet) {
    check_alphabet(m_);
    check_letters(letters_, m_);
}

Word Word::parse(std::string_view text, int alphabet) {
    check_alphabet(alphabet);
    return Word(parse_digits(text, alphabet), alphabet);
}

std::string Word::str() const {
    if (m_ > 9) throw std::logic_error("digit rendering requires alphabet <= 9");
    return render_digits(letters_);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Pattern::Pattern(std::vector<Letter> letters, int alphabet)
    : letters_(std::move(letters)), m_(alphabet) {
    check_alphabet(m_);
    check_letters(letters_, m_);
    for (std::size_t i = 1; i < letters_.size(); ++i) {
        if (letters_[i] == letters_[i - 1])
            throw std::invalid_argument("patterns have no equal adjacent letters");
    }
}

Pattern Pattern::parse(std::string_view text, int alphabet) {
    check_alphabet(alphabet);
    return Pattern(parse_digits(text, alphabet), alphabet);
}

std::string Pattern::str() const {
    if (m_ > 9) throw std::logic_error("digit rendering requires alphabet <= 9");
    return render_digits(letters_);
}

std::ostream& operator<<(std::ostream& os, const Pattern& p) { return os << p.str(); }

bool length_lex_less(const Pattern& a, const Pattern& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
}

Pattern contract(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter c : w.letters()) {
        if (out.empty() || out.back() != c) out.push_back(c);
    }
    return Pattern(std::move(out), w.alphabet());
}

std::vector<int> count(const Pattern& p) {
    std::vector<int> phi(static_cast<std::size_t>(p.alphabet()), 0);
    for (Letter c : p.letters()) ++phi[static_cast<std::size_t>(c - 1)];
    return phi;
}

std::vector<int> reduced_count(const Pattern& p, int modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    std::vector<int> phi = count(p);
    for (int& v : phi) v %= modulus;
    return phi;
}

std::vector<std::size_t> breakpoints(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] != w[i - 1]) out.push_back(i);
    }
    return out;
}

Word expand(const Word& w, std::span<const std::size_t> breaks,
            std::size_t target_len) {
    const std::size_t n = w.size();
    if (breaks.size() != n - 1)
        throw std::invalid_argument("expansion needs exactly |w|-1 breakpoints");
    if (target_len < n) throw std::invalid_argument("target length shorter than word");
    std::size_t prev = 0;
    for (std::size_t a : breaks) {
        if (a <= prev || a > target_len - 1)
            throw std::invalid_argument("breakpoints must be strictly increasing in 1..N-1");
        prev = a;
    }
    std::vector<Letter> out;
    out.reserve(target_len);
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t end = (i + 1 < n) ? breaks[i] : target_len;
        for (std::size_t j = start; j < end; ++j) out.push_back(w[i]);
        start = end;
    }
    return Word(std::move(out), w.alphabet());
}

PatternEnumerator::PatternEnumerator(int alphabet, std::size_t max_len)
    : m_(alphabet), max_len_(max_len) {
    check_alphabet(m_);
    if (max_len_ < 1) throw std::invalid_argument("max length must be >= 1");
}

std::optional<Pattern> PatternEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        cur_ = {1};
        return Pattern(cur_, m_);
    }
    const std::size_t len = cur_.size();
    // Advance within the current length, rightmost position first.
    for (std::size_t k = len; k-- > 0;) {
        for (Letter v = static_cast<Letter>(cur_[k] + 1); static_cast<int>(v) <= m_; ++v) {
            if (k > 0 && v == cur_[k - 1]) continue;
            cur_[k] = v;
            for (std::size_t i = k + 1; i < len; ++i)
                cur_[i] = (cur_[i - 1] == 1) ? 2 : 1;
            return Pattern(cur_, m_);
        }
    }
    if (len + 1 > max_len_) {
        done_ = true;
        return std::nullopt;
    }
    cur_.assign(len + 1, 0);
    cur_[0] = 1;
    for (std::size_t i = 1; i < cur_.size(); ++i) cur_[i] = (cur_[i - 1] == 1) ? 2 : 1;
    return Pattern(cur_, m_);
}

std::size_t word_rank(const Word& w) {
    std::size_t r = 0;
    const std::size_t m = static_cast<std::size_t>(w.alphabet());
    for (Letter c : w.letters()) r = r * m + static_cast<std::size_t>(c - 1);
    return r;
}

Word word_from_rank(std::size_t rank, int alphabet, std::size_t length) {
    check_alphabet(alphabet);
    if (length < 1) throw std::invalid_argument("words have length >= 1");
    std::vector<Letter> letters(length, 1);
    const std::size_t m = static_cast<std::size_t>(alphabet);
    for (std::size_t i = length; i-- > 0;) {
        letters[i] = static_cast<Letter>(rank % m + 1);
        rank /= m;
    }
    if (rank != 0) throw std::invalid_argument("rank out of range for [m]^n");
    return Word(std::move(letters), alphabet);
}

}  // namespace hjlab
