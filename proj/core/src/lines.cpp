#include "hjlab/lines.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hjlab {

namespace {

void check_alphabet(int m) {
    if (m < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (m > 250) throw std::invalid_argument("alphabet size too large");
}

void check_symbols(const std::vector<Letter>& symbols, int m, bool need_star) {
    if (symbols.empty()) throw std::invalid_argument("lines have length >= 1");
    bool star = false;
    for (Letter c : symbols) {
        if (c == kStar) {
            star = true;
        } else if (c < 1 || static_cast<int>(c) > m) {
            throw std::invalid_argument("symbol out of alphabet range");
        }
    }
    if (need_star && !star)
        throw std::invalid_argument("a combinatorial line contains at least one star");
}

std::vector<Letter> parse_symbols(std::string_view text, int m) {
    if (m > 9) throw std::invalid_argument("symbol parsing requires alphabet <= 9");
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == '*') {
            out.push_back(kStar);
        } else if (ch >= '1' && ch <= '0' + m) {
            out.push_back(static_cast<Letter>(ch - '0'));
        } else {
            throw std::invalid_argument("invalid symbol character in line text");
        }
    }
    return out;
}

std::string render_symbols(const std::vector<Letter>& symbols) {
    std::string s;
    s.reserve(symbols.size());
    for (Letter c : symbols) s.push_back(c == kStar ? '*' : static_cast<char>('0' + c));
    return s;
}

int star_runs(const std::vector<Letter>& symbols) {
    int runs = 0;
    bool in_run = false;
    for (Letter c : symbols) {
        if (c == kStar) {
            if (!in_run) ++runs;
            in_run = true;
        } else {
            in_run = false;
        }
    }
    return runs;
}

}  // namespace

Line::Line(std::vector<Letter> symbols, int alphabet)
    : symbols_(std::move(symbols)), m_(alphabet) {
    check_alphabet(m_);
    check_symbols(symbols_, m_, /*need_star=*/true);
}

Line Line::parse(std::string_view text, int alphabet) {
    check_alphabet(alphabet);
    return Line(parse_symbols(text, alphabet), alphabet);
}

std::string Line::str() const { return render_symbols(symbols_); }

std::ostream& operator<<(std::ostream& os, const Line& l) { return os << l.str(); }

StarPattern::StarPattern(std::vector<Letter> symbols, int alphabet)
    : symbols_(std::move(symbols)), m_(alphabet) {
    check_alphabet(m_);
    check_symbols(symbols_, m_, /*need_star=*/true);
    for (std::size_t i = 1; i < symbols_.size(); ++i) {
        if (symbols_[i] == symbols_[i - 1])
            throw std::invalid_argument("star patterns have no equal adjacent symbols");
    }
}

StarPattern StarPattern::parse(std::string_view text, int alphabet) {
    check_alphabet(alphabet);
    return StarPattern(parse_symbols(text, alphabet), alphabet);
}

std::string StarPattern::str() const { return render_symbols(symbols_); }

std::ostream& operator<<(std::ostream& os, const StarPattern& sp) {
    return os << sp.str();
}

Word substitute(const Line& l, Letter alpha) {
    if (alpha < 1 || static_cast<int>(alpha) > l.alphabet())
        throw std::invalid_argument("substituted letter out of alphabet range");
    std::vector<Letter> out(l.symbols());
    for (Letter& c : out)
        if (c == kStar) c = alpha;
    return Word(std::move(out), l.alphabet());
}

int active_intervals(const Line& l) { return star_runs(l.symbols()); }

bool is_q_fold(const Line& l, int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    return active_intervals(l) <= q;
}

StarPattern contract_star(const Line& l) {
    std::vector<Letter> out;
    out.reserve(l.size());
    for (Letter c : l.symbols()) {
        if (out.empty() || out.back() != c) out.push_back(c);
    }
    return StarPattern(std::move(out), l.alphabet());
}

Line extend_to_length(const StarPattern& sp, std::size_t n) {
    if (n < sp.size()) throw std::invalid_argument("ambient length shorter than star pattern");
    std::vector<Letter> out(sp.symbols());
    out.resize(n, out.back());
    return Line(std::move(out), sp.alphabet());
}

LineEnumerator::LineEnumerator(int alphabet, std::size_t length, int q)
    : m_(alphabet), n_(length), q_(q) {
    check_alphabet(m_);
    if (n_ < 1) throw std::invalid_argument("line length must be >= 1");
    if (q_ < 1) throw std::invalid_argument("q must be >= 1");
    digits_.assign(n_, 0);
}

bool LineEnumerator::advance() {
    for (std::size_t k = n_; k-- > 0;) {
        if (digits_[k] < m_) {
            ++digits_[k];
            std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                      digits_.end(), 0);
            return true;
        }
    }
    return false;
}

std::optional<Line> LineEnumerator::next() {
    if (done_) return std::nullopt;
    while (true) {
        if (fresh_) {
            fresh_ = false;  // digits all zero: the star-free word 11...1
        } else if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        int runs = 0;
        bool in_run = false, has_star = false;
        for (int d : digits_) {
            if (d == m_) {
                has_star = true;
                if (!in_run) ++runs;
                in_run = true;
            } else {
                in_run = false;
            }
        }
        if (!has_star || runs > q_) continue;
        std::vector<Letter> symbols(n_);
        for (std::size_t i = 0; i < n_; ++i)
            symbols[i] = digits_[i] == m_ ? kStar : static_cast<Letter>(digits_[i] + 1);
        return Line(std::move(symbols), m_);
    }
}

PatternEdge star_pattern_to_edge(const StarPattern& sp, std::size_t ambient_len, int q) {
    if (sp.size() > ambient_len)
        throw std::invalid_argument("star pattern longer than the ambient word length");
    if (star_runs(sp.symbols()) > q)
        throw std::invalid_argument("star pattern has more than q star runs");
    Line l = sp.as_line();
    std::vector<Pattern> members;
    for (int a = 1; a <= sp.alphabet(); ++a)
        members.push_back(contract(substitute(l, static_cast<Letter>(a))));
    std::sort(members.begin(), members.end(), length_lex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 2)
        throw std::domain_error("degenerate edge: all substitutions contract equally");
    return PatternEdge{std::move(members), sp};
}

std::size_t DenseColouring::index_of(const Word& w) const {
    if (w.alphabet() != m || w.size() != n)
        throw std::invalid_argument("word does not match the colouring's parameters");
    return word_rank(w);
}

void DenseColouring::validate() const {
    if (m < 2 || n < 1 || r < 1) throw std::invalid_argument("invalid colouring header");
    if (values.size() != pow_size(static_cast<std::size_t>(m), n))
        throw std::invalid_argument("colouring is not total on [m]^n");
    for (std::uint8_t v : values)
        if (v >= r) throw std::invalid_argument("colour index out of range");
}

DenseColouring DenseColouring::load_text(std::istream& in) {
    DenseColouring c;
    if (!(in >> c.m >> c.n >> c.r)) throw std::invalid_argument("missing colouring header");
    if (c.m < 2 || c.n < 1 || c.r < 1) throw std::invalid_argument("invalid colouring header");
    const std::size_t total = pow_size(static_cast<std::size_t>(c.m), c.n);
    c.values.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        int v;
        if (!(in >> v)) throw std::invalid_argument("colouring file is partial");
        if (v < 0 || v >= c.r) throw std::invalid_argument("colour index out of range");
        c.values.push_back(static_cast<std::uint8_t>(v));
    }
    return c;
}

DenseColouring DenseColouring::load_binary(std::istream& in) {
    DenseColouring c;
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("missing colouring header");
    std::istringstream hs(header);
    if (!(hs >> c.m >> c.n >> c.r)) throw std::invalid_argument("invalid colouring header");
    if (c.m < 2 || c.n < 1 || c.r < 1) throw std::invalid_argument("invalid colouring header");
    const std::size_t total = pow_size(static_cast<std::size_t>(c.m), c.n);
    c.values.resize(total);
    in.read(reinterpret_cast<char*>(c.values.data()),
            static_cast<std::streamsize>(total));
    if (static_cast<std::size_t>(in.gcount()) != total)
        throw std::invalid_argument("colouring file is partial");
    c.validate();
    return c;
}

void DenseColouring::save_text(std::ostream& out) const {
    validate();
    out << m << ' ' << n << ' ' << r << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ' ';
        out << static_cast<int>(values[i]);
    }
    out << '\n';
}

void DenseColouring::save_binary(std::ostream& out) const {
    validate();
    out << m << ' ' << n << ' ' << r << '\n';
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size()));
}

namespace {

// Scans line ranks [begin, end) and returns the first q-fold monochromatic
// line rank, stopping early once `best` proves the range irrelevant.
std::size_t scan_lines(const DenseColouring& col, int q, std::size_t begin,
                       std::size_t end, const std::atomic<std::size_t>& best) {
    const int m = col.m;
    const std::size_t n = col.n;
    const std::size_t base = static_cast<std::size_t>(m) + 1;

    std::vector<int> digits(n);
    std::size_t rest = begin;
    for (std::size_t i = n; i-- > 0;) {
        digits[i] = static_cast<int>(rest % base);
        rest /= base;
    }
    std::vector<std::size_t> pow_m(n);
    {
        std::size_t p = 1;
        for (std::size_t i = n; i-- > 0;) {
            pow_m[i] = p;
            p *= static_cast<std::size_t>(m);
        }
    }

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    for (std::size_t rank = begin; rank < end; ++rank) {
        if ((rank & 0xFFF) == 0 && best.load(std::memory_order_relaxed) < begin)
            return kNone;
        if (rank != begin) {
            for (std::size_t k = n; k-- > 0;) {
                if (++digits[k] < static_cast<int>(base)) break;
                digits[k] = 0;
            }
        }
        int runs = 0;
        bool in_run = false, has_star = false;
        std::size_t fixed = 0, star_weight = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (digits[i] == m) {
                has_star = true;
                star_weight += pow_m[i];
                if (!in_run) ++runs;
                in_run = true;
            } else {
                fixed += static_cast<std::size_t>(digits[i]) * pow_m[i];
                in_run = false;
            }
        }
        if (!has_star || runs > q) continue;
        const std::uint8_t c0 = col.values[fixed];  // substitution of letter 1
        bool mono = true;
        for (int a = 1; a < m; ++a) {
            if (col.values[fixed + static_cast<std::size_t>(a) * star_weight] != c0) {
                mono = false;
                break;
            }
        }
        if (mono) return rank;
    }
    return kNone;
}

}  // namespace

std::optional<Line> find_monochromatic_line(const DenseColouring& colouring, int q,
                                            int threads) {
    colouring.validate();
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (threads < 1) throw std::invalid_argument("worker count must be >= 1");

    const std::size_t base = static_cast<std::size_t>(colouring.m) + 1;
    const std::size_t total = pow_size(base, colouring.n);
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{kNone};

    if (threads == 1 || total < 4096) {
        best = scan_lines(colouring, q, 0, total, best);
    } else {
        const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
        const std::size_t chunk = (total + nt - 1) / nt;
        std::vector<std::thread> workers;
        workers.reserve(nt);
        for (std::size_t t = 0; t < nt; ++t) {
            workers.emplace_back([&, t] {
                const std::size_t lo = t * chunk;
                const std::size_t hi = std::min(total, lo + chunk);
                if (lo >= hi) return;
                std::size_t hit = scan_lines(colouring, q, lo, hi, best);
                if (hit != kNone) {
                    std::size_t cur = best.load();
                    while (hit < cur && !best.compare_exchange_weak(cur, hit)) {
                    }
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    const std::size_t hit = best.load();
    if (hit == kNone) return std::nullopt;
    std::vector<Letter> symbols(colouring.n);
    std::size_t rest = hit;
    for (std::size_t i = colouring.n; i-- > 0;) {
        const std::size_t d = rest % base;
        rest /= base;
        symbols[i] = d == static_cast<std::size_t>(colouring.m)
                         ? kStar
                         : static_cast<Letter>(d + 1);
    }
    return Line(std::move(symbols), colouring.m);
}

}  // namespace hjlab
