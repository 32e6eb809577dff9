#include "hjlab/moves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hjlab {

namespace {

void check_ternary(const Pattern& p) {
    if (p.alphabet() != 3)
        throw std::invalid_argument("the rewriting calculus works over the alphabet [3]");
}

void check_letter(Letter alpha) {
    if (alpha < 1 || alpha > 3)
        throw std::invalid_argument("letter must be one of 1, 2, 3");
}

// The two letters different from alpha, in increasing order.
std::pair<Letter, Letter> others(Letter alpha) {
    switch (alpha) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {1, 2};
    }
}

bool flanks_match(Letter left, Letter right, Letter alpha) {
    auto [x, y] = others(alpha);
    return (left == x && right == y) || (left == y && right == x);
}

}  // namespace

Pattern apply_insertion(const Pattern& p, std::size_t gap, Letter alpha) {
    check_ternary(p);
    check_letter(alpha);
    if (gap < 1 || gap > p.size() - 1)
        throw std::invalid_argument("insertion gap must lie strictly inside the pattern");
    if (!flanks_match(p[gap - 1], p[gap], alpha))
        throw std::invalid_argument("insertion flanks must be the two other letters");
    std::vector<Letter> out(p.letters());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap), alpha);
    return Pattern(std::move(out), 3);
}

Pattern alteration_base(const Pattern& p, std::size_t from) {
    check_ternary(p);
    if (from >= p.size()) throw std::invalid_argument("move index out of range");
    if (from == 0 || from + 1 == p.size())
        throw std::invalid_argument("boundary letters are immovable");
    if (!flanks_match(p[from - 1], p[from + 1], p[from]))
        throw std::invalid_argument("letter is not movable: neighbours must be the other two letters");
    std::vector<Letter> out(p.letters());
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(from));
    return Pattern(std::move(out), 3);
}

Pattern apply_alteration(const Pattern& p, std::size_t from, std::size_t to_gap) {
    if (from >= p.size()) throw std::invalid_argument("move index out of range");
    const Letter moved = p[from];
    Pattern base = alteration_base(p, from);
    return apply_insertion(base, to_gap, moved);
}

Pattern apply_move(const Pattern& p, const Move& mv) {
    if (mv.kind == Move::Kind::Insertion) return apply_insertion(p, mv.gap, mv.letter);
    if (mv.from >= p.size() || p[mv.from] != mv.letter)
        throw std::invalid_argument("move letter does not match the pattern");
    return apply_alteration(p, mv.from, mv.gap);
}

std::vector<std::size_t> movable_letters(const Pattern& p) {
    check_ternary(p);
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (flanks_match(p[i - 1], p[i + 1], p[i])) out.push_back(i);
    }
    return out;
}

bool is_diverse(const Pattern& p, Letter alpha, int q, std::size_t ambient_len) {
    check_ternary(p);
    check_letter(alpha);
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (ambient_len < static_cast<std::size_t>(q) ||
        p.size() > ambient_len - static_cast<std::size_t>(q))
        return false;
    auto [x, y] = others(alpha);
    int adjacencies = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if ((p[i] == x && p[i + 1] == y) || (p[i] == y && p[i + 1] == x))
            ++adjacencies;
    }
    return adjacencies >= q;
}

std::vector<Pattern> insertion_chain(const Pattern& p, Letter alpha,
                                     std::size_t length) {
    check_ternary(p);
    check_letter(alpha);
    if (length < 1) throw std::invalid_argument("chain length must be >= 1");
    std::vector<Pattern> chain{p};
    for (std::size_t step = 1; step < length; ++step) {
        const Pattern& cur = chain.back();
        bool inserted = false;
        for (std::size_t gap = 1; gap <= cur.size() - 1; ++gap) {
            if (flanks_match(cur[gap - 1], cur[gap], alpha)) {
                chain.push_back(apply_insertion(cur, gap, alpha));
                inserted = true;
                break;
            }
        }
        if (!inserted)
            throw std::runtime_error("no admissible gap: pattern is not diverse enough");
    }
    return chain;
}

namespace {

// Working state of the canonical reduction. The pattern is kept in three
// segments: a fixed prefix (the leading 1, plus a temporary 3 while the
// stuck core is unwound), the shrinking core, and the growing buffer. Slots
// are insertion positions into the buffer, kept per letter and ascending,
// so the front of a list is the left-most available slot for that letter.
struct Reducer {
    std::vector<Letter> core;
    std::vector<Letter> buffer;
    bool temp3 = false;
    std::array<std::vector<std::size_t>, 4> slots;  // indexed by letter 1..3

    Letter left_boundary() const { return temp3 ? 3 : 1; }

    Pattern snapshot() const {
        std::vector<Letter> all;
        all.reserve(1 + core.size() + buffer.size() + 1);
        all.push_back(1);
        if (temp3) all.push_back(3);
        all.insert(all.end(), core.begin(), core.end());
        all.insert(all.end(), buffer.begin(), buffer.end());
        return Pattern(std::move(all), 3);
    }

    // Neighbours of core[i] within the full pattern.
    Letter left_of(std::size_t i) const { return i == 0 ? left_boundary() : core[i - 1]; }
    Letter right_of(std::size_t i) const {
        return i + 1 == core.size() ? buffer.front() : core[i + 1];
    }

    std::optional<std::size_t> leftmost_movable() const {
        for (std::size_t i = 0; i < core.size(); ++i) {
            Letter c = core[i];
            Letter l = left_of(i), r = right_of(i);
            if (l != r && l != c && r != c) return i;
        }
        return std::nullopt;
    }

    void move_to_slot(std::size_t i) {
        const Letter c = core[i];
        auto& list = slots[c];
        if (list.empty()) throw std::logic_error("reduction corrupt: no slot left for letter");
        const std::size_t pos = list.front();
        list.erase(list.begin());
        core.erase(core.begin() + static_cast<std::ptrdiff_t>(i));
        buffer.insert(buffer.begin() + static_cast<std::ptrdiff_t>(pos), c);
        for (auto& l : slots)
            for (auto& s : l)
                if (s > pos) ++s;
    }
};

}  // namespace

ReductionTrace canonical_reduction(const BufferedPattern& bp, int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (bp.q != q || bp.k0 != k0_for(q))
        throw std::invalid_argument("buffered pattern was built for a different q");
    const int k0 = bp.k0;

    Reducer red;
    red.core = bp.core.letters();
    // buffer: (23)^{2k0} (13)^{2k0} (21)^{2k0} 231, with the slot of each
    // pair sitting before its second letter.
    auto block = [&](Letter a, Letter b, Letter slot_letter) {
        for (int i = 0; i < 2 * k0; ++i) {
            red.buffer.push_back(a);
            red.slots[slot_letter].push_back(red.buffer.size());
            red.buffer.push_back(b);
        }
    };
    block(2, 3, 1);
    block(1, 3, 2);
    block(2, 1, 3);
    red.buffer.push_back(2);
    red.buffer.push_back(3);
    red.buffer.push_back(1);

    ReductionTrace trace;
    trace.alteration_phase.push_back(red.snapshot());
    if (trace.alteration_phase.front() != bp.full)
        throw std::logic_error("reduction corrupt: rebuilt buffered pattern mismatch");

    bool unstuck_used = false;
    while (!red.core.empty()) {
        if (auto i = red.leftmost_movable()) {
            red.move_to_slot(*i);
            trace.alteration_phase.push_back(red.snapshot());
            continue;
        }
        // Stuck core: must be 2121...21. Park the final 3 of the trailing
        // 231 in front of the core, which makes the front letter movable.
        if (unstuck_used)
            throw std::logic_error("reduction corrupt: core stuck twice");
        unstuck_used = true;
        if (red.core.size() % 2 != 0)
            throw std::logic_error("reduction corrupt: stuck core has odd length");
        for (std::size_t i = 0; i < red.core.size(); ++i) {
            if (red.core[i] != (i % 2 == 0 ? 2 : 1))
                throw std::logic_error("reduction corrupt: stuck core is not (21)^j");
        }
        if (red.buffer[red.buffer.size() - 2] != 3)
            throw std::logic_error("reduction corrupt: trailing 231 missing");
        red.buffer.erase(red.buffer.end() - 2);
        red.temp3 = true;
        trace.alteration_phase.push_back(red.snapshot());
    }
    if (red.temp3) {
        // Move the parked 3 back between the final 2 and 1.
        red.temp3 = false;
        red.buffer.insert(red.buffer.end() - 1, 3);
        trace.alteration_phase.push_back(red.snapshot());
    }

    // The alteration phase must have produced the block form with the full
    // counts of the core as exponents.
    const std::vector<int> phi = count(bp.core);
    auto block_form = [&](int f1, int f2, int f3) {
        std::vector<Letter> s{1};
        auto rep = [&s](std::initializer_list<Letter> unit, int times) {
            for (int i = 0; i < times; ++i) s.insert(s.end(), unit);
        };
        rep({2, 1, 3}, f1);
        rep({2, 3}, 2 * k0 - f1);
        rep({1, 2, 3}, f2);
        rep({1, 3}, 2 * k0 - f2);
        rep({2, 3, 1}, f3);
        rep({2, 1}, 2 * k0 - f3);
        rep({2, 3, 1}, 1);
        return Pattern(std::move(s), 3);
    };
    if (trace.alteration_phase.back() != block_form(phi[0], phi[1], phi[2]))
        throw std::logic_error("reduction corrupt: alteration phase terminal mismatch");

    // Deletion phase: drop exactly q+1 equal letters per step, depleting the
    // (213) blocks first, then (123), then (231); each deleted letter turns
    // its triple back into the plain pair.
    trace.deletion_phase.push_back(trace.alteration_phase.back());
    int f[3] = {phi[0], phi[1], phi[2]};
    for (int letter = 0; letter < 3; ++letter) {
        while (f[letter] >= q + 1) {
            f[letter] -= q + 1;
            trace.deletion_phase.push_back(block_form(f[0], f[1], f[2]));
        }
    }

    const std::vector<int> rc = reduced_count(bp.core, q + 1);
    if (trace.terminal() != terminal_form(rc, q))
        throw std::logic_error("reduction corrupt: terminal differs from closed form");
    return trace;
}

Pattern terminal_form(const std::vector<int>& reduced, int q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (reduced.size() != 3)
        throw std::invalid_argument("reduced count must have three entries");
    for (int v : reduced)
        if (v < 0 || v > q)
            throw std::invalid_argument("reduced count entry out of Z_{q+1}");
    const int k0 = k0_for(q);
    std::vector<Letter> s{1};
    auto rep = [&s](std::initializer_list<Letter> unit, int times) {
        for (int i = 0; i < times; ++i) s.insert(s.end(), unit);
    };
    rep({2, 1, 3}, reduced[0]);
    rep({2, 3}, 2 * k0 - reduced[0]);
    rep({1, 2, 3}, reduced[1]);
    rep({1, 3}, 2 * k0 - reduced[1]);
    rep({2, 3, 1}, reduced[2]);
    rep({2, 1}, 2 * k0 - reduced[2]);
    rep({2, 3, 1}, 1);
    return Pattern(std::move(s), 3);
}

std::string format_trace(const ReductionTrace& trace) {
    std::ostringstream os;
    for (const Pattern& p : trace.alteration_phase) os << "b: " << p.str() << '\n';
    for (const Pattern& p : trace.deletion_phase) os << "c: " << p.str() << '\n';
    return os.str();
}

}  // namespace hjlab
