#pragma once

#include "hjlab/hypergraphs.hpp"
#include "hjlab/words.hpp"

#include <string>
#include <vector>

namespace hjlab {

/// A single rewriting step over the alphabet [3]. Insertions place a copy of
/// `letter` into `gap` (the number of letters before the insertion point);
/// alterations first remove the movable letter at `from` (0-based) and then
/// insert it at `gap`, counted in the pattern after removal.
struct Move {
    enum class Kind { Insertion, Alteration };
    Kind kind = Kind::Insertion;
    Letter letter = 0;
    std::size_t from = 0;  // alterations only
    std::size_t gap = 0;
};

/// Inserts `alpha` at `gap`; the two letters flanking the gap must be the two
/// letters different from `alpha`. Boundary gaps are rejected.
Pattern apply_insertion(const Pattern& p, std::size_t gap, Letter alpha);

/// Moves the letter at `from` (its neighbours must be the other two letters)
/// to `to_gap` in the pattern after removal, where the same flank condition
/// must hold. Preserves length and count.
Pattern apply_alteration(const Pattern& p, std::size_t from, std::size_t to_gap);

Pattern apply_move(const Pattern& p, const Move& mv);

/// 0-based indices whose two neighbours are exactly the other two letters.
std::vector<std::size_t> movable_letters(const Pattern& p);

/// True iff |p| <= ambient_len - q and p contains at least q adjacent pairs
/// {alpha1, alpha2} (in either order), where {alpha1, alpha2} are the two
/// letters different from `alpha`.
bool is_diverse(const Pattern& p, Letter alpha, int q, std::size_t ambient_len);

/// The chain p = b_1, ..., b_length with each step an alpha-insertion into
/// the leftmost admissible gap. Throws when no admissible gap remains.
std::vector<Pattern> insertion_chain(const Pattern& p, Letter alpha,
                                     std::size_t length);

/// The pattern under both endpoints of an alteration: `p` minus the moved
/// letter. Both `p` and the altered pattern arise from it by one insertion.
Pattern alteration_base(const Pattern& p, std::size_t from);

/// The two phases of the canonical reduction of a buffered pattern: first
/// alterations empty the core into the buffer slots, then blocks of exactly
/// q+1 equal letters are deleted until only the count residues remain.
struct ReductionTrace {
    std::vector<Pattern> alteration_phase;  // b_1 = input, ..., b_k1
    std::vector<Pattern> deletion_phase;    // c_1 = b_k1, ..., c_k2
    const Pattern& terminal() const { return deletion_phase.back(); }
};

ReductionTrace canonical_reduction(const BufferedPattern& bp, int q);

/// Closed form of the reduction's terminal pattern for a given reduced count:
/// 1 (213)^r1 (23)^{2k0-r1} (123)^r2 (13)^{2k0-r2} (231)^r3 (21)^{2k0-r3} 231.
Pattern terminal_form(const std::vector<int>& reduced, int q);

/// One pattern per line, prefixed "b: " or "c: " by phase.
std::string format_trace(const ReductionTrace& trace);

}  // namespace hjlab
