#ifndef NOMINATION_RECOGNITION_HPP_
#define NOMINATION_RECOGNITION_HPP_

#include <optional>
#include <vector>

#include "nomination/core.hpp"

namespace nomination {

// A total order over the parties: order[t] is the party at position t, from
// the left end of the axis to the right.
struct PartyAxis {
  std::vector<int> order;

  PartyAxis reversed() const {
    return PartyAxis{std::vector<int>(order.rbegin(), order.rend())};
  }

  bool operator==(const PartyAxis&) const = default;
};

// A partially built axis fixing the leftmost and rightmost party blocks.
// left runs outward-in from the left end; right is in axis order, so
// right.back() is the rightmost party.
struct ExtremalPlacement {
  std::vector<int> left;
  std::vector<int> right;
};

enum class PlacementSide { after_left, before_right };

// A placement forced by some vote: `party` must sit directly after the last
// party of the left block, or directly before the first party of the right
// block.
struct ForcedPlacement {
  int party;
  PlacementSide side;

  bool operator==(const ForcedPlacement&) const = default;
};

// The most and least preferred candidate of one party within one vote.
struct PartyExtrema {
  int best;
  int worst;
};

// Extrema of every party under the given vote, indexed by party.
std::vector<PartyExtrema> party_extrema(const Vote& vote, const Election& election);

// True iff the vote admits a perceived candidate axis compatible with the
// party axis under which it is single-peaked. Checked via the extremal
// conditions: with P_j the top party, (a) an interior P_j must have its worst
// candidate above the best of a neighbour, (b) pairs right of j must fall off
// to the right, (c) pairs left of j must fall off to the left.
bool verify_vote_under_axis(const Vote& vote, const PartyAxis& axis,
                            const Election& election);

// Conjunction of verify_vote_under_axis over all voters.
bool verify_profile_under_axis(const Election& election, const PartyAxis& axis);

// Parties containing a candidate ranked last by at least one voter,
// ascending. Any witnessing axis must place them at its ends, so more than
// two of them rule out an axis altogether.
std::vector<int> bottom_parties(const Election& election);

// Scans voters in ascending order for one whose placed candidates do not form
// a suffix of their ranking, and returns the placement that vote forces: with
// a the voter's least preferred unplaced candidate and b their most preferred
// placed candidate, a's party goes directly after the left block when b's
// party is in the right block, and directly before the right block otherwise.
// Returns nothing when every voter's placed candidates form a suffix. Throws
// input_error if the forced party is already placed, which certifies that no
// axis extends the placement.
std::optional<ForcedPlacement> vote_imposed_extension(
    const Election& election, const ExtremalPlacement& placement);

// Computes a party axis witnessing that the profile is party-aligned
// single-peaked, or nothing if no such axis exists. Of an axis and its
// reverse, returns the one whose first party has the smaller index. The
// constructed axis is always re-checked with verify_profile_under_axis
// before being returned.
std::optional<PartyAxis> recognize_pasp(const Election& election);

}  // namespace nomination

#endif  // NOMINATION_RECOGNITION_HPP_
