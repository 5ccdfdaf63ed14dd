#ifndef NOMINATION_SRC_AXIS_VIEW_HPP_
#define NOMINATION_SRC_AXIS_VIEW_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "nomination/core.hpp"
#include "nomination/equilibrium.hpp"
#include "nomination/recognition.hpp"

namespace nomination {
namespace internal {

// One walking direction of the axis, ending at the distinguished position.
// Mirrored views rewrite swing preferences so the same machinery serves both
// sides of a distinguished party.
struct AxisView {
  std::vector<int> party;
  std::vector<std::vector<int>> members;
  std::vector<long long> loyal;
  std::vector<long long> swing;
  std::vector<std::vector<std::vector<long long>>> pref;

  int last() const { return static_cast<int>(members.size()) - 1; }
};

inline AxisView make_view(const Election& e, const PartyAxis& axis,
                          const SwingCounts& counts, int kappa_pos,
                          bool mirrored) {
  AxisView view;
  int k = e.party_count();
  if (!mirrored) {
    for (int pos = 0; pos <= kappa_pos; ++pos) {
      view.party.push_back(axis.order[pos]);
      view.members.push_back(e.party_members[axis.order[pos]]);
      view.loyal.push_back(counts.loyal[pos]);
    }
    for (int pos = 0; pos + 1 <= kappa_pos; ++pos) {
      view.swing.push_back(counts.swing[pos]);
      view.pref.push_back(counts.prefer_left[pos]);
    }
    return view;
  }
  for (int j = 0; j <= k - 1 - kappa_pos; ++j) {
    int pos = k - 1 - j;
    view.party.push_back(axis.order[pos]);
    view.members.push_back(e.party_members[axis.order[pos]]);
    view.loyal.push_back(counts.loyal[pos]);
  }
  for (int j = 0; j + 1 <= k - 1 - kappa_pos; ++j) {
    int low = k - 2 - j;
    std::size_t rows = e.party_members[axis.order[low + 1]].size();
    std::size_t cols = e.party_members[axis.order[low]].size();
    std::vector<std::vector<long long>> flipped(
        rows, std::vector<long long>(cols, 0));
    for (std::size_t a = 0; a < rows; ++a) {
      for (std::size_t b = 0; b < cols; ++b) {
        flipped[a][b] = counts.swing[low] - counts.prefer_left[low][b][a];
      }
    }
    view.swing.push_back(counts.swing[low]);
    view.pref.push_back(std::move(flipped));
  }
  return view;
}

}  // namespace internal
}  // namespace nomination

#endif  // NOMINATION_SRC_AXIS_VIEW_HPP_
