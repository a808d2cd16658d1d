#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbc/words.hpp"

namespace fbc {

/// Folded basepointed core graph of a finitely generated subgroup.  Built
/// deterministically (vertices renumbered in BFS order), so two graphs are
/// equal as values iff they present the same subgroup.
class CoreGraph {
 public:
  struct Edge {
    int source;
    int label;  // positive letter index; 0 is z
    int target;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  static CoreGraph build(const std::vector<Word>& generators);

  int basepoint() const { return 0; }
  int vertex_count() const { return static_cast<int>(out_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Membership: w readable as a basepoint loop.
  bool contains(const Word& w) const;

  /// Free basis of the presented subgroup from a spanning tree.
  std::vector<Word> basis() const;

  /// Shortest z-free path evidence that the subgroup contains g^-1 z g:
  /// returns g, the label read from a z-loop vertex back to the basepoint.
  /// BFS depth first, ties by letter order.
  std::optional<Word> find_z_conjugate() const;

  std::string to_dot() const;

  friend bool operator==(const CoreGraph&, const CoreGraph&) = default;

 private:
  std::vector<std::map<int, int>> out_, in_;  // label -> neighbor
  std::vector<Edge> edges_;
};

/// True iff the graphs present the same subgroup of the ambient free group.
bool same_subgroup(const CoreGraph& a, const CoreGraph& b);

/// True iff some generator uses the auxiliary letter z.
bool involves_z(const std::vector<Word>& generators);

}  // namespace fbc
