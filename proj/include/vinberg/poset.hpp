#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vinberg {

// Finite partial order on indices 0..size()-1, each carrying a label.
// Immutable once built; the order is held as its reflexive-transitive closure.
class Poset {
 public:
  Poset() = default;

  // `strict_pairs` lists (a, b) meaning a < b; covers or the full relation
  // both work.  Throws DuplicateElement, UnknownLabelInRelation, CycleDetected.
  static Poset from_labels(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& strict_pairs);
  static Poset from_indices(int n, const std::vector<std::pair<int, int>>& strict_pairs);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // -1 when absent.
  int find(std::string_view label) const;

  bool leq(int i, int j) const { return closure_[i * n_ + j] != 0; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  // Indices in linear-extension order; ties go to the earlier element.
  const std::vector<int>& linear_extension() const { return order_; }
  int position(int i) const { return pos_[i]; }

  // All strict pairs (a, b), a < b, of the closure.
  std::vector<std::pair<int, int>> strict_pairs() const;

  bool operator==(const Poset& other) const;

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> closure_;
  std::vector<int> order_;
  std::vector<int> pos_;
};

// Reads a JSON document with "elements" and "relations" (list of [a, b] with
// a < b).  Extra keys are ignored so a full cone spec can be passed.
Poset parse_poset(std::string_view spec_text);

struct OrderProfile {
  std::vector<std::vector<int>> down;         // j <= i
  std::vector<std::vector<int>> strict_down;  // j < i
  std::vector<std::vector<int>> up;           // i <= j
  std::vector<std::vector<int>> strict_up;    // i < j
  std::vector<int> rank_up;                   // |up[i]|
};

OrderProfile order_sets(const Poset& p);

struct StructureSets {
  std::vector<int> separators;                        // S, ascending index
  std::vector<std::vector<int>> element_separators;   // S_i = S ∩ up(i)
  std::vector<int> roots;                             // minimal elements
  std::vector<std::vector<int>> children;             // M_i
  std::vector<char> is_separator;
  std::vector<char> is_root;

  // Roots followed by separators, ascending within each group.  This is the
  // anchor order used for orbit signatures and multiplier witnesses.
  std::vector<int> anchors() const;
};

StructureSets structure_sets(const Poset& p);

Poset opposite_poset(const Poset& p);

// Restriction of the order to `subset` (indices of p), keeping labels and the
// relative order of elements.
Poset subposet(const Poset& p, const std::vector<int>& subset);

// True when any two elements that share a lower bound and an upper bound are
// comparable.  The real scalar algebra on a poset satisfies T(UU*) = (TU)U*
// exactly on this class; the diamond 1<2,1<3,2<4,3<4 is the smallest failure.
bool is_vinberg_admissible(const Poset& p);

// Whether the root/separator component decomposition adds back up to X for
// every X in the cone.  Column k of X is counted once per root below k minus
// the separators below k (with multiplicity), so the check is combinatorial.
bool decomposition_is_exact(const Poset& p);

}  // namespace vinberg
