#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ke/finite_set.hpp"

namespace ke {

/// A duplicate-free collection of non-empty finite sets, kept in canonical
/// (lexicographic) member order so that equal collections compare equal
/// structurally. Members may have different cardinalities; relevance is a
/// checkable property, not a construction invariant.
class SetCollection {
 public:
  SetCollection() = default;

  // Sorts members canonically. Rejects duplicate members and empty members.
  explicit SetCollection(std::vector<FiniteSet> members);
  SetCollection(std::initializer_list<FiniteSet> members);

  const std::vector<FiniteSet>& members() const noexcept { return members_; }
  const FiniteSet& member(std::size_t i) const { return members_.at(i); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(const FiniteSet& s) const;

  // The collection with member s removed. Throws NotAMember if s is absent.
  SetCollection without(const FiniteSet& s) const;

  // Members selected by an index bitmask (bit i -> member i).
  SetCollection subcollection(std::uint32_t index_mask) const;

  // Union of all members; the empty set for an empty collection.
  FiniteSet union_all() const;
  // Intersection of all members. Throws EmptyCollection on an empty
  // collection (the empty intersection is not a finite set).
  FiniteSet intersect_all() const;

  friend bool operator==(const SetCollection& a, const SetCollection& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const SetCollection& a, const SetCollection& b) {
    return !(a == b);
  }
  friend bool operator<(const SetCollection& a, const SetCollection& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<FiniteSet> members_;
};

std::string to_string(const SetCollection& c);

/// An ordered pair of non-empty, member-disjoint subcollections. Whether the
/// two parts cover a particular parent collection is checked by
/// partitions(); the pair itself only guarantees disjointness.
class Bipartition {
 public:
  Bipartition(SetCollection part1, SetCollection part2);

  const SetCollection& part1() const noexcept { return part1_; }
  const SetCollection& part2() const noexcept { return part2_; }

  Bipartition swapped() const { return Bipartition(part2_, part1_); }
  bool partitions(const SetCollection& whole) const;

 private:
  SetCollection part1_;
  SetCollection part2_;
};

// --- deterministic enumeration over member indices ---
//
// Subsets and bipartitions are always walked by increasing size and then
// lexicographically on the index tuples, so the first witness or violation
// an operation reports is reproducible.

// All non-empty index masks over n members with popcount >= min_size,
// ordered by (popcount, lexicographic index tuple). Requires n <= 31.
std::vector<std::uint32_t> subset_masks(std::size_t n, std::size_t min_size = 1);

// All 2^(n-1) - 1 unordered bipartitions of n members, represented as
// (part1_mask, part2_mask) with part1 containing index 0, ordered by
// (|part1|, lexicographic). Requires n >= 2.
std::vector<std::pair<std::uint32_t, std::uint32_t>> bipartition_masks(std::size_t n);

// Builds the Bipartition (members in part1_mask, remaining members).
Bipartition make_bipartition(const SetCollection& c, std::uint32_t part1_mask);

}  // namespace ke
