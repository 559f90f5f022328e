#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ke/collection.hpp"

namespace ke {

// Enumerating all subcollections is exponential; operations that do so
// refuse collections larger than this unless the caller raises the bound.
inline constexpr std::size_t kDefaultSubsetLimit = 20;

/// Common cardinality of the members of a relevant collection.
/// Throws EmptyCollection, or NotRelevant if member sizes differ.
int alpha(const SetCollection& c);

/// e(c) = |union of members| + |intersection of members|.
int e_value(const SetCollection& c);

/// A relevant collection is KE when e(c) = 2 * alpha(c).
bool is_ke(const SetCollection& c);

/// Definitional check: every non-empty subcollection has e = 2 * alpha(c).
/// Walks all 2^|c| - 1 subcollections; the reference oracle for the other
/// two hke decision routes.
bool is_hke_bruteforce(const SetCollection& c,
                       std::size_t subset_limit = kDefaultSubsetLimit);

/// |intersect(part1) - union(part2)| - |intersect(part2) - union(part1)|.
/// Antisymmetric under swapping the parts.
int partition_defect(const Bipartition& p);

struct DualityWitness {
  SetCollection subcollection;  // where the zero-defect law first breaks
  Bipartition parts;
  int defect;
};

struct DualityResult {
  bool hke = false;
  std::optional<DualityWitness> witness;  // set exactly when hke is false
};

/// Decides hke by requiring defect 0 for every bipartition of every
/// subcollection of size >= 2 (a singleton passes vacuously). On failure the
/// first violating (subcollection, bipartition) in (size, lex) order is
/// returned as witness.
DualityResult is_hke_via_duality(const SetCollection& c,
                                 std::size_t subset_limit = kDefaultSubsetLimit);

/// Decides hke by requiring, for every subcollection of size >= 2, that SOME
/// bipartition of it has defect 0.
bool is_hke_via_existential(const SetCollection& c,
                            std::size_t subset_limit = kDefaultSubsetLimit);

/// |s - union(c - {s})| - |intersect(c - {s}) - s|. Always equals
/// e_value(c) - e_value(c - {s}).
int removal_defect(const SetCollection& c, const FiniteSet& s);

struct MInvariantResult {
  int beta = 0;  // the common value of e(c - {s})
  int m = 0;     // e(c) - beta
  // removal_defect(c, s) per member, aligned with c.members(); every entry
  // equals m.
  std::vector<int> member_defects;
};

/// Computes beta and m when every single-removal e-value agrees. Throws
/// HypothesisFails when the removal values differ (m is undefined there)
/// and CollectionTooSmall for |c| < 2.
MInvariantResult compute_m(const SetCollection& c);

struct SignedLawEntry {
  Bipartition parts;
  int defect = 0;
  int predicted = 0;  // (-1)^(|part1|+1) * m
};

struct SignedLawReport {
  MInvariantResult invariant;
  std::vector<SignedLawEntry> entries;  // every ordered bipartition of c
  bool pass = false;                    // all defects matched the prediction
};

/// Checks the alternating-sign partition law on a collection whose every
/// single-removal is hke (throws PreconditionFails otherwise). A failing
/// entry indicates an implementation bug, not a property of the input.
SignedLawReport signed_partition_law(const SetCollection& c,
                                     std::size_t subset_limit = kDefaultSubsetLimit);

/// For three distinct same-size sets: {a,b,c} is hke iff
/// |a - b - c| = |(b intersect c) - a|.
bool triangle_hke_check(const FiniteSet& a, const FiniteSet& b, const FiniteSet& c);

/// inner refines outer when union(inner) is contained in union(outer) and
/// intersect(outer) is contained in intersect(inner). Any subcollection
/// refines its parent.
bool refines(const SetCollection& inner, const SetCollection& outer);

}  // namespace ke
