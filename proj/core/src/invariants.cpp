#include "ke/invariants.hpp"

#include <bit>

#include "ke/errors.hpp"

namespace ke {

namespace {

void require_non_empty(const SetCollection& c) {
  if (c.empty()) {
    throw Error(ErrorCode::EmptyCollection, "operation needs a non-empty collection");
  }
}

void require_enumerable(const SetCollection& c, std::size_t subset_limit) {
  if (c.size() > subset_limit) {
    throw Error(ErrorCode::TooLarge,
                "collection of " + std::to_string(c.size()) +
                    " members exceeds the subset enumeration bound of " +
                    std::to_string(subset_limit));
  }
}

}  // namespace

int alpha(const SetCollection& c) {
  require_non_empty(c);
  int a = c.member(0).size();
  for (const FiniteSet& s : c.members()) {
    if (s.size() != a) {
      throw Error(ErrorCode::NotRelevant,
                  "member sizes differ (" + std::to_string(a) + " vs " +
                      std::to_string(s.size()) + ")");
    }
  }
  return a;
}

int e_value(const SetCollection& c) {
  require_non_empty(c);
  return c.union_all().size() + c.intersect_all().size();
}

bool is_ke(const SetCollection& c) {
  return e_value(c) == 2 * alpha(c);
}

bool is_hke_bruteforce(const SetCollection& c, std::size_t subset_limit) {
  const int two_alpha = 2 * alpha(c);
  require_enumerable(c, subset_limit);
  for (std::uint32_t mask : subset_masks(c.size())) {
    if (e_value(c.subcollection(mask)) != two_alpha) return false;
  }
  return true;
}

int partition_defect(const Bipartition& p) {
  const FiniteSet left = p.part1().intersect_all().set_minus(p.part2().union_all());
  const FiniteSet right = p.part2().intersect_all().set_minus(p.part1().union_all());
  return left.size() - right.size();
}

DualityResult is_hke_via_duality(const SetCollection& c, std::size_t subset_limit) {
  alpha(c);  // enforce non-empty + relevant
  require_enumerable(c, subset_limit);
  DualityResult result;
  for (std::uint32_t sub_mask : subset_masks(c.size(), 2)) {
    const SetCollection sub = c.subcollection(sub_mask);
    for (const auto& [m1, m2] : bipartition_masks(sub.size())) {
      Bipartition parts(sub.subcollection(m1), sub.subcollection(m2));
      const int defect = partition_defect(parts);
      if (defect != 0) {
        result.hke = false;
        result.witness = DualityWitness{sub, std::move(parts), defect};
        return result;
      }
    }
  }
  result.hke = true;
  return result;
}

bool is_hke_via_existential(const SetCollection& c, std::size_t subset_limit) {
  alpha(c);
  require_enumerable(c, subset_limit);
  for (std::uint32_t sub_mask : subset_masks(c.size(), 2)) {
    const SetCollection sub = c.subcollection(sub_mask);
    bool balanced = false;
    for (const auto& [m1, m2] : bipartition_masks(sub.size())) {
      if (partition_defect(Bipartition(sub.subcollection(m1),
                                       sub.subcollection(m2))) == 0) {
        balanced = true;
        break;
      }
    }
    if (!balanced) return false;
  }
  return true;
}

int removal_defect(const SetCollection& c, const FiniteSet& s) {
  if (c.size() < 2) {
    throw Error(ErrorCode::CollectionTooSmall,
                "removal defect needs at least two members");
  }
  const SetCollection rest = c.without(s);  // throws NotAMember
  const int gained = s.set_minus(rest.union_all()).size();
  const int lost = rest.intersect_all().set_minus(s).size();
  return gained - lost;
}

MInvariantResult compute_m(const SetCollection& c) {
  if (c.size() < 2) {
    throw Error(ErrorCode::CollectionTooSmall,
                "the m-invariant needs at least two members");
  }
  MInvariantResult result;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int e_removed = e_value(c.without(c.member(i)));
    if (i == 0) {
      result.beta = e_removed;
    } else if (e_removed != result.beta) {
      throw Error(ErrorCode::HypothesisFails,
                  "e(c - {s}) is not constant: " + std::to_string(result.beta) +
                      " vs " + std::to_string(e_removed) + " at member " +
                      to_string(c.member(i)));
    }
  }
  result.m = e_value(c) - result.beta;
  result.member_defects.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    result.member_defects.push_back(removal_defect(c, c.member(i)));
  }
  return result;
}

SignedLawReport signed_partition_law(const SetCollection& c,
                                     std::size_t subset_limit) {
  if (c.size() < 2) {
    throw Error(ErrorCode::CollectionTooSmall,
                "the signed partition law needs at least two members");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_hke_bruteforce(c.without(c.member(i)), subset_limit)) {
      throw Error(ErrorCode::PreconditionFails,
                  "c - " + to_string(c.member(i)) + " is not an hke collection");
    }
  }
  SignedLawReport report;
  report.invariant = compute_m(c);
  report.pass = true;
  // Ordered bipartitions: part1 over all non-empty proper index subsets in
  // (size, lex) order, so both orientations of each split are checked.
  const std::uint32_t full = (std::uint32_t{1} << c.size()) - 1;
  for (std::uint32_t part1_mask : subset_masks(c.size())) {
    if (part1_mask == full) continue;
    Bipartition parts = make_bipartition(c, part1_mask);
    const int defect = partition_defect(parts);
    const int sign = (std::popcount(part1_mask) % 2 == 1) ? 1 : -1;
    const int predicted = sign * report.invariant.m;
    if (defect != predicted) report.pass = false;
    report.entries.push_back({std::move(parts), defect, predicted});
  }
  return report;
}

bool triangle_hke_check(const FiniteSet& a, const FiniteSet& b, const FiniteSet& c) {
  if (a == b || a == c || b == c) {
    throw Error(ErrorCode::NotDistinct, "the three sets must be distinct");
  }
  if (a.size() != b.size() || a.size() != c.size()) {
    throw Error(ErrorCode::NotRelevant, "the three sets must share one cardinality");
  }
  const int left = a.set_minus(b).set_minus(c).size();
  const int right = b.set_intersection(c).set_minus(a).size();
  return left == right;
}

bool refines(const SetCollection& inner, const SetCollection& outer) {
  if (inner.empty() || outer.empty()) {
    throw Error(ErrorCode::EmptyCollection, "refines needs non-empty collections");
  }
  return inner.union_all().subset_of(outer.union_all()) &&
         outer.intersect_all().subset_of(inner.intersect_all());
}

}  // namespace ke
