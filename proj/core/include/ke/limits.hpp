#pragma once

#include <cstddef>

namespace ke {

// Guardrails for the exact (exponential) algorithms. These are desk-scale
// defaults; exceeding one raises TooLarge instead of hanging. The CLI lets
// KE_MAX_N raise max_exact_n.
struct Limits {
  int max_exact_n = 24;                          // alpha/mu/omega vertex bound
  std::size_t max_omega = std::size_t{1} << 16;  // maximum |Omega(G)| enumerated
  // certificate search aborts when one apriori level holds more candidate
  // subcollections than this
  std::size_t max_candidates = std::size_t{1} << 20;
};

}  // namespace ke
