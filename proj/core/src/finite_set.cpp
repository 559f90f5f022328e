#include "ke/finite_set.hpp"

#include <algorithm>
#include <iterator>

#include "ke/errors.hpp"

namespace ke {

FiniteSet::FiniteSet(std::vector<int> elements) : elements_(std::move(elements)) {
  for (int id : elements_) {
    if (id < 1) {
      throw Error(ErrorCode::InvalidElement,
                  "element ids must be >= 1, got " + std::to_string(id));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteSet::FiniteSet(std::initializer_list<int> elements)
    : FiniteSet(std::vector<int>(elements)) {}

bool FiniteSet::contains(int id) const {
  return std::binary_search(elements_.begin(), elements_.end(), id);
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

FiniteSet FiniteSet::set_union(const FiniteSet& other) const {
  FiniteSet out;
  std::set_union(elements_.begin(), elements_.end(),
                 other.elements_.begin(), other.elements_.end(),
                 std::back_inserter(out.elements_));
  return out;
}

FiniteSet FiniteSet::set_intersection(const FiniteSet& other) const {
  FiniteSet out;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(out.elements_));
  return out;
}

FiniteSet FiniteSet::set_minus(const FiniteSet& other) const {
  FiniteSet out;
  std::set_difference(elements_.begin(), elements_.end(),
                      other.elements_.begin(), other.elements_.end(),
                      std::back_inserter(out.elements_));
  return out;
}

std::string to_string(const FiniteSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s.elements()[i]);
  }
  out += "}";
  return out;
}

}  // namespace ke
