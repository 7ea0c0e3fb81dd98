#include "mmw/search.hpp"

#include "mmw/errors.hpp"

namespace mmw {

SearchSpace SearchSpace::uniform(std::size_t dims, double lo, double hi) {
  SearchSpace s{std::vector<double>(dims, lo), std::vector<double>(dims, hi)};
  s.validate();
  return s;
}

void SearchSpace::validate() const {
  if (lower.size() != upper.size()) throw InvalidConfig("bound vectors differ in length");
  for (std::size_t d = 0; d < lower.size(); ++d) {
    if (!(lower[d] < upper[d]) || !std::isfinite(lower[d]) || !std::isfinite(upper[d])) {
      throw InvalidConfig("lower bound must be below upper bound in dimension " + std::to_string(d));
    }
  }
}

}  // namespace mmw
