#include "setsketch/minhash.hpp"

#include <algorithm>
#include <stdexcept>

namespace setsketch {

MinHash::MinHash(std::uint32_t m) : components_(m, 1.) {
  if (m == 0) throw std::invalid_argument("m must be positive");
}

MinHash MinHash::from_components(std::vector<double> components) {
  MinHash s(static_cast<std::uint32_t>(components.size()));
  for (double v : components) {
    if (!(v > 0) || !(v <= 1)) throw std::invalid_argument("MinHash component outside (0, 1]");
  }
  s.components_ = std::move(components);
  return s;
}

void MinHash::insert(ElementSeed element) {
  RandomStream stream(element);
  for (double& v : components_) v = std::min(v, stream.next_uniform());
  inner_iterations_ += components_.size();
}

void MinHash::merge(const MinHash& other) {
  if (size() != other.size()) throw std::invalid_argument("cannot merge MinHash sketches of different size");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i] = std::min(components_[i], other.components_[i]);
  }
}

MinHash merge(const MinHash& s1, const MinHash& s2) {
  MinHash result = s1;
  result.merge(s2);
  return result;
}

}  // namespace setsketch
