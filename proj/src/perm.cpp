#include "pi/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace pi {

Perm::Perm(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> hit(map_.size(), false);
  for (std::size_t image : map_) {
    if (image >= map_.size() || hit[image]) {
      throw std::invalid_argument("Perm: map is not a bijection");
    }
    hit[image] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Perm(std::move(m));
}

Perm Perm::then(const Perm& next) const {
  if (next.size() != size()) throw std::invalid_argument("Perm::then: size mismatch");
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[i] = next.map_[map_[i]];
  return Perm(std::move(m));
}

Perm Perm::inverse() const {
  std::vector<std::size_t> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[map_[i]] = i;
  return Perm(std::move(m));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) os << ' ';
      os << i;
      first = false;
      i = map_[i];
    }
    os << ')';
  }
  return os.str();
}

std::string format_perm(const Perm& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) os << i << " -> " << p[i] << '\n';
  os << "cycles: " << p.cycles() << '\n';
  return os.str();
}

}  // namespace pi
