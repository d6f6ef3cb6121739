#include "fitset/perm.hpp"

#include <numeric>
#include <sstream>

#include "fitset/error.hpp"

namespace fitset {

Perm::Perm(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(int degree, std::vector<int> images) : images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != degree)
    throw InputError("permutation image list does not match degree");
  std::vector<char> seen(degree, 0);
  for (int x : images_) {
    if (x < 0 || x >= degree || seen[x])
      throw InputError("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::operator*(const Perm& o) const {
  std::vector<int> img(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) img[x] = o.images_[images_[x]];
  return Perm(degree(), std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<int>(x);
  return Perm(degree(), std::move(img));
}

bool Perm::is_identity() const {
  for (size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (done[x] || images_[x] == x) continue;
    any = true;
    out << '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (y + 1);
      done[y] = 1;
      y = images_[y];
      first = false;
    } while (y != x);
    out << ')';
  }
  return any ? out.str() : "()";
}

Perm Perm::parse(std::string_view text, int degree) {
  if (degree <= 0) throw InputError("permutation degree must be positive");
  Perm result(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("expected '(' at position " + std::to_string(i) +
                       " in permutation \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    std::vector<char> used(degree, 0);
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("expected point at position " + std::to_string(i) +
                         " in permutation \"" + std::string(text) + "\"");
      int p = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        p = p * 10 + (text[i++] - '0');
      if (p < 1 || p > degree)
        throw InputError("point " + std::to_string(p) + " out of range 1.." +
                         std::to_string(degree));
      if (used[p - 1])
        throw InputError("point " + std::to_string(p) +
                         " repeated within one cycle");
      used[p - 1] = 1;
      cycle.push_back(p - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {  // tolerate comma separators
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size())
      throw InputError("unclosed cycle in permutation \"" + std::string(text) +
                       "\"");
    ++i;  // ')'
    saw_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<int> img(degree);
      std::iota(img.begin(), img.end(), 0);
      for (size_t k = 0; k < cycle.size(); ++k)
        img[cycle[k]] = cycle[(k + 1) % cycle.size()];
      result = result * Perm(degree, std::move(img));
    }
    skip_ws();
  }
  if (!saw_cycle)
    throw InputError("empty permutation text (use \"()\" for the identity)");
  return result;
}

}  // namespace fitset
