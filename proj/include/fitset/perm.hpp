#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fitset {

/// Permutation of {0, ..., degree-1}. Text form uses 1-based points.
/// Composition is left-to-right: (a * b) maps x to b[a[x]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  Perm(int degree, std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  /// 1-based disjoint-cycle form, "()" for the identity.
  std::string cycle_string() const;

  /// Parse cycle notation over points 1..degree. Cycles need not be
  /// disjoint; they are applied left-to-right. Throws InputError.
  static Perm parse(std::string_view text, int degree);

 private:
  std::vector<int> images_;
};

}  // namespace fitset
