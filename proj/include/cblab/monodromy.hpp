#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cblab {

// A bijection of {1..n}. Stored zero-based; text input and output are one-based.
class Permutation {
 public:
  static Permutation identity(int n);
  // One-line notation, one-based images. DomainError unless a bijection of 1..n.
  static Permutation from_one_line(const std::vector<int>& images);
  // Disjoint cycles "(1 2)(3 4)" or one-line "2 1 4 3". Cycle text needs the
  // degree unless it is the largest entry; "id" or "()" is the identity.
  // ParseError carries the character position of the offending token.
  static Permutation parse(std::string_view text, std::optional<int> degree = std::nullopt);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }

  // Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  int cycle_count() const;
  std::vector<int> cycle_type() const;  // ascending cycle lengths, fixed points included
  std::vector<int> one_line() const;    // one-based images
  std::string cycle_string() const;     // "(1 2)(3 4)", "()" for the identity

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// Images of the two free generators under a homomorphism F_2 -> S_n.
class MonodromyRep {
 public:
  MonodromyRep(Permutation sigma1, Permutation sigma2);

  int degree() const { return sigma1_.degree(); }
  const Permutation& sigma1() const { return sigma1_; }
  const Permutation& sigma2() const { return sigma2_; }

 private:
  Permutation sigma1_, sigma2_;
};

struct DessinStats {
  int vertices = 0;
  int edges = 0;
};

bool is_transitive(const MonodromyRep& rep);
int cycle_count(const Permutation& p);

// c1 + c2 = n + 1. NotTransitiveError for a non-transitive pair.
bool is_tree(const MonodromyRep& rep);

// A bijection iota with sigma_i(rep1) o iota = iota o sigma_i(rep2) for both i.
// SizeLimitError for n > 10.
bool are_equivalent(const MonodromyRep& rep1, const MonodromyRep& rep2);

// -n + c1 + c2 for the covering of the disk. NotTransitiveError.
int euler_characteristic_disk(const MonodromyRep& rep);

// c3: cycles of (sigma2 o sigma1)^{-1}, i.e. apply sigma1, then sigma2, then invert.
int face_cycles(const MonodromyRep& rep);

// chi(sphere covering) - chi(disk covering), equal to c3.
int sphere_disk_euler_difference(const MonodromyRep& rep);

// -n + c1 + c2 + c3, the Euler characteristic of the compact covering surface.
int sphere_euler_characteristic(const MonodromyRep& rep);

// Path tree: sigma1 = (1 2)(3 4).., sigma2 = (2 3)(4 5)..
MonodromyRep chebyshev_monodromy(int n);

// vertices c1 + c2, edges n. NotTreeError unless rep is a tree.
DessinStats dessin_stats(const MonodromyRep& rep);

}  // namespace cblab
