#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidinv/errors.hpp"

namespace braidinv {

// One Artin generator letter sigma_index^sign with 1 <= index <= n-1.
struct BraidLetter {
  int index;
  int sign;  // +1 or -1
  bool operator==(const BraidLetter &) const = default;
};

// A braid word in B_n.  Letters read top to bottom of the diagram, strands
// are oriented downward, and the closure joins bottom position j to top
// position j.  Words are kept literally: no braid-relation rewriting.
class BraidWord {
 public:
  BraidWord() : n_(1) {}
  BraidWord(int n, std::vector<BraidLetter> letters);

  int strand_count() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<BraidLetter> &letters() const { return letters_; }
  const BraidLetter &letter(int r) const;  // 1-based crossing index

  std::string to_string() const;  // "1 -2 1"
  bool operator==(const BraidWord &) const = default;

 private:
  int n_;
  std::vector<BraidLetter> letters_;
};

// Permutation of {1, ..., n}; apply(i) is the image of position i.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation from_images(std::vector<int> images);  // 1-based images

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int pos) const { return images_[static_cast<std::size_t>(pos - 1)]; }
  bool is_identity() const;

  // this, then next:  result(i) = next(this(i))
  Permutation then(const Permutation &next) const;
  Permutation inverse() const;

  int cycle_count() const;
  int cycle_length_of(int pos) const;
  std::vector<int> cycle_type() const;  // cycle lengths, ascending

  bool operator==(const Permutation &) const = default;

 private:
  std::vector<int> images_;
};

// Whitespace-separated nonzero signed integers; j encodes sigma_|j|^sign(j).
// When n is omitted it is inferred as max|j| + 1 (1 for the empty word).
BraidWord parse_braid_word(const std::string &text, std::optional<int> n = std::nullopt);

// Top position -> bottom position, applying letters in word order.
Permutation permutation_of(const BraidWord &beta);

int writhe(const BraidWord &beta);
int closure_component_count(const BraidWord &beta);
bool is_knot_closure(const BraidWord &beta);

// Throws domain_error naming the component count unless the closure is a knot.
void require_knot_closure(const BraidWord &beta);

BraidWord concat(const BraidWord &a, const BraidWord &b);
BraidWord inverse(const BraidWord &beta);
BraidWord conjugate(const BraidWord &beta, const BraidWord &gamma);  // g b g^-1

// One full revolution of the closed braid starting just below crossing r,
// with crossing r smoothed: the letters r+1, ..., k, 1, ..., r-1 in order.
Permutation smoothed_pass_permutation(const BraidWord &beta, int r);

// k letters drawn uniformly from {sigma_1^\pm, ..., sigma_{n-1}^\pm} with a
// deterministic seeded generator.  With require_knot the whole word is
// resampled until its closure is a knot, up to 10000 attempts.
BraidWord random_braid(int n, int k, std::uint64_t seed, bool require_knot);

}  // namespace braidinv
