#include "braidinv/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "braidinv/rng.hpp"

namespace braidinv {

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw domain_error("strand count must be at least 1, got " + std::to_string(n));
  for (const auto &l : letters_) {
    if (l.index < 1 || l.index > n - 1)
      throw domain_error("letter index " + std::to_string(l.index) +
                         " out of range for n=" + std::to_string(n) +
                         " (need 1 <= i <= n-1)");
    if (l.sign != 1 && l.sign != -1)
      throw domain_error("letter sign must be +1 or -1");
  }
}

const BraidLetter &BraidWord::letter(int r) const {
  if (r < 1 || r > length())
    throw domain_error("crossing index " + std::to_string(r) + " out of range 1.." +
                       std::to_string(length()));
  return letters_[static_cast<std::size_t>(r - 1)];
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto &l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

BraidWord parse_braid_word(const std::string &text, std::optional<int> n) {
  std::vector<BraidLetter> letters;
  int max_index = 0;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception &) {
      throw parse_error("braid word token '" + tok + "' is not an integer");
    }
    if (pos != tok.size())
      throw parse_error("braid word token '" + tok + "' is not an integer");
    if (v == 0)
      throw parse_error("braid word token '0' is invalid: generator indices are nonzero");
    const int idx = static_cast<int>(v < 0 ? -v : v);
    letters.push_back({idx, v < 0 ? -1 : 1});
    max_index = std::max(max_index, idx);
  }
  const int strands = n ? *n : max_index + 1;
  if (n && max_index >= *n)
    throw parse_error("letter index " + std::to_string(max_index) +
                      " out of range for n=" + std::to_string(*n) +
                      " (need |i| <= n-1)");
  return BraidWord(strands, std::move(letters));
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw internal_error("permutation size must be positive");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw internal_error("image list is not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation &next) const {
  if (next.size() != size()) throw internal_error("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i)
    out[static_cast<std::size_t>(i - 1)] = next.apply(apply(i));
  return from_images(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(apply(i) - 1)] = i;
  return from_images(std::move(out));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = apply(j))
      seen[static_cast<std::size_t>(j - 1)] = true;
  }
  return cycles;
}

int Permutation::cycle_length_of(int pos) const {
  int len = 1;
  for (int j = apply(pos); j != pos; j = apply(j)) ++len;
  return len;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> type;
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = apply(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

namespace {

// Trace all strands through a run of letters at once.  origin_at[p] is the
// top position of the strand currently at position p+1.
Permutation trace_letters(int n, const std::vector<BraidLetter> &letters,
                          int first, int count) {
  std::vector<int> origin_at(static_cast<std::size_t>(n));
  std::iota(origin_at.begin(), origin_at.end(), 1);
  const int k = static_cast<int>(letters.size());
  for (int step = 0; step < count; ++step) {
    int r = (first + step) % k;
    const int i = letters[static_cast<std::size_t>(r)].index;
    std::swap(origin_at[static_cast<std::size_t>(i - 1)], origin_at[static_cast<std::size_t>(i)]);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos)
    images[static_cast<std::size_t>(origin_at[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
  return Permutation::from_images(std::move(images));
}

}  // namespace

Permutation permutation_of(const BraidWord &beta) {
  if (beta.length() == 0) return Permutation(beta.strand_count());
  return trace_letters(beta.strand_count(), beta.letters(), 0, beta.length());
}

int writhe(const BraidWord &beta) {
  int w = 0;
  for (const auto &l : beta.letters()) w += l.sign;
  return w;
}

int closure_component_count(const BraidWord &beta) {
  return permutation_of(beta).cycle_count();
}

bool is_knot_closure(const BraidWord &beta) {
  return closure_component_count(beta) == 1;
}

void require_knot_closure(const BraidWord &beta) {
  const int c = closure_component_count(beta);
  if (c != 1)
    throw domain_error("closure has " + std::to_string(c) +
                       " components; this operation requires a knot");
}

BraidWord concat(const BraidWord &a, const BraidWord &b) {
  if (a.strand_count() != b.strand_count())
    throw domain_error("mismatched strand counts " + std::to_string(a.strand_count()) +
                       " vs " + std::to_string(b.strand_count()));
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strand_count(), std::move(letters));
}

BraidWord inverse(const BraidWord &beta) {
  std::vector<BraidLetter> letters(beta.letters().rbegin(), beta.letters().rend());
  for (auto &l : letters) l.sign = -l.sign;
  return BraidWord(beta.strand_count(), std::move(letters));
}

BraidWord conjugate(const BraidWord &beta, const BraidWord &gamma) {
  return concat(concat(gamma, beta), inverse(gamma));
}

Permutation smoothed_pass_permutation(const BraidWord &beta, int r) {
  const int k = beta.length();
  if (r < 1 || r > k)
    throw domain_error("crossing index " + std::to_string(r) + " out of range 1.." +
                       std::to_string(k));
  // Letters r+1, ..., k, 1, ..., r-1; the smoothed crossing r contributes
  // the identity.
  return trace_letters(beta.strand_count(), beta.letters(), r % k, k - 1);
}

BraidWord random_braid(int n, int k, std::uint64_t seed, bool require_knot) {
  if (n < 2) throw domain_error("random_braid requires n >= 2");
  if (k < 0) throw domain_error("random_braid requires k >= 0");
  constexpr int kMaxAttempts = 10000;
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<BraidLetter> letters;
    letters.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      const auto r = draw_below(gen, 2ull * static_cast<unsigned>(n - 1));
      letters.push_back({static_cast<int>(r / 2) + 1, (r % 2 == 0) ? 1 : -1});
    }
    BraidWord w(n, std::move(letters));
    if (!require_knot || is_knot_closure(w)) return w;
  }
  throw domain_error("random_braid gave up after 10000 attempts (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ", seed=" + std::to_string(seed) +
                     "): no sampled word closed to a knot");
}

}  // namespace braidinv
