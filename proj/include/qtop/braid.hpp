#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtop/continuum.hpp"
#include "qtop/finite.hpp"

namespace qtop {

/// Braid word on `strands` strands: letters are nonzero integers i with
/// |i| <= strands-1; sign selects generator vs inverse. Letters apply left
/// to right as a function pipeline.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord(int strands_, std::vector<int> letters_)
      : strands(strands_), letters(std::move(letters_)) {
    if (strands < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
    for (int l : letters) {
      if (l == 0 || std::abs(l) > strands - 1) {
        throw std::invalid_argument("BraidWord: letter " + std::to_string(l) +
                                    " out of range for " + std::to_string(strands) + " strands");
      }
    }
  }

  BraidWord inverse() const {
    std::vector<int> inv(letters.rbegin(), letters.rend());
    for (int& l : inv) l = -l;
    return BraidWord(strands, std::move(inv));
  }

  BraidWord concat(const BraidWord& other) const {
    if (other.strands != strands) throw std::invalid_argument("BraidWord: strand mismatch");
    std::vector<int> ls = letters;
    ls.insert(ls.end(), other.letters.begin(), other.letters.end());
    return BraidWord(strands, std::move(ls));
  }
};

// ---------------------------------------------------------------------------
// Action on tuples
// ---------------------------------------------------------------------------
// The generator acting on strands (i, i+1) maps (..., a, b, ...) to
// (..., b, a > b, ...): the strands cross and the strand passing under picks
// up a twist by the one passing over. Its inverse maps (a, b) back to
// (R_a^-1(b), a). This is the invertible crossing convention, which is what
// a braid-group action requires.

/// Apply a braid word to a tuple over a finite quandle.
inline std::vector<int> act(const FiniteQuandle& q, const BraidWord& w, std::vector<int> tuple) {
  if (static_cast<int>(tuple.size()) != w.strands) {
    throw std::invalid_argument("act: tuple length must equal strand count");
  }
  for (int v : tuple) {
    if (v < 0 || v >= q.size()) throw std::invalid_argument("act: tuple entry out of carrier");
  }
  bool needs_inverse = false;
  for (int l : w.letters) needs_inverse |= l < 0;
  std::vector<std::vector<int>> inv_cols;
  if (needs_inverse) {
    inv_cols.reserve(q.size());
    for (int b = 0; b < q.size(); ++b) inv_cols.push_back(q.column_inverse(b));
  }
  for (int l : w.letters) {
    int s = std::abs(l) - 1;
    int a = tuple[s], b = tuple[s + 1];
    if (l > 0) {
      tuple[s] = b;
      tuple[s + 1] = q.op(a, b);
    } else {
      tuple[s] = inv_cols[a][b];
      tuple[s + 1] = a;
    }
  }
  return tuple;
}

/// The same action over a continuum quandle (for iterated-map experiments;
/// fixed-point enumeration is finite-only).
inline std::vector<Point> act(const ContinuumSpec& spec, const BraidWord& w,
                              std::vector<Point> tuple) {
  if (static_cast<int>(tuple.size()) != w.strands) {
    throw std::invalid_argument("act: tuple length must equal strand count");
  }
  for (const Point& p : tuple) {
    if (!in_domain(spec, p)) throw std::domain_error("act: tuple entry outside domain");
  }
  for (int l : w.letters) {
    int s = std::abs(l) - 1;
    Point a = tuple[s], b = tuple[s + 1];
    if (l > 0) {
      tuple[s] = b;
      tuple[s + 1] = eval_raw(spec, a, b);
    } else {
      tuple[s] = right_mul_inverse(spec, a)(b);
      tuple[s + 1] = a;
    }
  }
  return tuple;
}

// ---------------------------------------------------------------------------
// Fixed points
// ---------------------------------------------------------------------------

struct FixedPointSet {
  long long count = 0;
  std::vector<std::vector<int>> tuples;  // lexicographically sorted; see tuples_complete
  bool tuples_complete = false;          // false when suppressed past tuple_cap
};

/// Exhaustive enumeration of tuples fixed by the word action. Refuses
/// explicitly when |carrier|^strands exceeds `bound`.
inline FixedPointSet fixed_points(const FiniteQuandle& q, const BraidWord& w,
                                  long long bound = 10000000, std::size_t tuple_cap = 4096) {
  long double space = 1.0L;
  for (int i = 0; i < w.strands; ++i) space *= q.size();
  if (space > static_cast<long double>(bound)) {
    throw std::runtime_error("fixed_points: search space |Q|^strands = " +
                             std::to_string(q.size()) + "^" + std::to_string(w.strands) +
                             " exceeds bound " + std::to_string(bound));
  }

  bool needs_inverse = false;
  for (int l : w.letters) needs_inverse |= l < 0;
  std::vector<std::vector<int>> inv_cols;
  if (needs_inverse) {
    for (int b = 0; b < q.size(); ++b) inv_cols.push_back(q.column_inverse(b));
  }

  FixedPointSet out;
  out.tuples_complete = true;
  std::vector<int> tuple(w.strands, 0);
  std::vector<int> image(w.strands);
  for (;;) {
    image = tuple;
    for (int l : w.letters) {
      int s = std::abs(l) - 1;
      int a = image[s], b = image[s + 1];
      if (l > 0) {
        image[s] = b;
        image[s + 1] = q.op(a, b);
      } else {
        image[s] = inv_cols[a][b];
        image[s + 1] = a;
      }
    }
    if (image == tuple) {
      ++out.count;
      if (out.tuples.size() < tuple_cap) {
        out.tuples.push_back(tuple);
      } else {
        out.tuples_complete = false;
      }
    }
    int k = w.strands - 1;
    while (k >= 0 && ++tuple[k] == q.size()) tuple[k--] = 0;
    if (k < 0) break;
  }
  if (!out.tuples_complete) out.tuples.clear();
  return out;
}

}  // namespace qtop
