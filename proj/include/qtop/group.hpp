#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtop {

/// Finite group given by its multiplication table. Validated exhaustively on
/// construction (identity, inverses, associativity) so that quandle
/// constructors built on top of it never see a non-group.
class GroupTable {
 public:
  GroupTable(int n, std::vector<int> mult, std::string label = "")
      : n_(n), mult_(std::move(mult)), label_(std::move(label)) {
    if (n_ <= 0) throw std::invalid_argument("GroupTable: size must be positive");
    if (mult_.size() != static_cast<std::size_t>(n_) * n_) {
      throw std::invalid_argument("GroupTable: mult table must be n*n");
    }
    validate();
  }

  static GroupTable cyclic(int n) {
    require_positive(n);
    std::vector<int> m(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return GroupTable(n, std::move(m), "Z" + std::to_string(n));
  }

  /// Dihedral group of order 2n, realized as affine maps x -> ex + c (mod n)
  /// with e = +-1. Index c encodes (+1, c), index n+c encodes (-1, c).
  static GroupTable dihedral(int n) {
    require_positive(n);
    const int order = 2 * n;
    auto idx = [n](int eps, int c) { return (eps == 1 ? 0 : n) + ((c % n) + n) % n; };
    std::vector<int> m(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i) {
      int e1 = i < n ? 1 : -1, c1 = i % n;
      for (int j = 0; j < order; ++j) {
        int e2 = j < n ? 1 : -1, c2 = j % n;
        // (e1,c1) o (e2,c2) : x -> e1(e2 x + c2) + c1
        m[static_cast<std::size_t>(i) * order + j] = idx(e1 * e2, e1 * c2 + c1);
      }
    }
    return GroupTable(order, std::move(m), "D" + std::to_string(n));
  }

  /// Symmetric group on k letters, elements enumerated lexicographically.
  static GroupTable symmetric(int k) {
    require_positive(k);
    if (k > 5) throw std::invalid_argument("GroupTable::symmetric: k > 5 not supported");
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    do {
      index.emplace(base, static_cast<int>(elems.size()));
      elems.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    const int order = static_cast<int>(elems.size());
    std::vector<int> m(static_cast<std::size_t>(order) * order);
    std::vector<int> comp(k);
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) {
        for (int x = 0; x < k; ++x) comp[x] = elems[i][elems[j][x]];  // (p o q)(x) = p(q(x))
        m[static_cast<std::size_t>(i) * order + j] = index.at(comp);
      }
    return GroupTable(order, std::move(m), "S" + std::to_string(k));
  }

  int size() const { return n_; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  const std::string& label() const { return label_; }
  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  static void require_positive(int n) {
    if (n <= 0) throw std::invalid_argument("group size must be positive");
  }

  void validate() {
    for (int v : mult_) {
      if (v < 0 || v >= n_) throw std::invalid_argument("GroupTable: entry out of range");
    }
    id_ = -1;
    for (int e = 0; e < n_; ++e) {
      bool ok = true;
      for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        id_ = e;
        break;
      }
    }
    if (id_ < 0) throw std::invalid_argument("GroupTable: no identity element");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (mul(a, b) == id_ && mul(b, a) == id_) {
          inv_[a] = b;
          break;
        }
      }
      if (inv_[a] < 0) throw std::invalid_argument("GroupTable: element without inverse");
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw std::invalid_argument("GroupTable: not associative at (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
          }
  }

  int n_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  int id_ = 0;
  std::string label_;
};

}  // namespace qtop
