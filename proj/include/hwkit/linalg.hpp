#pragma once

// Sparse exact linear algebra over the rationals.  Vectors are sorted
// (index, value) lists without zero entries.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hwkit/rational.hpp"

namespace hwkit {

using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

/// y += a * x
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec sparse_from_map(const std::map<std::uint32_t, Rational>& m);

/// Assigns dense indices to arbitrary ordered keys.
template <class Key, class Less = std::less<Key>>
class CoordIndex {
 public:
  std::uint32_t operator()(const Key& k) {
    auto [it, inserted] = map_.try_emplace(k, static_cast<std::uint32_t>(keys_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  const Key& key(std::uint32_t i) const { return keys_[i]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<Key, std::uint32_t, Less> map_;
  std::vector<Key> keys_;
};

/// Incrementally built row-echelon basis.  Every row remembers which
/// combination of the inserted vectors (identified by caller labels)
/// produced it, so membership answers carry exact witnesses and dependent
/// insertions yield kernel relations.
class EchelonBasis {
 public:
  explicit EchelonBasis(bool track = true) : track_(track) {}

  /// Inserts v with the given label.  Returns true if v was independent of
  /// the rows so far; otherwise, when tracking, *relation receives a
  /// non-trivial combination of labels summing to zero.
  bool insert(const SparseVec& v, std::uint32_t label, SparseVec* relation = nullptr);

  /// Reduces v; returns the remainder.  When tracking and combo is non-null,
  /// v - remainder == sum(combo[label] * inserted[label]).
  SparseVec reduce(SparseVec v, SparseVec* combo = nullptr) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(std::uint32_t index) const { return pivot_row_.count(index) != 0; }
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  bool track_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
};

}  // namespace hwkit
