#include "hwkit/linalg.hpp"

namespace hwkit {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rational v = y[i].second + a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec sparse_from_map(const std::map<std::uint32_t, Rational>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [k, c] : m)
    if (!c.is_zero()) v.emplace_back(k, c);
  return v;
}

SparseVec EchelonBasis::reduce(SparseVec v, SparseVec* combo) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_row_.find(v[pos].first);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    // Rows are normalized to a unit pivot at their smallest index, so the
    // subtraction clears v[pos] and leaves earlier entries untouched.
    Rational c = v[pos].second;
    axpy(v, -c, rows_[it->second]);
    if (track_ && combo) axpy(*combo, c, combos_[it->second]);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVec& v, std::uint32_t label, SparseVec* relation) {
  SparseVec combo;
  SparseVec rem = reduce(v, track_ ? &combo : nullptr);
  SparseVec own;
  if (track_) {
    own = {{label, Rational(1)}};
    axpy(own, Rational(-1), combo);
  }
  if (rem.empty()) {
    if (relation) *relation = std::move(own);
    return false;
  }
  Rational inv = Rational(1) / rem.front().second;
  for (auto& e : rem) e.second *= inv;
  for (auto& e : own) e.second *= inv;
  pivot_row_.emplace(rem.front().first, rows_.size());
  rows_.push_back(std::move(rem));
  combos_.push_back(std::move(own));
  return true;
}

}  // namespace hwkit
