#pragma once

#include <cstdint>
#include <vector>

namespace ogplab {

// Order-p coupling tensor with symmetric storage: one value per sorted index
// tuple i1 <= i2 <= ... <= ip (multisets, diagonals included). The energy sum
// runs over all ordered tuples, so evaluation weights each stored entry by
// the number of ordered arrangements of its index multiset.
class SpinTensor {
 public:
  SpinTensor(int n, int p, std::vector<double> entries);

  int num_nodes() const { return n_; }
  int order() const { return p_; }

  // Number of sorted tuples, C(n+p-1, p).
  std::int64_t num_entries() const { return static_cast<std::int64_t>(entries_.size()); }

  const std::vector<double>& entries() const { return entries_; }
  double entry(std::int64_t rank) const { return entries_[rank]; }

  // Lexicographic enumeration of the sorted tuples backing entries().
  // visit(tuple, multiplicity, value) where multiplicity = p! / prod(m_i!).
  template <typename Visitor>
  void for_each_entry(Visitor&& visit) const {
    std::vector<int> idx(p_, 0);
    for (std::int64_t r = 0; r < num_entries(); ++r) {
      visit(idx, multiplicity(idx), entries_[static_cast<std::size_t>(r)]);
      // advance odometer with non-decreasing digits
      int pos = p_ - 1;
      while (pos >= 0 && idx[pos] == n_ - 1) --pos;
      if (pos < 0) break;
      const int v = idx[pos] + 1;
      for (int q = pos; q < p_; ++q) idx[q] = v;
    }
  }

  static std::int64_t count_sorted_tuples(int n, int p);

  // Ordered arrangements of a sorted tuple: p! / prod(multiplicities!).
  static std::int64_t multiplicity(const std::vector<int>& sorted_tuple);

  bool operator==(const SpinTensor& other) const {
    return n_ == other.n_ && p_ == other.p_ && entries_ == other.entries_;
  }

 private:
  int n_;
  int p_;
  std::vector<double> entries_;
};

}  // namespace ogplab
