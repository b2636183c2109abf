#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "htoda/rational.hpp"

namespace htoda {

// Integer partition in canonical form: parts weakly decreasing, all positive.
// The empty partition is valid and denotes the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Accepts parts in any order; zeros are dropped, negatives rejected.
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "[3,1,1]" or "[]"

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }             // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                         // 1-based, 0 beyond length
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;

  // Multiplicity vector: mult()[k] = number of parts equal to k (k >= 1).
  std::map<int, int> mult() const;

  std::string str() const;  // "[3,1,1]"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of d in reverse lexicographic order:
// [d] first, [1,...,1] last. partitions_of(0) = { [] }.
std::vector<Partition> partitions_of(int d);

// Number of standard tableaux of shape lambda, via the hook length formula.
Int dim_irrep(const Partition& lambda);

// kappa(lambda) = sum_i lambda_i (lambda_i - 2i + 1)
//              = 2 * sum over cells (i,j) of (j - i).
// Satisfies kappa(transpose) = -kappa.
long kappa(const Partition& lambda);

// Symmetry-group data of the conjugacy class with cycle type mu in S_d.
struct ClassData {
  Int z;           // centralizer order: prod_k mult_k! * k^mult_k
  Int class_size;  // d! / z
};
ClassData class_data(const Partition& mu);

// Indexes all partitions of size <= max_size; used as a fixed basis order.
// Order: by size, then reverse lexicographic within each size.
class PartitionTable {
 public:
  explicit PartitionTable(int max_size);

  int max_size() const { return max_size_; }
  int count() const { return static_cast<int>(list_.size()); }
  const Partition& operator[](int idx) const { return list_[idx]; }
  // Returns -1 when absent (size too large).
  int index_of(const Partition& p) const;

 private:
  int max_size_;
  std::vector<Partition> list_;
  std::map<Partition, int> index_;
};

}  // namespace htoda
