#include "htoda/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace htoda {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part in partition");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  parts_ = std::move(parts);
  size_ = 0;
  for (int p : parts_) size_ += p;
}

Partition Partition::parse(const std::string& text) {
  std::string s = text;
  std::erase(s, ' ');
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition text must look like [3,1,1]: " + text);
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty part in: " + text);
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument("bad part in: " + text);
      parts.push_back(v);
    }
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

std::map<int, int> Partition::mult() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::str() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with parts chosen weakly decreasing: visiting larger first
  // parts first yields reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

Int dim_irrep(const Partition& lambda) {
  const auto& l = lambda.parts();
  Partition tr = lambda.transpose();
  Int hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < l[i]; ++j) {
      int arm = l[i] - (j + 1);
      int leg = tr.parts()[j] - (i + 1);
      hooks *= arm + leg + 1;
    }
  }
  Int num = factorial(lambda.size());
  Int q = num / hooks;  // always divides
  return q;
}

long kappa(const Partition& lambda) {
  long k = 0;
  const auto& l = lambda.parts();
  for (int i = 0; i < lambda.length(); ++i)
    k += static_cast<long>(l[i]) * (l[i] - 2 * (i + 1) + 1);
  return k;
}

ClassData class_data(const Partition& mu) {
  Int z = 1;
  for (auto [k, m] : mu.mult()) {
    z *= factorial(m);
    Int kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(m));
    z *= kp;
  }
  ClassData cd;
  cd.z = z;
  cd.class_size = factorial(mu.size()) / z;
  return cd;
}

PartitionTable::PartitionTable(int max_size) : max_size_(max_size) {
  if (max_size < 0) throw std::invalid_argument("negative partition table size");
  for (int d = 0; d <= max_size; ++d)
    for (auto& p : partitions_of(d)) list_.push_back(p);
  for (int i = 0; i < count(); ++i) index_[list_[i]] = i;
}

int PartitionTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace htoda
