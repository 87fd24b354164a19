#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace jr {

// Set of signed indices containing at most one of i, -i for every i.
class EpsSubset {
 public:
  EpsSubset() = default;
  explicit EpsSubset(std::vector<int> elems) : e_(std::move(elems)) {
    std::sort(e_.begin(), e_.end(), order);
    e_.erase(std::unique(e_.begin(), e_.end()), e_.end());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) throw std::invalid_argument("eps-subset: index 0 is not allowed");
      if (i && std::abs(e_[i]) == std::abs(e_[i - 1]))
        throw std::invalid_argument("eps-subset: contains both i and -i for i = " + std::to_string(std::abs(e_[i])));
    }
  }
  EpsSubset(std::initializer_list<int> elems) : EpsSubset(std::vector<int>(elems)) {}

  const std::vector<int>& elements() const { return e_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  bool contains(int i) const { return std::binary_search(e_.begin(), e_.end(), i, order); }

  // |I|
  std::vector<int> abs() const {
    std::vector<int> r;
    for (int i : e_) r.push_back(std::abs(i));
    return r;
  }
  bool meets_abs(int i) const { return contains(i) || contains(-i); }

  // sign of the entry with absolute value i, 0 if absent
  int sign_of(int i) const { return contains(i) ? 1 : (contains(-i) ? -1 : 0); }

  EpsSubset sharp() const {
    std::vector<int> r;
    for (int i : e_) r.push_back(-i);
    return EpsSubset(r);
  }

  bool subset_of(const EpsSubset& o) const {
    return std::all_of(e_.begin(), e_.end(), [&](int i) { return o.contains(i); });
  }

  bool inside(const std::vector<int>& base) const {
    return std::all_of(e_.begin(), e_.end(),
                       [&](int i) { return std::find(base.begin(), base.end(), std::abs(i)) != base.end(); });
  }

  friend EpsSubset operator|(const EpsSubset& a, const EpsSubset& b) {
    std::vector<int> r = a.e_;
    r.insert(r.end(), b.e_.begin(), b.e_.end());
    return EpsSubset(r);
  }
  friend EpsSubset operator-(const EpsSubset& a, const EpsSubset& b) {
    std::vector<int> r;
    for (int i : a.e_)
      if (!b.contains(i)) r.push_back(i);
    return EpsSubset(r);
  }
  friend EpsSubset operator&(const EpsSubset& a, const EpsSubset& b) {
    std::vector<int> r;
    for (int i : a.e_)
      if (b.contains(i)) r.push_back(i);
    return EpsSubset(r);
  }
  friend bool operator==(const EpsSubset& a, const EpsSubset& b) { return a.e_ == b.e_; }
  friend bool operator!=(const EpsSubset& a, const EpsSubset& b) { return !(a == b); }
  friend bool operator<(const EpsSubset& a, const EpsSubset& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end(), order);
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
    return s + "}";
  }

 private:
  static bool order(int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
  }

  std::vector<int> e_;
};

// All 3^{#I0} eps-subsets of I0: each index absent, positive or negative, in
// base-3 counting order with the first index varying fastest.
inline std::vector<EpsSubset> enumerate_eps_subsets(const std::vector<int>& i0) {
  std::vector<EpsSubset> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < i0.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> e;
    std::size_t c = code;
    for (int idx : i0) {
      if (c % 3 == 1) e.push_back(idx);
      if (c % 3 == 2) e.push_back(-idx);
      c /= 3;
    }
    out.emplace_back(e);
  }
  return out;
}

}  // namespace jr
