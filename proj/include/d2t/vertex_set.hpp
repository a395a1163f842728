#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace d2t {

// Set of vertex ids over a fixed universe {0..n-1}, one bit per vertex.
// Membership, intersection and popcount are word-parallel and never
// allocate; this is the solver's inner-loop currency.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(int universe)
      : n_(universe), words_(static_cast<size_t>(universe + 63) / 64, 0) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    assert(v >= 0 && v < n_);
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    assert(v >= 0 && v < n_);
    words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < n_);
    words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int count_and(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // set difference: removes every element of o
  VertexSet& subtract(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    a |= b;
    return a;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a &= b;
    return a;
  }

  bool operator==(const VertexSet&) const = default;

  // lowest element, or -1 when empty
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  class const_iterator {
  public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    const_iterator() = default;
    const_iterator(const std::vector<uint64_t>* words, size_t wi)
        : words_(words), wi_(wi) {
      if (words_ && wi_ < words_->size()) {
        cur_ = (*words_)[wi_];
        skip_zero_words();
      }
    }

    int operator*() const {
      return static_cast<int>(wi_ * 64) + std::countr_zero(cur_);
    }

    const_iterator& operator++() {
      cur_ &= cur_ - 1;
      skip_zero_words();
      return *this;
    }

    bool operator==(const const_iterator& o) const {
      return wi_ == o.wi_ && cur_ == o.cur_;
    }

  private:
    void skip_zero_words() {
      while (cur_ == 0 && wi_ + 1 < words_->size()) cur_ = (*words_)[++wi_];
      if (cur_ == 0) wi_ = words_->size();
    }

    const std::vector<uint64_t>* words_ = nullptr;
    size_t wi_ = 0;
    uint64_t cur_ = 0;
  };

  const_iterator begin() const {
    return words_.empty() ? end() : const_iterator(&words_, 0);
  }
  const_iterator end() const { return const_iterator(&words_, words_.size()); }

private:
  void trim() {
    if (int r = n_ & 63; r != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << r) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace d2t
