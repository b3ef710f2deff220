#pragma once

// Iterative set partition generators. Every engine owns an explicit label
// array and emits 0-based restricted growth strings through a span that
// aliases it; the span is invalidated by the following next() call. The
// first call to next() yields the single-block partition. None of the
// engines recurse, and state is O(n) words.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "setpart/rgs.hpp"

namespace setpart::engines {

using View = std::span<const Label>;

/// Lexicographic order through advance_lexicographic, the same successor
/// rule as rgs_successor.
class Reference {
 public:
  explicit Reference(int n) : labels_(n, 0) {}

  std::optional<View> next() {
    if (!started_) {
      started_ = true;
      return View(labels_);
    }
    if (exhausted_ || !advance_lexicographic(labels_)) {
      exhausted_ = true;
      return std::nullopt;
    }
    return View(labels_);
  }

  bool exhausted() const { return exhausted_; }
  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t state_words() const { return labels_.size(); }

 private:
  std::vector<Label> labels_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Hutchinson's codeword scheme: the rightmost codeword that does not exceed
/// the maximum of the codewords to its left is incremented and everything
/// after it is cleared. No auxiliary arrays are kept, so each candidate
/// position rescans its prefix.
class Hutchinson {
 public:
  explicit Hutchinson(int n) : code_(n, 0) {}

  std::optional<View> next() {
    if (!started_) {
      started_ = true;
      return View(code_);
    }
    if (exhausted_) return std::nullopt;
    const int n = static_cast<int>(code_.size());
    for (int j = n - 1; j >= 1; --j) {
      Label prefix_max = 0;
      for (int i = 0; i < j; ++i) prefix_max = std::max(prefix_max, code_[i]);
      if (code_[j] <= prefix_max) {
        ++code_[j];
        for (int k = j + 1; k < n; ++k) code_[k] = 0;
        return View(code_);
      }
    }
    exhausted_ = true;
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  int size() const { return static_cast<int>(code_.size()); }
  std::size_t state_words() const { return code_.size(); }

 private:
  std::vector<Label> code_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Semba's generator: alongside the labels it keeps limit[i], the largest
/// value position i may take (one past the prefix maximum), so the pivot
/// search is a plain comparison and the suffix reset refreshes both arrays.
class Semba {
 public:
  explicit Semba(int n) : labels_(n, 0), limit_(n, 1) {}

  std::optional<View> next() {
    if (!started_) {
      started_ = true;
      return View(labels_);
    }
    if (exhausted_) return std::nullopt;
    const int n = static_cast<int>(labels_.size());
    int j = n - 1;
    while (j >= 1 && labels_[j] == limit_[j]) --j;
    if (j < 1) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++labels_[j];
    const Label tail_limit = std::max<Label>(limit_[j], labels_[j] + 1);
    for (int k = j + 1; k < n; ++k) {
      labels_[k] = 0;
      limit_[k] = tail_limit;
    }
    return View(labels_);
  }

  bool exhausted() const { return exhausted_; }
  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t state_words() const { return labels_.size() + limit_.size(); }

 private:
  std::vector<Label> labels_;
  std::vector<Label> limit_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Er's generator, written as an explicit-stack unrolling of
///
///   SP(m, p): if p > n: emit
///             else: for i in 1..m: c[p] = i; SP(m, p + 1)
///                   c[p] = m + 1; SP(m + 1, p + 1)
///
/// Frame p stores the block count m it was entered with; its loop counter is
/// the label itself. The innermost frame is run as a flat loop.
class Er {
 public:
  explicit Er(int n) : labels_(n, 0), blocks_(n, 1) {}

  std::optional<View> next() {
    if (!started_) {
      started_ = true;
      return View(labels_);
    }
    if (exhausted_) return std::nullopt;
    const int last = static_cast<int>(labels_.size()) - 1;
    if (last >= 1 && labels_[last] < blocks_[last]) {
      ++labels_[last];
      return View(labels_);
    }
    // Return from finished frames until one still has iterations left.
    int p = last - 1;
    while (p >= 1 && labels_[p] == blocks_[p]) --p;
    if (p < 1) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++labels_[p];
    // Re-enter the callee frames.
    for (int q = p + 1; q <= last; ++q) {
      blocks_[q] = blocks_[q - 1] + (labels_[q - 1] == blocks_[q - 1] ? 1 : 0);
      labels_[q] = 0;
    }
    return View(labels_);
  }

  bool exhausted() const { return exhausted_; }
  int size() const { return static_cast<int>(labels_.size()); }
  std::size_t state_words() const { return labels_.size() + blocks_.size(); }

 private:
  std::vector<Label> labels_;
  // blocks_[p]: number of distinct labels among labels_[0..p-1].
  std::vector<Label> blocks_;
  bool started_ = false;
  bool exhausted_ = false;
};

/// Djokic, Miyakawa, Sekiguchi, Semba and Stojmenovic's generator. Positions
/// are 1-based as in the original listing (c_[0] is padding). stack_[0..top_]
/// holds the positions whose codeword may still grow; the final position is
/// swept by a flat loop over 0 .. n - top_ - 1.
class Djokic {
 public:
  explicit Djokic(int n) : n_(n), c_(n + 1, 0), stack_(n, 0) {}

  std::optional<View> next() {
    if (!started_) {
      started_ = true;
      pos_ = 1;
      top_ = 0;
      stack_[0] = 1;
      descend();
      return view();
    }
    if (sweep_ < sweep_end_) {
      c_[n_] = static_cast<Label>(sweep_++);
      return view();
    }
    if (exhausted_) return std::nullopt;
    pos_ = stack_[top_];
    ++c_[pos_];
    if (c_[pos_] >= pos_ - top_) --top_;
    if (pos_ == 1) {
      exhausted_ = true;
      return std::nullopt;
    }
    descend();
    return view();
  }

  bool exhausted() const { return exhausted_; }
  int size() const { return n_; }
  std::size_t state_words() const { return c_.size() + stack_.size(); }

 private:
  View view() const { return View(c_.data() + 1, static_cast<std::size_t>(n_)); }

  void descend() {
    while (pos_ < n_ - 1) {
      ++pos_;
      c_[pos_] = 0;
      ++top_;
      stack_[top_] = pos_;
    }
    c_[n_] = 0;
    sweep_ = 1;
    sweep_end_ = n_ - top_;
  }

  int n_;
  std::vector<Label> c_;
  std::vector<int> stack_;
  int pos_ = 1;
  int top_ = 0;
  int sweep_ = 0;
  int sweep_end_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
};

}  // namespace setpart::engines
