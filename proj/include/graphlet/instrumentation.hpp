#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "graphlet/types.hpp"

namespace graphlet {

// Tracks auxiliary scratch memory (in 8-byte words) allocated by the kernel
// passes, beyond the graph and the output tables. Used to demonstrate that
// no kernel materializes an n-by-n structure and that peak scratch stays
// within c1*m + c2*n words. Process-wide: peaks are meaningful while one
// transform runs at a time.
class MemoryTracker {
 public:
  static MemoryTracker& instance();

  void reset();
  void on_alloc(std::size_t words);
  void on_free(std::size_t words);

  std::size_t current_words() const { return current_.load(); }
  std::size_t peak_words() const { return peak_.load(); }
  std::size_t largest_single_alloc_words() const { return largest_.load(); }

 private:
  std::atomic<std::size_t> current_{0};
  std::atomic<std::size_t> peak_{0};
  std::atomic<std::size_t> largest_{0};
};

// std::vector wrapper whose capacity is registered with the MemoryTracker
// for its whole lifetime. All kernel scratch goes through this.
template <typename T>
class TrackedVector {
 public:
  TrackedVector() = default;
  explicit TrackedVector(std::size_t n, T init = T{}) : v_(n, init) {
    words_ = (n * sizeof(T) + 7) / 8;
    MemoryTracker::instance().on_alloc(words_);
  }
  TrackedVector(TrackedVector&& other) noexcept
      : v_(std::move(other.v_)), words_(other.words_) {
    other.words_ = 0;
  }
  TrackedVector& operator=(TrackedVector&& other) noexcept {
    release();
    v_ = std::move(other.v_);
    words_ = other.words_;
    other.words_ = 0;
    return *this;
  }
  TrackedVector(const TrackedVector&) = delete;
  TrackedVector& operator=(const TrackedVector&) = delete;
  ~TrackedVector() { release(); }

  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }
  std::size_t size() const { return v_.size(); }
  T* data() { return v_.data(); }
  const T* data() const { return v_.data(); }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  std::vector<T>& get() { return v_; }
  const std::vector<T>& get() const { return v_; }

  // Hands the buffer to the caller; the tracker keeps charging it until
  // the surrounding lease expires, so callers pairing this with a
  // ScratchLease keep the books balanced.
  std::vector<T> take() {
    release();
    return std::move(v_);
  }

 private:
  void release() {
    if (words_) {
      MemoryTracker::instance().on_free(words_);
      words_ = 0;
    }
  }
  std::vector<T> v_;
  std::size_t words_ = 0;
};

// RAII registration for scratch whose storage is owned elsewhere
// (e.g. plain vectors returned by kernel ops and held by the orchestrator).
class ScratchLease {
 public:
  ScratchLease() = default;
  explicit ScratchLease(std::size_t words) : words_(words) {
    MemoryTracker::instance().on_alloc(words_);
  }
  ScratchLease(ScratchLease&& other) noexcept : words_(other.words_) {
    other.words_ = 0;
  }
  ScratchLease& operator=(ScratchLease&& other) noexcept {
    reset();
    words_ = other.words_;
    other.words_ = 0;
    return *this;
  }
  ScratchLease(const ScratchLease&) = delete;
  ScratchLease& operator=(const ScratchLease&) = delete;
  ~ScratchLease() { reset(); }

  void reset() {
    if (words_) {
      MemoryTracker::instance().on_free(words_);
      words_ = 0;
    }
  }

 private:
  std::size_t words_ = 0;
};

template <typename T>
inline std::size_t words_of(std::size_t n) {
  return (n * sizeof(T) + 7) / 8;
}

}  // namespace graphlet
