#include "graphlet/instrumentation.hpp"

namespace graphlet {

MemoryTracker& MemoryTracker::instance() {
  static MemoryTracker tracker;
  return tracker;
}

void MemoryTracker::reset() {
  current_.store(0);
  peak_.store(0);
  largest_.store(0);
}

void MemoryTracker::on_alloc(std::size_t words) {
  std::size_t now = current_.fetch_add(words) + words;
  std::size_t peak = peak_.load();
  while (now > peak && !peak_.compare_exchange_weak(peak, now)) {
  }
  std::size_t largest = largest_.load();
  while (words > largest && !largest_.compare_exchange_weak(largest, words)) {
  }
}

void MemoryTracker::on_free(std::size_t words) { current_.fetch_sub(words); }

}  // namespace graphlet
