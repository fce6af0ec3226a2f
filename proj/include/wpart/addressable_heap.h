#pragma once

#include <cstdint>
#include <vector>

#include "wpart/types.h"

namespace wpart {

// Binary max-heap over ids in [0, capacity) with O(log n) key updates.
class AddressableMaxHeap {
 public:
  explicit AddressableMaxHeap(std::size_t capacity = 0) : position_(capacity, kAbsent) {}

  void reset(std::size_t capacity) {
    heap_.clear();
    position_.assign(capacity, kAbsent);
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(std::uint32_t id) const { return position_[id] != kAbsent; }
  std::uint32_t top() const { return heap_.front().id; }
  Weight top_key() const { return heap_.front().key; }
  Weight key(std::uint32_t id) const { return heap_[position_[id]].key; }

  void push(std::uint32_t id, Weight key) {
    position_[id] = heap_.size();
    heap_.push_back({key, id});
    sift_up(heap_.size() - 1);
  }

  void pop() { erase(top()); }

  void erase(std::uint32_t id) {
    const std::size_t pos = position_[id];
    position_[id] = kAbsent;
    const Entry last = heap_.back();
    heap_.pop_back();
    if (pos == heap_.size()) return;
    heap_[pos] = last;
    position_[last.id] = pos;
    sift_down(pos);
    sift_up(position_[last.id]);
  }

  void update(std::uint32_t id, Weight key) {
    const std::size_t pos = position_[id];
    const Weight old = heap_[pos].key;
    heap_[pos].key = key;
    if (key > old) sift_up(pos);
    else sift_down(pos);
  }

  void add_delta(std::uint32_t id, Weight delta) { update(id, key(id) + delta); }

 private:
  struct Entry {
    Weight key;
    std::uint32_t id;
  };
  static constexpr std::size_t kAbsent = SIZE_MAX;

  void place(std::size_t pos, const Entry& e) {
    heap_[pos] = e;
    position_[e.id] = pos;
  }

  void sift_up(std::size_t pos) {
    const Entry e = heap_[pos];
    while (pos > 0) {
      const std::size_t parent = (pos - 1) / 2;
      if (heap_[parent].key >= e.key) break;
      place(pos, heap_[parent]);
      pos = parent;
    }
    place(pos, e);
  }

  void sift_down(std::size_t pos) {
    const Entry e = heap_[pos];
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t child = 2 * pos + 1;
      if (child >= n) break;
      if (child + 1 < n && heap_[child + 1].key > heap_[child].key) ++child;
      if (heap_[child].key <= e.key) break;
      place(pos, heap_[child]);
      pos = child;
    }
    place(pos, e);
  }

  std::vector<Entry> heap_;
  std::vector<std::size_t> position_;
};

}  // namespace wpart
