#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace snort {

class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

/// Open-addressing win/loss table with linear probing. Grows by doubling
/// until `max_entries` results are stored; one more insert throws
/// ResourceExhausted. Entries are never evicted, so a hit is always exact.
template <class Key, class Hash>
class TranspositionTable {
 public:
  explicit TranspositionTable(std::size_t max_entries) : max_entries_(max_entries) {
    reset(kInitialCapacity);
  }

  std::optional<bool> find(const Key& key) const {
    for (std::size_t i = Hash{}(key) & mask_;; i = (i + 1) & mask_) {
      if (state_[i] == kEmpty) return std::nullopt;
      if (keys_[i] == key) return state_[i] == kWin;
    }
  }

  void insert(const Key& key, bool win) {
    if (size_ >= max_entries_)
      throw ResourceExhausted("transposition table capacity exceeded");
    if ((size_ + 1) * 10 > capacity() * 7) reset(capacity() * 2);
    if (place(key, win ? kWin : kLoss)) ++size_;
  }

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return keys_.size(); }
  void clear() {
    size_ = 0;
    keys_.assign(kInitialCapacity, Key{});
    state_.assign(kInitialCapacity, kEmpty);
    mask_ = kInitialCapacity - 1;
  }

 private:
  static constexpr std::uint8_t kEmpty = 0;
  static constexpr std::uint8_t kLoss = 1;
  static constexpr std::uint8_t kWin = 2;
  static constexpr std::size_t kInitialCapacity = std::size_t{1} << 12;

  bool place(const Key& key, std::uint8_t value) {
    for (std::size_t i = Hash{}(key) & mask_;; i = (i + 1) & mask_) {
      if (state_[i] == kEmpty) {
        keys_[i] = key;
        state_[i] = value;
        return true;
      }
      if (keys_[i] == key) {
        state_[i] = value;
        return false;
      }
    }
  }

  void reset(std::size_t capacity) {
    std::vector<Key> old_keys(capacity);
    std::vector<std::uint8_t> old_state(capacity, kEmpty);
    old_keys.swap(keys_);
    old_state.swap(state_);
    mask_ = capacity - 1;
    for (std::size_t i = 0; i < old_state.size(); ++i)
      if (old_state[i] != kEmpty) place(old_keys[i], old_state[i]);
  }

  std::vector<Key> keys_;
  std::vector<std::uint8_t> state_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
  std::size_t max_entries_;
};

}  // namespace snort
