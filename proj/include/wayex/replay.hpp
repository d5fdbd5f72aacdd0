#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wayex/core.hpp"
#include "wayex/rng.hpp"

namespace wayex {

// Fixed-capacity ring buffer with uniform with-replacement sampling. Oldest
// entries are overwritten in FIFO order once the capacity is reached.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0)
      throw std::invalid_argument("replay capacity must be positive");
  }

  void push(TransitionRecord transition) {
    if (storage_.size() < capacity_) {
      storage_.push_back(std::move(transition));
    } else {
      storage_[head_] = std::move(transition);
    }
    head_ = (head_ + 1) % capacity_;
  }

  std::size_t size() const { return storage_.size(); }
  std::size_t capacity() const { return capacity_; }

  const TransitionRecord& at(std::size_t i) const { return storage_[i]; }

  // n uniform draws with replacement, as pointers into the buffer. The
  // pointers stay valid until the next push.
  std::vector<const TransitionRecord*> sample(std::size_t n, Rng& rng) const {
    if (storage_.empty())
      throw std::logic_error("cannot sample from an empty replay buffer");
    std::vector<const TransitionRecord*> batch;
    batch.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      batch.push_back(&storage_[rng.below(storage_.size())]);
    return batch;
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;
  std::vector<TransitionRecord> storage_;
};

}  // namespace wayex
