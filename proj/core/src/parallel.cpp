#include "nga/parallel.hpp"

#include <algorithm>

namespace nga {

ThreadPool::ThreadPool(unsigned workers) {
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  worker_count_ = workers;
  threads_.reserve(worker_count_ > 0 ? worker_count_ - 1 : 0);
  for (unsigned i = 1; i < worker_count_; ++i) {
    threads_.emplace_back([this, i] { worker_loop(i); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
    ++generation_;
  }
  start_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::run_chunk(unsigned chunk_index) {
  const std::size_t span = task_end_ - task_begin_;
  const std::size_t base = span / task_chunks_;
  const std::size_t rem = span % task_chunks_;
  // First `rem` chunks carry one extra element.
  const std::size_t lo =
      task_begin_ + chunk_index * base + std::min<std::size_t>(chunk_index, rem);
  const std::size_t hi = lo + base + (chunk_index < rem ? 1 : 0);
  if (lo >= hi) return;
  try {
    (*task_body_)(lo, hi);
  } catch (...) {
    std::lock_guard lock(mutex_);
    if (!first_error_) first_error_ = std::current_exception();
  }
}

void ThreadPool::worker_loop(unsigned index) {
  std::uint64_t seen = 0;
  for (;;) {
    {
      std::unique_lock lock(mutex_);
      start_cv_.wait(lock, [&] { return stopping_ || generation_ != seen; });
      if (stopping_) return;
      seen = generation_;
    }
    if (index < task_chunks_) run_chunk(index);
    {
      std::lock_guard lock(mutex_);
      if (pending_ > 0 && --pending_ == 0) done_cv_.notify_all();
    }
  }
}

void ThreadPool::for_range(std::size_t begin, std::size_t end,
                           const std::function<void(std::size_t, std::size_t)>& body) {
  if (begin >= end) return;
  const std::size_t span = end - begin;
  const unsigned chunks =
      static_cast<unsigned>(std::min<std::size_t>(worker_count_, span));
  if (chunks <= 1 || threads_.empty()) {
    body(begin, end);
    return;
  }
  {
    std::lock_guard lock(mutex_);
    task_begin_ = begin;
    task_end_ = end;
    task_chunks_ = chunks;
    task_body_ = &body;
    first_error_ = nullptr;
    pending_ = worker_count_ - 1;
    ++generation_;
  }
  start_cv_.notify_all();
  run_chunk(0);
  {
    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [&] { return pending_ == 0; });
    task_body_ = nullptr;
    if (first_error_) std::rethrow_exception(first_error_);
  }
}

}  // namespace nga
