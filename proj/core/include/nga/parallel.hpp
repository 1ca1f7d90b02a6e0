#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nga {

// Fixed pool of workers executing static contiguous partitions of an index
// range. The partition depends only on (range, worker count), and callers
// must write to disjoint output slots, so results are identical for any
// worker count or scheduling.
class ThreadPool {
 public:
  // workers == 0 picks hardware_concurrency (at least 1).
  explicit ThreadPool(unsigned workers = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned workers() const { return worker_count_; }

  // Invokes body(chunk_begin, chunk_end) once per chunk; the calling thread
  // runs the first chunk. Blocks until all chunks finish; rethrows the first
  // exception raised by any chunk.
  void for_range(std::size_t begin, std::size_t end,
                 const std::function<void(std::size_t, std::size_t)>& body);

 private:
  void worker_loop(unsigned index);
  void run_chunk(unsigned chunk_index);

  unsigned worker_count_;
  std::vector<std::thread> threads_;

  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  std::uint64_t generation_ = 0;
  unsigned pending_ = 0;
  bool stopping_ = false;

  // Current task.
  std::size_t task_begin_ = 0;
  std::size_t task_end_ = 0;
  unsigned task_chunks_ = 0;
  const std::function<void(std::size_t, std::size_t)>* task_body_ = nullptr;
  std::exception_ptr first_error_;
};

}  // namespace nga
