#pragma once

#include <cstddef>
#include <functional>
#include <memory>

namespace crossgp {

/// Bounded worker pool shared by run-level and evaluation-level parallelism.
/// Nested parallel_for calls from inside a body reuse the same workers.
class WorkerPool {
public:
    explicit WorkerPool(std::size_t workers = 1);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    std::size_t workers() const noexcept { return workers_; }

    /// Calls body(i) for every i in [0, n). Order of calls is unspecified.
    void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) const;

private:
    struct Arena;

    std::size_t workers_;
    std::unique_ptr<Arena> arena_;
};

} // namespace crossgp
