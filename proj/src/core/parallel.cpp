#include "crossgp/core/parallel.hpp"

#include <algorithm>
#include <optional>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace crossgp {

struct WorkerPool::Arena {
    explicit Arena(std::size_t workers)
    {
        // Let TBB start more threads than cores when asked to.
        if (static_cast<int>(workers) > tbb::info::default_concurrency()) {
            limit.emplace(tbb::global_control::max_allowed_parallelism, workers);
        }
        arena.initialize(static_cast<int>(workers));
    }

    std::optional<tbb::global_control> limit;
    tbb::task_arena arena;
};

WorkerPool::WorkerPool(std::size_t workers) : workers_(std::max<std::size_t>(1, workers))
{
    if (workers_ > 1) {
        arena_ = std::make_unique<Arena>(workers_);
    }
}

WorkerPool::~WorkerPool() = default;

void WorkerPool::parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) const
{
    if (!arena_) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    arena_->arena.execute([&] {
        tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n), [&](const tbb::blocked_range<std::size_t>& r) {
            for (std::size_t i = r.begin(); i != r.end(); ++i) {
                body(i);
            }
        });
    });
}

} // namespace crossgp
