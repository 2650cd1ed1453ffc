#pragma once

#include <functional>

namespace fibspec {

// Runs work(0), ..., work(n_jobs - 1) on up to n_threads workers. Callers
// write results into per-index slots, so merged output never depends on the
// schedule. The first exception thrown by a job is rethrown after all
// workers finish.
void parallel_for(int n_jobs, int n_threads,
                  const std::function<void(int)>& work);

}  // namespace fibspec
