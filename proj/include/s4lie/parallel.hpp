#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace s4lie {

// Worker count used by verification sweeps (default 1).
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs ok(i) for i in [0, count). Returns the smallest i with ok(i) == false,
// independently of the thread count. Indices above a known failure are skipped.
std::optional<std::size_t> find_first_failure(std::size_t count, const std::function<bool(std::size_t)>& ok);

// Runs body(i) for every i in [0, count).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace s4lie
