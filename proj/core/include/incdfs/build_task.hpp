#ifndef incdfs_build_task_hpp
#define incdfs_build_task_hpp

#include <coroutine>
#include <cstdint>
#include <exception>
#include <utility>

namespace incdfs {

/*
 * Resumable unit of construction work. A build routine is written as a
 * coroutine that `co_yield`s the number of work units it just performed;
 * the driver decides how many units to spend before suspending it again.
 * Running a task to completion is equivalent to an ordinary eager build.
 */
class BuildTask {
public:
    struct promise_type {
        std::uint64_t last_units = 0;
        std::exception_ptr error;

        BuildTask get_return_object() noexcept {
            return BuildTask(std::coroutine_handle<promise_type>::from_promise(*this));
        }
        std::suspend_always initial_suspend() noexcept { return {}; }
        std::suspend_always final_suspend() noexcept { return {}; }
        std::suspend_always yield_value(std::uint64_t units) noexcept {
            last_units = units;
            return {};
        }
        void return_void() noexcept {}
        void unhandled_exception() noexcept { error = std::current_exception(); }
    };

    BuildTask() = default;
    BuildTask(const BuildTask&) = delete;
    BuildTask& operator=(const BuildTask&) = delete;
    BuildTask(BuildTask&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
    BuildTask& operator=(BuildTask&& other) noexcept;
    ~BuildTask();

    bool valid() const noexcept { return static_cast<bool>(handle_); }
    bool done() const noexcept { return !handle_ || handle_.done(); }

    // Resumes once; returns the units reported by that step (0 at completion).
    std::uint64_t step();

    // Resumes until at least `budget` units are spent or the task completes.
    // The last step may overshoot the budget by at most one step's units.
    std::uint64_t advance(std::uint64_t budget);

    // Runs to completion and returns the units spent.
    std::uint64_t finish();

private:
    explicit BuildTask(std::coroutine_handle<promise_type> handle) noexcept : handle_(handle) {}

    std::coroutine_handle<promise_type> handle_;
};

}  // namespace incdfs

#endif /* incdfs_build_task_hpp */
