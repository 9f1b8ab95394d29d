#include "incdfs/build_task.hpp"

namespace incdfs {

BuildTask& BuildTask::operator=(BuildTask&& other) noexcept {
    if (this != &other) {
        if (handle_) {
            handle_.destroy();
        }
        handle_ = std::exchange(other.handle_, {});
    }
    return *this;
}

BuildTask::~BuildTask() {
    if (handle_) {
        handle_.destroy();
    }
}

std::uint64_t BuildTask::step() {
    if (done()) {
        return 0;
    }
    auto& promise = handle_.promise();
    promise.last_units = 0;
    handle_.resume();
    if (promise.error) {
        std::rethrow_exception(std::exchange(promise.error, nullptr));
    }
    return handle_.done() ? 0 : promise.last_units;
}

std::uint64_t BuildTask::advance(std::uint64_t budget) {
    std::uint64_t spent = 0;
    while (!done() && spent < budget) {
        spent += step();
    }
    return spent;
}

std::uint64_t BuildTask::finish() {
    std::uint64_t spent = 0;
    while (!done()) {
        spent += step();
    }
    return spent;
}

}  // namespace incdfs
