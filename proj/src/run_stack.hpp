#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hyperfold::detail {

/// Stack of pending continuations with run-length compression: the rewriting
/// machines push the same continuation many times in a row while a counter
/// argument descends, so equal neighbours share one slot.
template <class T>
class RunStack {
public:
    void push(T value) {
        if (!runs_.empty() && runs_.back().first == value) {
            ++runs_.back().second;
            return;
        }
        runs_.emplace_back(std::move(value), 1);
    }

    /// Precondition: !empty().
    T pop() {
        auto& top = runs_.back();
        if (--top.second > 0) return top.first;
        T value = std::move(top.first);
        runs_.pop_back();
        return value;
    }

    bool empty() const { return runs_.empty(); }

private:
    std::vector<std::pair<T, std::uint64_t>> runs_;
};

} // namespace hyperfold::detail
