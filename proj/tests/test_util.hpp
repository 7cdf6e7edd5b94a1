#pragma once

#include <utility>

#include "cyclotome/errors.hpp"

// Runs fn and reports the thrown error code, or nullopt-like sentinel when
// nothing was thrown.  Keeps the error-class assertions one-liners.
template <typename Fn>
inline cyclotome::errc thrown_code(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const cyclotome::error& e) {
        return e.code();
    }
    return static_cast<cyclotome::errc>(0xFFFF);
}
