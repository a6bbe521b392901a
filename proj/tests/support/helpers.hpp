#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "dwlab/error.hpp"

namespace testing_support {

/// Passes when `fn` throws dwlab::Error of the given kind.
inline ::testing::AssertionResult throws_kind(dwlab::ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const dwlab::Error& e) {
        if (e.kind() == kind) return ::testing::AssertionSuccess();
        return ::testing::AssertionFailure() << "threw " << dwlab::to_string(e.kind()) << " (" << e.what() << ")";
    } catch (const std::exception& e) {
        return ::testing::AssertionFailure() << "threw a non-library exception: " << e.what();
    }
    return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace testing_support

#define EXPECT_DW_ERROR(kind, stmt) \
    EXPECT_TRUE(::testing_support::throws_kind(::dwlab::ErrorKind::kind, [&] { (void)(stmt); }))
