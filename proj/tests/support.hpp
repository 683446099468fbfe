#pragma once

#include <doctest.h>

#include <factorlab/errors.hpp>

// Runs fn and requires it to raise an Error carrying exactly this code.
template <typename Fn>
void expect_error(factorlab::ErrorCode code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("no error raised");
  } catch (const factorlab::Error& e) {
    CHECK(static_cast<int>(e.code()) == static_cast<int>(code));
  }
}
