#ifndef HYPENT_TESTS_SUPPORT_HPP
#define HYPENT_TESTS_SUPPORT_HPP

#include <doctest.h>

#include "hypent/error.hpp"
#include "support_oracle.hpp"

#define CHECK_ERRC(expr, errc)                           \
  do {                                                   \
    bool caught_ = false;                                \
    try {                                                \
      (void)(expr);                                      \
    } catch (const hypent::Error& e) {                   \
      caught_ = true;                                    \
      CHECK_MESSAGE(e.code() == (errc), e.what());       \
    }                                                    \
    CHECK_MESSAGE(caught_, "expected " #errc);           \
  } while (0)

#endif  // HYPENT_TESTS_SUPPORT_HPP
