#pragma once

#include <gtest/gtest.h>

#include <vector>

#include "oracle.hpp"
#include "slownim/error.hpp"
#include "slownim/position.hpp"

inline oracle::Piles to_piles(const slownim::Position& x) { return x.to_vector(); }

inline slownim::Position to_position(const oracle::Piles& p) {
  return slownim::Position::canonicalize(p);
}

#define EXPECT_ERROR_KIND(stmt, expected_kind)                                   \
  do {                                                                           \
    try {                                                                        \
      stmt;                                                                      \
      ADD_FAILURE() << "expected slownim::Error from " #stmt;                    \
    } catch (const slownim::Error& e_) {                                         \
      EXPECT_EQ(e_.kind(), slownim::ErrorKind::expected_kind) << e_.what();      \
    }                                                                            \
  } while (0)
