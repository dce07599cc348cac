#pragma once

#include <gmpxx.h>

namespace tcq {

// Arbitrary-precision integer used throughout the library. Field moduli are
// not bounded by machine word size, so everything scalar is an Int.
using Int = mpz_class;

}  // namespace tcq
