#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "tcq/bigint.hpp"

namespace tcq {

// Deterministic pseudorandom stream derived from a byte seed plus a domain
// tag. Identical (seed, domain) pairs give identical streams on every
// platform; no operating-system entropy is used anywhere in the library.
// Uniform draws below a bound use rejection sampling on raw output words,
// never std::uniform_int_distribution, whose mapping is unspecified.
class SeededRng {
 public:
  SeededRng(std::string_view seed, std::string_view domain);

  std::uint64_t next_u64();

  // Uniform in [0, bound); bound must be positive.
  Int below(const Int& bound);

  // Uniform in [1, bound); bound must exceed 1.
  Int nonzero_below(const Int& bound);

 private:
  std::mt19937_64 gen_;
};

// Child seed for a named purpose. Distinct labels give unrelated streams
// even under the same parent seed.
std::string subseed(std::string_view seed, std::string_view label);

}  // namespace tcq
