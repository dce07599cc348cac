#include "tcq/rng.hpp"

#include <cstddef>
#include <vector>

#include "tcq/errors.hpp"

namespace tcq {

SeededRng::SeededRng(std::string_view seed, std::string_view domain) {
  // Length-prefixed framing so (seed, domain) pairs cannot collide.
  std::vector<std::uint32_t> words;
  words.reserve(seed.size() + domain.size() + 4);
  words.push_back(0x54435131u);  // "TCQ1"
  words.push_back(static_cast<std::uint32_t>(domain.size()));
  for (unsigned char c : domain) words.push_back(c);
  words.push_back(static_cast<std::uint32_t>(seed.size()));
  for (unsigned char c : seed) words.push_back(c);
  std::seed_seq sq(words.begin(), words.end());
  gen_.seed(sq);
}

std::uint64_t SeededRng::next_u64() { return gen_(); }

Int SeededRng::below(const Int& bound) {
  if (bound <= 0) throw MathDomainError("SeededRng::below needs a positive bound");
  if (bound == 1) return 0;
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  std::vector<unsigned char> buf(nbytes);
  while (true) {
    std::uint64_t word = 0;
    unsigned have = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
      if (have == 0) {
        word = next_u64();
        have = 8;
      }
      buf[i] = static_cast<unsigned char>(word & 0xff);
      word >>= 8;
      --have;
    }
    Int r;
    mpz_import(r.get_mpz_t(), nbytes, 1, 1, 0, 0, buf.data());
    r >>= (8 * nbytes - bits);
    if (r < bound) return r;
  }
}

Int SeededRng::nonzero_below(const Int& bound) {
  if (bound <= 1) throw MathDomainError("SeededRng::nonzero_below needs bound > 1");
  while (true) {
    Int r = below(bound);
    if (r != 0) return r;
  }
}

std::string subseed(std::string_view seed, std::string_view label) {
  std::string s;
  s.reserve(seed.size() + label.size() + 1);
  s.append(seed);
  s.push_back('\0');
  s.append(label);
  return s;
}

}  // namespace tcq
