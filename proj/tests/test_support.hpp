#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ainv/types.hpp"

namespace doctest {
template <>
struct StringMaker<unsigned __int128> {
  static String convert(unsigned __int128 value) {
    return ainv::format_count(value).c_str();
  }
};
}  // namespace doctest

namespace ainv::testing {

// Random keys over an alphabet of the given size; 0 means all 64-bit values.
inline std::vector<Key> random_keys(std::mt19937_64& rng, std::size_t length,
                                    std::uint64_t alphabet) {
  std::vector<Key> keys(length);
  for (Key& key : keys) {
    key = alphabet == 0 ? static_cast<Key>(rng()) : static_cast<Key>(rng() % alphabet);
  }
  return keys;
}

}  // namespace ainv::testing
