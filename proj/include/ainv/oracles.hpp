#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ainv/types.hpp"

namespace ainv {

inline constexpr std::size_t kDefaultOracleLimit = 100'000;

/// Pairwise double loop over i < j. Throws std::length_error above
/// `max_length` to keep accidental quadratic runs out of big inputs.
Count brute_count(std::span<const Key> items, std::size_t max_length = kDefaultOracleLimit);

enum class GenMethod { sorted, reverse, adjacent_swaps, window, uniform_random, constant };

std::string_view to_string(GenMethod method);
/// Throws std::invalid_argument on unknown names.
GenMethod parse_gen_method(std::string_view name);

/// Input recipe. `parameter` means:
///   adjacent_swaps  number of in-order adjacent swaps k
///   window          window width w >= 1
///   uniform_random  alphabet size; 0 stands for the full 2^64 range
///   constant        the repeated key
///   sorted/reverse  unused, must be 0
struct GenSpec {
  std::uint64_t n = 0;
  GenMethod method = GenMethod::sorted;
  std::uint64_t parameter = 0;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument with a readable message.
void validate(const GenSpec& spec);

/// Deterministic for a fixed spec. Randomness comes from std::mt19937_64
/// seeded with spec.seed and bounded draws by rejection, so output does not
/// depend on the standard library's distribution implementations.
std::vector<Key> generate(const GenSpec& spec);

/// Uniform integer in [0, bound), bound > 0. Portable across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace ainv
