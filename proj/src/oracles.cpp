#include "ainv/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ainv {

Count brute_count(std::span<const Key> items, std::size_t max_length) {
  if (items.size() > max_length) {
    throw std::length_error("brute_count: length " + std::to_string(items.size()) +
                            " exceeds oracle limit " + std::to_string(max_length));
  }
  Count inversions = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i] > items[j]) ++inversions;
    }
  }
  return inversions;
}

std::string_view to_string(GenMethod method) {
  switch (method) {
    case GenMethod::sorted: return "sorted";
    case GenMethod::reverse: return "reverse";
    case GenMethod::adjacent_swaps: return "adjacent_swaps";
    case GenMethod::window: return "window";
    case GenMethod::uniform_random: return "uniform_random";
    case GenMethod::constant: return "constant";
  }
  return "unknown";
}

GenMethod parse_gen_method(std::string_view name) {
  for (GenMethod m : {GenMethod::sorted, GenMethod::reverse, GenMethod::adjacent_swaps,
                      GenMethod::window, GenMethod::uniform_random, GenMethod::constant}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument(
      "unknown method '" + std::string(name) +
      "' (expected sorted, reverse, adjacent_swaps, window, uniform_random or constant)");
}

void validate(const GenSpec& spec) {
  switch (spec.method) {
    case GenMethod::sorted:
    case GenMethod::reverse:
      if (spec.parameter != 0) {
        throw std::invalid_argument(std::string(to_string(spec.method)) +
                                    " takes no parameter (got " +
                                    std::to_string(spec.parameter) + ")");
      }
      break;
    case GenMethod::window:
      if (spec.parameter == 0) throw std::invalid_argument("window width must be at least 1");
      break;
    case GenMethod::constant:
      if (spec.parameter > static_cast<std::uint64_t>(std::numeric_limits<Key>::max())) {
        throw std::invalid_argument("constant key " + std::to_string(spec.parameter) +
                                    " does not fit a signed 64-bit key");
      }
      break;
    case GenMethod::adjacent_swaps:
    case GenMethod::uniform_random:
      break;
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Lemire's multiply-and-reject.
  Count product = static_cast<Count>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t reject_below = (0 - bound) % bound;
    while (low < reject_below) {
      product = static_cast<Count>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

namespace {

// Applies up to k swaps of uniformly chosen in-order adjacent pairs.
void apply_adjacent_swaps(std::vector<Key>& keys, std::uint64_t k, std::mt19937_64& rng) {
  const std::size_t n = keys.size();
  if (n < 2) return;
  constexpr std::size_t absent = std::numeric_limits<std::size_t>::max();

  // members: indices i with keys[i] < keys[i+1]; slot[i]: index into members.
  std::vector<std::size_t> members(n - 1);
  std::vector<std::size_t> slot(n - 1);
  std::iota(members.begin(), members.end(), std::size_t{0});
  std::iota(slot.begin(), slot.end(), std::size_t{0});

  auto remove = [&](std::size_t i) {
    if (slot[i] == absent) return;
    const std::size_t moved = members.back();
    members[slot[i]] = moved;
    slot[moved] = slot[i];
    members.pop_back();
    slot[i] = absent;
  };
  auto add = [&](std::size_t i) {
    if (slot[i] != absent) return;
    slot[i] = members.size();
    members.push_back(i);
  };
  auto refresh = [&](std::size_t i) {
    if (keys[i] < keys[i + 1]) {
      add(i);
    } else {
      remove(i);
    }
  };

  for (std::uint64_t done = 0; done < k && !members.empty(); ++done) {
    const std::size_t i = members[uniform_below(rng, members.size())];
    std::swap(keys[i], keys[i + 1]);
    remove(i);
    if (i > 0) refresh(i - 1);
    if (i + 2 < n) refresh(i + 1);
  }
}

}  // namespace

std::vector<Key> generate(const GenSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  std::mt19937_64 rng(spec.seed);
  std::vector<Key> keys(n);

  switch (spec.method) {
    case GenMethod::sorted:
      std::iota(keys.begin(), keys.end(), Key{0});
      break;
    case GenMethod::reverse:
      for (std::size_t i = 0; i < n; ++i) keys[i] = static_cast<Key>(n - 1 - i);
      break;
    case GenMethod::adjacent_swaps:
      std::iota(keys.begin(), keys.end(), Key{0});
      apply_adjacent_swaps(keys, spec.parameter, rng);
      break;
    case GenMethod::window: {
      std::iota(keys.begin(), keys.end(), Key{0});
      const std::size_t w = spec.parameter;
      for (std::size_t start = 0; start < n; start += w) {
        const std::size_t len = std::min(w, n - start);
        for (std::size_t i = len; i-- > 1;) {
          std::swap(keys[start + i], keys[start + uniform_below(rng, i + 1)]);
        }
      }
      break;
    }
    case GenMethod::uniform_random:
      for (Key& key : keys) {
        key = spec.parameter == 0 ? static_cast<Key>(rng())
                                  : static_cast<Key>(uniform_below(rng, spec.parameter));
      }
      break;
    case GenMethod::constant:
      std::fill(keys.begin(), keys.end(), static_cast<Key>(spec.parameter));
      break;
  }
  return keys;
}

}  // namespace ainv
