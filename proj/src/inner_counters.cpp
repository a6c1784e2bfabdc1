#include "ainv/inner_counters.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace ainv {

namespace {

constexpr std::size_t kRunLength = 16;

// Sorts [first, last) by insertion; every shift is one strict inversion.
Count insertion_count(Key* first, Key* last) {
  Count inversions = 0;
  for (Key* i = first + 1; i < last; ++i) {
    const Key value = *i;
    Key* j = i;
    for (; j > first && value < *(j - 1); --j) *j = *(j - 1);
    inversions += static_cast<std::size_t>(i - j);
    *j = value;
  }
  return inversions;
}

}  // namespace

Count merge_count(std::span<const Key> items) {
  const std::size_t n = items.size();
  if (n < 2) return 0;
  if (n <= 2 * kRunLength) {
    std::array<Key, 2 * kRunLength> small;
    std::copy(items.begin(), items.end(), small.begin());
    return insertion_count(small.data(), small.data() + n);
  }

  std::vector<Key> a(items.begin(), items.end());
  std::vector<Key> b(n);
  Count inversions = 0;

  for (std::size_t lo = 0; lo < n; lo += kRunLength) {
    inversions += insertion_count(a.data() + lo, a.data() + std::min(lo + kRunLength, n));
  }
  for (std::size_t width = kRunLength; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, out = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          // a[j] jumps ahead of everything left in the left run.
          inversions += mid - i;
          b[out++] = a[j++];
        } else {
          b[out++] = a[i++];
        }
      }
      out = std::copy(a.begin() + i, a.begin() + mid, b.begin() + out) - b.begin();
      std::copy(a.begin() + j, a.begin() + hi, b.begin() + out);
    }
    a.swap(b);
  }
  return inversions;
}

Count fenwick_count(std::span<const Key> items) {
  const std::size_t n = items.size();
  if (n < 2) return 0;

  std::vector<Key> values(items.begin(), items.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  // tree[i] covers ranks (i - lowbit(i), i], 1-based.
  std::vector<std::uint64_t> tree(values.size() + 1, 0);
  Count inversions = 0;
  for (std::size_t k = n; k-- > 0;) {
    const auto rank = static_cast<std::size_t>(
        std::lower_bound(values.begin(), values.end(), items[k]) - values.begin());
    // Strictly smaller keys seen so far occupy ranks [1, rank].
    for (std::size_t i = rank; i > 0; i &= i - 1) inversions += tree[i];
    for (std::size_t i = rank + 1; i < tree.size(); i += i & (~i + 1)) ++tree[i];
  }
  return inversions;
}

std::unique_ptr<InnerCounter> make_inner_counter(std::string_view name) {
  if (name == "merge") return std::make_unique<MergeCounter>();
  if (name == "fenwick") return std::make_unique<FenwickCounter>();
  throw std::invalid_argument("unknown inner counter '" + std::string(name) +
                              "' (expected merge or fenwick)");
}

std::vector<std::string_view> inner_counter_names() { return {"merge", "fenwick"}; }

}  // namespace ainv
