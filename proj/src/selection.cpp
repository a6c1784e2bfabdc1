#include "ainv/selection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ainv {
namespace {

void insertion_sort(RankedItem* first, RankedItem* last) {
  for (RankedItem* i = first + 1; i < last; ++i) {
    RankedItem value = *i;
    RankedItem* j = i;
    for (; j > first && value < *(j - 1); --j) *j = *(j - 1);
    *j = value;
  }
}

// Returns a pointer to the item of 0-based rank k within [first, last).
RankedItem* select_in(RankedItem* first, RankedItem* last, std::size_t k) {
  for (;;) {
    const auto n = static_cast<std::size_t>(last - first);
    if (n <= 5) {
      insertion_sort(first, last);
      return first + k;
    }

    // Gather the median of every group of five at the front.
    std::size_t medians = 0;
    for (std::size_t i = 0; i < n; i += 5) {
      const std::size_t end = std::min(i + 5, n);
      insertion_sort(first + i, first + end);
      std::swap(first[medians++], first[i + (end - i - 1) / 2]);
    }
    const RankedItem pivot = *select_in(first, first + medians, (medians - 1) / 2);

    RankedItem* mid =
        std::partition(first, last, [&](const RankedItem& x) { return x < pivot; });
    std::iter_swap(mid, std::find(mid, last, pivot));

    const auto pos = static_cast<std::size_t>(mid - first);
    if (k == pos) return mid;
    if (k < pos) {
      last = mid;
    } else {
      k -= pos + 1;
      first = mid + 1;
    }
  }
}

void check_rank(std::size_t rank, std::size_t size) {
  if (rank < 1 || rank > size) {
    throw std::out_of_range("rank " + std::to_string(rank) + " outside [1, " +
                            std::to_string(size) + "]");
  }
}

}  // namespace

RankedItem select_rank(std::span<RankedItem> buffer, std::size_t rank) {
  check_rank(rank, buffer.size());
  return *select_in(buffer.data(), buffer.data() + buffer.size(), rank - 1);
}

RankedItem partition_map_by_rank(std::span<const RankedItem> items, std::size_t rank,
                                 std::span<std::size_t> new_position,
                                 std::vector<RankedItem>& work) {
  check_rank(rank, items.size());
  work.assign(items.begin(), items.end());
  const RankedItem pivot = *select_in(work.data(), work.data() + work.size(), rank - 1);

  std::size_t low = 0, high = rank;
  for (std::size_t i = 0; i < items.size(); ++i) {
    new_position[i] = pivot < items[i] ? ++high : ++low;
  }
  return pivot;
}

void stable_partition_by_rank(std::span<const RankedItem> items, std::size_t rank,
                              Partition& out, std::vector<RankedItem>& work) {
  out.new_position.resize(items.size());
  out.pivot = partition_map_by_rank(items, rank, out.new_position, work);
  out.first.resize(rank);
  out.second.resize(items.size() - rank);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t slot = out.new_position[i] - 1;
    if (slot < rank) {
      out.first[slot] = items[i];
    } else {
      out.second[slot - rank] = items[i];
    }
  }
}

Partition stable_partition_by_rank(std::span<const RankedItem> items, std::size_t rank) {
  Partition out;
  std::vector<RankedItem> work;
  stable_partition_by_rank(items, rank, out, work);
  return out;
}

}  // namespace ainv
