#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "ainv/types.hpp"

namespace ainv {

/// Counts inversions inside one block after all insertions are done.
/// Implementations must return the exact pairwise count and keep no state
/// between calls that could leak into the engine.
class InnerCounter {
 public:
  virtual ~InnerCounter() = default;

  virtual std::string_view name() const = 0;
  virtual Count count(std::span<const Key> items) const = 0;
};

/// Bottom-up merge sort; ties are taken from the left run.
Count merge_count(std::span<const Key> items);

/// Coordinate compression plus a Fenwick tree, scanned right to left.
Count fenwick_count(std::span<const Key> items);

class MergeCounter final : public InnerCounter {
 public:
  std::string_view name() const override { return "merge"; }
  Count count(std::span<const Key> items) const override { return merge_count(items); }
};

class FenwickCounter final : public InnerCounter {
 public:
  std::string_view name() const override { return "fenwick"; }
  Count count(std::span<const Key> items) const override { return fenwick_count(items); }
};

/// "merge" or "fenwick"; throws std::invalid_argument otherwise.
std::unique_ptr<InnerCounter> make_inner_counter(std::string_view name);

std::vector<std::string_view> inner_counter_names();

}  // namespace ainv
