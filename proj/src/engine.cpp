#include "ainv/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ainv {
namespace {

// floor(sqrt(v)) for 128-bit v.
Count isqrt(Count v) {
  Count r = static_cast<Count>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

Count sum_rightward_moves(std::span<const std::size_t> old_to_new) {
  Count sum = 0;
  for (std::size_t i = 0; i < old_to_new.size(); ++i) {
    const std::size_t p = i + 1;
    if (old_to_new[i] > p) sum += old_to_new[i] - p;
  }
  return sum;
}

}  // namespace

bool threshold_exceeded(std::uint64_t n, std::uint64_t q, std::uint64_t inserted,
                        std::uint64_t comparisons) {
  if (comparisons <= inserted) return false;
  const Count excess = comparisons - inserted;
  return excess * excess * q > static_cast<Count>(n) * n;
}

Count displacement_sum(std::span<const std::size_t> old_to_new) {
  std::vector<bool> seen(old_to_new.size(), false);
  for (std::size_t target : old_to_new) {
    if (target < 1 || target > old_to_new.size() || seen[target - 1]) {
      throw std::invalid_argument("displacement_sum: input is not a permutation of 1.." +
                                  std::to_string(old_to_new.size()));
    }
    seen[target - 1] = true;
  }
  return sum_rightward_moves(old_to_new);
}

Engine::Engine(std::size_t n_total) : n_total_(n_total) { update_limit(); }

Engine Engine::from_blocks(std::size_t n_total, std::uint64_t q,
                           const std::vector<std::vector<Key>>& blocks, Count accumulated,
                           std::uint64_t phase_inserted, std::uint64_t phase_comparisons) {
  if (q == 0 || !std::has_single_bit(q)) {
    throw std::invalid_argument("q must be a power of two");
  }
  std::size_t total = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& items = blocks[k];
    const bool last = k + 1 == blocks.size();
    if (items.empty() || items.size() > 2 * q + 1 || (!last && items.size() < q)) {
      throw std::invalid_argument("block " + std::to_string(k) + " has size " +
                                  std::to_string(items.size()) + " outside the window for q=" +
                                  std::to_string(q));
    }
    if (k > 0 && *std::max_element(blocks[k - 1].begin(), blocks[k - 1].end()) >
                     *std::min_element(items.begin(), items.end())) {
      throw std::invalid_argument("blocks " + std::to_string(k - 1) + " and " +
                                  std::to_string(k) + " are out of order");
    }
    total += items.size();
  }
  if (total > n_total) throw std::invalid_argument("blocks hold more than n_total keys");

  Engine e(n_total);
  e.q_ = q;
  e.phase_index_ = static_cast<std::uint32_t>(std::countr_zero(q)) + 1;
  e.update_limit();
  for (const auto& items : blocks) {
    const std::size_t b = e.new_block();
    Block& blk = e.blocks_[b];
    blk.max_key = *std::max_element(items.begin(), items.end());
    for (Key key : items) {
      const std::size_t node = e.new_node(key);
      if (blk.tail == npos) {
        blk.head = node;
      } else {
        e.node_next_[blk.tail] = node;
      }
      blk.tail = node;
      ++blk.size;
    }
    if (e.last_block_ == npos) {
      e.first_block_ = b;
    } else {
      e.blocks_[e.last_block_].next = b;
    }
    e.last_block_ = b;
    ++e.block_count_;
  }
  e.inserted_total_ = total;
  e.accumulated_ = accumulated;
  e.phase_inserted_ = phase_inserted;
  e.phase_comparisons_ = phase_comparisons;
  return e;
}

std::size_t Engine::new_node(Key key) {
  node_key_.push_back(key);
  node_next_.push_back(npos);
  return node_key_.size() - 1;
}

std::size_t Engine::new_block() {
  if (!free_blocks_.empty()) {
    const std::size_t b = free_blocks_.back();
    free_blocks_.pop_back();
    blocks_[b] = Block{};
    return b;
  }
  blocks_.emplace_back();
  return blocks_.size() - 1;
}

std::size_t Engine::block_at(std::size_t ordinal) const {
  std::size_t b = first_block_;
  for (std::size_t k = 0; k < ordinal && b != npos; ++k) b = blocks_[b].next;
  if (b == npos) {
    throw std::out_of_range("block ordinal " + std::to_string(ordinal) + " out of range (" +
                            std::to_string(block_count_) + " blocks)");
  }
  return b;
}

void Engine::update_limit() {
  const Count bound = isqrt(static_cast<Count>(n_total_) * n_total_ / q_);
  comparison_slack_ = static_cast<std::uint64_t>(bound);
}

bool Engine::threshold_exceeded() const {
  return phase_comparisons_ > phase_inserted_ &&
         phase_comparisons_ - phase_inserted_ > comparison_slack_;
}

void Engine::insert(Key key) {
  if (inserted_total_ >= n_total_) {
    throw std::logic_error("insert: all " + std::to_string(n_total_) +
                           " keys were already inserted");
  }

  if (node_key_.capacity() == 0) {
    node_key_.reserve(n_total_);
    node_next_.reserve(n_total_);
  }

  std::size_t target = npos;
  std::uint64_t passed = 0;
  for (;;) {
    passed = 0;
    bool interrupted = false;

    if (first_block_ == npos) {
      // The empty structure's only header is the empty last list.
      if (threshold_exceeded()) {
        interrupted = true;
      } else {
        ++phase_comparisons_;
        target = new_block();
        blocks_[target].max_key = key;
        first_block_ = last_block_ = target;
        block_count_ = 1;
      }
    } else {
      for (std::size_t b = first_block_;;) {
        if (threshold_exceeded()) {
          interrupted = true;
          break;
        }
        ++phase_comparisons_;
        Block& blk = blocks_[b];
        if (key <= blk.max_key) {
          target = b;
          break;
        }
        if (blk.next == npos) {
          // Larger than everything so far: front of the last list.
          blk.max_key = key;
          target = b;
          break;
        }
        passed += blk.size;
        b = blk.next;
      }
    }

    if (!interrupted) break;
    start_new_phase();
  }

  Block& blk = blocks_[target];
  const std::size_t node = new_node(key);
  node_next_[node] = blk.head;
  blk.head = node;
  if (blk.tail == npos) blk.tail = node;
  ++blk.size;

  accumulated_ += passed;
  ++phase_inserted_;
  ++inserted_total_;

  if (blk.size == 2 * q_ + 1) split(target);
}

void Engine::split_block(std::size_t block_ordinal) {
  const std::size_t b = block_at(block_ordinal);
  if (blocks_[b].size != 2 * q_ + 1) {
    throw std::logic_error("split_block: block " + std::to_string(block_ordinal) +
                           " holds " + std::to_string(blocks_[b].size) + " keys, expected " +
                           std::to_string(2 * q_ + 1));
  }
  split(b);
}

void Engine::split(std::size_t block_id) {
  const std::size_t size = blocks_[block_id].size;
  const std::size_t keep = static_cast<std::size_t>(q_) + 1;

  split_items_.resize(size);
  split_nodes_.resize(size);
  std::size_t node = blocks_[block_id].head;
  for (std::size_t i = 0; i < size; ++i, node = node_next_[node]) {
    split_items_[i] = {node_key_[node], i + 1};
    split_nodes_[i] = node;
  }

  split_positions_.resize(size);
  const RankedItem pivot =
      partition_map_by_rank(split_items_, keep, split_positions_, split_work_);
  accumulated_ += sum_rightward_moves(split_positions_);

  split_order_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    split_order_[split_positions_[i] - 1] = split_nodes_[i];
  }
  for (std::size_t i = 0; i + 1 < size; ++i) node_next_[split_order_[i]] = split_order_[i + 1];
  node_next_[split_order_[keep - 1]] = npos;
  node_next_[split_order_[size - 1]] = npos;

  const std::size_t fresh = new_block();
  Block& upper = blocks_[fresh];
  Block& lower = blocks_[block_id];
  upper.head = split_order_[keep];
  upper.tail = split_order_[size - 1];
  upper.size = size - keep;
  upper.max_key = lower.max_key;
  upper.next = lower.next;

  lower.head = split_order_[0];
  lower.tail = split_order_[keep - 1];
  lower.size = keep;
  lower.max_key = pivot.key;
  lower.next = fresh;

  if (last_block_ == block_id) last_block_ = fresh;
  ++block_count_;

  ++stats_.split_count;
  stats_.split_work += size;
}

void Engine::record_current_phase() {
  stats_.phases.push_back({phase_index_, q_, phase_inserted_, phase_comparisons_});
  stats_.total_header_comparisons += phase_comparisons_;
}

void Engine::start_new_phase() {
  record_current_phase();
  ++phase_index_;
  q_ *= 2;
  phase_inserted_ = 0;
  phase_comparisons_ = 0;
  update_limit();

  for (std::size_t b = first_block_; b != npos && blocks_[b].next != npos;) {
    Block& former = blocks_[b];
    const std::size_t absorbed = former.next;
    const Block latter = blocks_[absorbed];

    node_next_[former.tail] = latter.head;
    former.tail = latter.tail;
    former.size += latter.size;
    former.max_key = std::max(former.max_key, latter.max_key);
    former.next = latter.next;
    if (last_block_ == absorbed) last_block_ = b;

    free_blocks_.push_back(absorbed);
    --block_count_;
    b = former.next;
  }
}

Count Engine::finalize(const InnerCounter& inner) {
  if (finalized_) throw std::logic_error("finalize: already finalized");
  if (inserted_total_ != n_total_) {
    throw std::logic_error("finalize: " + std::to_string(inserted_total_) + " of " +
                           std::to_string(n_total_) + " keys inserted");
  }
  record_current_phase();
  stats_.final_q = q_;

  for (std::size_t b = first_block_; b != npos; b = blocks_[b].next) {
    gather_.clear();
    for (std::size_t node = blocks_[b].head; node != npos; node = node_next_[node]) {
      gather_.push_back(node_key_[node]);
    }
    accumulated_ += inner.count(gather_);
    stats_.inner_total_elements += gather_.size();
  }
  finalized_ = true;
  return accumulated_;
}

std::vector<BlockHeader> Engine::headers() const {
  std::vector<BlockHeader> out;
  for (std::size_t b = first_block_; b != npos; b = blocks_[b].next) {
    out.push_back({blocks_[b].size, blocks_[b].max_key});
  }
  return out;
}

std::vector<std::vector<Key>> Engine::block_items() const {
  std::vector<std::vector<Key>> out;
  for (std::size_t b = first_block_; b != npos; b = blocks_[b].next) {
    auto& items = out.emplace_back();
    for (std::size_t node = blocks_[b].head; node != npos; node = node_next_[node]) {
      items.push_back(node_key_[node]);
    }
  }
  return out;
}

bool Engine::invariants_hold() const {
  if (q_ != (std::uint64_t{1} << (phase_index_ - 1))) return false;
  if (accumulated_ > max_inversions(n_total_)) return false;

  std::size_t count = 0;
  std::size_t total = 0;
  bool have_prev = false;
  Key prev_max = 0;
  for (std::size_t b = first_block_; b != npos; b = blocks_[b].next) {
    const Block& blk = blocks_[b];
    std::size_t size = 0;
    Key lo = 0, hi = 0;
    std::size_t tail = npos;
    for (std::size_t node = blk.head; node != npos; node = node_next_[node]) {
      const Key key = node_key_[node];
      lo = size == 0 ? key : std::min(lo, key);
      hi = size == 0 ? key : std::max(hi, key);
      tail = node;
      ++size;
    }
    if (size != blk.size || size == 0 || tail != blk.tail || hi != blk.max_key) return false;
    if (have_prev && prev_max > lo) return false;
    if (size > 2 * q_) return false;
    if (blk.next != npos && size < q_) return false;
    if (blk.next == npos && b != last_block_) return false;
    prev_max = hi;
    have_prev = true;
    ++count;
    total += size;
  }
  return count == block_count_ && total == inserted_total_;
}

CountResult count_inversions(std::span<const Key> sequence, const InnerCounter& inner) {
  Engine engine(sequence.size());
  for (std::size_t i = sequence.size(); i-- > 0;) engine.insert(sequence[i]);
  CountResult result;
  result.inversions = engine.finalize(inner);
  result.stats = engine.stats();
  return result;
}

CountResult count_inversions(std::span<const Key> sequence) {
  return count_inversions(sequence, MergeCounter{});
}

}  // namespace ainv
