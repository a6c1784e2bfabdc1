#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ainv/inner_counters.hpp"
#include "ainv/selection.hpp"
#include "ainv/types.hpp"

namespace ainv {

/// One completed (or final) phase: q is fixed at 2^(index-1) throughout.
struct PhaseRecord {
  std::uint32_t index = 1;
  std::uint64_t q = 1;
  std::uint64_t inserted = 0;     // t_i: insertions completed in the phase
  std::uint64_t comparisons = 0;  // header comparisons charged to the phase

  friend bool operator==(const PhaseRecord&, const PhaseRecord&) = default;
};

struct RunStats {
  std::vector<PhaseRecord> phases;
  std::uint64_t final_q = 1;
  std::uint64_t split_count = 0;
  std::uint64_t split_work = 0;  // sum of 2q+1 over all splits
  std::uint64_t total_header_comparisons = 0;
  std::uint64_t inner_total_elements = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct CountResult {
  Count inversions = 0;
  RunStats stats;
};

/// Header of one block, in list order.
struct BlockHeader {
  std::size_t size = 0;
  Key max_key = 0;

  friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

/// True iff comparisons exceed n/sqrt(q) + inserted, decided in integer
/// arithmetic: comparisons > inserted and (comparisons - inserted)^2 * q > n^2.
bool threshold_exceeded(std::uint64_t n, std::uint64_t q, std::uint64_t inserted,
                        std::uint64_t comparisons);

/// Sum of (new - old) over positions that moved right. `old_to_new[p - 1]`
/// is the 1-based destination of position p. Throws std::invalid_argument
/// unless the input is a permutation of 1..m.
Count displacement_sum(std::span<const std::size_t> old_to_new);

/// Adaptive list-of-lists inversion counter.
///
/// Keys are fed in reverse input order. The engine keeps an ordered list of
/// blocks whose keys are globally ordered between blocks but unsorted inside
/// each block. Every non-last block holds between q and 2q keys. Inversions
/// are booked when an insertion passes a block header and when a full block
/// is split around its median; the rest are counted per block by an
/// InnerCounter in finalize().
///
/// Phase i runs with q = 2^(i-1). When the header comparisons of a phase
/// exceed n/sqrt(q) + t (t = insertions completed in the phase), the
/// insertion in progress is abandoned, q doubles, adjacent blocks are
/// concatenated pairwise, and the insertion starts over.
///
/// Not thread-safe; one engine per run.
class Engine {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit Engine(std::size_t n_total);

  /// Builds an engine in a given mid-run state, for tests and tooling.
  /// `blocks` are in list order; `q` must be a power of two. Non-last blocks
  /// must hold between q and 2q+1 keys and the last between 1 and 2q+1, and
  /// the blocks must be ordered by key. Throws std::invalid_argument
  /// otherwise. The phase counters start at the given values.
  static Engine from_blocks(std::size_t n_total, std::uint64_t q,
                            const std::vector<std::vector<Key>>& blocks,
                            Count accumulated = 0, std::uint64_t phase_inserted = 0,
                            std::uint64_t phase_comparisons = 0);

  /// Inserts the next key (walking the input from its end). Throws
  /// std::logic_error if n_total keys were already inserted.
  void insert(Key key);

  bool threshold_exceeded() const;

  /// Splits the block at list position `block_ordinal` (0-based), which must
  /// hold exactly 2q+1 keys; throws std::logic_error otherwise.
  void split_block(std::size_t block_ordinal);

  /// Ends the current phase: records it, doubles q and concatenates blocks
  /// pairwise from the left. An unpaired last block is left alone.
  void start_new_phase();

  /// Adds the within-block counts to the accumulator and returns the total.
  /// Requires every key to have been inserted; callable once.
  Count finalize(const InnerCounter& inner);

  std::size_t n_total() const { return n_total_; }
  std::size_t inserted_total() const { return inserted_total_; }
  std::uint64_t q() const { return q_; }
  std::uint32_t phase_index() const { return phase_index_; }
  std::uint64_t phase_inserted() const { return phase_inserted_; }
  std::uint64_t phase_comparisons() const { return phase_comparisons_; }
  Count accumulated() const { return accumulated_; }
  std::size_t block_count() const { return block_count_; }
  bool finalized() const { return finalized_; }

  /// Statistics so far. The current phase is appended only by finalize().
  const RunStats& stats() const { return stats_; }

  std::vector<BlockHeader> headers() const;
  /// Keys of every block in stored order.
  std::vector<std::vector<Key>> block_items() const;

  /// Checks header consistency, inter-block order, the size window and the
  /// q/phase relation. Returns false on the first failure.
  bool invariants_hold() const;

 private:
  struct Block {
    std::size_t head = npos;
    std::size_t tail = npos;
    std::size_t size = 0;
    Key max_key = 0;
    std::size_t next = npos;
  };

  std::size_t new_node(Key key);
  std::size_t new_block();
  std::size_t block_at(std::size_t ordinal) const;
  void split(std::size_t block_id);
  void update_limit();
  void record_current_phase();

  std::size_t n_total_ = 0;
  std::size_t inserted_total_ = 0;

  // Node arena: one node per inserted key, linked within a block.
  std::vector<Key> node_key_;
  std::vector<std::size_t> node_next_;

  // Block pool, linked in list order.
  std::vector<Block> blocks_;
  std::vector<std::size_t> free_blocks_;
  std::size_t first_block_ = npos;
  std::size_t last_block_ = npos;
  std::size_t block_count_ = 0;

  std::uint64_t q_ = 1;
  std::uint32_t phase_index_ = 1;
  std::uint64_t phase_inserted_ = 0;
  std::uint64_t phase_comparisons_ = 0;
  // floor(n / sqrt(q)); the phase ends once comparisons - inserted exceeds it.
  std::uint64_t comparison_slack_ = 0;
  Count accumulated_ = 0;

  RunStats stats_;
  bool finalized_ = false;

  // Split scratch, reused across splits.
  std::vector<RankedItem> split_items_;
  std::vector<std::size_t> split_nodes_;
  std::vector<std::size_t> split_order_;
  std::vector<RankedItem> split_work_;
  std::vector<std::size_t> split_positions_;
  std::vector<Key> gather_;
};

CountResult count_inversions(std::span<const Key> sequence, const InnerCounter& inner);
CountResult count_inversions(std::span<const Key> sequence);

}  // namespace ainv
