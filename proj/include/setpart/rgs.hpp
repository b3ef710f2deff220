#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace setpart {

/// Group label of one element. Labels are 0-based.
using Label = std::uint8_t;

/// Default upper bound on n for enumeration.
inline constexpr int kDefaultMaxN = 26;
/// Upper bound on n when the caller explicitly opts in.
inline constexpr int kOverrideMaxN = 64;

/// Throws std::out_of_range unless 1 <= n <= (allow_large ? 64 : 26).
void check_enumeration_size(int n, bool allow_large = false);

/// labels[0] == 0 and labels[i] <= 1 + max(labels[0..i-1]).
bool is_restricted_growth(std::span<const Label> labels);

/// Advances labels in place to the lexicographically next restricted growth
/// string. Returns false, leaving labels unchanged, at [0, 1, ..., n-1].
bool advance_lexicographic(std::span<Label> labels);

/// One set partition of {1..n}: element i+1 lies in group labels[i].
class RestrictedGrowthString {
 public:
  /// Throws std::invalid_argument if labels is empty or not a restricted
  /// growth string.
  explicit RestrictedGrowthString(std::vector<Label> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  std::span<const Label> labels() const { return labels_; }
  /// Number of blocks, max label + 1.
  int block_count() const;

  friend bool operator==(const RestrictedGrowthString&, const RestrictedGrowthString&) = default;
  friend auto operator<=>(const RestrictedGrowthString&, const RestrictedGrowthString&) = default;

 private:
  std::vector<Label> labels_;
};

/// The same partition as explicit blocks, each sorted ascending, blocks
/// ordered by their smallest element.
class BlockPartition {
 public:
  using Block = std::vector<int>;

  /// Builds the canonical form of blocks over {1..n}. Throws
  /// std::invalid_argument on empty blocks, elements outside 1..n, and
  /// overlapping or missing elements.
  BlockPartition(int n, std::vector<Block> blocks);

  int size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// The single-block partition [0, 0, ..., 0].
RestrictedGrowthString rgs_first(int n, bool allow_large = false);

/// The lexicographic successor, or nullopt for [0, 1, ..., n-1].
std::optional<RestrictedGrowthString> rgs_successor(const RestrictedGrowthString& r);

BlockPartition rgs_to_blocks(const RestrictedGrowthString& r);
RestrictedGrowthString blocks_to_rgs(const BlockPartition& p);

/// "aab" style rendering, a = 0. Falls back to comma separated integers
/// when a label exceeds 25.
std::string to_letters(std::span<const Label> labels);

/// "{1,2}{3}" style rendering.
std::string to_block_string(const BlockPartition& p);

}  // namespace setpart
