#include "setpart/rgs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace setpart {

void check_enumeration_size(int n, bool allow_large) {
  const int limit = allow_large ? kOverrideMaxN : kDefaultMaxN;
  if (n < 1 || n > limit) {
    throw std::out_of_range("set size must be in [1, " + std::to_string(limit) + "], got " +
                            std::to_string(n) +
                            (allow_large || n < 1 ? "" : " (use the large-n override)"));
  }
}

bool is_restricted_growth(std::span<const Label> labels) {
  if (labels.empty() || labels[0] != 0) return false;
  int max_seen = 0;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] > max_seen + 1) return false;
    max_seen = std::max<int>(max_seen, labels[i]);
  }
  return true;
}

bool advance_lexicographic(std::span<Label> labels) {
  const std::size_t n = labels.size();
  std::array<Label, kOverrideMaxN> prefix_max{};
  for (std::size_t j = 1; j < n; ++j) {
    prefix_max[j] = std::max(prefix_max[j - 1], labels[j - 1]);
  }
  for (std::size_t j = n; j-- > 1;) {
    if (labels[j] <= prefix_max[j]) {
      ++labels[j];
      std::fill(labels.begin() + static_cast<std::ptrdiff_t>(j) + 1, labels.end(), Label{0});
      return true;
    }
  }
  return false;
}

RestrictedGrowthString::RestrictedGrowthString(std::vector<Label> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kOverrideMaxN)) {
    throw std::invalid_argument("restricted growth string longer than 64");
  }
  if (!is_restricted_growth(labels_)) {
    throw std::invalid_argument("not a restricted growth string: " + to_letters(labels_));
  }
}

int RestrictedGrowthString::block_count() const {
  return *std::max_element(labels_.begin(), labels_.end()) + 1;
}

BlockPartition::BlockPartition(int n, std::vector<Block> blocks) : n_(n) {
  if (n < 1) throw std::invalid_argument("partition of an empty set");
  std::vector<bool> seen(n + 1, false);
  int covered = 0;
  for (Block& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition contains an empty block");
    std::sort(block.begin(), block.end());
    for (int element : block) {
      if (element < 1 || element > n) {
        throw std::invalid_argument("element " + std::to_string(element) + " outside 1.." +
                                    std::to_string(n));
      }
      if (seen[element]) {
        throw std::invalid_argument("element " + std::to_string(element) +
                                    " appears in more than one block");
      }
      seen[element] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not cover every element");
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
}

RestrictedGrowthString rgs_first(int n, bool allow_large) {
  check_enumeration_size(n, allow_large);
  return RestrictedGrowthString(std::vector<Label>(n, 0));
}

std::optional<RestrictedGrowthString> rgs_successor(const RestrictedGrowthString& r) {
  std::vector<Label> next(r.labels().begin(), r.labels().end());
  if (!advance_lexicographic(next)) return std::nullopt;
  return RestrictedGrowthString(std::move(next));
}

BlockPartition rgs_to_blocks(const RestrictedGrowthString& r) {
  std::vector<BlockPartition::Block> blocks(r.block_count());
  for (int i = 0; i < r.size(); ++i) blocks[r.labels()[i]].push_back(i + 1);
  return BlockPartition(r.size(), std::move(blocks));
}

RestrictedGrowthString blocks_to_rgs(const BlockPartition& p) {
  std::vector<Label> labels(p.size());
  const auto& blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int element : blocks[b]) labels[element - 1] = static_cast<Label>(b);
  }
  return RestrictedGrowthString(std::move(labels));
}

std::string to_letters(std::span<const Label> labels) {
  const bool letters = std::all_of(labels.begin(), labels.end(), [](Label l) { return l < 26; });
  std::string out;
  if (letters) {
    out.reserve(labels.size());
    for (Label l : labels) out.push_back(static_cast<char>('a' + l));
    return out;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(labels[i]);
  }
  return out;
}

std::string to_block_string(const BlockPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out.push_back('{');
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(block[i]);
    }
    out.push_back('}');
  }
  return out;
}

}  // namespace setpart
