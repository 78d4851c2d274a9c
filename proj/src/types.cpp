#include "flatpart/types.hpp"

#include <algorithm>
#include <map>

namespace flatpart {

Permutation Permutation::checked(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word) {
    if (v < 1 || v > n)
      throw DomainError("permutation entry " + std::to_string(v) +
                        " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation repeats entry " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation{std::move(word)};
}

SetPartition SetPartition::checked(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int count = 0;
  int prev_first = 0;
  for (const auto& block : blocks) {
    if (block.empty())
      throw DomainError("empty block");
    if (block.front() <= prev_first)
      throw DomainError("block first entries not strictly increasing");
    prev_first = block.front();
    int prev = 0;
    for (int v : block) {
      if (v < 1 || v > n)
        throw DomainError("entry " + std::to_string(v) + " outside 1.." +
                          std::to_string(n));
      if (v <= prev)
        throw DomainError("block entries not strictly increasing");
      prev = v;
      if (seen[static_cast<std::size_t>(v)])
        throw DomainError("entry " + std::to_string(v) + " appears twice");
      seen[static_cast<std::size_t>(v)] = true;
      ++count;
    }
  }
  if (count != n)
    throw DomainError("blocks do not cover 1.." + std::to_string(n));
  if (blocks.front().front() != 1)
    throw DomainError("first block must start with 1");
  return SetPartition{n, std::move(blocks)};
}

SetPartition SetPartition::from_rgf(const std::vector<int>& rgf) {
  const int n = static_cast<int>(rgf.size());
  if (n < 1)
    throw DomainError("RGF must be nonempty");
  int blocks_so_far = 0;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    const int letter = rgf[static_cast<std::size_t>(i)];
    if (letter < 1 || letter > blocks_so_far + 1)
      throw DomainError("not a restricted growth function");
    if (letter == blocks_so_far + 1) {
      blocks.emplace_back();
      ++blocks_so_far;
    }
    blocks[static_cast<std::size_t>(letter - 1)].push_back(i + 1);
  }
  return SetPartition{n, std::move(blocks)};
}

SetPartition standardize(const std::vector<std::vector<int>>& blocks) {
  std::map<int, int> relabel;
  for (const auto& block : blocks)
    for (int v : block)
      relabel[v] = 0;
  int next = 1;
  for (auto& [v, label] : relabel)
    label = next++;
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::vector<int> b;
    b.reserve(block.size());
    for (int v : block)
      b.push_back(relabel.at(v));
    out.push_back(std::move(b));
  }
  return SetPartition::checked(next - 1, std::move(out));
}

DyckPath DyckPath::checked(std::vector<Step> steps) {
  int height = 0;
  for (Step s : steps) {
    height += (s == Step::Up) ? 1 : -1;
    if (height < 0)
      throw DomainError("path dips below its start");
  }
  if (height != 0)
    throw DomainError("path does not return to its start");
  return DyckPath{std::move(steps)};
}

CSeq CSeq::checked(int r, std::vector<int> values) {
  if (r < 1)
    throw DomainError("c-sequence parameter r must be positive");
  if (static_cast<int>(values.size()) != r - 1)
    throw DomainError("c-sequence must have r-1 values");
  int prev = 0;
  for (int i = 0; i < r - 1; ++i) {
    const int c = values[static_cast<std::size_t>(i)];
    if (c <= prev)
      throw DomainError("c-sequence not strictly increasing (c_" +
                        std::to_string(i + 1) + " = " + std::to_string(c) + ")");
    if (c > 2 * (i + 1))
      throw DomainError("c_" + std::to_string(i + 1) + " = " + std::to_string(c) +
                        " exceeds 2i = " + std::to_string(2 * (i + 1)));
    prev = c;
  }
  return CSeq{r, std::move(values)};
}

PairForm PairForm::of(const SetPartition& p) {
  if (p.n % 2 == 0)
    throw DomainError("pair form requires odd ground set size");
  const std::size_t m = p.blocks.size();
  if (m < 1 || p.blocks.back().size() != 1)
    throw DomainError("last block is not a singleton");
  if (p.n == 1)
    throw DomainError("pair form requires n >= 3");
  PairForm f;
  f.r = static_cast<int>(m) - 1;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (p.blocks[i].size() != 2)
      throw DomainError("non-last block " + std::to_string(i + 1) +
                        " does not have length 2");
    f.a.push_back(p.blocks[i][0]);
    f.b.push_back(p.blocks[i][1]);
  }
  f.a.push_back(p.blocks.back().front());
  for (int i = 0; i < f.r; ++i) {
    if (f.b[static_cast<std::size_t>(i)] <= f.a[static_cast<std::size_t>(i) + 1])
      throw DomainError("b_" + std::to_string(i + 1) +
                        " does not exceed a_" + std::to_string(i + 2));
  }
  return f;
}

} // namespace flatpart
