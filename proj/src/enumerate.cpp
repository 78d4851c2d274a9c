#include "flatpart/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace flatpart {

namespace {

// Extend a partial RGF w (with running maximum m) to length n, invoking
// leaf(w) at every completion.
template <typename Leaf>
void rgf_extend(std::vector<int>& w, int max_so_far, int n, Leaf&& leaf) {
  if (static_cast<int>(w.size()) == n) {
    leaf(w);
    return;
  }
  for (int letter = 1; letter <= max_so_far + 1; ++letter) {
    w.push_back(letter);
    rgf_extend(w, std::max(max_so_far, letter), n, leaf);
    w.pop_back();
  }
}

template <typename Leaf>
void for_each_rgf(int n, Leaf&& leaf) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  w.push_back(1);
  rgf_extend(w, 1, n, leaf);
}

std::vector<int> reversed(const std::vector<int>& w) {
  return {w.rbegin(), w.rend()};
}

std::vector<int> complemented(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out;
  out.reserve(w.size());
  for (int v : w)
    out.push_back(n + 1 - v);
  return out;
}

// Increasing subsequence of length 3.
bool contains_123(const std::vector<int>& w) {
  int best1 = INT32_MAX; // smallest entry so far
  int best2 = INT32_MAX; // smallest entry with a smaller one before it
  for (int v : w) {
    if (v > best2)
      return true;
    if (v > best1)
      best2 = std::min(best2, v);
    best1 = std::min(best1, v);
  }
  return false;
}

// Subsequence (x, z, y) with x < y < z: the classic stack scan from the
// right, where `third` is the best available 'y'.
bool contains_132(const std::vector<int>& w) {
  std::vector<int> stack;
  int third = INT32_MIN;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < third)
      return true;
    while (!stack.empty() && stack.back() < *it) {
      third = std::max(third, stack.back());
      stack.pop_back();
    }
    stack.push_back(*it);
  }
  return false;
}

bool contains_length3(const std::vector<int>& w, const std::vector<int>& pat) {
  // Reduce to the 123 and 132 scans via reversal and complementation:
  // reverse(132) = 231, complement(132) = 312, reverse(complement(132)) = 213.
  if (pat == std::vector<int>{1, 2, 3})
    return contains_123(w);
  if (pat == std::vector<int>{3, 2, 1})
    return contains_123(complemented(w));
  if (pat == std::vector<int>{1, 3, 2})
    return contains_132(w);
  if (pat == std::vector<int>{2, 3, 1})
    return contains_132(reversed(w));
  if (pat == std::vector<int>{3, 1, 2})
    return contains_132(complemented(w));
  if (pat == std::vector<int>{2, 1, 3})
    return contains_132(reversed(complemented(w)));
  throw DomainError("unreachable length-3 pattern");
}

bool extend_match(const std::vector<int>& w, const std::vector<int>& pat,
                  std::vector<int>& chosen, std::size_t from) {
  const std::size_t t = chosen.size();
  if (t == pat.size())
    return true;
  for (std::size_t i = from; i + (pat.size() - t) <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s)
      ok = (pat[s] < pat[t]) == (chosen[s] < w[i]);
    if (!ok)
      continue;
    chosen.push_back(w[i]);
    if (extend_match(w, pat, chosen, i + 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

// Backtracking matcher for arbitrary patterns (intended for length <= 4).
bool contains_generic(const std::vector<int>& w, const std::vector<int>& pat) {
  if (pat.size() > w.size())
    return false;
  std::vector<int> chosen;
  chosen.reserve(pat.size());
  return extend_match(w, pat, chosen, 0);
}

void flatten_into(const SetPartition& p, std::vector<int>& word) {
  word.clear();
  for (const auto& block : p.blocks)
    word.insert(word.end(), block.begin(), block.end());
}

} // namespace

PartitionEnumerator::PartitionEnumerator(int n) : n_(n) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  rgf_.assign(static_cast<std::size_t>(n), 1);
  prefix_max_.assign(static_cast<std::size_t>(n), 1);
}

bool PartitionEnumerator::advance() {
  for (int i = n_ - 1; i >= 1; --i) {
    const auto idx = static_cast<std::size_t>(i);
    if (rgf_[idx] <= prefix_max_[idx - 1]) {
      ++rgf_[idx];
      prefix_max_[idx] = std::max(prefix_max_[idx - 1], rgf_[idx]);
      for (int j = i + 1; j < n_; ++j) {
        const auto jdx = static_cast<std::size_t>(j);
        rgf_[jdx] = 1;
        prefix_max_[jdx] = prefix_max_[jdx - 1];
      }
      return true;
    }
  }
  return false;
}

std::optional<SetPartition> PartitionEnumerator::next() {
  if (exhausted_)
    return std::nullopt;
  if (!started_) {
    started_ = true;
    return SetPartition::from_rgf(rgf_);
  }
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return SetPartition::from_rgf(rgf_);
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  for_each_rgf(n, [&](const std::vector<int>& w) { fn(SetPartition::from_rgf(w)); });
}

Permutation flatten(const SetPartition& p) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(p.n));
  flatten_into(p, word);
  return Permutation{std::move(word)};
}

bool contains_pattern(const Permutation& w, const Permutation& pat) {
  if (pat.word.empty())
    throw DomainError("pattern must be nonempty");
  if (pat.word.size() == 3)
    return contains_length3(w.word, pat.word);
  return contains_generic(w.word, pat.word);
}

BigInt count_avoiders(int n, const Permutation& pat, unsigned jobs) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  if (jobs <= 1) {
    long long count = 0;
    for_each_rgf(n, [&](const std::vector<int>& w) {
      const SetPartition p = SetPartition::from_rgf(w);
      flatten_into(p, word);
      if (!contains_pattern(Permutation{word}, pat))
        ++count;
    });
    return count;
  }

  // Split the RGF space by prefixes of a fixed depth and count the
  // completions of each sub-range independently.
  const int depth = std::min(n, 5);
  std::vector<std::pair<std::vector<int>, int>> prefixes; // (prefix, max)
  {
    std::vector<int> w;
    w.push_back(1);
    rgf_extend(w, 1, depth, [&](const std::vector<int>& prefix) {
      prefixes.emplace_back(prefix, *std::max_element(prefix.begin(), prefix.end()));
    });
  }
  const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(prefixes.size()));
  std::vector<long long> partial(workers, 0);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t]() {
      std::vector<int> local_word;
      local_word.reserve(static_cast<std::size_t>(n));
      long long count = 0;
      for (std::size_t i = t; i < prefixes.size(); i += workers) {
        std::vector<int> w = prefixes[i].first;
        rgf_extend(w, prefixes[i].second, n, [&](const std::vector<int>& full) {
          const SetPartition p = SetPartition::from_rgf(full);
          flatten_into(p, local_word);
          if (!contains_pattern(Permutation{local_word}, pat))
            ++count;
        });
      }
      partial[t] = count;
    });
  }
  for (auto& th : threads)
    th.join();
  BigInt total = 0;
  for (long long c : partial)
    total += c;
  return total;
}

std::vector<int> descent_terminators(const Permutation& w) {
  if (w.word.empty())
    throw DomainError("permutation must be nonempty");
  std::vector<int> out{w.word.front()};
  for (std::size_t i = 1; i < w.word.size(); ++i)
    if (w.word[i] < w.word[i - 1])
      out.push_back(w.word[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> rl_minima(const Permutation& w) {
  if (w.word.empty())
    throw DomainError("permutation must be nonempty");
  std::vector<int> out;
  int smallest = INT32_MAX;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    if (*it < smallest) {
      out.push_back(*it);
      smallest = *it;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> block_initiators(const SetPartition& p) {
  std::vector<int> out;
  out.reserve(p.blocks.size());
  for (const auto& block : p.blocks)
    out.push_back(block.front());
  return out;
}

std::vector<int> statistic_m(const SetPartition& p) {
  const Permutation w = flatten(p);
  const std::vector<int> minima = rl_minima(w);
  const std::vector<int> terms = descent_terminators(w);
  std::vector<int> out;
  std::set_difference(minima.begin(), minima.end(), terms.begin(), terms.end(),
                      std::back_inserter(out));
  return out;
}

BigInt count_refined(int n, int k, const Permutation& pat, Refinement stat) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  if (k < 0)
    throw DomainError("statistic value must be nonnegative");
  long long count = 0;
  for_each_partition(n, [&](const SetPartition& p) {
    if (contains_pattern(flatten(p), pat))
      return;
    const int value = (stat == Refinement::MSize)
                          ? static_cast<int>(statistic_m(p).size())
                          : static_cast<int>(p.blocks.front().size());
    if (value == k)
      ++count;
  });
  return count;
}

} // namespace flatpart
