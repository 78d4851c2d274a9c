#include "flatpart/biject.hpp"

#include <algorithm>

#include "flatpart/enumerate.hpp"

namespace flatpart {

namespace {

// Positions (1-based) of the upsteps of a raw step sequence.
std::vector<std::size_t> upstep_positions(const std::vector<Step>& steps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::Up)
      out.push_back(i + 1);
  return out;
}

// Matching downstep (1-based) in a raw step sequence: the first position
// after `upstep_pos` where the height returns to its value before the
// upstep. Works on elevated sequences too, as long as a match exists.
std::size_t match_in_steps(const std::vector<Step>& steps, std::size_t upstep_pos) {
  if (upstep_pos < 1 || upstep_pos > steps.size() || steps[upstep_pos - 1] != Step::Up)
    throw DomainError("position " + std::to_string(upstep_pos) + " is not an upstep");
  int height = 1;
  for (std::size_t i = upstep_pos; i < steps.size(); ++i) {
    height += (steps[i] == Step::Up) ? 1 : -1;
    if (height == 0)
      return i + 1;
  }
  throw DomainError("upstep has no matching downstep");
}

} // namespace

CSeq dyck_to_cseq(const DyckPath& d) {
  const int r = d.semilength();
  if (r < 1)
    throw DomainError("path must have semilength >= 1");
  const std::vector<std::size_t> ups = upstep_positions(d.steps);
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(r) - 1);
  for (int i = 1; i < r; ++i)
    c.push_back(static_cast<int>(ups[static_cast<std::size_t>(i)]) - 1);
  return CSeq::checked(r, std::move(c));
}

DyckPath cseq_to_dyck(const CSeq& c) {
  const int r = c.r;
  std::vector<Step> steps(static_cast<std::size_t>(2 * r), Step::Down);
  steps[0] = Step::Up;
  for (int v : c.values)
    steps[static_cast<std::size_t>(v)] = Step::Up;
  return DyckPath::checked(std::move(steps));
}

std::size_t matching_downstep(const DyckPath& d, std::size_t upstep_pos) {
  return match_in_steps(d.steps, upstep_pos);
}

namespace {

// a_1 = 1, a_2 = 2, a_{i+2} = c_i + 2.
std::vector<int> a_values(const CSeq& c) {
  std::vector<int> a{1, 2};
  for (int v : c.values)
    a.push_back(v + 2);
  return a;
}

SetPartition assemble_pair_partition(int r, const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i < r; ++i)
    blocks.push_back({a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]});
  blocks.push_back({a[static_cast<std::size_t>(r)]});
  return SetPartition::checked(2 * r + 1, std::move(blocks));
}

} // namespace

SetPartition cseq_to_partition(const CSeq& c) {
  const int r = c.r;
  const int n = 2 * r + 1;
  const std::vector<int> a = a_values(c);
  std::vector<bool> is_a(static_cast<std::size_t>(n) + 1, false);
  for (int v : a)
    is_a[static_cast<std::size_t>(v)] = true;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Fill the b squares right to left: smallest not-yet-placed element of
  // B = [2r+1] \ {a_i} that exceeds a_{i+1}.
  std::vector<int> b(static_cast<std::size_t>(r), 0);
  for (int i = r; i >= 1; --i) {
    int pick = 0;
    for (int v = a[static_cast<std::size_t>(i)] + 1; v <= n; ++v) {
      if (!is_a[static_cast<std::size_t>(v)] && !used[static_cast<std::size_t>(v)]) {
        pick = v;
        break;
      }
    }
    if (pick == 0)
      throw DomainError("internal: fill rule ran out of candidates for b_" +
                        std::to_string(i));
    used[static_cast<std::size_t>(pick)] = true;
    b[static_cast<std::size_t>(i) - 1] = pick;
  }
  return assemble_pair_partition(r, a, b);
}

SetPartition cseq_to_partition_dyck_reading(const CSeq& c) {
  const int r = c.r;
  const DyckPath d = cseq_to_dyck(c);
  // Prepend an upstep and number all 2r+1 steps left to right; the a_i are
  // the upstep labels and b_i is the label on the matching downstep of the
  // next upstep after a_i.
  std::vector<Step> aug;
  aug.reserve(d.steps.size() + 1);
  aug.push_back(Step::Up);
  aug.insert(aug.end(), d.steps.begin(), d.steps.end());
  const std::vector<std::size_t> ups = upstep_positions(aug);
  std::vector<int> a;
  a.reserve(ups.size());
  for (std::size_t pos : ups)
    a.push_back(static_cast<int>(pos));
  std::vector<int> b;
  b.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i)
    b.push_back(static_cast<int>(match_in_steps(aug, ups[static_cast<std::size_t>(i)])));
  return assemble_pair_partition(r, a, b);
}

CSeq partition_to_cseq(const SetPartition& p) {
  const PairForm form = PairForm::of(p);
  if (!statistic_m(p).empty())
    throw DomainError("M statistic is nonempty");
  if (contains_pattern(flatten(p), pattern_word(Pattern::P231)))
    throw DomainError("partition contains a 231 pattern");
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(form.r) - 1);
  for (int i = 2; i <= form.r; ++i)
    c.push_back(form.a[static_cast<std::size_t>(i)] - 2);
  return CSeq::checked(form.r, std::move(c));
}

bool is_zero_class(const SetPartition& p, Pattern pat) {
  return statistic_m(p).empty() && !contains_pattern(flatten(p), pattern_word(pat));
}

KLTriple decompose_kl(const SetPartition& p, Pattern pat) {
  if (pat != Pattern::P231 && pat != Pattern::P321)
    throw DomainError("decomposition is defined for patterns 231 and 321");
  if (contains_pattern(flatten(p), pattern_word(pat)))
    throw DomainError("partition contains a " + pattern_to_string(pat) + " pattern");

  const std::vector<int> k_set = statistic_m(p);
  const std::vector<int> inits = block_initiators(p);
  std::vector<int> l_set;
  std::set_intersection(k_set.begin(), k_set.end(), inits.begin(), inits.end(),
                        std::back_inserter(l_set));

  std::vector<std::vector<int>> work = p.blocks;
  for (int a : k_set) {
    std::size_t bi = 0;
    while (bi < work.size() &&
           !std::binary_search(work[bi].begin(), work[bi].end(), a))
      ++bi;
    if (bi == work.size())
      throw DomainError("internal: element of K not found in any block");
    const bool initiates = work[bi].front() == a;
    work[bi].erase(std::find(work[bi].begin(), work[bi].end(), a));
    if (initiates) {
      if (bi == 0)
        throw DomainError("internal: element of K initiates the first block");
      work[bi - 1].insert(work[bi - 1].end(), work[bi].begin(), work[bi].end());
      if (!std::is_sorted(work[bi - 1].begin(), work[bi - 1].end()))
        throw DomainError("internal: concatenation broke block order");
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(bi));
    }
  }
  KLTriple t;
  t.n = p.n;
  t.k_set = k_set;
  t.l_set = std::move(l_set);
  t.inner = standardize(work);
  if (!is_zero_class(t.inner, pat))
    throw DomainError("internal: deletion did not land in the zero class");
  return t;
}

SetPartition compose_kl(const KLTriple& t, Pattern pat) {
  if (pat != Pattern::P231 && pat != Pattern::P321)
    throw DomainError("composition is defined for patterns 231 and 321");
  const int k = static_cast<int>(t.k_set.size());
  if (t.inner.n != t.n - k)
    throw DomainError("inner partition size does not equal n - |K|");
  int prev = 1;
  for (int v : t.k_set) {
    if (v <= prev || v > t.n)
      throw DomainError("K must be a strictly increasing subset of {2..n}");
    prev = v;
  }
  if (!std::includes(t.k_set.begin(), t.k_set.end(), t.l_set.begin(), t.l_set.end()))
    throw DomainError("L is not a subset of K");
  if (!is_zero_class(t.inner, pat))
    throw DomainError("inner partition is not in the zero class for " +
                      pattern_to_string(pat));

  std::vector<std::vector<int>> work = t.inner.blocks;
  for (int a : t.k_set) {
    // Locate the last block whose first entry is < a, then relabel and
    // insert, in that order.
    std::size_t target = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (work[i].front() < a)
        target = i;
    if (target == work.size())
      throw DomainError("internal: no block precedes " + std::to_string(a));
    for (auto& block : work)
      for (int& v : block)
        if (v >= a)
          ++v;
    auto& block = work[target];
    block.insert(std::upper_bound(block.begin(), block.end(), a), a);
  }
  // Start a new block just before each element of L.
  std::vector<std::vector<int>> split;
  for (const auto& block : work) {
    std::vector<int> current;
    for (int v : block) {
      if (!current.empty() &&
          std::binary_search(t.l_set.begin(), t.l_set.end(), v)) {
        split.push_back(std::move(current));
        current.clear();
      }
      current.push_back(v);
    }
    split.push_back(std::move(current));
  }
  return SetPartition::checked(t.n, std::move(split));
}

DyckPath u321zero_to_dyck(const SetPartition& p) {
  if (contains_pattern(flatten(p), pattern_word(Pattern::P321)))
    throw DomainError("partition contains a 321 pattern");
  if (!statistic_m(p).empty())
    throw DomainError("M statistic is nonempty");
  const int n = p.n;
  const std::size_t m = p.blocks.size();
  if (n == 1)
    return DyckPath{};
  if (p.blocks.back().size() != 1)
    throw DomainError("internal: last block is not a singleton");
  // Initiators a_1..a_m with sentinel a_{m+1} = n+1; ascent prefix sums are
  // n+1-a_m, ..., n+1-a_2 and descent lengths are the non-last block
  // lengths in reverse.
  std::vector<int> a = block_initiators(p);
  a.push_back(n + 1);
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * (n - 1)));
  for (std::size_t j = 1; j < m; ++j) {
    const int ascent = a[m + 1 - j] - a[m - j];
    const auto descent = p.blocks[m - 1 - j].size();
    steps.insert(steps.end(), static_cast<std::size_t>(ascent), Step::Up);
    steps.insert(steps.end(), descent, Step::Down);
  }
  return DyckPath::checked(std::move(steps));
}

SetPartition dyck_to_u321zero(const DyckPath& d) {
  const int n = d.semilength() + 1;
  if (n == 1)
    return SetPartition::checked(1, {{1}});
  // Run-length decomposition into ascents u_1..u_t and descents d_1..d_t.
  std::vector<int> ascents, descents;
  std::size_t i = 0;
  while (i < d.steps.size()) {
    int run = 0;
    while (i < d.steps.size() && d.steps[i] == Step::Up) {
      ++run;
      ++i;
    }
    ascents.push_back(run);
    run = 0;
    while (i < d.steps.size() && d.steps[i] == Step::Down) {
      ++run;
      ++i;
    }
    if (run == 1)
      throw DomainError("path has a short descent (maximal downstep run of length 1)");
    descents.push_back(run);
  }
  const std::size_t t = ascents.size();
  const std::size_t m = t + 1;
  // Recover initiators from ascent prefix sums, block lengths from the
  // reversed descents, and fill the non-initiators in increasing order.
  std::vector<int> a(m, 0);
  a[0] = 1;
  int prefix = 0;
  for (std::size_t j = 1; j <= t; ++j) {
    prefix += ascents[j - 1];
    a[m - j] = n + 1 - prefix;
  }
  std::vector<std::size_t> lengths(m, 1);
  for (std::size_t j = 0; j + 1 < m; ++j)
    lengths[j] = static_cast<std::size_t>(descents[m - 2 - j]);
  std::vector<bool> is_a(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t j = 0; j < m; ++j)
    is_a[static_cast<std::size_t>(a[j])] = true;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!is_a[static_cast<std::size_t>(v)])
      rest.push_back(v);
  std::vector<std::vector<int>> blocks(m);
  std::size_t next = 0;
  for (std::size_t j = 0; j < m; ++j) {
    blocks[j].push_back(a[j]);
    for (std::size_t s = 1; s < lengths[j]; ++s)
      blocks[j].push_back(rest[next++]);
  }
  SetPartition p = SetPartition::checked(n, std::move(blocks));
  if (!is_zero_class(p, Pattern::P321))
    throw DomainError("internal: reconstruction did not land in the zero class");
  return p;
}

} // namespace flatpart
