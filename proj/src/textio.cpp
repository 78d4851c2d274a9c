#include "flatpart/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace flatpart {

namespace {

[[noreturn]] void fail_at(std::string_view what, std::size_t pos) {
  throw ParseError(std::string(what) + " at position " + std::to_string(pos + 1));
}

int parse_int_at(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start)
    fail_at("expected a number", start);
  int value = 0;
  const auto res = std::from_chars(s.data() + start, s.data() + pos, value);
  if (res.ec != std::errc{})
    fail_at("number out of range", start);
  return value;
}

std::vector<int> parse_int_list(std::string_view s, char sep) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    out.push_back(parse_int_at(s, pos));
    if (pos == s.size())
      break;
    if (s[pos] != sep)
      fail_at(std::string("expected '") + sep + "'", pos);
    ++pos;
  }
  return out;
}

std::string join(const std::vector<int>& values, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out << sep;
    out << values[i];
  }
  return out.str();
}

} // namespace

std::string format_partition(const SetPartition& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i)
      out << '/';
    out << join(p.blocks[i], ',');
  }
  return out.str();
}

SetPartition parse_partition(std::string_view s) {
  if (s.empty())
    throw ParseError("empty partition at position 1");
  std::vector<std::vector<int>> blocks;
  const bool compact =
      s.find(',') == std::string_view::npos && s.find('/') == std::string_view::npos;
  if (compact) {
    // Digit-string form "136-279-4-58", single-digit entries only (n <= 9).
    std::vector<int> block;
    int n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char ch = s[i];
      if (ch == '-') {
        if (block.empty())
          fail_at("empty block", i);
        blocks.push_back(std::move(block));
        block.clear();
      } else if (std::isdigit(static_cast<unsigned char>(ch)) && ch != '0') {
        block.push_back(ch - '0');
        ++n;
      } else {
        fail_at("expected a digit 1-9 or '-'", i);
      }
    }
    if (block.empty())
      fail_at("empty block", s.size() - 1);
    blocks.push_back(std::move(block));
    return SetPartition::checked(n, std::move(blocks));
  }
  std::size_t pos = 0;
  int n = 0;
  std::vector<int> block;
  while (true) {
    block.push_back(parse_int_at(s, pos));
    ++n;
    if (pos == s.size())
      break;
    if (s[pos] == ',') {
      ++pos;
    } else if (s[pos] == '/') {
      blocks.push_back(std::move(block));
      block.clear();
      ++pos;
    } else {
      fail_at("expected ',' or '/'", pos);
    }
  }
  blocks.push_back(std::move(block));
  return SetPartition::checked(n, std::move(blocks));
}

std::string format_permutation(const Permutation& w) { return join(w.word, ','); }

Permutation parse_permutation(std::string_view s) {
  if (s.empty())
    throw ParseError("empty permutation at position 1");
  if (s.find(',') == std::string_view::npos) {
    // Digit-string form, e.g. "213".
    std::vector<int> word;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '0')
        fail_at("expected a digit 1-9", i);
      word.push_back(s[i] - '0');
    }
    return Permutation::checked(std::move(word));
  }
  return Permutation::checked(parse_int_list(s, ','));
}

std::string format_dyck(const DyckPath& d) {
  std::string out;
  out.reserve(d.steps.size());
  for (Step s : d.steps)
    out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

DyckPath parse_dyck(std::string_view s) {
  std::vector<Step> steps;
  steps.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (ch == 'U')
      steps.push_back(Step::Up);
    else if (ch == 'D')
      steps.push_back(Step::Down);
    else
      fail_at("expected 'U' or 'D'", i);
  }
  return DyckPath::checked(std::move(steps));
}

std::string format_cseq(const CSeq& c) { return join(c.values, ','); }

CSeq parse_cseq(std::string_view s) {
  if (s.empty())
    return CSeq::checked(1, {});
  std::vector<int> values = parse_int_list(s, ',');
  const int r = static_cast<int>(values.size()) + 1;
  return CSeq::checked(r, std::move(values));
}

std::string format_entry_set(const std::vector<int>& s) {
  return "{" + join(s, ',') + "}";
}

namespace {

std::vector<int> parse_entry_set(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '{')
    fail_at("expected '{'", pos);
  ++pos;
  std::vector<int> out;
  if (pos < s.size() && s[pos] == '}') {
    ++pos;
    return out;
  }
  while (true) {
    out.push_back(parse_int_at(s, pos));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == '}') {
      ++pos;
      return out;
    }
    fail_at("expected ',' or '}'", pos);
  }
}

void expect(std::string_view s, std::size_t& pos, std::string_view token) {
  if (s.substr(pos, token.size()) != token)
    fail_at("expected \"" + std::string(token) + "\"", pos);
  pos += token.size();
}

} // namespace

std::string format_kl(const KLTriple& t) {
  return "K=" + format_entry_set(t.k_set) + " L=" + format_entry_set(t.l_set) +
         " inner=" + format_partition(t.inner);
}

KLTriple parse_kl(std::string_view s) {
  std::size_t pos = 0;
  expect(s, pos, "K=");
  KLTriple t;
  t.k_set = parse_entry_set(s, pos);
  expect(s, pos, " L=");
  t.l_set = parse_entry_set(s, pos);
  expect(s, pos, " inner=");
  t.inner = parse_partition(s.substr(pos));
  if (!std::is_sorted(t.k_set.begin(), t.k_set.end()) ||
      !std::is_sorted(t.l_set.begin(), t.l_set.end()))
    throw ParseError("K and L must be listed in increasing order");
  t.n = t.inner.n + static_cast<int>(t.k_set.size());
  return t;
}

} // namespace flatpart
