#include "flatpart.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string_view>
#include <optional>
#include <string>

#include "flatpart/biject.hpp"
#include "flatpart/closedform.hpp"
#include "flatpart/enumerate.hpp"
#include "flatpart/sequences.hpp"
#include "flatpart/textio.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fp_status guarded(Fn&& fn) {
  try {
    fn();
    return FP_OK;
  } catch (const flatpart::ParseError& e) {
    g_last_error = e.what();
    return FP_ERROR_PARSE;
  } catch (const flatpart::DomainError& e) {
    g_last_error = e.what();
    return std::string_view(e.what()).starts_with("internal:") ? FP_ERROR_INTERNAL
                                                               : FP_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FP_ERROR_INTERNAL;
  }
}

flatpart::Pattern need_pattern(const char* pattern) {
  if (pattern == nullptr)
    throw flatpart::ParseError("pattern must not be null");
  return flatpart::pattern_from_string(pattern);
}

} // namespace

extern "C" {

const char* fp_last_error(void) { return g_last_error.c_str(); }

void fp_string_free(char* s) { std::free(s); }

fp_status fp_count_avoiders(unsigned n, const char* pattern, unsigned jobs,
                            char** out) {
  return guarded([&] {
    const auto pat = flatpart::pattern_word(need_pattern(pattern));
    *out = dup_string(
        flatpart::count_avoiders(static_cast<int>(n), pat, jobs).str());
  });
}

fp_status fp_count_formula(unsigned n, const char* pattern, char** out) {
  return guarded([&] {
    *out = dup_string(
        flatpart::count_formula(static_cast<int>(n), need_pattern(pattern)).str());
  });
}

fp_status fp_count_refined(unsigned n, unsigned k, const char* pattern,
                           const char* refinement, char** out) {
  return guarded([&] {
    flatpart::Refinement stat;
    const std::string_view r = refinement ? refinement : "";
    if (r == "m-size")
      stat = flatpart::Refinement::MSize;
    else if (r == "first-block")
      stat = flatpart::Refinement::FirstBlockLength;
    else
      throw flatpart::ParseError("refinement must be \"m-size\" or \"first-block\"");
    const auto pat = flatpart::pattern_word(need_pattern(pattern));
    *out = dup_string(flatpart::count_refined(static_cast<int>(n),
                                              static_cast<int>(k), pat, stat)
                          .str());
  });
}

fp_status fp_refined_formula(unsigned n, unsigned k, const char* pattern,
                             char** out) {
  return guarded([&] {
    *out = dup_string(flatpart::refined_formula(static_cast<int>(n),
                                                static_cast<int>(k),
                                                need_pattern(pattern))
                          .str());
  });
}

fp_status fp_u_value(unsigned n, unsigned k, char** out) {
  return guarded([&] {
    const flatpart::UTable table = flatpart::u_system(static_cast<int>(n));
    *out = dup_string(table.at(static_cast<int>(n), static_cast<int>(k)).str());
  });
}

fp_status fp_verify_at(const char* identity, unsigned n, int* holds) {
  return guarded([&] {
    const std::string_view id = identity ? identity : "";
    bool ok = false;
    if (id == "touchard") {
      ok = flatpart::verify_touchard(static_cast<int>(n));
    } else if (id == "identity5") {
      ok = flatpart::verify_identity5(static_cast<int>(n));
    } else if (id == "u-closed-form") {
      const flatpart::UTable table = flatpart::u_system(static_cast<int>(n));
      ok = true;
      for (int j = 1; j < static_cast<int>(n); ++j)
        ok = ok && table.at(static_cast<int>(n), j) ==
                       j * flatpart::fibonacci(2LL * n - 2 * j - 1);
    } else if (id == "chain-inclusion") {
      ok = true;
      flatpart::for_each_partition(
          static_cast<int>(n), [&](const flatpart::SetPartition& p) {
            const auto w = flatpart::flatten(p);
            const auto terms = flatpart::descent_terminators(w);
            const auto inits = flatpart::block_initiators(p);
            const auto minima = flatpart::rl_minima(w);
            ok = ok &&
                 std::includes(inits.begin(), inits.end(), terms.begin(), terms.end()) &&
                 std::includes(minima.begin(), minima.end(), inits.begin(), inits.end());
          });
    } else {
      throw flatpart::ParseError("unknown identity \"" + std::string(id) + "\"");
    }
    *holds = ok ? 1 : 0;
  });
}

fp_status fp_flatten(const char* partition, char** out) {
  return guarded([&] {
    if (!partition)
      throw flatpart::ParseError("partition must not be null");
    *out = dup_string(flatpart::format_permutation(
        flatpart::flatten(flatpart::parse_partition(partition))));
  });
}

fp_status fp_statistic_m(const char* partition, char** out) {
  return guarded([&] {
    if (!partition)
      throw flatpart::ParseError("partition must not be null");
    *out = dup_string(flatpart::format_entry_set(
        flatpart::statistic_m(flatpart::parse_partition(partition))));
  });
}

fp_status fp_bijection(const char* which, const char* pattern,
                       const char* input, char** out) {
  return guarded([&] {
    const std::string_view w = which ? which : "";
    const std::string_view in = input ? input : "";
    using namespace flatpart;
    std::string result;
    if (w == "cseq-to-partition") {
      result = format_partition(cseq_to_partition(parse_cseq(in)));
    } else if (w == "partition-to-cseq") {
      result = format_cseq(partition_to_cseq(parse_partition(in)));
    } else if (w == "kl-decompose") {
      const Pattern pat = pattern ? pattern_from_string(pattern) : Pattern::P231;
      result = format_kl(decompose_kl(parse_partition(in), pat));
    } else if (w == "kl-compose") {
      const Pattern pat = pattern ? pattern_from_string(pattern) : Pattern::P231;
      result = format_partition(compose_kl(parse_kl(in), pat));
    } else if (w == "u321-to-dyck") {
      result = format_dyck(u321zero_to_dyck(parse_partition(in)));
    } else if (w == "dyck-to-u321") {
      result = format_partition(dyck_to_u321zero(parse_dyck(in)));
    } else if (w == "cseq-to-dyck") {
      result = format_dyck(cseq_to_dyck(parse_cseq(in)));
    } else if (w == "dyck-to-cseq") {
      result = format_cseq(dyck_to_cseq(parse_dyck(in)));
    } else {
      throw ParseError("unknown bijection \"" + std::string(w) + "\"");
    }
    *out = dup_string(result);
  });
}

struct fp_enum {
  flatpart::PartitionEnumerator inner;
  std::optional<flatpart::Permutation> filter;
};

fp_enum* fp_enum_new(unsigned n, const char* pattern_or_null) {
  fp_enum* e = nullptr;
  const fp_status st = guarded([&] {
    std::optional<flatpart::Permutation> filter;
    if (pattern_or_null)
      filter = flatpart::pattern_word(flatpart::pattern_from_string(pattern_or_null));
    e = new fp_enum{flatpart::PartitionEnumerator(static_cast<int>(n)),
                    std::move(filter)};
  });
  return st == FP_OK ? e : nullptr;
}

fp_status fp_enum_next(fp_enum* e, char** out) {
  return guarded([&] {
    if (!e)
      throw flatpart::DomainError("null enumerator");
    while (auto p = e->inner.next()) {
      if (e->filter &&
          flatpart::contains_pattern(flatpart::flatten(*p), *e->filter))
        continue;
      *out = dup_string(flatpart::format_partition(*p));
      return;
    }
    *out = nullptr;
  });
}

void fp_enum_free(fp_enum* e) { delete e; }

} // extern "C"
