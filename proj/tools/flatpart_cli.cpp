// flatpart: counting tables, identity checks and bijections for flattened
// set partitions. Talks to the library exclusively through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatpart.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kPatterns = {"123", "132", "213",
                                            "231", "312", "321"};

// Fatal-error path: print the library message and pick the exit code from
// the status.
[[noreturn]] void die(fp_status st) {
  std::fprintf(stderr, "error: %s\n", fp_last_error());
  std::exit(st == FP_ERROR_PARSE ? kExitUsage : kExitMismatch);
}

// Run a C-API call that writes a string through its last argument.
template <typename Fn>
std::string take(Fn&& fn) {
  char* out = nullptr;
  const fp_status st = fn(&out);
  if (st != FP_OK)
    die(st);
  std::string s(out);
  fp_string_free(out);
  return s;
}

std::string count_avoiders(unsigned n, const std::string& pat, unsigned jobs) {
  return take([&](char** o) { return fp_count_avoiders(n, pat.c_str(), jobs, o); });
}

std::string count_formula(unsigned n, const std::string& pat) {
  return take([&](char** o) { return fp_count_formula(n, pat.c_str(), o); });
}

std::vector<std::string> expand_patterns(const std::string& pat) {
  if (pat == "all")
    return kPatterns;
  return {pat};
}

int cmd_enumerate(unsigned n, unsigned cap, const std::string& pattern,
                  const std::string& format) {
  if (n > cap) {
    std::fprintf(stderr,
                 "error: n = %u exceeds the enumeration cap %u "
                 "(raise it with --max-n)\n",
                 n, cap);
    return kExitMismatch;
  }
  fp_enum* e = fp_enum_new(n, pattern.empty() ? nullptr : pattern.c_str());
  if (!e)
    die(FP_ERROR_PARSE);
  json rows = json::array();
  while (true) {
    char* out = nullptr;
    if (fp_enum_next(e, &out) != FP_OK) {
      fp_enum_free(e);
      die(FP_ERROR_INTERNAL);
    }
    if (!out)
      break;
    std::string part(out);
    fp_string_free(out);
    std::string flattened = take([&](char** o) { return fp_flatten(part.c_str(), o); });
    std::string m_set = take([&](char** o) { return fp_statistic_m(part.c_str(), o); });
    if (format == "json")
      rows.push_back({{"partition", part}, {"flatten", flattened}, {"m", m_set}});
    else
      std::printf("%s  flatten=%s  M=%s\n", part.c_str(), flattened.c_str(),
                  m_set.c_str());
  }
  fp_enum_free(e);
  if (format == "json")
    std::printf("%s\n", rows.dump(2).c_str());
  return kExitOk;
}

int cmd_count(unsigned n, const std::string& pattern, unsigned jobs,
              const std::string& format) {
  json rows = json::array();
  for (const std::string& pat : expand_patterns(pattern)) {
    const std::string brute = count_avoiders(n, pat, jobs);
    if (format == "json")
      rows.push_back({{"n", n}, {"pattern", pat}, {"count", brute}});
    else
      std::printf("%s: %s\n", pat.c_str(), brute.c_str());
  }
  if (format == "json")
    std::printf("%s\n", rows.dump(2).c_str());
  return kExitOk;
}

int cmd_table(unsigned max_n, const std::string& pattern, unsigned jobs,
              const std::string& format) {
  bool all_match = true;
  json rows = json::array();
  for (unsigned n = 1; n <= max_n; ++n) {
    for (const std::string& pat : expand_patterns(pattern)) {
      const std::string brute = count_avoiders(n, pat, jobs);
      const std::string formula = count_formula(n, pat);
      const bool match = brute == formula;
      all_match = all_match && match;
      if (format == "json")
        rows.push_back({{"n", n},
                        {"pattern", pat},
                        {"brute", brute},
                        {"formula", formula},
                        {"match", match}});
      else
        std::printf("n=%-2u %s  brute=%s  formula=%s  %s\n", n, pat.c_str(),
                    brute.c_str(), formula.c_str(),
                    match ? "MATCH" : "MISMATCH");
    }
  }
  if (format == "json")
    std::printf("%s\n", rows.dump(2).c_str());
  return all_match ? kExitOk : kExitMismatch;
}

int cmd_verify(const std::string& identity, unsigned max_n,
               const std::string& format) {
  struct Spec {
    const char* name;
    unsigned cap;
    unsigned first;
  };
  const std::vector<Spec> known = {{"touchard", 30, 1},
                                   {"identity5", 30, 0},
                                   {"u-closed-form", 30, 1},
                                   {"chain-inclusion", 10, 1}};
  std::vector<Spec> run;
  for (const Spec& s : known)
    if (identity.empty() || identity == s.name)
      run.push_back(s);
  if (run.empty()) {
    std::fprintf(stderr, "error: unknown identity \"%s\"\n", identity.c_str());
    return kExitUsage;
  }
  if (!identity.empty() && max_n > run.front().cap) {
    std::fprintf(stderr, "error: %s is capped at n = %u\n", identity.c_str(),
                 run.front().cap);
    return kExitUsage;
  }

  bool all_hold = true;
  json rows = json::array();
  for (const Spec& s : run) {
    const unsigned top = std::min(max_n, s.cap);
    for (unsigned n = s.first; n <= top; ++n) {
      int holds = 0;
      if (fp_verify_at(s.name, n, &holds) != FP_OK)
        die(FP_ERROR_INTERNAL);
      all_hold = all_hold && holds;
      if (format == "json")
        rows.push_back({{"identity", s.name}, {"n", n}, {"holds", holds == 1}});
      else
        std::printf("%s n=%-2u %s\n", s.name, n, holds ? "pass" : "FAIL");
    }
  }
  if (format == "json")
    std::printf("%s\n", rows.dump(2).c_str());
  return all_hold ? kExitOk : kExitMismatch;
}

int cmd_bijection(const std::string& which, const std::string& pattern,
                  const std::string& input) {
  const std::string mapped = take([&](char** o) {
    return fp_bijection(which.c_str(), pattern.empty() ? nullptr : pattern.c_str(),
                        input.c_str(), o);
  });
  std::printf("%s\n", mapped.c_str());
  return kExitOk;
}

int cmd_refined(unsigned n, const std::string& pattern,
                const std::string& refinement, unsigned,
                const std::string& format) {
  // The closed product exists for the m-size refinement of 231/321; the
  // first-block refinement of 213/312 is covered by the u-table.
  const bool has_formula =
      (refinement == "m-size" && (pattern == "231" || pattern == "321")) ||
      (refinement == "first-block" && (pattern == "213" || pattern == "312"));
  bool all_match = true;
  json rows = json::array();
  const unsigned k_lo = refinement == "first-block" ? 1 : 0;
  const unsigned k_hi = refinement == "first-block" ? n : n - 1;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    const std::string brute = take([&](char** o) {
      return fp_count_refined(n, k, pattern.c_str(), refinement.c_str(), o);
    });
    std::string formula;
    if (has_formula) {
      formula = refinement == "m-size"
                    ? take([&](char** o) {
                        return fp_refined_formula(n, k, pattern.c_str(), o);
                      })
                    : take([&](char** o) { return fp_u_value(n, k, o); });
      all_match = all_match && brute == formula;
    }
    if (format == "json") {
      json row = {{"n", n}, {"k", k}, {"pattern", pattern}, {"brute", brute}};
      if (has_formula) {
        row["formula"] = formula;
        row["match"] = brute == formula;
      }
      rows.push_back(row);
    } else if (has_formula) {
      std::printf("k=%-2u brute=%s  formula=%s  %s\n", k, brute.c_str(),
                  formula.c_str(), brute == formula ? "MATCH" : "MISMATCH");
    } else {
      std::printf("k=%-2u %s\n", k, brute.c_str());
    }
  }
  if (format == "json")
    std::printf("%s\n", rows.dump(2).c_str());
  return all_match ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in flattened set partitions"};
  app.require_subcommand(1);

  unsigned n = 0;
  unsigned max_n = 12;
  unsigned jobs = 1;
  std::string pattern;
  std::string table_pattern = "all";
  std::string format = "text";
  std::string refinement = "m-size";
  std::string which;
  std::string input;
  std::string identity;

  const auto pattern_values =
      CLI::IsMember({"123", "132", "213", "231", "312", "321", "all"});
  const auto format_values = CLI::IsMember({"text", "json"});

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List partitions of [n] with flattening and M-statistic");
  enumerate->add_option("--n", n, "Ground-set size")->required();
  enumerate->add_option("--max-n", max_n, "Enumeration cap (default 12)");
  enumerate->add_option("--pattern", pattern, "Restrict to avoiders")
      ->check(CLI::IsMember({"123", "132", "213", "231", "312", "321"}));
  enumerate->add_option("--format", format)->check(format_values);

  CLI::App* count = app.add_subcommand(
      "count", "Brute-force avoider count at a single n");
  count->add_option("--n", n)->required();
  count->add_option("--pattern", pattern)->required()->check(pattern_values);
  count->add_option("--jobs", jobs, "Worker threads for the enumeration");
  count->add_option("--format", format)->check(format_values);

  CLI::App* table = app.add_subcommand(
      "table", "Brute-force vs closed-form table for n = 1..max-n");
  table->add_option("--max-n", max_n)->required();
  table->add_option("--pattern", table_pattern, "Single pattern or \"all\"")
      ->check(pattern_values);
  table->add_option("--jobs", jobs);
  table->add_option("--format", format)->check(format_values);

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the identities per n (all of them when unnamed)");
  verify->add_option("identity", identity,
                     "touchard | identity5 | u-closed-form | chain-inclusion");
  verify->add_option("--max-n", max_n,
                     "Upper n (capped at 30, or 10 for chain-inclusion)");
  verify->add_option("--format", format)->check(format_values);

  CLI::App* bijection = app.add_subcommand(
      "bijection", "Apply one of the bijections to a textual object");
  bijection
      ->add_option("--which", which,
                   "cseq-to-partition | partition-to-cseq | kl-decompose | "
                   "kl-compose | u321-to-dyck | dyck-to-u321 | cseq-to-dyck | "
                   "dyck-to-cseq")
      ->required();
  bijection->add_option("--input", input)->required();
  bijection->add_option("--pattern", pattern, "231 or 321, for the kl-* maps")
      ->check(CLI::IsMember({"231", "321"}));

  CLI::App* refined = app.add_subcommand(
      "refined", "Refined avoider counts at n, by statistic value k");
  refined->add_option("--n", n)->required();
  refined->add_option("--pattern", pattern)
      ->required()
      ->check(CLI::IsMember({"123", "132", "213", "231", "312", "321"}));
  refined->add_option("--refined", refinement, "m-size | first-block")
      ->check(CLI::IsMember({"m-size", "first-block"}));
  refined->add_option("--jobs", jobs);
  refined->add_option("--format", format)->check(format_values);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (enumerate->parsed())
    return cmd_enumerate(n, max_n, pattern, format);
  if (count->parsed())
    return cmd_count(n, pattern, jobs, format);
  if (table->parsed())
    return cmd_table(max_n, table_pattern, jobs, format);
  if (verify->parsed())
    return cmd_verify(identity, max_n, format);
  if (bijection->parsed())
    return cmd_bijection(which, pattern, input);
  if (refined->parsed())
    return cmd_refined(n, pattern, refinement, jobs, format);
  return kExitUsage;
}
