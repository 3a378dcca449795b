#include "hecke/hecke.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& s, const char* what) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

std::vector<std::int64_t> parse_list(const std::string& s, const char* what) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  const std::size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(s, "weight");
    return {v, v};
  }
  return {parse_int(s.substr(0, dots), "weight"), parse_int(s.substr(dots + 2), "weight")};
}

hk_format parse_format(const std::string& name) {
  hk_format f;
  if (hk_parse_format(name.c_str(), &f) != HK_OK) throw UsageError(hk_last_error());
  return f;
}

bool parameter_error(hk_status s) {
  return s == HK_ERR_INVALID_ARGUMENT || s == HK_ERR_INVALID_WEIGHT_TYPE || s == HK_ERR_ZERO_SPACE;
}

int report_failure(hk_status s) {
  std::cerr << "error: " << hk_last_error() << '\n';
  return parameter_error(s) ? kExitInvalid : kExitSoftware;
}

/// Writes the serialized document to path (or stdout); false on I/O failure.
bool emit(const hk_document* doc, hk_format format, const std::string& path) {
  char* buf = nullptr;
  std::size_t len = 0;
  if (hk_document_serialize(doc, format, &buf, &len) != HK_OK) {
    std::cerr << "error: " << hk_last_error() << '\n';
    return false;
  }
  std::string text(buf, len);
  hk_buffer_free(buf);
  if (format == HK_FORMAT_JSON) text += '\n';
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("HECKE_JOBS")) {
    const auto v = parse_int(env, "HECKE_JOBS value");
    if (v < 1) throw UsageError("HECKE_JOBS must be at least 1");
    return static_cast<unsigned>(v);
  }
  return 1;
}

struct Options {
  std::string q, k, k_range, m, types, format = "json", out;
  std::optional<std::int64_t> n_cap;
  std::optional<std::int64_t> jobs;
};

int cmd_analyze(const Options& o) {
  if (o.q.empty() || o.k.empty() || o.m.empty()) throw UsageError("analyze needs --q, --k and --m");
  const hk_format format = parse_format(o.format);
  hk_document* doc = nullptr;
  const hk_status s = hk_analyze_document(parse_int(o.q, "q"), parse_int(o.k, "weight"), parse_int(o.m, "type"), &doc);
  if (s != HK_OK) return report_failure(s);
  int code = kExitOk;
  if (hk_document_entry_count(doc) == 0) {
    std::int64_t q, k, m;
    const char* reason;
    hk_document_skipped(doc, 0, &q, &k, &m, &reason);
    std::cerr << "skipped: q=" << q << " k=" << k << " m=" << m << ": " << reason << '\n';
    code = kExitInvalid;
  } else {
    hk_summary sum;
    hk_document_entry(doc, 0, &sum);
    if (sum.theorem_violation) code = kExitViolation;
  }
  const bool written = emit(doc, format, o.out);
  hk_document_free(doc);
  return written ? code : kExitIo;
}

int cmd_sweep(const Options& o) {
  if (o.q.empty()) throw UsageError("sweep needs --q");
  if (o.k.empty() == o.k_range.empty()) throw UsageError("sweep needs exactly one of --k and --k-range");
  if (!o.types.empty() && o.types != "all") throw UsageError("--types only accepts 'all'");
  if (!o.types.empty() && !o.m.empty()) throw UsageError("--types and --m are exclusive");
  const hk_format format = parse_format(o.format);

  const auto qs = parse_list(o.q, "q");
  const auto [k_min, k_max] = parse_range(o.k.empty() ? o.k_range : o.k);
  std::vector<std::int64_t> ms;
  if (!o.m.empty()) ms = parse_list(o.m, "type");
  if (o.n_cap && *o.n_cap < 1) {
    std::cerr << "error: --n-cap must be at least 1\n";
    return kExitInvalid;
  }
  const unsigned jobs = o.jobs ? static_cast<unsigned>(*o.jobs) : default_jobs();
  if (o.jobs && *o.jobs < 1) throw UsageError("--jobs must be at least 1");

  hk_sweep_spec spec{qs.data(), qs.size(), k_min, k_max, ms.empty() ? nullptr : ms.data(), ms.size(),
                     o.n_cap ? static_cast<std::size_t>(*o.n_cap) : 0, jobs};
  hk_document* doc = nullptr;
  const hk_status s = hk_sweep(&spec, &doc);
  if (s != HK_OK) return report_failure(s);

  hk_sweep_summary sum;
  hk_document_summary(doc, &sum);
  std::cerr << "analyzed " << sum.analyzed << ", skipped " << sum.skipped << ", tt_injective false "
            << sum.tt_injective_false << ", direct_sum false " << sum.direct_sum_false << ", criterion mismatches "
            << sum.criterion_mismatches << ", identity failures " << sum.identity_failures << ", theorem violations "
            << sum.theorem_violations << '\n';
  int code = kExitOk;
  if (sum.analyzed == 0) {
    std::cerr << "error: the grid contains no analyzable tuple\n";
    code = kExitInvalid;
  } else if (sum.theorem_violations > 0) {
    code = kExitViolation;
  }
  const bool written = emit(doc, format, o.out);
  hk_document_free(doc);
  return written ? code : kExitIo;
}

int cmd_identities(const Options& o) {
  if (o.q.empty() || o.k.empty() || o.m.empty()) throw UsageError("identities needs --q, --k and --m");
  hk_analysis* a = nullptr;
  const hk_status s = hk_analyze(parse_int(o.q, "q"), parse_int(o.k, "weight"), parse_int(o.m, "type"), &a);
  if (s != HK_OK) return report_failure(s);
  std::string text;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < hk_analysis_identity_count(a); ++i) {
    const char* name;
    int state;
    hk_analysis_identity(a, i, &name, &state);
    failures += state == HK_IDENTITY_FAILED;
    text += std::string(name) + ' ' +
            (state == HK_IDENTITY_PASSED ? "pass" : state == HK_IDENTITY_FAILED ? "FAIL" : "not-evaluated") + '\n';
  }
  hk_analysis_free(a);
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kExitIo;
    }
  }
  return failures ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke and Atkin operators on Drinfeld cusp forms of level t"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "analyze one space S(k, m) for a given q");
  auto* sweep = app.add_subcommand("sweep", "analyze a grid of spaces");
  auto* identities = app.add_subcommand("identities", "run the identity suite for one space");

  for (auto* sub : {analyze, identities}) {
    sub->add_option("--q", o.q, "field size q = p^e")->required();
    sub->add_option("--k", o.k, "weight")->required();
    sub->add_option("--m", o.m, "type")->required();
    sub->add_option("--out", o.out, "output file (default stdout)");
  }
  analyze->add_option("--format", o.format, "json or csv");

  sweep->add_option("--q", o.q, "comma-separated field sizes")->required();
  sweep->add_option("--k", o.k, "weight range a..b");
  sweep->add_option("--k-range", o.k_range, "weight range a..b");
  sweep->add_option("--m", o.m, "comma-separated types");
  sweep->add_option("--types", o.types, "'all' for every type class");
  sweep->add_option("--n-cap", o.n_cap, "skip spaces of dimension above this");
  sweep->add_option("--jobs", o.jobs, "worker threads (default $HECKE_JOBS or 1)");
  sweep->add_option("--format", o.format, "json or csv");
  sweep->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (sweep->parsed()) return cmd_sweep(o);
    return cmd_identities(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}
