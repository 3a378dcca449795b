#include "hecke/report.hpp"

#include "hecke/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <variant>

namespace hecke {

using json = nlohmann::ordered_json;

namespace {

std::int64_t type_representative(std::int64_t q, std::int64_t m) {
  const std::int64_t r = (m - 1) % (q - 1);
  return (r < 0 ? r + q - 1 : r) + 1;
}

struct Tuple {
  std::int64_t q, k, m;
  auto operator<=>(const Tuple&) const = default;
};

std::vector<Tuple> grid(const SweepSpec& spec) {
  std::set<Tuple> tuples;
  for (const auto q : spec.q_list) {
    std::vector<std::int64_t> ms;
    if (spec.m_list)
      for (const auto m : *spec.m_list) ms.push_back(type_representative(q, m));
    else
      for (std::int64_t m = 1; m <= q - 1; ++m) ms.push_back(m);
    for (std::int64_t k = spec.k_min; k <= spec.k_max; ++k)
      for (const auto m : ms) tuples.insert({q, k, m});
  }
  return {tuples.begin(), tuples.end()};
}

using Outcome = std::variant<std::monostate, AnalysisReport, SkippedEntry, std::exception_ptr>;

Outcome run_tuple(const Tuple& t, const std::optional<std::size_t>& n_cap) {
  try {
    WeightParams wp;
    try {
      wp = decompose_weight(t.q, t.k, t.m);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidWeightType || e.code() == ErrorCode::ZeroSpace)
        return SkippedEntry{t.q, t.k, t.m, std::string(error_code_name(e.code()))};
      throw;
    }
    if (n_cap && wp.n > *n_cap) return SkippedEntry{t.q, t.k, t.m, std::string(kNCapExceeded)};
    return Analysis(build_operators(wp)).report();
  } catch (...) {
    return std::current_exception();
  }
}

json to_json(const AnalysisReport& r) {
  json e;
  e["q"] = r.q;
  e["p"] = r.p;
  e["e"] = r.e;
  e["k"] = r.k;
  e["m"] = r.m;
  e["j"] = r.j;
  e["n"] = r.n;
  e["dim_level1"] = r.dim_level1;
  e["dim_old"] = r.dim_old;
  e["dim_new"] = r.dim_new;
  e["tt_injective"] = r.tt_injective;
  e["tt_injective_crosscheck"] = r.tt_injective_crosscheck;
  e["direct_sum"] = r.direct_sum;
  e["direct_sum_crosscheck"] = r.direct_sum_crosscheck;
  e["dirsum_det_tvaluation"] = r.dirsum_det_tvaluation ? json(*r.dirsum_det_tvaluation) : json(nullptr);
  json ids = json::object();
  for (const auto& i : r.identities) ids[i.name] = i.passed ? json(*i.passed) : json(nullptr);
  e["identities"] = std::move(ids);
  json slopes = json::array();
  for (const auto& s : r.slopes) slopes.push_back({{"slope", s.slope.to_string()}, {"mult", s.multiplicity}});
  e["slopes"] = std::move(slopes);
  e["zero_count"] = r.zero_count;
  return e;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) fail(ErrorCode::ParseError, "slope '" + s + "' is not of the form num/den");
  std::size_t used_n = 0, used_d = 0;
  const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
  const long long num = std::stoll(ns, &used_n);
  const long long den = std::stoll(ds, &used_d);
  if (used_n != ns.size() || used_d != ds.size()) fail(ErrorCode::ParseError, "malformed slope '" + s + "'");
  const Rational r = Rational::make(num, den);
  if (r.num != num || r.den != den) fail(ErrorCode::ParseError, "slope '" + s + "' is not in lowest terms");
  return r;
}

AnalysisReport from_json(const json& e) {
  AnalysisReport r;
  r.q = e.at("q").get<std::int64_t>();
  r.p = e.at("p").get<std::int64_t>();
  r.e = e.at("e").get<std::int64_t>();
  r.k = e.at("k").get<std::int64_t>();
  r.m = e.at("m").get<std::int64_t>();
  r.j = e.at("j").get<std::int64_t>();
  r.n = e.at("n").get<std::size_t>();
  r.dim_level1 = e.at("dim_level1").get<std::size_t>();
  r.dim_old = e.at("dim_old").get<std::size_t>();
  r.dim_new = e.at("dim_new").get<std::size_t>();
  r.tt_injective = e.at("tt_injective").get<bool>();
  r.tt_injective_crosscheck = e.at("tt_injective_crosscheck").get<bool>();
  r.direct_sum = e.at("direct_sum").get<bool>();
  r.direct_sum_crosscheck = e.at("direct_sum_crosscheck").get<bool>();
  const json& v = e.at("dirsum_det_tvaluation");
  if (!v.is_null()) r.dirsum_det_tvaluation = v.get<std::size_t>();
  for (const auto& [name, val] : e.at("identities").items())
    r.identities.push_back({name, val.is_null() ? std::nullopt : std::optional<bool>(val.get<bool>())});
  for (const auto& s : e.at("slopes"))
    r.slopes.push_back({parse_rational(s.at("slope").get<std::string>()), s.at("mult").get<std::size_t>()});
  r.zero_count = e.at("zero_count").get<std::size_t>();
  return r;
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.q_list.empty()) fail(ErrorCode::InvalidArgument, "no values of q given");
  for (const auto q : spec.q_list) (void)PrimePower::from_q(q);
  if (spec.k_min > spec.k_max)
    fail(ErrorCode::InvalidArgument, "empty weight range " + std::to_string(spec.k_min) + ".." + std::to_string(spec.k_max));
  if (spec.m_list && spec.m_list->empty()) fail(ErrorCode::InvalidArgument, "empty list of types");
  if (spec.n_cap && *spec.n_cap < 1) fail(ErrorCode::InvalidArgument, "n cap must be at least 1");
}

ReportDocument run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<Tuple> tuples = grid(spec);
  std::vector<Outcome> results(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) results[i] = run_tuple(tuples[i], spec.n_cap);
  };
  const std::size_t jobs = std::clamp<std::size_t>(spec.jobs, 1, std::max<std::size_t>(tuples.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
  }
  ReportDocument doc;
  for (auto& r : results) {
    if (auto* e = std::get_if<std::exception_ptr>(&r)) std::rethrow_exception(*e);
    if (auto* a = std::get_if<AnalysisReport>(&r))
      doc.entries.push_back(std::move(*a));
    else if (auto* s = std::get_if<SkippedEntry>(&r))
      doc.skipped.push_back(std::move(*s));
  }
  return doc;
}

ReportDocument analyze_document(std::int64_t q, std::int64_t k, std::int64_t m) {
  SweepSpec spec;
  spec.q_list = {q};
  spec.k_min = spec.k_max = k;
  spec.m_list = std::vector<std::int64_t>{m};
  return run_sweep(spec);
}

std::string SweepSummary::to_string() const {
  std::ostringstream os;
  os << "analyzed " << analyzed << ", skipped " << skipped << ", tt_injective false " << tt_injective_false
     << ", direct_sum false " << direct_sum_false << ", criterion mismatches " << criterion_mismatches
     << ", identity failures " << identity_failures << ", theorem violations " << theorem_violations;
  return os.str();
}

SweepSummary summarize(const ReportDocument& doc) {
  SweepSummary s;
  s.analyzed = doc.entries.size();
  s.skipped = doc.skipped.size();
  for (const auto& r : doc.entries) {
    s.tt_injective_false += !r.tt_injective;
    s.direct_sum_false += !r.direct_sum;
    s.criterion_mismatches += (r.tt_injective != r.tt_injective_crosscheck) + (r.direct_sum != r.direct_sum_crosscheck);
    s.identity_failures += r.identity_failures();
    s.theorem_violations += r.theorem_violation();
  }
  return s;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  fail(ErrorCode::UnsupportedFormat, "unsupported format '" + std::string(name) + "'");
}

std::string serialize_report(const ReportDocument& doc, Format format) {
  if (format == Format::Csv) {
    std::string out = "q,k,m,j,n,slope_num,slope_den,multiplicity\n";
    for (const auto& r : doc.entries)
      for (const auto& s : r.slopes)
        out += std::to_string(r.q) + ',' + std::to_string(r.k) + ',' + std::to_string(r.m) + ',' + std::to_string(r.j) +
               ',' + std::to_string(r.n) + ',' + std::to_string(s.slope.num) + ',' + std::to_string(s.slope.den) + ',' +
               std::to_string(s.multiplicity) + '\n';
    return out;
  }
  if (format != Format::Json) fail(ErrorCode::UnsupportedFormat, "unsupported format");
  json j;
  j["schema_version"] = doc.schema_version;
  json entries = json::array();
  for (const auto& r : doc.entries) entries.push_back(to_json(r));
  j["entries"] = std::move(entries);
  if (!doc.skipped.empty()) {
    json skipped = json::array();
    for (const auto& s : doc.skipped) skipped.push_back({{"q", s.q}, {"k", s.k}, {"m", s.m}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
  }
  return j.dump();
}

ReportDocument parse_report_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != 1) fail(ErrorCode::ParseError, "unknown schema version " + std::to_string(doc.schema_version));
    for (const auto& e : j.at("entries")) doc.entries.push_back(from_json(e));
    if (j.contains("skipped"))
      for (const auto& s : j.at("skipped"))
        doc.skipped.push_back({s.at("q").get<std::int64_t>(), s.at("k").get<std::int64_t>(), s.at("m").get<std::int64_t>(),
                               s.at("reason").get<std::string>()});
    return doc;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  } catch (const std::logic_error& e) {  // stoll
    fail(ErrorCode::ParseError, e.what());
  }
}

}  // namespace hecke
