#include "multitable/report.hpp"

#include <sstream>

namespace multitable::report {

namespace {

// RFC 4180: quote fields containing separators or quotes, double the quotes.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string join_u64(const std::vector<std::uint64_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// shortest representation that parses back to the same double
std::string format_double(double value) { return json(value).dump(); }

std::string factored(std::uint64_t value, const FactorPair& f) {
  return std::to_string(value) + " = " + std::to_string(f.a) + "*" + std::to_string(f.b);
}

}  // namespace

json to_json(const Envelope& envelope) {
  json j;
  j["command"] = envelope.command;
  for (const auto& [key, value] : envelope.params.items()) j[key] = value;
  j["payload"] = envelope.payload;
  j["tool_version"] = envelope.tool_version;
  j["exit_status"] = envelope.exit_status;
  return j;
}

Envelope envelope_from_json(const json& j) {
  Envelope envelope;
  envelope.command = j.at("command").get<std::string>();
  envelope.payload = j.at("payload");
  envelope.tool_version = j.at("tool_version").get<std::string>();
  envelope.exit_status = j.at("exit_status").get<int>();
  envelope.params = json::object();
  for (const auto& [key, value] : j.items())
    if (key != "command" && key != "payload" && key != "tool_version" && key != "exit_status")
      envelope.params[key] = value;
  return envelope;
}

json to_json(const NForm& form) {
  json j;
  j["tag"] = to_string(form.tag);
  if (form.tag != NFormTag::Other) j["k"] = form.k;
  return j;
}

NForm nform_from_json(const json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  NForm form;
  if (tag == "square") form.tag = NFormTag::Square;
  else if (tag == "pronic") form.tag = NFormTag::Pronic;
  else if (tag == "square_minus_one") form.tag = NFormTag::SquareMinusOne;
  else if (tag == "pronic_minus_one") form.tag = NFormTag::PronicMinusOne;
  else form.tag = NFormTag::Other;
  form.k = j.contains("k") ? j.at("k").get<std::uint64_t>() : 0;
  return form;
}

json to_json(const WitnessInterval& w) {
  json j;
  j["lo"] = w.lo;
  j["lo_factors"] = {w.lo_factors.a, w.lo_factors.b};
  j["hi"] = w.hi;
  j["hi_factors"] = {w.hi_factors.a, w.hi_factors.b};
  j["gap"] = w.gap;
  return j;
}

WitnessInterval witness_from_json(const json& j) {
  WitnessInterval w;
  w.lo = j.at("lo").get<std::uint64_t>();
  w.hi = j.at("hi").get<std::uint64_t>();
  w.lo_factors = {j.at("lo_factors").at(0).get<std::uint64_t>(),
                  j.at("lo_factors").at(1).get<std::uint64_t>()};
  w.hi_factors = {j.at("hi_factors").at(0).get<std::uint64_t>(),
                  j.at("hi_factors").at(1).get<std::uint64_t>()};
  w.gap = j.at("gap").get<std::uint64_t>();
  return w;
}

json to_json(const GapClassification& gc) {
  json j;
  j["n"] = gc.n;
  j["r"] = gc.r;
  j["t"] = gc.t;
  j["form"] = to_json(gc.form);
  j["s_max"] = gc.s_max;
  j["b"] = gc.b_set;
  return j;
}

GapClassification classification_from_json(const json& j) {
  GapClassification gc;
  gc.n = j.at("n").get<std::uint64_t>();
  gc.r = j.at("r").get<std::uint64_t>();
  gc.t = j.at("t").get<std::uint64_t>();
  gc.form = nform_from_json(j.at("form"));
  gc.s_max = j.at("s_max").get<std::uint64_t>();
  gc.b_set = j.at("b").get<std::vector<std::uint64_t>>();
  return gc;
}

json to_json(const MultiplicityProfile& profile) {
  json j;
  j["n"] = profile.n;
  j["mu"] = profile.mu;
  j["total_entries"] = profile.total_entries;
  return j;
}

MultiplicityProfile profile_from_json(const json& j) {
  MultiplicityProfile profile;
  profile.n = j.at("n").get<std::uint64_t>();
  profile.mu = j.at("mu").get<std::vector<std::uint64_t>>();
  profile.total_entries = j.at("total_entries").get<std::uint64_t>();
  return profile;
}

json to_json(const FordPoint& point) {
  json j;
  j["n"] = point.n;
  j["m_n"] = point.m_n;
  j["ratio"] = point.ratio;
  j["alpha"] = point.alpha;
  return j;
}

FordPoint ford_point_from_json(const json& j) {
  FordPoint point;
  point.n = j.at("n").get<std::uint64_t>();
  point.m_n = j.at("m_n").get<std::uint64_t>();
  point.ratio = j.at("ratio").get<double>();
  point.alpha = j.at("alpha").get<double>();
  return point;
}

json to_json(const CensusRow& row) {
  json j;
  j["n"] = row.n;
  j["r"] = row.r;
  j["t"] = row.t;
  j["form"] = to_json(row.form);
  j["b_count"] = row.b_count;
  j["b_min"] = row.b_min;
  j["verdict"] = row.verdict;
  return j;
}

CensusRow census_row_from_json(const json& j) {
  CensusRow row;
  row.n = j.at("n").get<std::uint64_t>();
  row.r = j.at("r").get<std::uint64_t>();
  row.t = j.at("t").get<std::uint64_t>();
  row.form = nform_from_json(j.at("form"));
  row.b_count = j.at("b_count").get<std::uint64_t>();
  row.b_min = j.at("b_min").get<std::uint64_t>();
  row.verdict = j.at("verdict").get<std::string>();
  return row;
}

json to_json(const PairAB& pair) {
  json j;
  j["a"] = pair.a;
  j["b"] = pair.b;
  return j;
}

PairAB pair_from_json(const json& j) {
  return {j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>()};
}

json to_json(const SymbolicGap& gap) {
  json j;
  j["kind"] = gap.kind == SymbolicGap::Kind::Constant ? "constant" : "linear_in_x";
  j["c"] = gap.c;
  j["display"] = gap.display();
  return j;
}

SymbolicGap symbolic_gap_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto c = j.at("c").get<std::uint64_t>();
  return kind == "constant" ? SymbolicGap::constant(c) : SymbolicGap::linear_in_x(c);
}

json to_json(const VerifyReport& report) {
  json j;
  j["from"] = report.from;
  j["to"] = report.to;
  j["checked"] = report.rows.size();
  j["mismatch_count"] = report.mismatch_count;
  j["all_pass"] = report.all_pass;
  json mismatches = json::array();
  for (const VerifyRow& row : report.rows) {
    if (row.ok()) continue;
    json m;
    m["n"] = row.n;
    m["details"] = row.details;
    mismatches.push_back(m);
  }
  j["mismatches"] = mismatches;
  return j;
}

json gaps_payload(const GapClassification& gc, bool with_witnesses) {
  json j = to_json(gc);
  if (with_witnesses) {
    json witnesses = json::array();
    for (std::uint64_t g = 0; g <= gc.s_max; ++g) {
      json w;
      w["gap"] = g;
      w["interval"] = to_json(witness_for_gap(gc.n, g));
      witnesses.push_back(w);
    }
    for (std::uint64_t g : gc.b_set) {
      json w;
      w["gap"] = g;
      w["interval"] = to_json(witness_for_gap(gc.n, g));
      witnesses.push_back(w);
    }
    j["witnesses"] = witnesses;
  }
  return j;
}

json profile_payload(const MultiplicityProfile& profile) {
  json j = to_json(profile);
  j["m_n"] = profile.mu.empty() ? (profile.n >= 1 ? 1 : 0)
                                : profile.total_entries - profile.mu[0];
  return j;
}

json order_payload(const std::vector<PairAB>& pairs, const std::vector<SymbolicGap>& gaps) {
  json j;
  j["count"] = pairs.size();
  json pair_array = json::array();
  for (const PairAB& p : pairs) pair_array.push_back(to_json(p));
  j["pairs"] = pair_array;
  json gap_array = json::array();
  for (const SymbolicGap& g : gaps) gap_array.push_back(to_json(g));
  j["gaps"] = gap_array;
  return j;
}

json ford_payload(const std::vector<FordPoint>& points) {
  json j;
  json rows = json::array();
  for (const FordPoint& p : points) rows.push_back(to_json(p));
  j["ford"] = rows;
  return j;
}

json census_payload(const std::vector<CensusRow>& rows) {
  json j;
  json arr = json::array();
  for (const CensusRow& row : rows) arr.push_back(to_json(row));
  j["census"] = arr;
  return j;
}

json witness_payload(std::uint64_t n, std::uint64_t gap, const WitnessInterval& w) {
  json j;
  j["n"] = n;
  j["gap"] = gap;
  j["interval"] = to_json(w);
  return j;
}

std::string gaps_csv(const GapClassification& gc) {
  std::string out = "n,r,t,form,k,s_max,b_set\r\n";
  out += std::to_string(gc.n) + "," + std::to_string(gc.r) + "," + std::to_string(gc.t) + ",";
  out += to_string(gc.form.tag) + ",";
  out += (gc.form.tag == NFormTag::Other ? "" : std::to_string(gc.form.k));
  out += "," + std::to_string(gc.s_max) + ",";
  out += csv_escape(join_u64(gc.b_set, ","));
  out += "\r\n";
  return out;
}

std::string witness_table_csv(
    const std::vector<std::pair<std::uint64_t, WitnessInterval>>& rows) {
  std::string out = "gap,lo,lo_a,lo_b,hi,hi_a,hi_b\r\n";
  for (const auto& [g, w] : rows) {
    out += std::to_string(g) + "," + std::to_string(w.lo) + "," +
           std::to_string(w.lo_factors.a) + "," + std::to_string(w.lo_factors.b) + "," +
           std::to_string(w.hi) + "," + std::to_string(w.hi_factors.a) + "," +
           std::to_string(w.hi_factors.b) + "\r\n";
  }
  return out;
}

std::string profile_csv(const MultiplicityProfile& profile) {
  std::string out = "gap,multiplicity\r\n";
  for (std::uint64_t g = 0; g < profile.mu.size(); ++g)
    out += std::to_string(g) + "," + std::to_string(profile.mu[g]) + "\r\n";
  return out;
}

std::string order_csv(const std::vector<PairAB>& pairs, const std::vector<SymbolicGap>& gaps) {
  std::string out = "index,a,b,gap_after\r\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(pairs[i].a) + "," +
           std::to_string(pairs[i].b) + ",";
    if (i < gaps.size()) out += gaps[i].display();
    out += "\r\n";
  }
  return out;
}

std::string ford_csv(const std::vector<FordPoint>& points) {
  std::string out = "n,m_n,ratio,alpha\r\n";
  for (const FordPoint& p : points)
    out += std::to_string(p.n) + "," + std::to_string(p.m_n) + "," + format_double(p.ratio) +
           "," + format_double(p.alpha) + "\r\n";
  return out;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "n,r,t,form,k,b_count,b_min,verdict\r\n";
  for (const CensusRow& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.r) + "," + std::to_string(row.t) +
           "," + to_string(row.form.tag) + ",";
    out += (row.form.tag == NFormTag::Other ? "" : std::to_string(row.form.k));
    out += "," + std::to_string(row.b_count) + "," + std::to_string(row.b_min) + "," +
           row.verdict + "\r\n";
  }
  return out;
}

std::string verify_csv(const VerifyReport& report) {
  std::string out = "n,status,details\r\n";
  for (const VerifyRow& row : report.rows) {
    std::string details;
    for (std::size_t i = 0; i < row.details.size(); ++i) {
      if (i) details += "; ";
      details += row.details[i];
    }
    out += std::to_string(row.n) + "," + (row.ok() ? "ok" : "mismatch") + "," +
           csv_escape(details) + "\r\n";
  }
  return out;
}

std::string gaps_text(const GapClassification& gc, bool with_witnesses) {
  std::ostringstream out;
  out << "N = " << gc.n << "\n";
  out << "R = " << gc.r << ", T = " << gc.t << ", form = " << to_string(gc.form.tag);
  if (gc.form.tag != NFormTag::Other) out << " (k = " << gc.form.k << ")";
  out << "\n";
  out << "S_N = {0.." << gc.s_max << "}\n";
  out << "B_N = {" << join_u64(gc.b_set, ", ") << "}  (" << gc.b_set.size() << " gaps)\n";
  if (with_witnesses) {
    auto print = [&](std::uint64_t g) {
      const WitnessInterval w = witness_for_gap(gc.n, g);
      if (g == 0)
        out << "gap 0: repeated value " << w.lo << " (1*" << gc.n << " = " << gc.n << "*1)\n";
      else
        out << "gap " << g << ": " << factored(w.lo, w.lo_factors) << " < "
            << factored(w.hi, w.hi_factors) << "\n";
    };
    for (std::uint64_t g = 0; g <= gc.s_max; ++g) print(g);
    for (std::uint64_t g : gc.b_set) print(g);
  }
  return out.str();
}

std::string profile_text(const MultiplicityProfile& profile) {
  std::ostringstream out;
  out << "N = " << profile.n << ", entries = " << profile.total_entries << "\n";
  const std::uint64_t m_n =
      profile.mu.empty() ? 1 : profile.total_entries - profile.mu[0];
  out << "M_N = " << m_n << " distinct values\n";
  for (std::uint64_t g = 0; g < profile.mu.size(); ++g)
    out << g << ": " << profile.mu[g] << "\n";
  return out.str();
}

std::string order_text(const std::vector<PairAB>& pairs,
                       const std::vector<SymbolicGap>& gaps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out << "(" << pairs[i].a << "," << pairs[i].b << ")";
    if (i < gaps.size()) out << "  gap " << gaps[i].display();
    out << "\n";
  }
  return out.str();
}

std::string ford_text(const std::vector<FordPoint>& points) {
  std::ostringstream out;
  out << "n m_n ratio (alpha = " << format_double(alpha_constant()) << ")\n";
  for (const FordPoint& p : points)
    out << p.n << " " << p.m_n << " " << format_double(p.ratio) << "\n";
  return out.str();
}

std::string census_text(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n r t form b_count b_min verdict\n";
  for (const CensusRow& row : rows) {
    out << row.n << " " << row.r << " " << row.t << " " << to_string(row.form.tag);
    if (row.form.tag != NFormTag::Other) out << "(k=" << row.form.k << ")";
    out << " " << row.b_count << " " << row.b_min << " " << row.verdict << "\n";
  }
  return out.str();
}

std::string verify_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify N = " << report.from << ".." << report.to << ": " << report.rows.size()
      << " checked, " << report.mismatch_count << " mismatches\n";
  for (const VerifyRow& row : report.rows) {
    if (row.ok()) continue;
    out << "  N = " << row.n << ":\n";
    for (const std::string& detail : row.details) out << "    " << detail << "\n";
  }
  out << (report.all_pass ? "all pass\n" : "FAILED\n");
  return out.str();
}

std::string witness_text(std::uint64_t gap, const WitnessInterval& w) {
  std::ostringstream out;
  if (gap == 0)
    out << "gap 0: repeated value " << w.lo << " (" << w.lo_factors.a << "*" << w.lo_factors.b
        << " = " << w.hi_factors.a << "*" << w.hi_factors.b << ")\n";
  else
    out << "gap " << gap << ": " << factored(w.lo, w.lo_factors) << " < "
        << factored(w.hi, w.hi_factors) << "\n";
  return out.str();
}

}  // namespace multitable::report
