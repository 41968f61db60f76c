#include "output.hpp"

#include <sstream>

namespace reflectq::cli {

namespace {

ordered_json label_json(const std::vector<weights::Composition>& label) {
  ordered_json a = ordered_json::array();
  for (const auto& c : label) a.push_back(c);
  return a;
}

// compositions comma-joined, factors separated by ';', all in one quoted field
std::string label_csv(const std::vector<weights::Composition>& label) {
  std::string s = "\"";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += ';';
    s += joined(label[i]);
  }
  return s + "\"";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string m_field(int m) { return m < 0 ? std::string() : std::to_string(m); }

ordered_json tableaux(const std::vector<weights::Composition>& label, const std::vector<bool>& dual) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < label.size(); ++i) a.push_back(weights::tableau_str(label[i], dual[i]));
  return a;
}

}  // namespace

std::string joined(const weights::Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

ordered_json matrix_json(const MatrixHeader& h, const reps::OperatorTable& t) {
  ordered_json j;
  j["kind"] = h.kind;
  j["n"] = h.n;
  j["l"] = h.l;
  j["m"] = h.m < 0 ? ordered_json(nullptr) : ordered_json(h.m);
  j["spectral"] = h.spectral;
  ordered_json entries = ordered_json::array();
  for (const auto& [in, col] : t.columns()) {
    for (const auto& [out, c] : col) {
      entries.push_back(
          {{"in", label_json(in)}, {"out", label_json(out)}, {"num", c.num().to_string()}, {"den", c.den().to_string()}});
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string matrix_csv(const MatrixHeader& h, const reps::OperatorTable& t) {
  std::ostringstream os;
  os << "n,l,m,in,out,num,den\n";
  for (const auto& [in, col] : t.columns()) {
    for (const auto& [out, c] : col) {
      os << h.n << ',' << h.l << ',' << m_field(h.m) << ',' << label_csv(in) << ',' << label_csv(out) << ','
         << quoted(c.num().to_string()) << ',' << quoted(c.den().to_string()) << '\n';
    }
  }
  return os.str();
}

ordered_json report_json(const verify::VerifyReport& r) {
  ordered_json j;
  j["equation"] = r.equation;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["checked"] = r.checked;
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) failures.push_back({{"index", f.index}, {"difference", f.difference}});
  j["failures"] = std::move(failures);
  return j;
}

ordered_json comb_json(const crystal::CombMap& map) {
  ordered_json j;
  j["kind"] = crystal::to_string(map.kind);
  j["n"] = map.n;
  j["l"] = map.l;
  j["m"] = map.kind == crystal::CombKind::K ? ordered_json(nullptr) : ordered_json(map.m);
  // which factors are dual tableaux, in and out
  std::vector<bool> din, dout;
  switch (map.kind) {
    case crystal::CombKind::R: din = dout = {false, false}; break;
    case crystal::CombKind::Rvee: din = {true, false}, dout = {false, true}; break;
    case crystal::CombKind::Rveevee: din = dout = {true, true}; break;
    case crystal::CombKind::K: din = dout = {false}; break;
  }
  ordered_json pairs = ordered_json::array();
  for (const auto& p : map.pairs) {
    pairs.push_back({{"in", label_json(p.in)},
                     {"out", label_json(p.out)},
                     {"energy", p.energy},
                     {"in_tableaux", tableaux(p.in, din)},
                     {"out_tableaux", tableaux(p.out, dout)}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

std::string comb_csv(const crystal::CombMap& map) {
  std::ostringstream os;
  os << "n,l,m,in,out,energy\n";
  const int m = map.kind == crystal::CombKind::K ? -1 : map.m;
  for (const auto& p : map.pairs) {
    os << map.n << ',' << map.l << ',' << m_field(m) << ',' << label_csv(p.in) << ',' << label_csv(p.out) << ','
       << p.energy << '\n';
  }
  return os.str();
}

ordered_json conjecture_json(const crystal::ConjectureReport& rep) {
  ordered_json j;
  j["kind"] = "k";
  j["n"] = rep.n;
  j["l"] = rep.l;
  j["status"] = "CONJECTURE:" + rep.status();
  ordered_json entries = ordered_json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"in", e.a},
                       {"out", e.g},
                       {"limit", e.limit},
                       {"predicted_energy", e.predicted},
                       {"match", e.match}});
  }
  j["entries"] = std::move(entries);
  return j;
}

ordered_json probe_json(const paramgen::ProbeReport& rep) {
  ordered_json j;
  j["k"] = rep.k;
  j["l"] = rep.l;
  j["m"] = rep.m;
  ordered_json rows = ordered_json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"kind", r.kind},
                    {"sector", r.sector},
                    {"index", r.index},
                    {"num", r.ratio.num().to_string()},
                    {"den", r.ratio.den().to_string()}});
  }
  j["rows"] = std::move(rows);
  ordered_json c = ordered_json::object();
  for (const auto& [k, v] : rep.constant_per_sector) c[k] = v;
  j["constant_per_sector"] = std::move(c);
  return j;
}

}  // namespace reflectq::cli
