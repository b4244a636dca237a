#include "recorder.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dgal/errors.hpp"

namespace dgal {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Printed: return "printed";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "printed";
}

bool Report::passed() const {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

int Report::pass_count() const {
  int n = 0;
  for (const auto& a : assertions) n += a.passed ? 1 : 0;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "scenario " << scenario << ": " << (passed() ? "PASS" : "FAIL") << " (" << pass_count() << "/"
      << assertions.size() << ")\n";
  for (const auto& a : assertions) {
    out << "  [" << (a.passed ? "pass" : "FAIL") << "] " << a.name << " (" << provenance_name(a.provenance) << ")";
    if (!a.passed && !a.residual.empty()) out << "\n         residual: " << a.residual;
    out << "\n";
  }
  for (const auto& n : notes) out << "  note: " << n << "\n";
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["assertions"] = nlohmann::ordered_json::array();
  for (const auto& a : assertions) {
    nlohmann::ordered_json e;
    e["name"] = a.name;
    e["status"] = a.passed ? "pass" : "fail";
    e["expected_provenance"] = provenance_name(a.provenance);
    e["residual"] = a.residual.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(a.residual);
    j["assertions"].push_back(e);
  }
  j["notes"] = notes;
  return j;
}

namespace scen {

bool Recorder::check(const std::string& name, bool ok, Provenance p, const std::string& residual) {
  report_.assertions.push_back({name, ok, p, ok ? std::string() : (residual.empty() ? "false" : residual)});
  return ok;
}

bool Recorder::equal(const std::string& name, const RatFunc& got, const RatFunc& want, Provenance p) {
  RatFunc diff = got - want;
  return check(name, diff.is_zero(), p, diff.to_string());
}

bool Recorder::equal(const std::string& name, const VectorField& got, const VectorField& want, Provenance p) {
  VectorField diff = got - want;
  return check(name, diff.is_zero(), p, diff.to_string());
}

bool Recorder::equal(const std::string& name, const NFElem& got, const NFElem& want, Provenance p) {
  return check(name, got == want, p, got.to_string() + " vs " + want.to_string());
}

bool Recorder::equal(const std::string& name, const UPoly& got, const UPoly& want, Provenance p) {
  return check(name, got == want, p, got.to_string() + " vs " + want.to_string());
}

bool Recorder::equal(const std::string& name, const Rat& got, const Rat& want, Provenance p) {
  return check(name, got == want, p, got.get_str() + " vs " + want.get_str());
}

VectorField field(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Var, RatFunc> m;
  for (const auto& [v, c] : entries) m[Var::parse(v)] = parse_expr(c);
  return VectorField(m);
}

std::vector<Var> vars(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (const char* n : names) out.push_back(Var::parse(n));
  return out;
}

std::vector<RatFunc> exprs(std::initializer_list<const char*> texts) {
  std::vector<RatFunc> out;
  for (const char* t : texts) out.push_back(parse_expr(t));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string show(const std::vector<RatFunc>& v) {
  std::vector<std::string> s;
  for (const auto& f : v) s.push_back(f.to_string());
  return "[" + join(s) + "]";
}

std::string show(const QVector& v) {
  std::vector<std::string> s;
  for (const auto& c : v) s.push_back(c.get_str());
  return "[" + join(s) + "]";
}

std::string show(const std::vector<VectorField>& fields) {
  std::vector<std::string> s;
  for (const auto& f : fields) s.push_back(f.to_string());
  return "[" + join(s, "; ") + "]";
}

RatFunc restrict_to(const RatFunc& f, std::initializer_list<std::pair<const char*, const char*>> values) {
  Bindings b;
  for (const auto& [v, e] : values) b[Var::parse(v)] = parse_expr(e);
  return substitute(f, b);
}

namespace {

const std::vector<Entry>& registry() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> out = differential_scenarios();
    for (auto& e : classical_scenarios()) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
      auto key = [](const std::string& id) {
        // ex<chapter>_<number>_...: numeric order, so ex2_11 follows ex2_1.
        int c = 0, n = 0;
        std::sscanf(id.c_str(), "ex%d_%d", &c, &n);
        return std::pair(c, n);
      };
      return key(a.info.id) < key(b.info.id);
    });
    return out;
  }();
  return all;
}

}  // namespace
}  // namespace scen

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const auto& e : scen::registry()) out.push_back(e.info);
  return out;
}

Report run_scenario(const std::string& id) {
  for (const auto& e : scen::registry()) {
    if (e.info.id != id) continue;
    scen::Recorder r(id);
    try {
      e.run(r);
    } catch (const std::exception& ex) {
      r.check("runs to completion", false, Provenance::Trivial, ex.what());
    }
    return r.report();
  }
  throw UnknownScenario("unknown scenario: " + id);
}

}  // namespace dgal
