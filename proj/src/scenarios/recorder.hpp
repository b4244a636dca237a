#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dgal/dist.hpp"
#include "dgal/expr.hpp"
#include "dgal/galois.hpp"
#include "dgal/scenarios.hpp"

namespace dgal::scen {

constexpr Provenance kPrinted = Provenance::Printed;
constexpr Provenance kTrivial = Provenance::Trivial;
constexpr Provenance kDerived = Provenance::Derived;

class Recorder {
 public:
  explicit Recorder(std::string id) { report_.scenario = std::move(id); }

  bool check(const std::string& name, bool ok, Provenance p, const std::string& residual = "");
  bool equal(const std::string& name, const RatFunc& got, const RatFunc& want, Provenance p);
  bool zero(const std::string& name, const RatFunc& got, Provenance p) { return equal(name, got, RatFunc(0), p); }
  bool equal(const std::string& name, const VectorField& got, const VectorField& want, Provenance p);
  bool equal(const std::string& name, const NFElem& got, const NFElem& want, Provenance p);
  bool equal(const std::string& name, const UPoly& got, const UPoly& want, Provenance p);
  bool equal(const std::string& name, const Rat& got, const Rat& want, Provenance p);
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  Report& report() { return report_; }

 private:
  Report report_;
};

using Step = std::function<void(Recorder&)>;

struct Entry {
  ScenarioInfo info;
  Step run;
};

std::vector<Entry> classical_scenarios();
std::vector<Entry> differential_scenarios();

// ------------------------------------------------------------ shorthands

inline RatFunc rf(const char* text) { return parse_expr(text); }
inline RatFunc rf(const std::string& text) { return parse_expr(text); }
inline Var var(const char* name) { return Var::parse(name); }

VectorField field(std::initializer_list<std::pair<const char*, const char*>> entries);
std::vector<Var> vars(std::initializer_list<const char*> names);
std::vector<RatFunc> exprs(std::initializer_list<const char*> texts);

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ");
std::string show(const std::vector<RatFunc>& v);
std::string show(const QVector& v);
std::string show(const std::vector<VectorField>& fields);

// Substitutes values for variables, e.g. the relation y_xx = 0.
RatFunc restrict_to(const RatFunc& f, std::initializer_list<std::pair<const char*, const char*>> values);

}  // namespace dgal::scen
