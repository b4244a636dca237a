#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dgal {

// Variable kinds, listed from most to least significant in the term order.
enum class VarKind : std::uint8_t {
  Source = 0,    // x1..x9
  Param = 1,     // a1..a9, optionally barred
  Jet = 2,       // y<k>_<dirs>, optionally barred (bar level 1 = ybar, 2 = ybarbar)
  Groupoid = 3,  // g<u>_<dirs>, derivatives of the target map over target directions
  Formal = 4,    // unknown-function jets used internally (f, h, r families)
  Symbol = 5,    // any other identifier
};

// A single coordinate of the jet universe.  Direction strings are stored
// sorted, so y1_21 and y1_12 denote the same variable.
class Var {
 public:
  static constexpr int kMaxOrder = 8;

  Var() = default;

  static Var source(int i);
  static Var param(int i, int bar = 0);
  static Var jet(int k, const std::vector<int>& dirs = {}, int bar = 0);
  static Var groupoid(int u, const std::vector<int>& dirs = {});
  static Var formal(int family, int k, const std::vector<int>& dirs = {});
  static Var symbol(std::string name);

  // Parses the textual lexicon; throws ParseError on malformed names.
  static Var parse(std::string_view text);

  VarKind kind() const { return kind_; }
  int component() const { return comp_; }
  int bar() const { return bar_; }
  int family() const { return bar_; }
  int order() const { return order_; }
  const std::string& symbol_name() const { return sym_; }

  // Sorted direction list, 1-based.
  std::vector<int> dirs() const;
  // Multi-index counts over `n` directions.
  std::vector<int> counts(int n) const;

  Var with_dir(int i) const;
  Var with_bar(int bar) const;
  Var base() const;  // same kind and component, order 0

  bool is_jet_like() const { return kind_ == VarKind::Jet; }
  std::string name() const;

  auto operator<=>(const Var&) const = default;
  bool operator==(const Var&) const = default;

 private:
  VarKind kind_ = VarKind::Symbol;
  std::uint8_t bar_ = 0;
  std::uint8_t order_ = 0;
  std::uint32_t dirs_ = 0;  // packed base-16 digits, most significant first
  std::uint8_t comp_ = 0;
  std::string sym_;

  static Var make(VarKind kind, int comp, const std::vector<int>& dirs, int bar);
};

std::string dirs_string(const std::vector<int>& dirs);

}  // namespace dgal
