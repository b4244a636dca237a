#include "dgal/var.hpp"

#include <algorithm>
#include <cctype>

#include "dgal/errors.hpp"

namespace dgal {

namespace {

std::uint32_t pack_dirs(std::vector<int> dirs) {
  std::sort(dirs.begin(), dirs.end());
  std::uint32_t packed = 0;
  for (int d : dirs) packed = packed * 16u + static_cast<std::uint32_t>(d);
  return packed;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_index(std::string_view s, std::string_view whole) {
  if (!all_digits(s) || s.size() > 2) throw ParseError("bad index in variable '" + std::string(whole) + "'");
  int v = std::stoi(std::string(s));
  if (v < 1) throw ParseError("index must be positive in '" + std::string(whole) + "'");
  return v;
}

// Direction suffix: digits, or the one-dimensional aliases made of 'x'.
std::vector<int> parse_dirs(std::string_view s, std::string_view whole) {
  std::vector<int> dirs;
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == 'x'; })) {
    dirs.assign(s.size(), 1);
    return dirs;
  }
  if (!all_digits(s)) throw ParseError("bad direction string in '" + std::string(whole) + "'");
  for (char c : s) {
    int d = c - '0';
    if (d < 1) throw ParseError("direction 0 in '" + std::string(whole) + "'");
    dirs.push_back(d);
  }
  if (!std::is_sorted(dirs.begin(), dirs.end()))
    throw ParseError("direction string must be non-decreasing in '" + std::string(whole) + "'");
  return dirs;
}

// Splits "<letter><comp>[_<dirs>]" into component and directions.  An empty
// component means 1 (aliases y, y_x, g, ...).
bool split_indexed(std::string_view body, std::string_view whole, int& comp, std::vector<int>& dirs) {
  auto us = body.find('_');
  std::string_view c = body.substr(0, us);
  if (!c.empty() && !all_digits(c)) return false;
  comp = c.empty() ? 1 : parse_index(c, whole);
  dirs.clear();
  if (us != std::string_view::npos) dirs = parse_dirs(body.substr(us + 1), whole);
  return true;
}

}  // namespace

Var Var::make(VarKind kind, int comp, const std::vector<int>& dirs, int bar) {
  if (comp < 0 || comp > 255) throw ParseError("component out of range");
  if (static_cast<int>(dirs.size()) > kMaxOrder) throw OrderOverflow("jet order exceeds " + std::to_string(kMaxOrder));
  for (int d : dirs)
    if (d < 1 || d > 15) throw ParseError("direction out of range");
  Var v;
  v.kind_ = kind;
  v.comp_ = static_cast<std::uint8_t>(comp);
  v.bar_ = static_cast<std::uint8_t>(bar);
  v.order_ = static_cast<std::uint8_t>(dirs.size());
  v.dirs_ = pack_dirs(dirs);
  return v;
}

Var Var::source(int i) { return make(VarKind::Source, i, {}, 0); }
Var Var::param(int i, int bar) { return make(VarKind::Param, i, {}, bar); }
Var Var::jet(int k, const std::vector<int>& dirs, int bar) { return make(VarKind::Jet, k, dirs, bar); }
Var Var::groupoid(int u, const std::vector<int>& dirs) { return make(VarKind::Groupoid, u, dirs, 0); }
Var Var::formal(int family, int k, const std::vector<int>& dirs) { return make(VarKind::Formal, k, dirs, family); }

Var Var::symbol(std::string name) {
  Var v;
  v.kind_ = VarKind::Symbol;
  v.sym_ = std::move(name);
  return v;
}

Var Var::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty variable name");
  if (!(std::isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_'))
    throw ParseError("bad variable name '" + std::string(text) + "'");
  for (char c : text)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw ParseError("bad variable name '" + std::string(text) + "'");

  int comp = 0;
  std::vector<int> dirs;
  // Bar prefix applies to jets and parameters only.
  std::size_t bars = 0;
  while (bars < text.size() && text[bars] == 'b') ++bars;
  std::string_view rest = text.substr(bars);
  if (!rest.empty()) {
    char head = rest[0];
    std::string_view body = rest.substr(1);
    if (head == 'y' && split_indexed(body, text, comp, dirs)) return jet(comp, dirs, static_cast<int>(bars));
    if (head == 'a' && all_digits(body)) return param(parse_index(body, text), static_cast<int>(bars));
  }
  if (bars == 0) {
    char head = text[0];
    std::string_view body = text.substr(1);
    if (head == 'x') {
      if (body.empty()) return source(1);
      if (all_digits(body)) return source(parse_index(body, text));
    }
    if (head == 'g' && split_indexed(body, text, comp, dirs)) return groupoid(comp, dirs);
    if ((head == 'f' || head == 'h' || head == 'r') && !body.empty() && std::isdigit(static_cast<unsigned char>(body[0])) &&
        split_indexed(body, text, comp, dirs))
      return formal(head == 'f' ? 0 : head == 'h' ? 1 : 2, comp, dirs);
  }
  return symbol(std::string(text));
}

std::vector<int> Var::dirs() const {
  std::vector<int> out(order_);
  std::uint32_t packed = dirs_;
  for (int j = order_ - 1; j >= 0; --j) {
    out[j] = static_cast<int>(packed % 16u);
    packed /= 16u;
  }
  return out;
}

std::vector<int> Var::counts(int n) const {
  std::vector<int> c(n, 0);
  for (int d : dirs()) {
    if (d > n) throw ParseError("direction exceeds dimension in '" + name() + "'");
    ++c[d - 1];
  }
  return c;
}

Var Var::with_dir(int i) const {
  auto d = dirs();
  d.push_back(i);
  return make(kind_, comp_, d, bar_);
}

Var Var::with_bar(int bar) const {
  Var v = *this;
  v.bar_ = static_cast<std::uint8_t>(bar);
  return v;
}

Var Var::base() const {
  Var v = *this;
  v.order_ = 0;
  v.dirs_ = 0;
  return v;
}

std::string dirs_string(const std::vector<int>& dirs) {
  std::string s;
  for (int d : dirs) s += std::to_string(d);
  return s;
}

std::string Var::name() const {
  auto suffix = [&] { return order_ == 0 ? std::string() : "_" + dirs_string(dirs()); };
  switch (kind_) {
    case VarKind::Source:
      return "x" + std::to_string(comp_);
    case VarKind::Param:
      return std::string(bar_, 'b') + "a" + std::to_string(comp_);
    case VarKind::Jet:
      return std::string(bar_, 'b') + "y" + std::to_string(comp_) + suffix();
    case VarKind::Groupoid:
      return "g" + std::to_string(comp_) + suffix();
    case VarKind::Formal: {
      static constexpr char letters[] = {'f', 'h', 'r'};
      char c = bar_ < 3 ? letters[bar_] : 'r';
      return std::string(1, c) + std::to_string(comp_) + suffix();
    }
    case VarKind::Symbol:
      return sym_;
  }
  return sym_;
}

}  // namespace dgal
