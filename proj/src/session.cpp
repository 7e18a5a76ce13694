#include "lff/session.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "lff/bflin.hpp"
#include "lff/cosets.hpp"
#include "lff/distinction.hpp"
#include "lff/galois.hpp"
#include "lff/pairs.hpp"

namespace lff {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool is_ident(const std::string& s) {
  if (s.empty() || (!std::isalpha((unsigned char)s[0]) && s[0] != '_')) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

// Split on sep at bracket depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_i64(int line, const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  try {
    size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SessionError(line, "malformed " + what + " '" + s + "'");
  }
}

Frac parse_frac(int line, const std::string& raw) {
  const std::string s = trim(raw);
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Frac(parse_i64(line, s, "number"));
  return Frac(parse_i64(line, s.substr(0, slash), "number"),
              parse_i64(line, s.substr(slash + 1), "number"));
}

Monomial parse_mon(int line, const std::string& raw) {
  try {
    return Monomial::parse(trim(raw));
  } catch (const std::exception& ex) {
    throw SessionError(line, std::string("malformed monomial: ") + ex.what());
  }
}

std::vector<Monomial> parse_mon_list(int line, const std::string& raw) {
  const std::string s = trim(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw SessionError(line, "expected [list] of monomials");
  const std::string inner = trim(s.substr(1, s.size() - 2));
  std::vector<Monomial> out;
  if (inner.empty()) return out;
  for (const auto& part : split_top(inner, ',')) out.push_back(parse_mon(line, part));
  return out;
}

// "key = value, key = value" with top-level comma splitting.
std::vector<std::pair<std::string, std::string>> parse_fields(int line, const std::string& body) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& part : split_top(body, ',')) {
    const std::string p = trim(part);
    if (p.empty()) throw SessionError(line, "empty field");
    size_t eq = p.find('=');
    if (eq == std::string::npos) throw SessionError(line, "expected key = value in '" + p + "'");
    std::string key = trim(p.substr(0, eq)), val = trim(p.substr(eq + 1));
    if (!is_ident(key)) throw SessionError(line, "bad field name '" + key + "'");
    if (val.empty()) throw SessionError(line, "empty value for '" + key + "'");
    out.emplace_back(key, val);
  }
  return out;
}

Label parse_label(int line, const std::string& raw) {
  const std::string s = trim(raw);
  size_t caret = s.rfind('^');
  if (caret == std::string::npos)
    throw SessionError(line, "label must be <generator>^<order>, got '" + s + "'");
  const std::string name = trim(s.substr(0, caret));
  if (!is_ident(name)) throw SessionError(line, "bad label generator '" + name + "'");
  int order = static_cast<int>(parse_i64(line, s.substr(caret + 1), "label order"));
  if (order < 2) throw SessionError(line, "label order must be at least 2");
  return Label::generator(name, order);
}

SelfDual parse_selfdual(int line, const std::string& raw) {
  const std::string s = trim(raw);
  size_t at = s.find('@');
  if (at == std::string::npos)
    throw SessionError(line, "selfdual must be <symplectic|orthogonal>@<monomial>");
  const std::string kind = trim(s.substr(0, at));
  SelfDual sd;
  if (kind == "symplectic")
    sd.kind = SelfDual::symplectic;
  else if (kind == "orthogonal")
    sd.kind = SelfDual::orthogonal;
  else
    throw SessionError(line, "selfdual kind must be symplectic or orthogonal");
  sd.at = parse_mon(line, s.substr(at + 1));
  return sd;
}

const std::map<std::string, SessionCommand::Kind>& command_table() {
  static const std::map<std::string, SessionCommand::Kind> t = {
      {"lfactor-lin", SessionCommand::lfactor_lin},
      {"lfactor-pair", SessionCommand::lfactor_pair},
      {"galois-side", SessionCommand::galois_side},
      {"classify", SessionCommand::classify},
      {"verify-main", SessionCommand::verify_main},
      {"cosets", SessionCommand::cosets},
      {"general-position", SessionCommand::general_position},
  };
  return t;
}

std::string command_name(SessionCommand::Kind kind) {
  for (const auto& [name, k] : command_table())
    if (k == kind) return name;
  return "?";
}

std::vector<int> parse_composition(int line, const std::string& raw) {
  std::string s = trim(raw);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> comp;
  for (const auto& part : split_top(s, ',')) {
    int v = static_cast<int>(parse_i64(line, part, "composition entry"));
    if (v <= 0) throw SessionError(line, "composition entries must be positive");
    comp.push_back(v);
  }
  if (comp.empty()) throw SessionError(line, "empty composition");
  return comp;
}

std::vector<Frac> parse_twists(int line, const std::string& raw) {
  std::string s = trim(raw);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<Frac> out;
  for (const auto& part : split_top(s, ',')) out.push_back(parse_frac(line, part));
  return out;
}

struct Parser {
  SessionSpec spec;
  std::map<std::string, int> decl_lines;

  void declare(const std::string& id, int line) {
    if (!is_ident(id)) throw SessionError(line, "bad identifier '" + id + "'");
    auto [it, fresh] = decl_lines.emplace(id, line);
    if (!fresh)
      throw SessionError(line, "duplicate id '" + id + "' (first declared at line " +
                                   std::to_string(it->second) + ")");
  }

  const SessionSpec::CuspDecl& need_cuspidal(int line, const std::string& id) const {
    const auto* d = spec.find_cuspidal(id);
    if (!d) throw SessionError(line, "unknown cuspidal '" + id + "'");
    return *d;
  }
  const SessionSpec::CuspDecl& need_char(int line, const std::string& id) const {
    const auto& d = need_cuspidal(line, id);
    if (!d.c.is_char()) throw SessionError(line, "'" + id + "' is not a character");
    return d;
  }
  const SessionSpec::RepDecl& need_rep(int line, const std::string& id) const {
    const auto* d = spec.find_rep(id);
    if (!d) throw SessionError(line, "unknown representation '" + id + "'");
    return *d;
  }

  // char <id> { satake = <mon> [, label = <gen>^<order>] }
  void parse_char(int line, const std::string& id, const std::string& body) {
    declare(id, line);
    Monomial satake;
    bool have_satake = false;
    std::optional<Label> label;
    for (const auto& [key, val] : parse_fields(line, body)) {
      if (key == "satake") {
        satake = parse_mon(line, val);
        have_satake = true;
      } else if (key == "label") {
        label = parse_label(line, val);
      } else {
        throw SessionError(line, "unknown char field '" + key + "'");
      }
    }
    if (!have_satake) throw SessionError(line, "char needs satake = <monomial>");
    Cuspidal c = label ? Cuspidal::ramified_char(satake, *label) : Cuspidal::unramified_char(satake);
    spec.cuspidals.push_back({id, c, line});
  }

  // cuspidal <id> { r = <int>, twist = <mon>, torsion = <int>,
  //                 selfdual = <kind>@<mon>, central = <mon>,
  //                 wedge = [..], sym = [..], std = [..] }
  void parse_cuspidal(int line, const std::string& id, const std::string& body) {
    declare(id, line);
    int r = 0, torsion = 1;
    Monomial twist, central;
    bool have_twist = false, have_central = false, have_wedge_sym = false;
    std::optional<SelfDual> sd;
    std::vector<Monomial> wedge, sym, std_roots;
    bool have_std = false;
    for (const auto& [key, val] : parse_fields(line, body)) {
      if (key == "r")
        r = static_cast<int>(parse_i64(line, val, "r"));
      else if (key == "twist") {
        twist = parse_mon(line, val);
        have_twist = true;
      } else if (key == "torsion")
        torsion = static_cast<int>(parse_i64(line, val, "torsion"));
      else if (key == "selfdual")
        sd = parse_selfdual(line, val);
      else if (key == "central") {
        central = parse_mon(line, val);
        have_central = true;
      } else if (key == "wedge") {
        wedge = parse_mon_list(line, val);
        have_wedge_sym = true;
      } else if (key == "sym") {
        sym = parse_mon_list(line, val);
        have_wedge_sym = true;
      } else if (key == "std") {
        std_roots = parse_mon_list(line, val);
        have_std = true;
      } else
        throw SessionError(line, "unknown cuspidal field '" + key + "'");
    }
    if (r < 2) throw SessionError(line, "cuspidal needs r >= 2 (use char for r = 1)");
    if (!have_twist) throw SessionError(line, "cuspidal needs twist = <monomial>");
    if (torsion < 1) throw SessionError(line, "torsion must be positive");
    try {
      Cuspidal c = Cuspidal::abstract(id, r, twist, torsion, sd,
                                      have_central ? central : Monomial::one());
      if (have_wedge_sym) c.declare_wedge_sym(wedge, sym);
      if (have_std) c.declare_standard(std_roots);
      spec.cuspidals.push_back({id, c, line});
    } catch (const std::exception& ex) {
      throw SessionError(line, ex.what());
    }
  }

  // rep <id> = seg(<cusp>, k=<int>, e=<frac>) x ...
  void parse_rep(int line, const std::string& id, const std::string& rhs) {
    declare(id, line);
    SessionSpec::RepDecl decl{id, {}, {}, line};
    std::vector<Segment> segs;
    size_t pos = 0;
    const std::string s = trim(rhs);
    while (true) {
      while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
      if (s.compare(pos, 4, "seg(") != 0) throw SessionError(line, "expected seg(...)");
      pos += 4;
      int depth = 1;
      size_t start = pos;
      while (pos < s.size() && depth > 0) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        ++pos;
      }
      if (depth != 0) throw SessionError(line, "unterminated seg(");
      const std::string inner = s.substr(start, pos - 1 - start);
      auto parts = split_top(inner, ',');
      if (parts.empty()) throw SessionError(line, "seg needs a cuspidal id");
      const std::string cusp_id = trim(parts[0]);
      const auto& cusp = need_cuspidal(line, cusp_id);
      SessionSpec::SegDecl sd{cusp_id, 1, Frac(0)};
      for (size_t i = 1; i < parts.size(); ++i) {
        const std::string p = trim(parts[i]);
        size_t eq = p.find('=');
        if (eq == std::string::npos) throw SessionError(line, "expected k=/e= in seg");
        const std::string key = trim(p.substr(0, eq)), val = trim(p.substr(eq + 1));
        if (key == "k")
          sd.k = static_cast<int>(parse_i64(line, val, "k"));
        else if (key == "e")
          sd.e = parse_frac(line, val);
        else
          throw SessionError(line, "unknown seg field '" + key + "'");
      }
      if (sd.k <= 0) throw SessionError(line, "segment length must be positive");
      decl.segs.push_back(sd);
      segs.push_back(Segment{cusp.c, sd.k, sd.e});
      while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
      if (pos >= s.size()) break;
      if (s[pos] != 'x') throw SessionError(line, "expected 'x' between segments");
      ++pos;
    }
    decl.rep = GLRep(std::move(segs));
    spec.reps.push_back(std::move(decl));
  }

  void parse_command(int line, const std::string& name, std::vector<std::string> args) {
    auto it = command_table().find(name);
    if (it == command_table().end()) throw SessionError(line, "unknown command '" + name + "'");
    const SessionCommand::Kind kind = it->second;
    auto check_alpha_tail = [&](size_t from) {
      for (size_t i = from; i < args.size(); ++i) {
        if (args[i].rfind("alpha=", 0) != 0)
          throw SessionError(line, "unexpected argument '" + args[i] + "'");
        need_char(line, args[i].substr(6));
      }
    };
    switch (kind) {
      case SessionCommand::lfactor_lin:
      case SessionCommand::classify:
        if (args.size() < 1 || args.size() > 2)
          throw SessionError(line, name + " takes <rep> [alpha=<char>]");
        need_rep(line, args[0]);
        check_alpha_tail(1);
        break;
      case SessionCommand::lfactor_pair:
        if (args.size() != 2) throw SessionError(line, name + " takes <rep> <rep>");
        need_rep(line, args[0]);
        need_rep(line, args[1]);
        break;
      case SessionCommand::galois_side:
      case SessionCommand::verify_main:
        if (args.size() != 1) throw SessionError(line, name + " takes <rep>");
        need_rep(line, args[0]);
        break;
      case SessionCommand::cosets:
        if (args.size() != 1) throw SessionError(line, name + " takes <composition>");
        parse_composition(line, args[0]);
        break;
      case SessionCommand::general_position: {
        if (args.size() != 3) throw SessionError(line, name + " takes <rep> <twists> <char>");
        const auto& rep = need_rep(line, args[0]);
        auto u = parse_twists(line, args[1]);
        if (u.size() != rep.rep.segs.size())
          throw SessionError(line, "need one twist per segment (" +
                                       std::to_string(rep.rep.segs.size()) + ")");
        need_char(line, args[2]);
        break;
      }
    }
    spec.commands.push_back({kind, std::move(args), line});
  }

  void parse_line(int line, const std::string& text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    if (head == "char" || head == "cuspidal") {
      std::string id;
      is >> id;
      size_t open = text.find('{'), close = text.rfind('}');
      if (open == std::string::npos || close == std::string::npos || close < open)
        throw SessionError(line, head + " needs a { ... } body");
      // The id token must sit before the brace.
      if (text.find(id) > open || id.empty() || id.front() == '{')
        throw SessionError(line, head + " needs an identifier");
      const std::string body = text.substr(open + 1, close - open - 1);
      if (head == "char")
        parse_char(line, id, body);
      else
        parse_cuspidal(line, id, body);
      return;
    }
    if (head == "rep") {
      std::string id, eq;
      is >> id >> eq;
      if (eq != "=") throw SessionError(line, "rep syntax: rep <id> = seg(...)");
      std::string rhs;
      std::getline(is, rhs);
      parse_rep(line, id, rhs);
      return;
    }
    std::vector<std::string> args;
    std::string tok;
    while (is >> tok) args.push_back(tok);
    parse_command(line, head, std::move(args));
  }
};

std::string frac_str(Frac f) { return f.str(); }

std::string exps_str(const TorusCharacter& tc) {
  if (tc.exps.empty()) return "0";
  std::string out;
  for (const auto& [c, e] : tc.exps) {
    if (!out.empty()) out += " ";
    out += c + "^(" + e.str() + ")";
  }
  return out;
}

}  // namespace

std::string SessionCommand::str() const {
  std::string out = command_name(kind);
  for (const auto& a : args) out += " " + a;
  return out;
}

const SessionSpec::CuspDecl* SessionSpec::find_cuspidal(const std::string& id) const {
  for (const auto& d : cuspidals)
    if (d.id == id) return &d;
  return nullptr;
}

const SessionSpec::RepDecl* SessionSpec::find_rep(const std::string& id) const {
  for (const auto& d : reps)
    if (d.id == id) return &d;
  return nullptr;
}

std::string SessionSpec::print() const {
  std::ostringstream os;
  for (const auto& d : cuspidals) {
    if (d.c.is_char()) {
      os << "char " << d.id << " { satake = " << d.c.twist().str();
      if (!d.c.label().trivial()) {
        const auto& [name, eo] = *d.c.label().gens.begin();
        os << ", label = " << name << "^" << eo.second;
      }
      os << " }\n";
    } else {
      os << "cuspidal " << d.id << " { r = " << d.c.r() << ", twist = " << d.c.twist().str()
         << ", torsion = " << d.c.torsion();
      if (d.c.selfdual()) {
        os << ", selfdual = "
           << (d.c.selfdual()->kind == SelfDual::symplectic ? "symplectic" : "orthogonal") << "@"
           << d.c.selfdual()->at.str();
      }
      os << " }\n";
    }
  }
  for (const auto& d : reps) {
    os << "rep " << d.id << " = ";
    for (size_t i = 0; i < d.segs.size(); ++i) {
      if (i) os << " x ";
      os << "seg(" << d.segs[i].cusp << ", k=" << d.segs[i].k << ", e=" << frac_str(d.segs[i].e)
         << ")";
    }
    os << "\n";
  }
  for (const auto& c : commands) os << c.str() << "\n";
  return os.str();
}

SessionSpec parse_session(const std::string& text) {
  Parser p;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string t = trim(raw);
    if (t.empty()) continue;
    p.parse_line(line, t);
  }
  return std::move(p.spec);
}

namespace {

struct Runner {
  const SessionSpec& spec;
  bool color;
  std::ostringstream os;
  bool fail = false;

  std::string mark(bool ok) {
    const std::string s = ok ? "PASS" : "FAIL";
    if (!color) return s;
    return (ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
  }

  Cuspidal alpha_arg(const std::vector<std::string>& args, size_t from) const {
    for (size_t i = from; i < args.size(); ++i)
      if (args[i].rfind("alpha=", 0) == 0)
        return spec.find_cuspidal(args[i].substr(6))->c;
    return Cuspidal::unramified_char(Monomial::one());
  }

  const GLRep& rep(const std::string& id) const { return spec.find_rep(id)->rep; }

  void euler_block(const std::string& name, const Euler& L) {
    os << name << " = " << L.str() << "\n";
    os << "  roots: " << L.root_list_str() << "\n";
  }

  void dispatch(const SessionCommand& cmd) {
    switch (cmd.kind) {
      case SessionCommand::lfactor_lin: {
        auto r = lin_L_langlands(rep(cmd.args[0]), alpha_arg(cmd.args, 1));
        euler_block("L^lin", r.L);
        euler_block("L0", r.L0);
        euler_block("Lradex", r.Lradex);
        break;
      }
      case SessionCommand::lfactor_pair: {
        auto r = pair_L_rep(rep(cmd.args[0]), rep(cmd.args[1]));
        euler_block("L", r.L);
        euler_block("L0", r.L0);
        euler_block("Lex", r.Lex);
        euler_block("Lradex", r.Lradex);
        break;
      }
      case SessionCommand::galois_side: {
        WDRep phi = langlands_param(rep(cmd.args[0]));
        os << "phi = " << phi.str() << "\n";
        euler_block("L(phi)", artin_L(phi));
        euler_block("L(phi, wedge^2)", wedge2_L(phi));
        euler_block("L(phi, Sym^2)", sym2_L(phi));
        break;
      }
      case SessionCommand::classify: {
        const GLRep& pi = rep(cmd.args[0]);
        auto cert = classify_generic(pi, alpha_arg(cmd.args, 1));
        if (cert)
          os << "distinguished: " << cert->str(pi) << "\n";
        else
          os << "not distinguished\n";
        break;
      }
      case SessionCommand::verify_main: {
        auto r = verify_main_theorem(rep(cmd.args[0]));
        os << mark(r.pass) << " " << cmd.args[0] << "\n" << r.str();
        if (!r.pass) fail = true;
        break;
      }
      case SessionCommand::cosets: {
        auto comp = parse_composition(cmd.line, cmd.args[0]);
        auto all = enumerate_relevant(comp);
        os << "I(" << cmd.args[0] << "): " << all.size() << " subpartitions\n";
        for (const auto& s : all) {
          auto quot = modulus_character(CosetGroup::P_s_theta, s) *
                      modulus_character(CosetGroup::P_s, s).scaled(Frac(-1, 2));
          os << "  " << s.str() << "\n";
          os << "    chi_alpha exponents: " << exps_str(chi_alpha_restriction(s)) << "\n";
          os << "    delta(P_s^theta) / delta(P_s)^(1/2): " << quot.str() << "\n";
        }
        break;
      }
      case SessionCommand::general_position: {
        const GLRep& pi = rep(cmd.args[0]);
        auto u = parse_twists(cmd.line, cmd.args[1]);
        auto alpha = spec.find_cuspidal(cmd.args[2])->c;
        auto report = is_general_position(pi, u, alpha);
        os << (report.all() ? "general position" : "not general position") << ": "
           << report.str() << "\n";
        break;
      }
    }
  }

  RunResult run_all() {
    for (const auto& cmd : spec.commands) {
      os << "> " << cmd.str() << "\n";
      try {
        dispatch(cmd);
      } catch (const std::exception& ex) {
        os << (color ? "\033[31mERROR\033[0m" : "ERROR") << " " << ex.what() << "\n";
        fail = true;
      }
      os << "\n";
    }
    return {os.str(), fail ? 1 : 0};
  }
};

}  // namespace

RunResult run(const SessionSpec& spec, bool color) {
  Runner r{spec, color, {}, false};
  return r.run_all();
}

}  // namespace lff
