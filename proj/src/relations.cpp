#include "spweb/relations.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

namespace spweb {

namespace {

int obj_mass(const Obj& o) { return o.label + 2 * o.exp; }

// ---- parsed rule tables ----------------------------------------------------

struct ExplTerm {
  QScalar coeff;
  int lo_label = 1, lo_mass = 1;  // lower replacement rung
  int hi_label = 1;               // upper replacement rung (mass derived)
  int smid = 0, dmid = 0;         // intermediate source/destination labels
};

struct SqTerm {
  QScalar coeff;
  int kind = 0;          // 0 = id, 1 = sw (1-labeled), 2 = sw2 (2-labeled)
  int lmid = 0, rmid = 0;
};

struct Tables {
  std::map<std::array<int, 4>, std::vector<ExplTerm>> expl2;  // x,w,y,z
  std::map<std::array<int, 2>, std::vector<ExplTerm>> expl3;  // x,y
  std::map<std::array<int, 6>, std::vector<SqTerm>> squares;  // x,a,w,y,b,z
  std::vector<QScalar> swap_mid2, swap_mid3;
};

[[noreturn]] void bad_rule(const std::string& line, const std::string& what) {
  throw InternalDefect("malformed rule record (" + what + "): " + line);
}

// Splits "name(a,b,...)" argument lists of single-token entries.
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Splits on `sep` only at parenthesis depth zero (term lists may contain
// parenthesized argument lists using the same separator).
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
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

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Rung token of a replacement stack: "1" (mass 1), "2" (mass 2), "0'" (mass 2).
std::pair<int, int> rung_token(const std::string& t, const std::string& line) {
  if (t == "1") return {1, 1};
  if (t == "2") return {2, 2};
  if (t == "0'") return {0, 2};
  bad_rule(line, "rung token '" + t + "'");
}

ExplTerm parse_expl_term(const std::string& body, const QScalar& coeff, bool with_rungs,
                         const std::string& line) {
  // body is "a,b" (explode2) or "lo,hi;a,b" (explode3)
  ExplTerm t;
  t.coeff = coeff;
  std::string mids = body;
  if (with_rungs) {
    std::vector<std::string> halves = split(body, ';');
    if (halves.size() != 2) bad_rule(line, "expected 'lo,hi;smid,dmid'");
    std::vector<std::string> rr = split(trim(halves[0]), ',');
    if (rr.size() != 2) bad_rule(line, "expected two rung tokens");
    std::tie(t.lo_label, t.lo_mass) = rung_token(trim(rr[0]), line);
    auto [hl, hm] = rung_token(trim(rr[1]), line);
    t.hi_label = hl;
    (void)hm;  // upper rung mass is derived from the exploded rung
    mids = trim(halves[1]);
  }
  std::vector<std::string> mm = split(mids, ',');
  if (mm.size() != 2) bad_rule(line, "expected two upright labels");
  t.smid = std::stoi(trim(mm[0]));
  t.dmid = std::stoi(trim(mm[1]));
  return t;
}

Tables parse_tables() {
  Tables tb;
  std::istringstream in(rule_source());
  std::string line;
  while (std::getline(in, line)) {
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t colon = s.find(": ");
    if (colon == std::string::npos) {
      if (s.back() == ':') colon = s.size() - 1;
      else bad_rule(s, "missing ':'");
    }
    std::string tag = s.substr(0, colon);
    std::string rhs = trim(s.substr(std::min(colon + 2, s.size())));
    std::vector<std::string> terms;
    if (rhs != "0" && !rhs.empty())
      for (const std::string& t : split_top(rhs, ';')) terms.push_back(trim(t));

    auto coeff_and_body = [&](const std::string& term, std::string* body) {
      size_t p = term.find_last_of(' ');
      if (p == std::string::npos) bad_rule(s, "term without a shape");
      *body = trim(term.substr(p + 1));
      return parse_scalar(term.substr(0, p));
    };

    if (tag == "appA.swap.mid2" || tag == "appA.swap.mid3") {
      std::vector<QScalar>& dst = tag == "appA.swap.mid2" ? tb.swap_mid2 : tb.swap_mid3;
      for (const std::string& t : terms) dst.push_back(parse_scalar(t));
      if (dst.size() != 3) bad_rule(s, "expected three coefficients");
    } else if (tag.rfind("appA.explode2.(", 0) == 0) {
      std::string key = tag.substr(15, tag.size() - 16);  // "x,w|y,z"
      std::vector<std::string> halves = split(key, '|');
      std::vector<std::string> a = split(halves[0], ','), b = split(halves[1], ',');
      std::array<int, 4> k = {std::stoi(a[0]), std::stoi(a[1]), std::stoi(b[0]),
                              std::stoi(b[1])};
      std::vector<ExplTerm>& dst = tb.expl2[k];
      for (const std::string& term : terms) {
        std::string body;
        QScalar c = coeff_and_body(term, &body);
        if (body.rfind("r(", 0) != 0 || body.back() != ')') bad_rule(s, "expected r(...)");
        dst.push_back(parse_expl_term(body.substr(2, body.size() - 3), c, false, s));
      }
    } else if (tag.rfind("appA.explode3.(", 0) == 0) {
      std::string key = tag.substr(15, tag.size() - 16);  // "x,y"
      std::vector<std::string> a = split(key, ',');
      std::array<int, 2> k = {std::stoi(a[0]), std::stoi(a[1])};
      std::vector<ExplTerm>& dst = tb.expl3[k];
      for (const std::string& term : terms) {
        std::string body;
        QScalar c = coeff_and_body(term, &body);
        if (body.rfind("r(", 0) != 0 || body.back() != ')') bad_rule(s, "expected r(...)");
        dst.push_back(parse_expl_term(body.substr(2, body.size() - 3), c, true, s));
      }
    } else if (tag.rfind("appA.square.(", 0) == 0) {
      std::string key = tag.substr(12);  // "(x,a,w)x(y,b,z)"
      size_t mid = key.find(")x(");
      std::vector<std::string> a = split(key.substr(1, mid - 1), ',');
      std::vector<std::string> b = split(key.substr(mid + 3, key.size() - mid - 4), ',');
      std::array<int, 6> k = {std::stoi(a[0]), std::stoi(a[1]), std::stoi(a[2]),
                              std::stoi(b[0]), std::stoi(b[1]), std::stoi(b[2])};
      std::vector<SqTerm>& dst = tb.squares[k];
      dst.clear();
      for (const std::string& term : terms) {
        SqTerm t;
        if (term.size() >= 2 && term.substr(term.size() - 2) == "id") {
          t.kind = 0;
          t.coeff = parse_scalar(term.substr(0, term.size() - 2));
        } else {
          std::string body;
          t.coeff = coeff_and_body(term, &body);
          if (body.rfind("sw2(", 0) == 0) t.kind = 2;
          else if (body.rfind("sw(", 0) == 0) t.kind = 1;
          else bad_rule(s, "unknown term shape '" + body + "'");
          size_t open = body.find('(');
          std::vector<std::string> mm =
              split(body.substr(open + 1, body.size() - open - 2), ',');
          t.lmid = std::stoi(trim(mm[0]));
          t.rmid = std::stoi(trim(mm[1]));
        }
        dst.push_back(t);
      }
      tb.squares[k] = dst;
    } else {
      bad_rule(s, "unknown tag");
    }
  }
  if (tb.expl2.size() != 25 || tb.expl3.size() != 16 || tb.squares.size() != 100)
    throw InternalDefect("rule table has missing records");
  return tb;
}

const Tables& tables() {
  static const Tables tb = parse_tables();
  return tb;
}

Obj mid_obj(int label, int mass, const std::string& ctx) {
  if (mass < label || (mass - label) % 2 != 0)
    throw InternalDefect("no case matched: impossible intermediate upright in " + ctx);
  return Obj{label, (mass - label) / 2};
}

std::string slice_ctx(const LObject& below, const Rung& lower, const Rung& upper) {
  std::ostringstream os;
  os << "over " << lobject_str(below) << " cols " << lower.col << "," << upper.col;
  return os.str();
}

// ---- explosion -------------------------------------------------------------

LocalCombo explode_tagged(const LObject& below, const Rung& rung, std::string* tag) {
  RungResult rr = apply_rung(below, rung);
  if (rung_terminal(below, rung))
    throw InvalidArgument("explode requires a non-terminal rung");
  bool isF = rung.dir == Dir::F;
  size_t c = static_cast<size_t>(rung.col);
  size_t src = isF ? c : c + 1, dst = isF ? c + 1 : c;
  const Obj& s0 = below[src];
  const Obj& d0 = below[dst];
  int total = rung.label + 2 * rr.exponent;
  LocalCombo out;
  auto push = [&](const QScalar& coeff, int lo_label, const Obj& smid, const Obj& dmid,
                  int hi_label) {
    Rung lo{rung.col, rung.dir, lo_label, isF ? smid : dmid, isF ? dmid : smid};
    Rung hi{rung.col, rung.dir, hi_label, rung.out_left, rung.out_right};
    out.push_back({coeff, {lo, hi}});
  };

  if (rr.exponent >= 1) {
    // Generic: peel off a 0-labeled mass-2 step, keep the remainder above.
    if (tag != nullptr) *tag = "appA.explode.generic";
    Obj smid{s0.label, s0.exp - 1};
    Obj dmid{d0.label, d0.exp + 1};
    if (smid.exp < 0) throw InternalDefect("no case matched: generic explosion source");
    push(QScalar(1), 0, smid, dmid, rung.label);
    return out;
  }
  const Obj& s1 = isF ? rung.out_left : rung.out_right;
  const Obj& d1 = isF ? rung.out_right : rung.out_left;
  if (rung.label == 2) {
    std::array<int, 4> key = {s0.label, s1.label, d0.label, d1.label};
    auto it = tables().expl2.find(key);
    std::ostringstream name;
    name << "appA.explode2.(" << key[0] << "," << key[1] << "|" << key[2] << ","
         << key[3] << ")";
    if (it == tables().expl2.end())
      throw InternalDefect("no table entry " + name.str());
    if (tag != nullptr) *tag = name.str();
    for (const ExplTerm& t : it->second)
      push(t.coeff, t.lo_label,
           mid_obj(t.smid, obj_mass(s0) - t.lo_mass, name.str()),
           mid_obj(t.dmid, obj_mass(d0) + t.lo_mass, name.str()), t.hi_label);
    return out;
  }
  if (rung.label == 3) {
    std::array<int, 2> key = {s0.label, d0.label};
    auto it = tables().expl3.find(key);
    std::ostringstream name;
    name << "appA.explode3.(" << key[0] << "," << key[1] << ")";
    if (it == tables().expl3.end())
      throw InternalDefect("no table entry " + name.str());
    if (tag != nullptr) *tag = name.str();
    for (const ExplTerm& t : it->second)
      push(t.coeff, t.lo_label,
           mid_obj(t.smid, obj_mass(s0) - t.lo_mass, name.str()),
           mid_obj(t.dmid, obj_mass(d0) + t.lo_mass, name.str()), t.hi_label);
    return out;
  }
  (void)total;
  throw InternalDefect("no case matched: explosion of rung label " +
                       std::to_string(rung.label));
}

// ---- reordering ------------------------------------------------------------

// Base shape: lower F-rung on (c, c+1), upper E-rung on (c+1, c+2).
LocalCombo swap_base(const LObject& below, const Rung& lower, const Rung& upper,
                     const LObject& M, const LObject& T, std::string* tag) {
  size_t c = static_cast<size_t>(lower.col);
  const Obj& e = below[c + 1];
  const Obj& d = M[c + 1];
  const Obj& x = T[c + 1];
  std::string ctx = slice_ctx(below, lower, upper);

  if (lower.label == 1 && upper.label == 1 && d.exp > 0) {
    // Shared-upright swap with exponent room on the middle upright.
    if (tag != nullptr) *tag = "appA.swap.exp";
    Rung r1{lower.col, Dir::E, 1, Obj{T[c].label, T[c].exp + 1}, Obj{d.label, d.exp - 1}};
    Rung r2{lower.col + 1, Dir::E, 1, Obj{x.label, x.exp - 1}, T[c + 2]};
    Rung r3{lower.col, Dir::F, 0, T[c], T[c + 1]};
    return {{QScalar(1), {r1, r2, r3}}};
  }
  if (lower.label == 1 && upper.label == 1 && d.exp == 0 && d.label == 2 &&
      x.label == 1) {
    if (tag != nullptr) *tag = "appA.swap.mid2";
    const std::vector<QScalar>& k = tables().swap_mid2;
    LocalCombo out;
    out.push_back({k[0],
                   {Rung{lower.col + 1, Dir::E, 1, Obj{2, 0}, T[c + 2]},
                    Rung{lower.col, Dir::F, 1, T[c], T[c + 1]}}});
    out.push_back({k[1],
                   {Rung{lower.col, Dir::E, 1, Obj{T[c].label, T[c].exp + 1}, Obj{0, 0}},
                    Rung{lower.col + 1, Dir::E, 1, Obj{1, 0}, T[c + 2]},
                    Rung{lower.col, Dir::F, 0, T[c], T[c + 1]}}});
    out.push_back({k[2],
                   {Rung{lower.col + 1, Dir::E, 1, Obj{0, 1}, T[c + 2]},
                    Rung{lower.col, Dir::F, 1, T[c], T[c + 1]}}});
    return out;
  }
  if (lower.label == 1 && upper.label == 1 && d.exp == 0 && d.label == 3) {
    if (tag != nullptr) *tag = "appA.swap.mid3";
    const std::vector<QScalar>& k = tables().swap_mid3;
    LocalCombo out;
    out.push_back({k[0],
                   {Rung{lower.col + 1, Dir::E, 1, Obj{3, 0}, T[c + 2]},
                    Rung{lower.col, Dir::F, 1, T[c], T[c + 1]}}});
    out.push_back({k[1],
                   {Rung{lower.col, Dir::E, 1, Obj{T[c].label, T[c].exp + 1}, Obj{1, 0}},
                    Rung{lower.col + 1, Dir::E, 1, Obj{2, 0}, T[c + 2]},
                    Rung{lower.col, Dir::F, 0, T[c], T[c + 1]}}});
    out.push_back({k[2],
                   {Rung{lower.col + 1, Dir::E, 1, Obj{1, 1}, T[c + 2]},
                    Rung{lower.col, Dir::F, 1, T[c], T[c + 1]}}});
    return out;
  }

  // Plain commutation past the shared upright: the intermediate label is the
  // unique one compatible with both vertices.
  if (tag != nullptr) *tag = "appA.swap.pass";
  int mb = rung_mass(M, upper);
  int midmass = obj_mass(e) + mb;
  std::vector<int> cands;
  for (int lam = 0; lam <= 3; ++lam) {
    if (!vertex_ok(e.label, lam, upper.label)) continue;
    if (!vertex_ok(lam, x.label, lower.label)) continue;
    if (midmass < lam || (midmass - lam) % 2 != 0) continue;
    cands.push_back(lam);
  }
  if (cands.size() != 1)
    throw InternalDefect("no case matched: swap " + ctx + " has " +
                         std::to_string(cands.size()) + " intermediate labels");
  Rung r1{lower.col + 1, Dir::E, upper.label,
          Obj{cands[0], (midmass - cands[0]) / 2}, T[c + 2]};
  Rung r2{lower.col, Dir::F, lower.label, T[c], T[c + 1]};
  return {{QScalar(1), {r1, r2}}};
}

LocalCombo square_case(const LObject& below, const Rung& lower, const Rung& upper,
                       const LObject& M, const LObject& T, std::string* tag) {
  size_t c = static_cast<size_t>(lower.col);
  if (lower.label == 0 && upper.label == 0) {
    if (tag != nullptr) *tag = "appA.square.special.00";
    return {{QScalar(1), {}}};
  }
  if (lower.label == 0 && upper.label == 1) {
    if (tag != nullptr) *tag = "appA.square.special.01";
    return {{QScalar(1), {Rung{lower.col, Dir::F, 1, T[c], T[c + 1]}}}};
  }
  if (lower.label == 1 && upper.label == 0) {
    if (tag != nullptr) *tag = "appA.square.special.10";
    return {{QScalar(1), {Rung{lower.col, Dir::E, 1, T[c], T[c + 1]}}}};
  }
  std::array<int, 6> key = {below[c].label,     M[c].label,     T[c].label,
                            below[c + 1].label, M[c + 1].label, T[c + 1].label};
  std::ostringstream name;
  name << "appA.square.(" << key[0] << "," << key[1] << "," << key[2] << ")x("
       << key[3] << "," << key[4] << "," << key[5] << ")";
  auto it = tables().squares.find(key);
  if (it == tables().squares.end())
    throw InternalDefect("no table entry " + name.str());
  if (tag != nullptr) *tag = name.str();
  LocalCombo out;
  for (const SqTerm& t : it->second) {
    if (t.kind == 0) {
      out.push_back({t.coeff, {}});
      continue;
    }
    int m = t.kind == 2 ? 2 : 1;
    int rl = t.kind == 2 ? 2 : 1;
    Rung r1{lower.col, Dir::E, rl, mid_obj(t.lmid, obj_mass(below[c]) + m, name.str()),
            mid_obj(t.rmid, obj_mass(below[c + 1]) - m, name.str())};
    Rung r2{lower.col, Dir::F, rl, T[c], T[c + 1]};
    out.push_back({t.coeff, {r1, r2}});
  }
  return out;
}

LocalCombo reorder_tagged(const LObject& below, const Rung& lower, const Rung& upper,
                          std::string* tag) {
  LObject M = apply_rung(below, lower).above;
  LObject T = apply_rung(M, upper).above;
  if (!rung_terminal(below, lower) || !rung_terminal(M, upper))
    throw InternalDefect("non-terminal rung in reorder " +
                         slice_ctx(below, lower, upper));
  if (lower.dir != Dir::F || upper.dir != Dir::E)
    throw InvalidArgument("reorder expects a terminal F-rung below a terminal E-rung");
  int dc = upper.col - lower.col;
  if (dc >= 2 || dc <= -2) {
    if (tag != nullptr) *tag = "appA.swap.distant";
    return {{QScalar(1), {upper, lower}}};
  }
  if (dc == 0) return square_case(below, lower, upper, M, T, tag);
  if (dc == 1) return swap_base(below, lower, upper, M, T, tag);
  // dc == -1: reflect vertically onto the base shape and reflect back.
  Ladder seg{below, {lower, upper}};
  Ladder fl = vflip(seg);
  LocalCombo base = reorder_tagged(fl.domain, fl.rungs[0], fl.rungs[1], tag);
  LocalCombo out;
  for (const LocalTerm& t : base) {
    Ladder piece{fl.domain, t.rungs};
    out.push_back({t.coeff, vflip(piece).rungs});
  }
  return out;
}

}  // namespace

bool rung_terminal(const LObject& below, const Rung& rung) {
  RungResult rr = apply_rung(below, rung);
  int m = rung.label + 2 * rr.exponent;
  return (rung.label == 1 && m == 1) || (rung.label == 0 && m == 2);
}

LocalCombo explode(const LObject& below, const Rung& rung) {
  return explode_tagged(below, rung, nullptr);
}

LocalCombo reorder(const LObject& below, const Rung& lower, const Rung& upper) {
  return reorder_tagged(below, lower, upper, nullptr);
}

std::vector<std::pair<QScalar, Ladder>> splice(const Ladder& host, size_t pos,
                                               size_t count,
                                               const LocalCombo& combo) {
  if (pos + count > host.rungs.size())
    throw InvalidArgument("splice range out of range");
  std::vector<std::pair<QScalar, Ladder>> out;
  for (const LocalTerm& t : combo) {
    Ladder l;
    l.domain = host.domain;
    l.rungs.assign(host.rungs.begin(), host.rungs.begin() + static_cast<long>(pos));
    l.rungs.insert(l.rungs.end(), t.rungs.begin(), t.rungs.end());
    l.rungs.insert(l.rungs.end(), host.rungs.begin() + static_cast<long>(pos + count),
                   host.rungs.end());
    try {
      l.validate();
    } catch (const InvalidArgument& e) {
      throw InternalDefect(std::string("rewrite produced an invalid ladder: ") +
                           e.what());
    }
    out.push_back({t.coeff, l});
  }
  return out;
}

std::vector<RuleInstance> all_rule_instances(int max_mass) {
  std::vector<Obj> objs;
  for (int label = 0; label <= 3; ++label)
    for (int exp = 0; label + 2 * exp <= max_mass; ++exp)
      objs.push_back(Obj{label, exp});

  std::vector<RuleInstance> out;
  auto hflip_m = [](const Morphism& m) {
    LObject d(m.dom().rbegin(), m.dom().rend());
    LObject c(m.cod().rbegin(), m.cod().rend());
    Morphism r(d, c);
    for (const auto& [l, coeff] : m.terms()) r.add_term(hflip(l), coeff);
    return r;
  };
  auto add = [&](const std::string& tag, const Ladder& lhs_ladder,
                 const LocalCombo& combo) {
    Morphism lhs = Morphism::from_ladder(lhs_ladder);
    Morphism rhs(lhs_ladder.domain, lhs_ladder.codomain());
    for (const LocalTerm& t : combo) {
      Ladder l{lhs_ladder.domain, t.rungs};
      l.validate();
      rhs.add_term(l, t.coeff);
    }
    out.push_back({tag, lhs, rhs});
    out.push_back({tag + ".vflip", vflip(lhs), vflip(rhs)});
    out.push_back({tag + ".hflip", hflip_m(lhs), hflip_m(rhs)});
    out.push_back({tag + ".hvflip", hflip_m(vflip(lhs)), hflip_m(vflip(rhs))});
  };

  // Width-2 contexts: explosions and same-column squares.
  for (const Obj& o1 : objs)
    for (const Obj& o2 : objs) {
      if (obj_mass(o1) + obj_mass(o2) > max_mass) continue;
      LObject B = {o1, o2};
      for (const Rung& r : enumerate_rungs(B)) {
        if (!rung_terminal(B, r)) {
          std::string tag;
          LocalCombo combo = explode_tagged(B, r, &tag);
          add(tag, Ladder{B, {r}}, combo);
        } else if (r.dir == Dir::F) {
          LObject M = apply_rung(B, r).above;
          for (const Rung& u : enumerate_rungs(M)) {
            if (u.dir != Dir::E || !rung_terminal(M, u)) continue;
            std::string tag;
            LocalCombo combo = reorder_tagged(B, r, u, &tag);
            add(tag, Ladder{B, {r, u}}, combo);
          }
        }
      }
    }

  // Width-3 contexts: shared-upright swaps (both adjacency shapes).
  for (const Obj& o1 : objs)
    for (const Obj& o2 : objs)
      for (const Obj& o3 : objs) {
        if (obj_mass(o1) + obj_mass(o2) + obj_mass(o3) > max_mass) continue;
        LObject B = {o1, o2, o3};
        for (const Rung& r : enumerate_rungs(B)) {
          if (r.dir != Dir::F || !rung_terminal(B, r)) continue;
          LObject M = apply_rung(B, r).above;
          for (const Rung& u : enumerate_rungs(M)) {
            if (u.dir != Dir::E || !rung_terminal(M, u)) continue;
            if (u.col == r.col) continue;  // squares covered on width 2
            std::string tag;
            LocalCombo combo = reorder_tagged(B, r, u, &tag);
            add(tag, Ladder{B, {r, u}}, combo);
          }
        }
      }

  // Width-4 contexts: distant commutation (kept small).
  int dist_mass = std::min(max_mass, 6);
  for (const Obj& o1 : objs)
    for (const Obj& o2 : objs)
      for (const Obj& o3 : objs)
        for (const Obj& o4 : objs) {
          if (obj_mass(o1) + obj_mass(o2) + obj_mass(o3) + obj_mass(o4) > dist_mass)
            continue;
          LObject B = {o1, o2, o3, o4};
          for (const Rung& r : enumerate_rungs(B)) {
            if (r.col != 0 || r.dir != Dir::F || !rung_terminal(B, r)) continue;
            LObject M = apply_rung(B, r).above;
            for (const Rung& u : enumerate_rungs(M)) {
              if (u.col != 2 || u.dir != Dir::E || !rung_terminal(M, u)) continue;
              std::string tag;
              LocalCombo combo = reorder_tagged(B, r, u, &tag);
              add(tag, Ladder{B, {r, u}}, combo);
            }
          }
        }

  return out;
}

}  // namespace spweb
