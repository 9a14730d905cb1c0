#include "spweb/webs.hpp"

#include <algorithm>
#include <sstream>

namespace spweb {

namespace {

bool atom_triple_ok(int a, int b, int c) {
  if (a < 1 || a > 3 || b < 1 || b > 3 || c < 1 || c > 3) return false;
  if (a == 2 && b == 2 && c == 2) return true;
  return vertex_ok(a, b, c);
}

[[noreturn]] void web_error(int line, int col, const std::string& what) {
  throw InvalidArgument("web parse error at line " + std::to_string(line) +
                        ", column " + std::to_string(col) + ": " + what);
}

}  // namespace

WebAtom WebAtom::id(int a) { return WebAtom{Kind::Id, a, 0, 0}; }
WebAtom WebAtom::cup(int a) { return WebAtom{Kind::Cup, a, 0, 0}; }
WebAtom WebAtom::cap(int a) { return WebAtom{Kind::Cap, a, 0, 0}; }
WebAtom WebAtom::vtx(int a, int b, int c) { return WebAtom{Kind::Vtx, a, b, c}; }
WebAtom WebAtom::covtx(int c, int a, int b) { return WebAtom{Kind::Covtx, a, b, c}; }
WebAtom WebAtom::cross(int a, int b) { return WebAtom{Kind::Cross, a, b, 0}; }
WebAtom WebAtom::crossinv(int a, int b) { return WebAtom{Kind::CrossInv, a, b, 0}; }

std::vector<int> WebAtom::ins() const {
  switch (kind) {
    case Kind::Id: return {a};
    case Kind::Cup: return {};
    case Kind::Cap: return {a, a};
    case Kind::Vtx: return {a, b};
    case Kind::Covtx: return {c};
    case Kind::Cross:
    case Kind::CrossInv: return {a, b};
  }
  return {};
}

std::vector<int> WebAtom::outs() const {
  switch (kind) {
    case Kind::Id: return {a};
    case Kind::Cup: return {a, a};
    case Kind::Cap: return {};
    case Kind::Vtx: return {c};
    case Kind::Covtx: return {a, b};
    case Kind::Cross:
    case Kind::CrossInv: return {b, a};
  }
  return {};
}

std::string WebAtom::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Id: os << "id(" << a << ")"; break;
    case Kind::Cup: os << "cup(" << a << ")"; break;
    case Kind::Cap: os << "cap(" << a << ")"; break;
    case Kind::Vtx: os << "vtx(" << a << "," << b << ">" << c << ")"; break;
    case Kind::Covtx: os << "covtx(" << c << ">" << a << "," << b << ")"; break;
    case Kind::Cross: os << "x(" << a << "," << b << ")"; break;
    case Kind::CrossInv: os << "xi(" << a << "," << b << ")"; break;
  }
  return os.str();
}

void SliceWeb::validate() const { (void)codomain(); }

std::vector<int> SliceWeb::codomain() const {
  std::vector<int> cur = domain;
  for (size_t r = 0; r < rows.size(); ++r) {
    std::vector<int> next;
    size_t pos = 0;
    for (const WebAtom& at : rows[r]) {
      for (int lbl : {at.kind == WebAtom::Kind::Vtx ? at.a : 0}) (void)lbl;
      std::vector<int> need = at.ins();
      for (int lbl : need) {
        if (pos >= cur.size() || cur[pos] != lbl)
          throw InvalidArgument("web boundary mismatch at row " + std::to_string(r + 1) +
                                ": atom " + at.str() + " does not fit strands");
        ++pos;
      }
      if ((at.kind == WebAtom::Kind::Vtx || at.kind == WebAtom::Kind::Covtx) &&
          !atom_triple_ok(at.a, at.b, at.c))
        throw InvalidArgument("disallowed vertex triple in " + at.str());
      std::vector<int> o = at.outs();
      next.insert(next.end(), o.begin(), o.end());
    }
    if (pos != cur.size())
      throw InvalidArgument("web boundary mismatch at row " + std::to_string(r + 1) +
                            ": row covers " + std::to_string(pos) + " of " +
                            std::to_string(cur.size()) + " strands");
    cur = std::move(next);
  }
  return cur;
}

bool SliceWeb::has_crossings() const {
  for (const auto& row : rows)
    for (const WebAtom& at : row)
      if (at.kind == WebAtom::Kind::Cross || at.kind == WebAtom::Kind::CrossInv)
        return true;
  return false;
}

std::string SliceWeb::str() const {
  std::ostringstream os;
  os << "obj:";
  for (int l : domain) os << " " << l;
  os << "\n";
  for (const auto& row : rows) {
    os << "slice:";
    for (const WebAtom& at : row) os << " " << at.str();
    os << "\n";
  }
  return os.str();
}

SliceWeb parse_web(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SliceWeb w;
  bool have_obj = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos || line[i] == '#') continue;
    auto starts = [&](const std::string& p) {
      return line.compare(i, p.size(), p) == 0;
    };
    if (starts("obj:")) {
      if (have_obj) web_error(lineno, static_cast<int>(i) + 1, "duplicate obj line");
      have_obj = true;
      size_t p = i + 4;
      while (p < line.size()) {
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        if (p >= line.size() || line[p] == '#') break;
        if (line[p] < '1' || line[p] > '3')
          web_error(lineno, static_cast<int>(p) + 1, "strand label must be 1, 2 or 3");
        w.domain.push_back(line[p] - '0');
        ++p;
        if (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p])))
          web_error(lineno, static_cast<int>(p) + 1, "expected whitespace after label");
      }
      continue;
    }
    if (!starts("slice:")) {
      web_error(lineno, static_cast<int>(i) + 1, "expected 'obj:' or 'slice:'");
    }
    if (!have_obj) web_error(lineno, static_cast<int>(i) + 1, "'slice:' before 'obj:'");
    std::vector<WebAtom> row;
    size_t p = i + 6;
    while (p < line.size()) {
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      if (p >= line.size() || line[p] == '#') break;
      size_t start = p;
      size_t close = line.find(')', p);
      if (close == std::string::npos)
        web_error(lineno, static_cast<int>(start) + 1, "missing ')'");
      std::string tok = line.substr(p, close - p + 1);
      p = close + 1;
      int col = static_cast<int>(start) + 1;
      size_t open = tok.find('(');
      if (open == std::string::npos) web_error(lineno, col, "missing '('");
      std::string name = tok.substr(0, open);
      std::string args = tok.substr(open + 1, tok.size() - open - 2);
      auto num = [&](const std::string& s) {
        if (s.size() != 1 || s[0] < '1' || s[0] > '3')
          web_error(lineno, col, "label must be 1, 2 or 3 in " + tok);
        return s[0] - '0';
      };
      auto split_on = [&](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
          if (ch == sep) { out.push_back(cur); cur.clear(); }
          else if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
        }
        out.push_back(cur);
        return out;
      };
      if (name == "id" || name == "cup" || name == "cap") {
        int a = num(args);
        row.push_back(name == "id" ? WebAtom::id(a)
                                   : name == "cup" ? WebAtom::cup(a) : WebAtom::cap(a));
      } else if (name == "vtx") {
        std::vector<std::string> h = split_on(args, '>');
        if (h.size() != 2) web_error(lineno, col, "vtx needs 'a,b>c'");
        std::vector<std::string> ab = split_on(h[0], ',');
        if (ab.size() != 2) web_error(lineno, col, "vtx needs 'a,b>c'");
        WebAtom at = WebAtom::vtx(num(ab[0]), num(ab[1]), num(h[1]));
        if (!atom_triple_ok(at.a, at.b, at.c))
          web_error(lineno, col, "disallowed vertex triple in " + tok);
        row.push_back(at);
      } else if (name == "covtx") {
        std::vector<std::string> h = split_on(args, '>');
        if (h.size() != 2) web_error(lineno, col, "covtx needs 'c>a,b'");
        std::vector<std::string> ab = split_on(h[1], ',');
        if (ab.size() != 2) web_error(lineno, col, "covtx needs 'c>a,b'");
        WebAtom at = WebAtom::covtx(num(h[0]), num(ab[0]), num(ab[1]));
        if (!atom_triple_ok(at.a, at.b, at.c))
          web_error(lineno, col, "disallowed vertex triple in " + tok);
        row.push_back(at);
      } else if (name == "x" || name == "xi") {
        std::vector<std::string> ab = split_on(args, ',');
        if (ab.size() != 2) web_error(lineno, col, name + " needs '(a,b)'");
        row.push_back(name == "x" ? WebAtom::cross(num(ab[0]), num(ab[1]))
                                  : WebAtom::crossinv(num(ab[0]), num(ab[1])));
      } else {
        web_error(lineno, col, "unknown atom '" + name + "'");
      }
    }
    w.rows.push_back(std::move(row));
  }
  if (!have_obj) throw InvalidArgument("web parse error at line 1, column 1: missing 'obj:'");
  try {
    w.validate();
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("web parse error: ") + e.what());
  }
  return w;
}

SliceWeb vflip_web(const SliceWeb& w) {
  SliceWeb r;
  r.domain = w.codomain();
  for (size_t i = w.rows.size(); i-- > 0;) {
    std::vector<WebAtom> row;
    for (const WebAtom& at : w.rows[i]) {
      switch (at.kind) {
        case WebAtom::Kind::Id: row.push_back(at); break;
        case WebAtom::Kind::Cup: row.push_back(WebAtom::cap(at.a)); break;
        case WebAtom::Kind::Cap: row.push_back(WebAtom::cup(at.a)); break;
        case WebAtom::Kind::Vtx: row.push_back(WebAtom::covtx(at.c, at.a, at.b)); break;
        case WebAtom::Kind::Covtx: row.push_back(WebAtom::vtx(at.a, at.b, at.c)); break;
        case WebAtom::Kind::Cross: row.push_back(WebAtom::crossinv(at.b, at.a)); break;
        case WebAtom::Kind::CrossInv: row.push_back(WebAtom::cross(at.b, at.a)); break;
      }
    }
    r.rows.push_back(std::move(row));
  }
  r.validate();
  return r;
}

SliceWeb mirror_web(const SliceWeb& w) {
  SliceWeb r;
  r.domain.assign(w.domain.rbegin(), w.domain.rend());
  for (const auto& row : w.rows) {
    std::vector<WebAtom> nr;
    for (size_t i = row.size(); i-- > 0;) {
      const WebAtom& at = row[i];
      switch (at.kind) {
        case WebAtom::Kind::Id:
        case WebAtom::Kind::Cup:
        case WebAtom::Kind::Cap: nr.push_back(at); break;
        case WebAtom::Kind::Vtx: nr.push_back(WebAtom::vtx(at.b, at.a, at.c)); break;
        case WebAtom::Kind::Covtx: nr.push_back(WebAtom::covtx(at.c, at.b, at.a)); break;
        case WebAtom::Kind::Cross: nr.push_back(WebAtom::cross(at.b, at.a)); break;
        case WebAtom::Kind::CrossInv: nr.push_back(WebAtom::crossinv(at.b, at.a)); break;
      }
    }
    r.rows.push_back(std::move(nr));
  }
  r.validate();
  return r;
}

SliceWeb atomize(const SliceWeb& w) {
  SliceWeb r;
  r.domain = w.domain;
  std::vector<int> cur = w.domain;
  for (const auto& row : w.rows) {
    // Outputs of atoms already emitted in this logical row, inputs of the rest.
    for (size_t k = 0; k < row.size(); ++k) {
      bool trivial = row[k].kind == WebAtom::Kind::Id;
      std::vector<int> next;
      std::vector<WebAtom> nr;
      size_t pos = 0;
      for (size_t j = 0; j < row.size(); ++j) {
        std::vector<int> io = j < k ? row[j].outs() : row[j].ins();
        if (j == k) {
          nr.push_back(row[j]);
          std::vector<int> o = row[j].outs();
          next.insert(next.end(), o.begin(), o.end());
        } else {
          for (int lbl : io) nr.push_back(WebAtom::id(lbl));
          next.insert(next.end(), io.begin(), io.end());
        }
        pos += io.size();
      }
      (void)pos;
      if (!trivial || row.size() == 1) r.rows.push_back(std::move(nr));
      cur = std::move(next);
    }
    if (row.empty()) r.rows.push_back({});
  }
  r.validate();
  return r;
}

// ---- ladderize ---------------------------------------------------------------

namespace {

Morphism atom_morphism(const WebAtom& at);

// The 2,2 > 2 vertex as a composite of basic vertices, with prefactor 1/[3].
SliceWeb triangle22() {
  SliceWeb w;
  w.domain = {2, 2};
  w.rows.push_back({WebAtom::covtx(2, 1, 1), WebAtom::id(2)});
  w.rows.push_back({WebAtom::id(1), WebAtom::vtx(1, 2, 1)});
  w.rows.push_back({WebAtom::vtx(1, 1, 2)});
  return w;
}

Morphism atom_morphism(const WebAtom& at) {
  switch (at.kind) {
    case WebAtom::Kind::Id:
      return identity_on_labels({at.a});
    case WebAtom::Kind::Cup: {
      Ladder l{{Obj{0, at.a}, Obj{0, 0}},
               {Rung{0, Dir::F, at.a, Obj{at.a, 0}, Obj{at.a, 0}}}};
      l.validate();
      return Morphism::from_ladder(l);
    }
    case WebAtom::Kind::Cap: {
      Ladder l{{Obj{at.a, 0}, Obj{at.a, 0}},
               {Rung{0, Dir::E, at.a, Obj{0, at.a}, Obj{0, 0}}}};
      l.validate();
      return Morphism::from_ladder(l);
    }
    case WebAtom::Kind::Vtx: {
      if (at.a == 2 && at.b == 2 && at.c == 2)
        return ladderize(triangle22()) * qint(3).inv();
      int t = (at.a + at.b - at.c) / 2;
      Ladder l{{Obj{at.a, 0}, Obj{at.b, 0}},
               {Rung{0, Dir::E, at.b, Obj{at.c, t}, Obj{0, 0}}}};
      l.validate();
      return Morphism::from_ladder(l);
    }
    case WebAtom::Kind::Covtx: {
      if (at.a == 2 && at.b == 2 && at.c == 2)
        return ladderize(vflip_web(triangle22())) * qint(3).inv();
      int t = (at.a + at.b - at.c) / 2;
      int s = std::max(0, t);
      Ladder l{{Obj{at.c, s}, Obj{0, 0}},
               {Rung{0, Dir::F, at.b, Obj{at.a, s - t}, Obj{at.b, 0}}}};
      l.validate();
      return Morphism::from_ladder(l);
    }
    case WebAtom::Kind::Cross:
    case WebAtom::Kind::CrossInv:
      throw InvalidArgument("ladderize requires a crossing-free web");
  }
  throw InternalDefect("no case matched: web atom");
}

}  // namespace

Morphism ladderize(const SliceWeb& w) {
  w.validate();
  if (w.has_crossings())
    throw InvalidArgument("ladderize requires a crossing-free web");
  std::vector<int> labels = w.domain;
  Morphism acc = identity_on_labels(labels);
  for (const auto& row : w.rows) {
    Morphism rowm = Morphism::from_ladder(identity_ladder(LObject{}));
    for (const WebAtom& at : row) rowm = tensor(rowm, atom_morphism(at));
    acc = compose_lifted(rowm, acc);
  }
  return acc;
}

Morphism ladderize_combo(const WebCombo& combo) {
  std::vector<std::pair<QScalar, Morphism>> parts;
  for (const auto& [c, w] : combo) parts.emplace_back(c, ladderize(w));
  return sum_lifted(parts);
}

QScalar evaluate_web(const SliceWeb& w, const RunConfig& cfg) {
  if (!w.domain.empty() || !w.codomain().empty())
    throw InvalidArgument("evaluate_web requires a closed web");
  return evaluate_closed(ladderize(w), cfg);
}

// ---- closure templates -------------------------------------------------------

SliceWeb closure_cups(const std::vector<int>& sig) {
  SliceWeb w;
  w.domain = {};
  for (size_t i = 0; i < sig.size(); ++i) {
    std::vector<WebAtom> row;
    for (size_t j = 0; j < i; ++j) row.push_back(WebAtom::id(sig[j]));
    row.push_back(WebAtom::cup(sig[i]));
    for (size_t j = i; j-- > 0;) row.push_back(WebAtom::id(sig[j]));
    w.rows.push_back(std::move(row));
  }
  w.validate();
  return w;
}

SliceWeb closure_caps(const std::vector<int>& sig) { return vflip_web(closure_cups(sig)); }

namespace {

std::vector<int> nonzero_labels(const LObject& o) {
  std::vector<int> out;
  for (const Obj& x : o)
    if (x.label != 0) out.push_back(x.label);
  return out;
}

}  // namespace

QScalar closed_trace(const Morphism& h, ClosureKind kind, const RunConfig& cfg) {
  std::vector<int> sig = nonzero_labels(h.dom());
  if (sig != nonzero_labels(h.cod()))
    throw InvalidArgument("web boundary mismatch: closure of a non-endomorphism");
  if (sig.empty()) return evaluate_closed(make_endo(h), cfg);
  std::vector<int> rsig(sig.rbegin(), sig.rend());
  Morphism total;
  switch (kind) {
    case ClosureKind::TraceRight: {
      Morphism cups = ladderize(closure_cups(sig));
      Morphism caps = ladderize(closure_caps(sig));
      Morphism mid = tensor(h, identity_on_labels(rsig));
      total = compose_lifted(caps, compose_lifted(mid, cups));
      break;
    }
    case ClosureKind::TraceLeft: {
      // A left-side closure is the planar mirror image of a right-side
      // closure of the mirrored morphism, and closed values are mirror
      // invariant (the rewrite table is mirror-closed with identical
      // coefficients).  The mirrored form keeps all closure arcs to the
      // right of the active region, which normalizes far faster.
      return closed_trace(hflip(h), ClosureKind::TraceRight, cfg);
    }
    case ClosureKind::Split: {
      if (sig.size() <= 1)
        return closed_trace(compose_lifted(h, h), ClosureKind::TraceRight, cfg);
      // Close the right half of the boundary around the right side first,
      // then trace the remaining left half.  Once the right strands are
      // closed, nothing obstructs sliding the left closure arcs to either
      // side, so this equals the split closure with each half closed
      // around its own side.
      size_t k = sig.size() / 2;
      std::vector<int> left(sig.begin(), sig.begin() + static_cast<long>(k));
      std::vector<int> right(sig.begin() + static_cast<long>(k), sig.end());
      std::vector<int> rright(right.rbegin(), right.rend());
      Morphism id_left = identity_on_labels(left);
      Morphism cups = tensor(id_left, ladderize(closure_cups(right)));
      Morphism caps = tensor(id_left, ladderize(closure_caps(right)));
      Morphism mid = tensor(h, identity_on_labels(rright));
      Morphism partial = compose_lifted(caps, compose_lifted(mid, cups));
      return closed_trace(partial, ClosureKind::TraceRight, cfg);
    }
  }
  return evaluate_closed(total, cfg);
}

std::vector<QScalar> closure_values(const Morphism& f, const Morphism& probe,
                                    const RunConfig& cfg) {
  Morphism fp = compose_lifted(f, probe);
  Morphism pf = compose_lifted(probe, f);
  return {closed_trace(fp, ClosureKind::TraceRight, cfg),
          closed_trace(fp, ClosureKind::TraceLeft, cfg),
          closed_trace(pf, ClosureKind::TraceRight, cfg)};
}

QScalar pair_closure(const Morphism& f, const Morphism& g, const RunConfig& cfg) {
  return closed_trace(compose_lifted(f, g), ClosureKind::TraceRight, cfg);
}

}  // namespace spweb
