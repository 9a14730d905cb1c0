#include "spweb/ladder.hpp"

#include <algorithm>
#include <sstream>

namespace spweb {

int total_mass(const LObject& o) {
  int m = 0;
  for (const Obj& x : o) m += x.mass();
  return m;
}

std::string lobject_str(const LObject& o) {
  std::ostringstream os;
  for (size_t i = 0; i < o.size(); ++i) {
    if (i) os << ' ';
    os << o[i].label << '^' << o[i].exp;
  }
  return os.str();
}

bool vertex_ok(int a, int b, int c) {
  int t[3] = {a, b, c};
  std::sort(t, t + 3);
  if (t[0] == 0 && t[1] == t[2]) return true;            // {x,x,0}
  if (t[0] == 1 && t[1] == 1 && t[2] == 2) return true;  // {1,1,2}
  if (t[0] == 1 && t[1] == 2 && t[2] == 3) return true;  // {1,2,3}
  return false;
}

RungResult apply_rung(const LObject& slice, const Rung& rung) {
  if (rung.col < 0 || rung.col + 1 >= static_cast<int>(slice.size()))
    throw InvalidArgument("rung column out of range");
  const Obj& in_l = slice[rung.col];
  const Obj& in_r = slice[rung.col + 1];
  const Obj &out_l = rung.out_left, &out_r = rung.out_right;
  if (out_l.exp < 0 || out_r.exp < 0)
    throw InvalidArgument("negative exponent");
  // Mass preservation on both uprights, consistently.
  int m = rung.dir == Dir::F ? in_l.mass() - out_l.mass()
                             : in_r.mass() - out_r.mass();
  int gained = rung.dir == Dir::F ? out_r.mass() - in_r.mass()
                                  : out_l.mass() - in_l.mass();
  if (m != gained || m <= 0) throw InvalidArgument("mass violation");
  int r2 = m - rung.label;
  if (r2 < 0 || r2 % 2 != 0) throw InvalidArgument("mass violation");
  if (!vertex_ok(in_l.label, out_l.label, rung.label) ||
      !vertex_ok(in_r.label, out_r.label, rung.label))
    throw InvalidArgument("vertex violation");
  LObject above = slice;
  above[rung.col] = out_l;
  above[rung.col + 1] = out_r;
  return {r2 / 2, std::move(above)};
}

Rung make_rung(const LObject& slice, int col, Dir dir, int label, int rexp,
               int out_left_label, int out_right_label) {
  if (col < 0 || col + 1 >= static_cast<int>(slice.size()))
    throw InvalidArgument("rung column out of range");
  int m = label + 2 * rexp;
  int ml = slice[col].mass() + (dir == Dir::F ? -m : m);
  int mr = slice[col + 1].mass() + (dir == Dir::F ? m : -m);
  if (ml < out_left_label || (ml - out_left_label) % 2 != 0 ||
      mr < out_right_label || (mr - out_right_label) % 2 != 0)
    throw InvalidArgument("mass violation");
  Rung r{col, dir, label,
         Obj{out_left_label, (ml - out_left_label) / 2},
         Obj{out_right_label, (mr - out_right_label) / 2}};
  apply_rung(slice, r);  // validate
  return r;
}

std::vector<Rung> enumerate_rungs(const LObject& slice) {
  std::vector<Rung> out;
  for (int col = 0; col + 1 < static_cast<int>(slice.size()); ++col) {
    for (Dir dir : {Dir::E, Dir::F}) {
      const Obj& src = dir == Dir::F ? slice[col] : slice[col + 1];
      const Obj& tgt = dir == Dir::F ? slice[col + 1] : slice[col];
      for (int m = 1; m <= src.mass(); ++m) {
        for (int label = m % 2; label <= std::min(3, m); label += 2) {
          for (int sl = (src.mass() - m) % 2; sl <= 3; sl += 2) {
            if (sl > src.mass() - m) break;
            for (int tl = (tgt.mass() + m) % 2; tl <= 3; tl += 2) {
              if (tl > tgt.mass() + m) break;
              Obj out_src{sl, (src.mass() - m - sl) / 2};
              Obj out_tgt{tl, (tgt.mass() + m - tl) / 2};
              Rung r{col, dir, label,
                     dir == Dir::F ? out_src : out_tgt,
                     dir == Dir::F ? out_tgt : out_src};
              try {
                apply_rung(slice, r);
                out.push_back(r);
              } catch (const InvalidArgument&) {
              }
            }
          }
        }
      }
    }
  }
  return out;
}

LObject Ladder::codomain() const { return slices().back(); }

std::vector<LObject> Ladder::slices() const {
  std::vector<LObject> s;
  s.reserve(rungs.size() + 1);
  s.push_back(domain);
  for (const Rung& r : rungs) s.push_back(apply_rung(s.back(), r).above);
  return s;
}

void Ladder::validate() const { (void)slices(); }

std::string Ladder::str() const {
  std::ostringstream os;
  os << lobject_str(domain);
  for (const Rung& r : rungs) {
    os << " (" << r.col << ',' << (r.dir == Dir::E ? 'E' : 'F') << ','
       << r.label << ',' << r.out_left.label << '^' << r.out_left.exp << ','
       << r.out_right.label << '^' << r.out_right.exp << ')';
  }
  return os.str();
}

Ladder identity_ladder(const LObject& o) { return Ladder{o, {}}; }

int rung_mass(const LObject& below, const Rung& rung) {
  RungResult r = apply_rung(below, rung);
  return rung.label + 2 * r.exponent;
}

Ladder raise_column(Ladder l, int col, int delta) {
  if (col < 0 || col >= l.width()) throw InvalidArgument("rung column out of range");
  l.domain[static_cast<size_t>(col)].exp += delta;
  if (l.domain[static_cast<size_t>(col)].exp < 0)
    throw InvalidArgument("negative exponent");
  for (Rung& r : l.rungs) {
    Obj* o = nullptr;
    if (r.col == col) o = &r.out_left;
    else if (r.col + 1 == col) o = &r.out_right;
    if (o != nullptr) {
      o->exp += delta;
      if (o->exp < 0) throw InvalidArgument("negative exponent");
    }
  }
  l.validate();
  return l;
}

Ladder vflip(const Ladder& l) {
  std::vector<LObject> s = l.slices();
  Ladder r;
  r.domain = s.back();
  r.rungs.reserve(l.rungs.size());
  for (size_t i = l.rungs.size(); i-- > 0;) {
    const Rung& x = l.rungs[i];
    Rung y;
    y.col = x.col;
    y.dir = x.dir == Dir::E ? Dir::F : Dir::E;
    y.label = x.label;
    y.out_left = s[i][static_cast<size_t>(x.col)];
    y.out_right = s[i][static_cast<size_t>(x.col) + 1];
    r.rungs.push_back(y);
  }
  r.validate();
  return r;
}

Ladder hflip(const Ladder& l) {
  int w = l.width();
  Ladder r;
  r.domain.assign(l.domain.rbegin(), l.domain.rend());
  r.rungs.reserve(l.rungs.size());
  for (const Rung& x : l.rungs) {
    Rung y;
    y.col = w - 2 - x.col;
    y.dir = x.dir == Dir::E ? Dir::F : Dir::E;
    y.label = x.label;
    y.out_left = x.out_right;
    y.out_right = x.out_left;
    r.rungs.push_back(y);
  }
  r.validate();
  return r;
}

Ladder canonical_heights(Ladder l) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t h = 0; h + 1 < l.rungs.size(); ++h) {
      Rung &lo = l.rungs[h], &hi = l.rungs[h + 1];
      int d = lo.col - hi.col;
      if ((d >= 2 || d <= -2) && lo.col > hi.col) {
        std::swap(lo, hi);
        moved = true;
      }
    }
  }
  return l;
}

Morphism Morphism::from_ladder(const Ladder& l, const QScalar& c) {
  Morphism m(l.domain, l.codomain());
  m.add_term(l, c);
  return m;
}

void Morphism::add_term(const Ladder& l, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Morphism Morphism::operator+(const Morphism& o) const {
  Morphism r = *this;
  if (r.terms_.empty()) {
    r.dom_ = o.dom_;
    r.cod_ = o.cod_;
  }
  for (const auto& [l, c] : o.terms_) r.add_term(l, c);
  return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
  return *this + o * QScalar(-1);
}

Morphism Morphism::operator*(const QScalar& c) const {
  Morphism r(dom_, cod_);
  if (c.is_zero()) return r;
  for (const auto& [l, co] : terms_) r.add_term(l, co * c);
  return r;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (g.cod() != f.dom())
    throw InvalidArgument("object mismatch in compose: upper expects [" +
                          lobject_str(f.dom()) + "], lower provides [" +
                          lobject_str(g.cod()) + "]");
  Morphism r(g.dom(), f.cod());
  for (const auto& [lg, cg] : g.terms())
    for (const auto& [lf, cf] : f.terms()) {
      Ladder l = lg;
      l.rungs.insert(l.rungs.end(), lf.rungs.begin(), lf.rungs.end());
      r.add_term(l, cg * cf);
    }
  return r;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  LObject dom = f.dom(), cod = f.cod();
  dom.insert(dom.end(), g.dom().begin(), g.dom().end());
  cod.insert(cod.end(), g.cod().begin(), g.cod().end());
  Morphism r(dom, cod);
  int shift = static_cast<int>(f.dom().size());
  for (const auto& [lf, cf] : f.terms())
    for (const auto& [lg, cg] : g.terms()) {
      Ladder l{dom, lf.rungs};
      for (Rung rg : lg.rungs) {
        rg.col += shift;
        l.rungs.push_back(rg);
      }
      r.add_term(l, cf * cg);
    }
  return r;
}

Morphism vflip(const Morphism& m) {
  Morphism r(m.cod(), m.dom());
  for (const auto& [l, c] : m.terms()) r.add_term(vflip(l), c);
  return r;
}

Morphism hflip(const Morphism& m) {
  LObject dom(m.dom().rbegin(), m.dom().rend());
  LObject cod(m.cod().rbegin(), m.cod().rend());
  Morphism r(dom, cod);
  for (const auto& [l, c] : m.terms()) r.add_term(hflip(l), c);
  return r;
}

}  // namespace spweb
