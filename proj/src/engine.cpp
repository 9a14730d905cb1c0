#include "spweb/engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace spweb {

namespace {

struct Budget {
  long long left;
  void step() {
    if (left-- <= 0) throw InternalDefect("budget exceeded");
  }
};

// One rewrite step at the strategy-selected redex, or nullopt if normal.
std::optional<std::vector<std::pair<QScalar, Ladder>>> rewrite_once(const Ladder& l,
                                                                    Strategy st,
                                                                    Budget& b) {
  std::vector<LObject> s = l.slices();
  size_t n = l.rungs.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i)
    order[i] = st == Strategy::LowestLeftmost ? i : n - 1 - i;
  for (size_t i : order) {
    if (!rung_terminal(s[i], l.rungs[i])) {
      b.step();
      return splice(l, i, 1, explode(s[i], l.rungs[i]));
    }
  }
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t i = st == Strategy::LowestLeftmost ? k : n - 2 - k;
    if (l.rungs[i].dir == Dir::F && l.rungs[i + 1].dir == Dir::E) {
      b.step();
      return splice(l, i, 2, reorder(s[i], l.rungs[i], l.rungs[i + 1]));
    }
  }
  return std::nullopt;
}

std::map<Ladder, QScalar> normalize_ladder(const Ladder& start, const QScalar& coeff,
                                           Strategy st, Budget& b) {
  std::map<Ladder, QScalar> done;
  std::vector<std::pair<QScalar, Ladder>> stack{{coeff, start}};
  while (!stack.empty()) {
    auto [c, l] = std::move(stack.back());
    stack.pop_back();
    auto rw = rewrite_once(l, st, b);
    if (!rw.has_value()) {
      QScalar& slot = done[l];
      slot = slot + c;
      if (slot.is_zero()) done.erase(l);
      continue;
    }
    for (auto& [ci, li] : *rw) stack.emplace_back(c * ci, std::move(li));
  }
  return done;
}

// ---- global evaluation cache ------------------------------------------------

std::mutex g_cache_mu;
std::map<std::string, QScalar> g_cache;

std::string cache_key(const Ladder& l, Strategy st) {
  return (st == Strategy::LowestLeftmost ? "A|" : "B|") + l.str();
}

// Rung sequence redistributing exponent mass between columns with identical
// labels (0-labeled rungs only); `from` and `to` must have equal totals.
std::vector<Rung> stairs_exps(const LObject& from, const LObject& to) {
  if (from.size() != to.size()) throw InternalDefect("stairs width mismatch");
  size_t w = from.size();
  for (size_t c = 0; c < w; ++c)
    if (from[c].label != to[c].label) throw InternalDefect("stairs label mismatch");
  if (total_mass(from) != total_mass(to)) throw InternalDefect("stairs mass mismatch");
  std::vector<Rung> out;
  if (w == 0) return out;
  LObject cur = from;
  for (size_t c = w; c-- > 1;) {
    if (cur[c].exp == 0) continue;
    Obj left{cur[c - 1].label, cur[c - 1].exp + cur[c].exp};
    Obj right{cur[c].label, 0};
    out.push_back(Rung{static_cast<int>(c) - 1, Dir::E, 0, left, right});
    cur[c - 1] = left;
    cur[c] = right;
  }
  for (size_t c = 0; c + 1 < w; ++c) {
    int moved = cur[c].exp - to[c].exp;
    if (moved < 0) throw InternalDefect("stairs distribution mismatch");
    if (moved == 0) continue;
    Obj left{to[c].label, to[c].exp};
    Obj right{cur[c + 1].label, cur[c + 1].exp + moved};
    out.push_back(Rung{static_cast<int>(c), Dir::F, 0, left, right});
    cur[c] = left;
    cur[c + 1] = right;
  }
  if (cur != to) throw InternalDefect("stairs failed to reach target");
  return out;
}

// Standard closed boundary: k columns 0^(1) then padding columns 0^(0).
Ladder standardize_closed(Ladder l) {
  int mass = total_mass(l.domain);
  if (mass % 2 != 0) throw InternalDefect("closed ladder with odd mass");
  int k = mass / 2;
  while (l.width() < k) l.domain.push_back(Obj{0, 0});
  size_t w = static_cast<size_t>(l.width());
  LObject std_obj(w, Obj{0, 0});
  for (size_t i = 0; i < static_cast<size_t>(k); ++i) std_obj[i] = Obj{0, 1};
  std::vector<Rung> bottom = stairs_exps(std_obj, l.domain);
  std::vector<Rung> top = stairs_exps(l.codomain(), std_obj);
  Ladder out;
  out.domain = std_obj;
  out.rungs = std::move(bottom);
  out.rungs.insert(out.rungs.end(), l.rungs.begin(), l.rungs.end());
  out.rungs.insert(out.rungs.end(), top.begin(), top.end());
  return out;
}

QScalar eval_std(const Ladder& l, const RunConfig& cfg, Budget& b) {
  std::string key;
  if (cfg.use_cache) {
    key = cache_key(l, cfg.strategy);
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  if (total_mass(l.domain) == 0) {
    if (!l.rungs.empty()) throw InternalDefect("massless closed ladder with rungs");
    return QScalar(1);
  }
  std::map<Ladder, QScalar> normal = normalize_ladder(l, QScalar(1), cfg.strategy, b);
  QScalar acc;
  for (const auto& [lad, c] : normal) {
    if (lad.rungs.empty()) {
      acc = acc + c;
      continue;
    }
    Ladder lowered;
    try {
      lowered = raise_column(lad, 0, -1);
    } catch (const InvalidArgument&) {
      throw InternalDefect("non-evaluable residue: " + lad.str());
    }
    acc = acc + c * eval_std(standardize_closed(lowered), cfg, b);
  }
  if (cfg.use_cache) {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_cache.emplace(key, acc);
  }
  return acc;
}

}  // namespace

bool is_pbw_normal(const Ladder& l) {
  std::vector<LObject> s = l.slices();
  for (size_t i = 0; i < l.rungs.size(); ++i)
    if (!rung_terminal(s[i], l.rungs[i])) return false;
  for (size_t i = 0; i + 1 < l.rungs.size(); ++i)
    if (l.rungs[i].dir == Dir::F && l.rungs[i + 1].dir == Dir::E) return false;
  return true;
}

Morphism normalize_pbw(const Morphism& m, const RunConfig& cfg) {
  Morphism out(m.dom(), m.cod());
  for (const auto& [l, c] : m.terms()) {
    Budget b{cfg.budget};
    for (const auto& [nl, nc] : normalize_ladder(l, c, cfg.strategy, b))
      out.add_term(canonical_heights(nl), nc);
  }
  return out;
}

QScalar evaluate_closed(const Morphism& m, const RunConfig& cfg) {
  for (const Obj& o : m.dom())
    if (o.label != 0)
      throw InvalidArgument("evaluate_closed requires an all-0 boundary");
  for (const Obj& o : m.cod())
    if (o.label != 0)
      throw InvalidArgument("evaluate_closed requires an all-0 boundary");
  std::vector<std::pair<Ladder, QScalar>> work;
  for (const auto& [l, c] : m.terms()) work.emplace_back(standardize_closed(l), c);
  std::vector<QScalar> vals(work.size());
  if (cfg.jobs > 1 && work.size() > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    size_t nthreads = std::min<size_t>(static_cast<size_t>(cfg.jobs), work.size());
    for (size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        try {
          for (size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) {
            Budget b{cfg.budget};
            vals[i] = eval_std(work[i].first, cfg, b);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
      });
    for (std::thread& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  } else {
    for (size_t i = 0; i < work.size(); ++i) {
      Budget b{cfg.budget};
      vals[i] = eval_std(work[i].first, cfg, b);
    }
  }
  QScalar acc;
  for (size_t i = 0; i < work.size(); ++i) acc = acc + vals[i] * work[i].second;
  return acc;
}

void clear_eval_cache() {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_cache.clear();
}

// ---- ChiPolynomial ----------------------------------------------------------

void ChiPolynomial::add(const Monomial& mono, const QScalar& c) {
  QScalar& slot = terms_[mono];
  slot = slot + c;
  if (slot.is_zero()) terms_.erase(mono);
}

ChiPolynomial ChiPolynomial::operator+(const ChiPolynomial& o) const {
  ChiPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

ChiPolynomial ChiPolynomial::operator*(const ChiPolynomial& o) const {
  ChiPolynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      r.add({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return r;
}

ChiPolynomial ChiPolynomial::operator*(const QScalar& c) const {
  ChiPolynomial r;
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

QScalar ChiPolynomial::substitute(const QScalar& x1, const QScalar& x2,
                                  const QScalar& x3) const {
  QScalar acc;
  std::array<QScalar, 3> xs = {x1, x2, x3};
  for (const auto& [m, c] : terms_) {
    QScalar t = c;
    for (int v = 0; v < 3; ++v)
      for (int e = 0; e < m[static_cast<size_t>(v)]; ++e)
        t = t * xs[static_cast<size_t>(v)];
    acc = acc + t;
  }
  return acc;
}

std::string ChiPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      int e = m[static_cast<size_t>(v)];
      if (e == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "x" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << c.str();
    } else if (c == QScalar(1)) {
      os << mono;
    } else {
      os << "(" << c.str() << ") " << mono;
    }
  }
  return os.str();
}

// ---- annular trace ----------------------------------------------------------

ChiPolynomial trace_normalize(const Morphism& m, const RunConfig& cfg) {
  if (m.dom() != m.cod())
    throw InvalidArgument("trace_normalize requires dom == cod; use make_endo first");
  ChiPolynomial out;
  for (const auto& [l0, c0] : m.terms()) {
    Budget b{cfg.budget};
    std::vector<std::pair<QScalar, Ladder>> stack{{c0, l0}};
    while (!stack.empty()) {
      auto [c, l] = std::move(stack.back());
      stack.pop_back();
      std::vector<LObject> s = l.slices();
      size_t n = l.rungs.size();

      // Explode any non-terminal rung first.
      bool exploded = false;
      for (size_t i = 0; i < n; ++i) {
        size_t idx = cfg.strategy == Strategy::LowestLeftmost ? i : n - 1 - i;
        if (!rung_terminal(s[idx], l.rungs[idx])) {
          b.step();
          for (auto& [ci, li] : splice(l, idx, 1, explode(s[idx], l.rungs[idx])))
            stack.emplace_back(c * ci, std::move(li));
          exploded = true;
          break;
        }
      }
      if (exploded) continue;

      if (n == 0) {
        ChiPolynomial::Monomial mono = {0, 0, 0};
        for (const Obj& o : l.domain)
          if (o.label != 0) ++mono[static_cast<size_t>(o.label - 1)];
        out.add(mono, c);
        continue;
      }

      // Find the lexicographically minimal slice-mass tuple (cyclically).
      size_t best = 0;
      std::vector<int> best_t;
      for (size_t i = 0; i < n; ++i) {
        std::vector<int> t;
        t.reserve(s[i].size());
        for (const Obj& o : s[i]) t.push_back(o.mass());
        if (i == 0 || t < best_t) {
          best_t = t;
          best = i;
        }
      }
      size_t j = (best + n - 1) % n;  // rung below the minimal slice
      if (l.rungs[j].dir != Dir::F || l.rungs[best].dir != Dir::E)
        throw InternalDefect("no case matched: trace cut is not an F/E pair");

      // Rotate the cyclic diagram so the F/E pair sits at the bottom.
      Ladder rot;
      rot.domain = s[j];
      rot.rungs.assign(l.rungs.begin() + static_cast<long>(j), l.rungs.end());
      rot.rungs.insert(rot.rungs.end(), l.rungs.begin(),
                       l.rungs.begin() + static_cast<long>(j));
      b.step();
      LocalCombo combo = reorder(rot.domain, rot.rungs[0], rot.rungs[1]);
      for (auto& [ci, li] : splice(rot, 0, 2, combo))
        stack.emplace_back(c * ci, std::move(li));
    }
  }
  return out;
}

// ---- boundary lifting -------------------------------------------------------

namespace {

// E-rungs shuffling every nonzero strand left past 0-labeled columns.
std::vector<Rung> shuffle_left_rungs(LObject cur) {
  std::vector<Rung> out;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t c = 0; c + 1 < cur.size(); ++c) {
      if (cur[c].label == 0 && cur[c + 1].label != 0) {
        Obj left{cur[c + 1].label, cur[c].exp + cur[c + 1].exp};
        Obj right{0, 0};
        out.push_back(Rung{static_cast<int>(c), Dir::E, cur[c + 1].label, left, right});
        cur[c] = left;
        cur[c + 1] = right;
        moved = true;
      }
    }
  }
  return out;
}

Morphism shuffle_boundaries(const Morphism& m) {
  Morphism r = m;
  std::vector<Rung> cr = shuffle_left_rungs(m.cod());
  if (!cr.empty()) r = compose(Morphism::from_ladder(Ladder{m.cod(), cr}), r);
  std::vector<Rung> dr = shuffle_left_rungs(m.dom());
  if (!dr.empty()) r = compose(r, Morphism::from_ladder(vflip(Ladder{m.dom(), dr})));
  return r;
}

Morphism pad_cols(const Morphism& m, size_t k) {
  if (k == 0) return m;
  return tensor(m, Morphism::from_ladder(identity_ladder(LObject(k, Obj{0, 0}))));
}

Morphism raise_morphism(const Morphism& m, int col, int delta) {
  if (delta == 0) return m;
  LObject d = m.dom(), c2 = m.cod();
  d[static_cast<size_t>(col)].exp += delta;
  c2[static_cast<size_t>(col)].exp += delta;
  if (d[static_cast<size_t>(col)].exp < 0 || c2[static_cast<size_t>(col)].exp < 0)
    throw InvalidArgument("negative exponent");
  Morphism r(d, c2);
  for (const auto& [l, c] : m.terms()) r.add_term(raise_column(l, col, delta), c);
  return r;
}

[[noreturn]] void boundary_mismatch(const LObject& a, const LObject& b) {
  throw InvalidArgument("web boundary mismatch: " + lobject_str(a) + " vs " +
                        lobject_str(b));
}

}  // namespace

Morphism identity_on_labels(const std::vector<int>& labels) {
  LObject o;
  for (int l : labels) o.push_back(Obj{l, 0});
  return Morphism::from_ladder(identity_ladder(o));
}

Morphism compose_lifted(const Morphism& f, const Morphism& g) {
  Morphism F = shuffle_boundaries(f);
  Morphism G = shuffle_boundaries(g);
  size_t w = std::max(F.dom().size(), G.cod().size()) + 1;
  F = pad_cols(F, w - F.dom().size());
  G = pad_cols(G, w - G.cod().size());
  for (size_t c = 0; c < w; ++c)
    if (F.dom()[c].label != G.cod()[c].label) boundary_mismatch(G.cod(), F.dom());
  int tf = total_mass(F.dom()), tg = total_mass(G.cod());
  if (tf < tg) F = raise_morphism(F, static_cast<int>(w) - 1, (tg - tf) / 2);
  else if (tg < tf) G = raise_morphism(G, static_cast<int>(w) - 1, (tf - tg) / 2);
  std::vector<Rung> mid = stairs_exps(G.cod(), F.dom());
  if (!mid.empty())
    return compose(F, compose(Morphism::from_ladder(Ladder{G.cod(), mid}), G));
  return compose(F, G);
}

Morphism sum_lifted(const std::vector<std::pair<QScalar, Morphism>>& parts) {
  if (parts.empty()) return Morphism();
  std::vector<Morphism> lifted;
  size_t w = 0;
  for (const auto& [c, m] : parts) {
    lifted.push_back(shuffle_boundaries(m));
    w = std::max(w, lifted.back().dom().size());
  }
  w += 1;  // reservoir column
  for (Morphism& m : lifted) m = pad_cols(m, w - m.dom().size());
  for (size_t c = 0; c < w; ++c)
    for (const Morphism& m : lifted)
      if (m.dom()[c].label != lifted[0].dom()[c].label ||
          m.cod()[c].label != lifted[0].cod()[c].label)
        boundary_mismatch(lifted[0].dom(), m.dom());

  int target = 0;
  for (const Morphism& m : lifted) target = std::max(target, total_mass(m.dom()));
  for (Morphism& m : lifted)
    m = raise_morphism(m, static_cast<int>(w) - 1, (target - total_mass(m.dom())) / 2);
  // Common boundary: all exponent mass parked on the 0-labeled reservoir.
  LObject dt = lifted[0].dom(), ct = lifted[0].cod();
  for (LObject* o : {&dt, &ct}) {
    int labels = 0;
    for (size_t c = 0; c + 1 < w; ++c) {
      (*o)[c].exp = 0;
      labels += (*o)[c].label;
    }
    (*o)[w - 1] = Obj{0, (target - labels) / 2};
  }

  Morphism acc(dt, ct);
  for (size_t i = 0; i < lifted.size(); ++i) {
    Morphism m = lifted[i];
    std::vector<Rung> below = stairs_exps(dt, m.dom());
    if (!below.empty()) m = compose(m, Morphism::from_ladder(Ladder{dt, below}));
    std::vector<Rung> above = stairs_exps(m.cod(), ct);
    if (!above.empty()) m = compose(Morphism::from_ladder(Ladder{m.cod(), above}), m);
    acc = acc + m * parts[i].first;
  }
  return acc;
}

Morphism make_endo(const Morphism& m) {
  Morphism r = shuffle_boundaries(m);
  if (r.dom() == r.cod()) return r;
  size_t w = r.dom().size();
  if (r.cod().size() != w) {
    size_t wm = std::max(w, r.cod().size());
    r = pad_cols(r, wm - w);
    w = wm;
  }
  for (size_t c = 0; c < w; ++c)
    if (r.dom()[c].label != r.cod()[c].label) boundary_mismatch(r.dom(), r.cod());
  // Totals agree (mass is conserved), so redistribute the codomain exponents
  // onto the domain's distribution with 0-labeled stairs.
  std::vector<Rung> above = stairs_exps(r.cod(), r.dom());
  if (!above.empty()) r = compose(Morphism::from_ladder(Ladder{r.cod(), above}), r);
  return r;
}

}  // namespace spweb
