// Dubrovnik polynomial of a closed braid word at a = -q^7, z = q - q^-1,
// delta = 1 - [7], by skein induction on descending diagrams: traverse the
// closed diagram from canonical basepoints; a crossing is "bad" when its
// first visit runs under; switching the first bad crossing strictly reduces
// the bad count, and the two smoothing terms reduce the crossing count, so
// the recursion terminates.  A descending diagram is a layered unlink and
// contributes delta per component times a^(self-writhe) per component.
#include "spweb/dubrovnik.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spweb {

namespace {

enum class Lt : int { S = 0, SI = 1, E = 2 };  // crossing, inverse, cap-cup

struct Letter {
  Lt t;
  int i;  // acts on positions i-1, i (1-based index)
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Canonical representative under cyclic rotation (the closed diagram is
// the same for every rotation of the word).
Word canonical(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word cur = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

struct Visit {
  int letter;      // index into the word
  bool strand_a;   // strand A joins bottom-left to top-right
  bool up;         // direction of this passage
  int component;
};

struct Traversal {
  std::vector<Visit> visits;  // in global traversal order
  int components = 0;
};

// Walks every strand of the trace-closed diagram of the word, starting each
// component at its first unvisited vertical segment, heading up.
Traversal traverse(int n, const Word& w) {
  int m = static_cast<int>(w.size());
  Traversal out;
  if (m == 0) {
    out.components = n;
    return out;
  }
  std::vector<std::vector<bool>> seen(static_cast<size_t>(m),
                                      std::vector<bool>(static_cast<size_t>(n), false));
  auto wrap = [&](int g) { return (g % m + m) % m; };
  for (int g0 = 0; g0 < m; ++g0)
    for (int p0 = 0; p0 < n; ++p0) {
      if (seen[static_cast<size_t>(g0)][static_cast<size_t>(p0)]) continue;
      int comp = out.components++;
      int g = g0, p = p0;
      bool up = true;
      do {
        seen[static_cast<size_t>(g)][static_cast<size_t>(p)] = true;
        int li = up ? g : wrap(g - 1);
        const Letter& L = w[static_cast<size_t>(li)];
        bool touches = p == L.i - 1 || p == L.i;
        if (!touches) {
          g = wrap(up ? g + 1 : g - 1);
          continue;
        }
        int other = p == L.i - 1 ? L.i : L.i - 1;
        if (L.t == Lt::E) {
          // Cap below / cup above: the strand turns around in place.
          p = other;
          up = !up;
          continue;
        }
        // Crossing: strand A enters bottom-left or top-right.
        bool strand_a = up ? p == L.i - 1 : p == L.i;
        out.visits.push_back(Visit{li, strand_a, up, comp});
        p = other;
        g = wrap(up ? g + 1 : g - 1);
      } while (!seen[static_cast<size_t>(g)][static_cast<size_t>(p)]);
    }
  return out;
}

struct Eval {
  QScalar a = parse_scalar("-q^7");
  QScalar z = parse_scalar("q - q^-1");
  QScalar delta = parse_scalar("1 - [7]");
  std::map<std::pair<int, Word>, QScalar> memo;
  long long budget = 2'000'000;

  QScalar run(int n, const Word& w0) {
    if (--budget < 0) throw InternalDefect("crossing budget exceeded");
    Word w = canonical(w0);
    auto key = std::make_pair(n, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Traversal tr = traverse(n, w);

    // First crossing whose first visit runs under.
    std::vector<int> visit_count(w.size(), 0);
    int bad = -1;
    for (const Visit& v : tr.visits) {
      int& c = visit_count[static_cast<size_t>(v.letter)];
      if (c++ == 0) {
        bool over = v.strand_a == (w[static_cast<size_t>(v.letter)].t == Lt::S);
        if (!over && bad < 0) bad = v.letter;
      }
    }

    QScalar val;
    if (bad < 0) {
      // Descending: a layered unlink with curls.  Each same-component
      // crossing contributes its sign, flipped when the two passages run
      // in opposite vertical directions.
      std::map<int, int> writhe;
      std::map<int, const Visit*> first;
      for (const Visit& v : tr.visits) {
        auto it = first.find(v.letter);
        if (it == first.end()) { first[v.letter] = &v; continue; }
        const Visit& u = *it->second;
        if (u.component == v.component) {
          int s = w[static_cast<size_t>(v.letter)].t == Lt::S ? 1 : -1;
          if (u.up != v.up) s = -s;
          writhe[v.component] += s;
        }
      }
      val = QScalar(1);
      for (int c = 0; c < tr.components; ++c) {
        val = val * delta;
        int e = writhe.count(c) ? writhe[c] : 0;
        QScalar base = e < 0 ? a.inv() : a;
        for (int k = 0; k < (e < 0 ? -e : e); ++k) val = val * base;
      }
    } else {
      // Skein switch at the first bad crossing:
      //   K(S) = K(SI) + z K(drop) - z K(e),
      //   K(SI) = K(S) - z K(drop) + z K(e).
      bool positive = w[static_cast<size_t>(bad)].t == Lt::S;
      Word sw = w, dr = w, sm = w;
      sw[static_cast<size_t>(bad)].t = positive ? Lt::SI : Lt::S;
      dr.erase(dr.begin() + bad);
      sm[static_cast<size_t>(bad)].t = Lt::E;
      QScalar zz = positive ? z : -z;
      val = run(n, sw) + zz * run(n, dr) - zz * run(n, sm);
    }
    memo.emplace(std::move(key), val);
    return val;
  }
};

}  // namespace

QScalar dubrovnik_closure(int strands, const std::vector<std::pair<int, bool>>& word) {
  if (strands < 1) throw InvalidArgument("braid needs at least one strand");
  Word w;
  for (auto [g, pos] : word) {
    if (g < 1 || g >= strands)
      throw InvalidArgument("braid generator s" + std::to_string(g) +
                            " out of range for " + std::to_string(strands) + " strands");
    w.push_back(Letter{pos ? Lt::S : Lt::SI, g});
  }
  Eval ev;
  return ev.run(strands, w);
}

}  // namespace spweb
