// Command-line interface: evaluate webs, compute link and annular
// invariants of colored braid words, and run the verification suites.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spweb/dubrovnik.hpp"
#include "spweb/links.hpp"

namespace {

using namespace spweb;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Best-effort LaTeX rendering: factor out quantum integers greedily and
// render the remaining monomial; falls back to the plain form.
std::string latex_factor(const LaurentPoly& p, bool& ok) {
  ok = false;
  if (p.is_zero()) { ok = true; return "0"; }
  QScalar g{p};
  std::map<int, int> brackets;
  for (int n = 12; n >= 2; --n) {
    for (;;) {
      QScalar t = g / qint(n);
      if (!t.is_integral()) break;
      g = t;
      ++brackets[n];
    }
  }
  if (g.num().terms().size() != 1) return "";
  auto [e, c] = *g.num().terms().begin();
  std::ostringstream os;
  if (c < 0) os << "-";
  mpz_class ac = abs(c);
  if (ac != 1 || (e == 0 && brackets.empty())) os << ac.get_str();
  if (e != 0) os << "q^{" << e << "}";
  for (auto [n, k] : brackets) {
    os << "[" << n << "]";
    if (k > 1) os << "^{" << k << "}";
  }
  ok = true;
  return os.str();
}

std::string latex_scalar(const QScalar& v) {
  bool okn = false, okd = false;
  std::string num = latex_factor(v.num(), okn);
  std::string den = latex_factor(v.den(), okd);
  if (!okn || !okd) return v.str();
  if (v.den().is_one()) return num;
  bool neg = !num.empty() && num[0] == '-';
  if (neg) num = num.substr(1);
  return (neg ? std::string("-") : std::string()) + "\\frac{" + num + "}{" + den + "}";
}

std::string render_scalar(const QScalar& v, const std::string& format) {
  if (format == "latex") return latex_scalar(v);
  return v.str();
}

void print_value(const std::string& command, const QScalar& v, const std::string& format) {
  if (format == "json") {
    nlohmann::json j{{"schema", "spweb/1"}, {"command", command},
                     {"value", v.str()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << render_scalar(v, format) << "\n";
  }
}

std::vector<int> parse_colors(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.size() != 1 || tok[0] < '1' || tok[0] > '3')
      throw InvalidArgument("colors must be a comma-separated list of 1, 2 or 3");
    out.push_back(tok[0] - '0');
  }
  if (out.empty()) throw InvalidArgument("colors must not be empty");
  return out;
}

QScalar eval_web_file(const std::string& text, const RunConfig& cfg) {
  SliceWeb w = parse_web(text);
  if (!w.domain.empty() || !w.codomain().empty())
    throw InvalidArgument("the web must be closed (empty boundary)");
  QScalar val;
  for (const auto& [c, t] : expand_crossings(w)) val = val + c * evaluate_web(t, cfg);
  return val;
}

int run_verify(const std::string& suite, unsigned seed, int samples,
               const std::string& format, const RunConfig& cfg) {
  std::vector<CheckItem> items;
  if (suite == "relations") items = verify_relations(cfg);
  else if (suite == "tables") items = verify_tables(cfg);
  else if (suite == "reidemeister") items = verify_reidemeister(cfg);
  else if (suite == "bmw") items = verify_bmw(cfg);
  else if (suite == "confluence") items = verify_confluence(seed, samples, cfg);
  else throw InvalidArgument("unknown verify suite: " + suite);
  bool all_ok = true;
  if (format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckItem& it : items) {
      checks.push_back({{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
      all_ok = all_ok && it.ok;
    }
    nlohmann::json j{{"schema", "spweb/1"}, {"command", "verify"}, {"suite", suite},
                     {"ok", all_ok}, {"checks", checks}};
    std::cout << j.dump() << "\n";
  } else {
    for (const CheckItem& it : items) {
      all_ok = all_ok && it.ok;
      std::cout << (it.ok ? "PASS " : "FAIL ") << it.name;
      if (!it.detail.empty()) std::cout << " (" << it.detail << ")";
      std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sp6 web calculus: web evaluation, colored link and "
               "annular invariants, verification suites"};
  app.require_subcommand(1);

  std::string format = "plain";
  long long budget = 1'000'000;
  int jobs = 1;
  bool no_cache = false;
  unsigned seed = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex"}));
  app.add_option("--budget", budget, "Rewrite steps per evaluated term");
  app.add_option("--jobs", jobs, "Parallel evaluation threads");
  app.add_flag("--no-cache", no_cache, "Disable the evaluation cache");
  app.add_option("--seed", seed, "Random seed (verify confluence)");

  auto* evalc = app.add_subcommand("eval", "Evaluate a closed web file");
  std::string web_path;
  evalc->add_option("file", web_path, "Web file")->required();

  auto* linkc = app.add_subcommand("link", "Invariant of a colored braid closure");
  std::string json_path, braid_str, colors_str, tangle_path, closure_str = "trace";
  bool normalize_framing = false;
  linkc->add_option("--json", json_path, "Link description JSON file");
  linkc->add_option("--braid", braid_str, "Braid word, e.g. 's1 -s2 s1'");
  linkc->add_option("--colors", colors_str, "Strand colors, e.g. '1,1,2'");
  linkc->add_option("--tangle", tangle_path, "Closed web file with crossings");
  linkc->add_option("--closure", closure_str, "Braid closure")
      ->check(CLI::IsMember({"trace", "plat"}));
  linkc->add_flag("--normalize-framing", normalize_framing,
                  "Divide by the framing twist of each component");

  auto* annc = app.add_subcommand("annular", "Annular invariant of a colored braid");
  std::string ann_braid, ann_colors;
  annc->add_option("--braid", ann_braid, "Braid word")->required();
  annc->add_option("--colors", ann_colors, "Strand colors")->required();

  auto* verc = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int samples = 100;
  verc->add_option("suite", suite, "relations | tables | reidemeister | bmw | confluence")
      ->required();
  verc->add_option("--samples", samples, "Sample count (confluence)");

  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  cfg.budget = budget;
  cfg.jobs = jobs;
  cfg.use_cache = !no_cache;

  try {
    if (evalc->parsed()) {
      print_value("eval", eval_web_file(read_file(web_path), cfg), format);
      return 0;
    }
    if (linkc->parsed()) {
      if (!tangle_path.empty()) {
        print_value("link", eval_web_file(read_file(tangle_path), cfg), format);
        return 0;
      }
      ColoredBraidWord b;
      if (!json_path.empty()) {
        b = parse_link_json(read_file(json_path));
      } else {
        if (colors_str.empty())
          throw InvalidArgument("link needs --json, --tangle, or --braid with --colors");
        b.colors = parse_colors(colors_str);
        b.strands = static_cast<int>(b.colors.size());
        b.word = parse_braid_word(braid_str);
        b.closure = closure_str == "plat" ? ColoredBraidWord::Closure::Plat
                                          : ColoredBraidWord::Closure::Trace;
      }
      if (closure_str == "plat") b.closure = ColoredBraidWord::Closure::Plat;
      print_value("link", link_invariant(b, normalize_framing, cfg), format);
      return 0;
    }
    if (annc->parsed()) {
      ColoredBraidWord b;
      b.colors = parse_colors(ann_colors);
      b.strands = static_cast<int>(b.colors.size());
      b.word = parse_braid_word(ann_braid);
      ChiPolynomial chi = annular_invariant(b, cfg);
      if (format == "json") {
        nlohmann::json j{{"schema", "spweb/1"}, {"command", "annular"},
                         {"value", chi.str()}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << chi.str() << "\n";
      }
      return 0;
    }
    if (verc->parsed()) return run_verify(suite, seed, samples, format, cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalDefect& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
