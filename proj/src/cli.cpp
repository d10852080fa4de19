#include "terngrid/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "terngrid/fit.hpp"
#include "terngrid/io.hpp"
#include "terngrid/layout_complete.hpp"
#include "terngrid/layout_general.hpp"
#include "terngrid/pareto.hpp"
#include "terngrid/render.hpp"
#include "terngrid/verify.hpp"

namespace terngrid {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError("bad " + what + ": '" + s + "'");
  return v;
}

}  // namespace

std::shared_ptr<const TernaryTree> parse_tree_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("tree spec must look like complete:<h>, random:<n>:<seed> or file:<path>");
  const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "complete") {
    const long long h = parse_int(rest, "height");
    if (h < 1 || h > 20) throw UsageError("complete:<h> needs 1 <= h <= 20");
    return shared_complete_tree(static_cast<int>(h));
  }
  if (kind == "random") {
    const auto parts = split(rest, ':');
    if (parts.size() != 2) throw UsageError("random spec must be random:<n>:<seed>");
    const long long n = parse_int(parts[0], "node count");
    const long long seed = parse_int(parts[1], "seed");
    if (n < 1 || n > 50'000'000) throw UsageError("random:<n> needs 1 <= n <= 5e7");
    return std::make_shared<const TernaryTree>(random_ternary_tree(static_cast<NodeId>(n), static_cast<std::uint64_t>(seed)));
  }
  if (kind == "file") {
    const Json j = read_json_file(rest);
    if (j.contains("tree")) return drawing_from_json(j).tree;
    return std::make_shared<const TernaryTree>(tree_from_json(j));
  }
  throw UsageError("unknown tree spec kind '" + kind + "'");
}

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {"general", "c1", "c2", "golden-narrow", "golden-wide",
                                                 "upper1149", "pareto-min"};
  return names;
}

GridDrawing build_drawing(const std::shared_ptr<const TernaryTree>& t, const std::string& algo,
                          const std::string& cache_dir) {
  if (algo == "general") return draw_general(t);
  int h = 0;
  if (!t->is_complete(&h)) throw UsageError("algorithm '" + algo + "' needs a complete ternary tree");
  if (algo == "c1") return draw_c1_only(h).drawing();
  if (algo == "c2") return draw_c2_only(h).drawing();
  if (algo == "golden-wide") return draw_golden(h).first.drawing();
  if (algo == "golden-narrow") return draw_golden(h).second.drawing();
  if (algo == "upper1149") return draw_upper_1149(h).drawing();
  if (algo == "pareto-min") {
    std::unique_ptr<FrontierCache> cache;
    if (!cache_dir.empty()) cache = std::make_unique<FrontierCache>(cache_dir);
    const auto fs = frontiers_up_to(h, cache.get());
    return reconstruct_drawing(fs, h, min_area(fs.back()).index).drawing();
  }
  throw UsageError("unknown algorithm '" + algo + "'");
}

std::vector<std::pair<double, double>> parse_area_table(std::istream& in) {
  std::vector<std::pair<double, double>> pts;
  std::string line;
  bool first_data = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& ch : line) {
      if (ch == ',' || ch == '\t') ch = ' ';
    }
    std::istringstream ls(line);
    std::vector<std::string> cols;
    for (std::string w; ls >> w;) cols.push_back(w);
    if (cols.empty() || cols[0][0] == '#') continue;
    std::vector<double> vals;
    bool numeric = true;
    for (const std::string& c : cols) {
      std::size_t used = 0;
      try {
        vals.push_back(std::stod(c, &used));
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
      if (used != c.size()) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first_data) {
        first_data = false;
        continue;  // header
      }
      throw ParseError("table line " + std::to_string(lineno) + ": non-numeric entry");
    }
    first_data = false;
    if (vals.size() == 2) {
      pts.emplace_back(vals[0], vals[1]);
    } else if (vals.size() == 3) {
      pts.emplace_back(vals[1], vals[2]);
    } else {
      throw ParseError("table line " + std::to_string(lineno) + ": expected 2 or 3 columns");
    }
  }
  if (pts.size() < 3) throw ParseError("table: need at least 3 rows");
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].first > pts[i - 1].first)) throw ParseError("table: n must be strictly increasing");
  }
  return pts;
}

namespace {

// Fail-closed gate before anything is written.
void require_valid(const GridDrawing& d, bool one_two) {
  const VerificationReport rep = verify(d);
  std::string bad;
  if (!rep.valid()) bad = "not a planar orthogonal grid drawing";
  else if (!rep.top_visible) bad = "top-visibility violated";
  else if (one_two && !rep.subtree_separated) bad = "subtree separation violated";
  if (!bad.empty()) throw std::logic_error("verifier rejected the drawing: " + bad);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

void print_fit(std::ostream& out, const PowerLawFit& f) {
  out << "a=" << fmt(f.a) << " b=" << fmt(f.b) << " c=" << fmt(f.c) << " sse=" << fmt(f.sse) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar orthogonal grid drawings of ternary trees"};
  app.require_subcommand(1);

  std::string tree_spec, algo = "general", format = "json", out_path, cache_dir = "./cache";
  auto* draw = app.add_subcommand("draw", "Draw a tree and write JSON or SVG");
  draw->add_option("tree", tree_spec, "complete:<h> | random:<n>:<seed> | file:<path>")->required();
  draw->add_option("--algo", algo, "Layout algorithm")->check(CLI::IsMember(algorithm_names()));
  draw->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "svg"}));
  draw->add_option("-o,--output", out_path, "Output file (default stdout)");
  draw->add_option("--cache-dir", cache_dir, "Frontier cache directory");

  int hmax = 12;
  auto* table = app.add_subcommand("table", "Minimum 1-2 drawing area for h = 1..hmax");
  table->add_option("--hmax", hmax, "Largest h")->check(CLI::Range(1, 20));
  table->add_option("--cache-dir", cache_dir, "Frontier cache directory");

  std::string table_path;
  bool builtin = false;
  auto* fit = app.add_subcommand("fit", "Fit area = a*n^b + c");
  fit->add_option("table", table_path, "Table file of (n, area) or (h, n, area) rows");
  fit->add_flag("--builtin", builtin, "Use the built-in 20-row table");

  std::string drawing_path;
  auto* ver = app.add_subcommand("verify", "Verify a drawing JSON file");
  ver->add_option("drawing", drawing_path, "Drawing file")->required();

  NodeId bench_n = 100000;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Time the general layout and the planarity check");
  bench->add_option("--n", bench_n, "Node count")->check(CLI::Range(1, 50'000'000));
  bench->add_option("--seed", bench_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*draw) {
      const auto t = parse_tree_spec(tree_spec);
      const GridDrawing d = build_drawing(t, algo, cache_dir);
      require_valid(d, algo != "general");
      const std::string text = format == "svg" ? render_svg(d) : drawing_to_json(d).dump() + "\n";
      write_output(out_path, text, out);
      const Extents e = extents(d);
      err << "n=" << d.size() << " width=" << e.width << " height=" << e.height << " area=" << e.area() << '\n';
      return kExitOk;
    }
    if (*table) {
      const FrontierCache cache(cache_dir);
      const auto fs = frontiers_up_to(hmax, cache_dir.empty() ? nullptr : &cache);
      out << "h n area\n";
      for (const ParetoFrontier& f : fs) {
        out << f.h << ' ' << complete_tree_size(f.h) << ' ' << min_area(f).area << '\n';
      }
      return kExitOk;
    }
    if (*fit) {
      std::vector<std::pair<double, double>> pts;
      if (builtin) {
        if (!table_path.empty()) throw UsageError("give either a table file or --builtin");
        for (const AreaRow& r : reference_area_table()) {
          pts.emplace_back(static_cast<double>(r.n), static_cast<double>(r.area));
        }
      } else {
        if (table_path.empty()) throw UsageError("fit needs a table file or --builtin");
        std::ifstream in(table_path);
        if (!in) throw UsageError("cannot open " + table_path);
        pts = parse_area_table(in);
      }
      const PowerLawFit f = fit_power_law(pts);
      print_fit(out, f);
      if (builtin) {
        out << "reference fit sse=" << fmt(power_law_sse(pts, 3.3262, 1.047, -181209.1337)) << '\n';
      }
      return kExitOk;
    }
    if (*ver) {
      const ParsedDrawing pd = drawing_from_json(read_json_file(drawing_path));
      if (!pd.drawing) {
        out << off_grid_report_json().dump(2) << '\n';
        return kExitNegative;
      }
      const VerificationReport rep = verify(*pd.drawing);
      out << report_to_json(rep).dump(2) << '\n';
      return rep.valid() ? kExitOk : kExitNegative;
    }
    if (*bench) {
      using Clock = std::chrono::steady_clock;
      auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
      const auto t0 = Clock::now();
      const auto t = std::make_shared<const TernaryTree>(random_ternary_tree(bench_n, bench_seed));
      const auto t1 = Clock::now();
      const GridDrawing d = draw_general(t);
      const auto t2 = Clock::now();
      const bool planar = check_planar(d);
      const auto t3 = Clock::now();
      const Extents e = extents(d);
      out << "n=" << bench_n << " width=" << e.width << " height=" << e.height << " planar=" << planar << '\n'
          << "tree_ms=" << fmt(ms(t1 - t0)) << " layout_ms=" << fmt(ms(t2 - t1))
          << " planarity_ms=" << fmt(ms(t3 - t2)) << '\n';
      return planar ? kExitOk : kExitInternal;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace terngrid
