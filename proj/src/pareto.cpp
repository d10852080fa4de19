#include "terngrid/pareto.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

namespace terngrid {

std::optional<int> ParetoFrontier::find(Coord width, Coord height) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), width,
                             [](const ParetoPair& p, Coord w) { return p.width < w; });
  if (it == pairs.end() || it->width != width || it->height != height) return std::nullopt;
  return static_cast<int>(it - pairs.begin());
}

std::vector<std::pair<Coord, Coord>> ParetoFrontier::dimensions() const {
  std::vector<std::pair<Coord, Coord>> out;
  out.reserve(pairs.size());
  for (const ParetoPair& p : pairs) out.emplace_back(p.width, p.height);
  return out;
}

ParetoFrontier base_frontier() {
  ParetoFrontier f;
  f.h = 1;
  f.pairs.push_back({1, 1, {}});
  return f;
}

namespace {

// Best candidate per width: least height, then least (arm, center, construction).
struct Slot {
  Coord height = std::numeric_limits<Coord>::max();
  Recipe recipe;

  bool improve(Coord h, const Recipe& r) {
    if (h < height || (h == height && std::tie(r.arm, r.center, r.construction) <
                                           std::tie(recipe.arm, recipe.center, recipe.construction))) {
      height = h;
      recipe = r;
      return true;
    }
    return false;
  }
};

void evaluate(const ParetoFrontier& prev, int arm_begin, int arm_end, std::vector<Slot>& best) {
  const auto& ps = prev.pairs;
  for (int l = arm_begin; l < arm_end; ++l) {
    const Coord wl = ps[l].width, hl = ps[l].height;
    const Coord half_l = (wl - 1) / 2;
    for (int b = 0; b < static_cast<int>(ps.size()); ++b) {
      const Coord wb = ps[b].width, hb = ps[b].height;
      const Coord w1 = wb + 2 * hl;
      const Coord h1 = half_l + std::max(half_l, hb) + 1;
      best[w1].improve(h1, {l, b, 1});
      const Coord w2 = 2 * std::max((wb - 1) / 2, hl) + 1;
      const Coord h2 = wl + hb;
      best[w2].improve(h2, {l, b, 2});
    }
  }
}

}  // namespace

ParetoFrontier next_frontier(const ParetoFrontier& prev, unsigned threads) {
  if (prev.pairs.empty()) throw std::invalid_argument("next_frontier: empty frontier");
  Coord max_w = 0, max_h = 0;
  for (const ParetoPair& p : prev.pairs) {
    if (p.width % 2 == 0) throw std::logic_error("next_frontier: even width in frontier");
    max_w = std::max(max_w, p.width);
    max_h = std::max(max_h, p.height);
  }
  const std::size_t table = static_cast<std::size_t>(std::max(max_w + 2 * max_h, 2 * std::max(max_w, max_h) + 1)) + 1;

  const int k = static_cast<int>(prev.pairs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(1, k / 64)));
  threads = std::max(1u, threads);

  std::vector<std::vector<Slot>> partial(threads, std::vector<Slot>(table));
  if (threads == 1) {
    evaluate(prev, 0, k, partial[0]);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
      const int lo = static_cast<int>(static_cast<long long>(k) * t / threads);
      const int hi = static_cast<int>(static_cast<long long>(k) * (t + 1) / threads);
      jobs.push_back(std::async(std::launch::async, [&, t, lo, hi] { evaluate(prev, lo, hi, partial[t]); }));
    }
    for (auto& j : jobs) j.get();
  }
  std::vector<Slot>& best = partial[0];
  for (unsigned t = 1; t < threads; ++t) {
    for (std::size_t w = 0; w < table; ++w) {
      if (partial[t][w].height != std::numeric_limits<Coord>::max()) {
        best[w].improve(partial[t][w].height, partial[t][w].recipe);
      }
    }
  }

  ParetoFrontier f;
  f.h = prev.h + 1;
  Coord lowest = std::numeric_limits<Coord>::max();
  for (std::size_t w = 0; w < table; ++w) {
    if (best[w].height < lowest) {
      lowest = best[w].height;
      f.pairs.push_back({static_cast<Coord>(w), best[w].height, best[w].recipe});
    }
  }
  return f;
}

void write_frontier(std::ostream& out, const ParetoFrontier& f) {
  out << "h=" << f.h << " count=" << f.pairs.size() << '\n';
  for (const ParetoPair& p : f.pairs) {
    out << p.width << ' ' << p.height << ' ' << p.recipe.arm << ' ' << p.recipe.center << ' '
        << p.recipe.construction << '\n';
  }
}

ParetoFrontier read_frontier(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("frontier file: missing header");
  ParetoFrontier f;
  std::size_t count = 0;
  {
    int h = 0;
    long long c = -1;
    if (std::sscanf(header.c_str(), "h=%d count=%lld", &h, &c) != 2 || h < 1 || c < 0) {
      throw std::runtime_error("frontier file: bad header '" + header + "'");
    }
    f.h = h;
    count = static_cast<std::size_t>(c);
  }
  for (std::size_t i = 0; i < count; ++i) {
    ParetoPair p;
    if (!(in >> p.width >> p.height >> p.recipe.arm >> p.recipe.center >> p.recipe.construction)) {
      throw std::runtime_error("frontier file: truncated at pair " + std::to_string(i));
    }
    if (i > 0 && (p.width <= f.pairs.back().width || p.height >= f.pairs.back().height)) {
      throw std::runtime_error("frontier file: pairs not in frontier order");
    }
    f.pairs.push_back(p);
  }
  return f;
}

FrontierCache::FrontierCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FrontierCache::file_for(int h) const {
  return dir_ / ("frontier_h" + std::to_string(h) + ".txt");
}

std::optional<ParetoFrontier> FrontierCache::load(int h) const {
  std::ifstream in(file_for(h));
  if (!in) return std::nullopt;
  ParetoFrontier f = read_frontier(in);
  if (f.h != h) throw std::runtime_error("frontier cache: " + file_for(h).string() + " holds h=" + std::to_string(f.h));
  return f;
}

void FrontierCache::store(const ParetoFrontier& f) const {
  std::filesystem::create_directories(dir_);
  const auto path = file_for(f.h);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("frontier cache: cannot write " + tmp);
    write_frontier(out, f);
  }
  std::filesystem::rename(tmp, path);
}

std::vector<ParetoFrontier> frontiers_up_to(int h, const FrontierCache* cache, unsigned threads) {
  if (h < 1) throw std::invalid_argument("frontier: h must be >= 1");
  std::vector<ParetoFrontier> out;
  out.reserve(h);
  out.push_back(base_frontier());
  for (int k = 2; k <= h; ++k) {
    std::optional<ParetoFrontier> f;
    if (cache) f = cache->load(k);
    if (!f) {
      f = next_frontier(out.back(), threads);
      if (cache) cache->store(*f);
    }
    out.push_back(std::move(*f));
  }
  return out;
}

ParetoFrontier frontier(int h) { return std::move(frontiers_up_to(h).back()); }

MinArea min_area(const ParetoFrontier& f) {
  if (f.pairs.empty()) throw std::invalid_argument("min_area: empty frontier");
  MinArea best{f.pairs[0].area(), f.pairs[0], 0};
  for (int i = 1; i < static_cast<int>(f.pairs.size()); ++i) {
    // Widths increase along the frontier, so strict < keeps the narrower one.
    if (f.pairs[i].area() < best.area) best = {f.pairs[i].area(), f.pairs[i], i};
  }
  return best;
}

MinArea min_area(int h) { return min_area(frontier(h)); }

OneTwoDrawing reconstruct_drawing(const std::vector<ParetoFrontier>& frontiers, int h, int index) {
  if (h < 1 || h > static_cast<int>(frontiers.size())) throw std::invalid_argument("reconstruct_drawing: bad h");
  if (index < 0 || index >= static_cast<int>(frontiers[h - 1].pairs.size())) {
    throw std::invalid_argument("reconstruct_drawing: bad pair index");
  }
  // Which pairs are needed at each level, discovered top-down.
  std::vector<std::vector<int>> needed(h + 1);
  needed[h] = {index};
  for (int k = h; k >= 2; --k) {
    std::vector<int>& below = needed[k - 1];
    for (int i : needed[k]) {
      const Recipe& r = frontiers[k - 1].pairs[i].recipe;
      below.push_back(r.arm);
      below.push_back(r.center);
    }
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
  }
  std::map<int, OneTwoDrawing> level;
  level.emplace(0, OneTwoDrawing::point());
  for (int k = 2; k <= h; ++k) {
    std::map<int, OneTwoDrawing> next;
    for (int i : needed[k]) {
      const Recipe& r = frontiers[k - 1].pairs[i].recipe;
      const OneTwoDrawing& arm = level.at(r.arm);
      const OneTwoDrawing& center = level.at(r.center);
      next.emplace(i, combine(static_cast<Construction>(r.construction), center, arm, arm));
    }
    level = std::move(next);
  }
  return level.at(index);
}

OneTwoDrawing reconstruct_drawing(int h, std::pair<Coord, Coord> pair) {
  const auto fs = frontiers_up_to(h);
  const auto idx = fs.back().find(pair.first, pair.second);
  if (!idx) {
    throw std::invalid_argument("reconstruct_drawing: (" + std::to_string(pair.first) + ", " +
                                std::to_string(pair.second) + ") is not on the frontier of T_" + std::to_string(h));
  }
  return reconstruct_drawing(fs, h, *idx);
}

namespace {

ParetoFrontier pareto_filter(int h, std::vector<ParetoPair> pts) {
  std::sort(pts.begin(), pts.end(), [](const ParetoPair& a, const ParetoPair& b) {
    return std::tie(a.width, a.height) < std::tie(b.width, b.height);
  });
  ParetoFrontier f;
  f.h = h;
  for (const ParetoPair& p : pts) {
    if (f.pairs.empty() || p.height < f.pairs.back().height) {
      if (!f.pairs.empty() && f.pairs.back().width == p.width) continue;
      f.pairs.push_back(p);
    }
  }
  return f;
}

}  // namespace

ExhaustiveResult exhaustive_frontier(int h) {
  if (h < 1) throw std::invalid_argument("exhaustive_frontier: h must be >= 1");
  if (h > 4) throw std::invalid_argument("exhaustive_frontier: refusing h > 4");
  std::vector<OneTwoDrawing> level{OneTwoDrawing::point()};
  std::vector<int> made_by{0};
  for (int k = 2; k <= h; ++k) {
    std::vector<OneTwoDrawing> next;
    std::vector<int> next_by;
    for (const OneTwoDrawing& a : level) {
      for (const OneTwoDrawing& b : level) {
        for (const OneTwoDrawing& c : level) {
          for (Construction kind : {Construction::kOne, Construction::kTwo}) {
            OneTwoDrawing d = combine(kind, a, b, c);
            const bool seen = std::any_of(next.begin(), next.end(),
                                          [&](const OneTwoDrawing& o) { return o.drawing() == d.drawing(); });
            if (!seen) {
              next.push_back(std::move(d));
              next_by.push_back(static_cast<int>(kind));
            }
          }
        }
      }
    }
    level = std::move(next);
    made_by = std::move(next_by);
  }
  std::vector<ParetoPair> pts;
  pts.reserve(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) {
    const Extents& e = level[i].extents();
    pts.push_back({e.width, e.height, {-1, -1, made_by[i]}});
  }
  ExhaustiveResult out;
  out.frontier = pareto_filter(h, std::move(pts));
  out.drawings = std::move(level);
  return out;
}

}  // namespace terngrid
