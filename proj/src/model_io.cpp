#include "isect/model_io.hpp"

#include "isect/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <tuple>

namespace isect {
namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr std::array<std::pair<ModelKind, std::string_view>, 10> kKinds{{
    {ModelKind::Interval, "interval"},
    {ModelKind::Arcs, "arcs"},
    {ModelKind::Permutation, "permutation"},
    {ModelKind::Trapezoid, "trapezoid"},
    {ModelKind::Dotted, "dotted"},
    {ModelKind::Tolerance, "tolerance"},
    {ModelKind::Chords, "chords"},
    {ModelKind::Disks, "disks"},
    {ModelKind::Boxes, "boxes"},
    {ModelKind::Graph, "graph"},
}};

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(Errc::SchemaError, path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema(path, "integer out of range");
  }
  return v.get<std::int64_t>();
}

int as_small_int(const json& v, const std::string& path) {
  std::int64_t x = as_int(v, path);
  if (x < INT32_MIN || x > INT32_MAX) schema(path, "integer out of range");
  return static_cast<int>(x);
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(as_int(v, path));
  if (v.is_number_float()) schema(path, "floating-point numbers are not accepted; write \"p/q\" or a decimal string");
  if (!v.is_string()) schema(path, "expected an integer or a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

const json& items_of(const json& doc) {
  const json& items = field(doc, "items", "$");
  if (!items.is_array()) schema("$.items", "expected an array");
  return items;
}

// Reorders records so that index v-1 holds the record with id v.
std::vector<const json*> by_id(const json& items) {
  const std::size_t n = items.size();
  std::vector<const json*> out(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    std::string path = "$.items[" + std::to_string(i) + "]";
    if (!items[i].is_object()) schema(path, "expected an object");
    std::int64_t id = as_int(field(items[i], "id", path), path + ".id");
    if (id < 1 || id > static_cast<std::int64_t>(n)) {
      throw Error(Errc::ValidationError, path + ".id: ids must be a permutation of 1.." + std::to_string(n));
    }
    if (out[id - 1]) throw Error(Errc::ValidationError, path + ".id: duplicate id " + std::to_string(id));
    out[id - 1] = &items[i];
  }
  return out;
}

std::string item_path(const std::vector<const json*>& recs, const json& items, std::size_t v) {
  std::size_t pos = static_cast<std::size_t>(recs[v] - &items[0]);
  return "$.items[" + std::to_string(pos) + "]";
}

// Runs a model constructor, turning its domain errors into ValidationError.
template <class F>
auto validated(const std::string& where, F make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaError || e.code() == Errc::ValidationError) throw;
    throw Error(Errc::ValidationError, where + ": " + e.what());
  }
}

ojson rational_json(const Rational& r) {
  if (is_integer(r)) return ojson(r.numerator());
  return ojson(to_string(r));
}

ojson interval_json(const Interval& iv) { return ojson::array({rational_json(iv.a), rational_json(iv.b)}); }

// Ranks 2n endpoint values with ties: value, then left before right, then
// item. Returns (left rank, right rank) per item.
std::vector<std::pair<int, int>> rank_endpoints(const std::vector<std::pair<std::int64_t, std::int64_t>>& spans) {
  std::vector<std::tuple<std::int64_t, int, int>> ev;
  for (int i = 0; i < static_cast<int>(spans.size()); ++i) {
    ev.emplace_back(spans[i].first, 0, i);
    ev.emplace_back(spans[i].second, 1, i);
  }
  std::sort(ev.begin(), ev.end());
  std::vector<std::pair<int, int>> out(spans.size());
  for (int r = 0; r < static_cast<int>(ev.size()); ++r) {
    auto [x, side, i] = ev[r];
    (side == 0 ? out[i].first : out[i].second) = r + 1;
  }
  return out;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::int64_t i = static_cast<std::int64_t>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[uniform_int(rng, 0, i)]);
  }
}

}  // namespace

std::string_view kind_name(ModelKind kind) {
  for (auto [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ModelKind> parse_kind(std::string_view name) {
  for (auto [k, n] : kKinds) {
    if (n == name) return k;
  }
  return std::nullopt;
}

ModelFile parse_model_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");
  const json& kind_value = field(doc, "kind", "$");
  if (!kind_value.is_string()) schema("$.kind", "expected a string");
  auto kind = parse_kind(kind_value.get<std::string>());
  if (!kind) schema("$.kind", "unknown kind \"" + kind_value.get<std::string>() + "\"");

  ModelFile file;
  file.kind = *kind;
  switch (*kind) {
    case ModelKind::Interval: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      std::vector<Interval> intervals;
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        intervals.push_back({as_rational(field(*recs[v], "a", p), p + ".a"),
                             as_rational(field(*recs[v], "b", p), p + ".b")});
        if (!(intervals.back().a < intervals.back().b)) {
          throw Error(Errc::ValidationError, p + ": interval id " + std::to_string(v + 1) + " needs a < b");
        }
      }
      file.model = IntervalModel(std::move(intervals));
      break;
    }
    case ModelKind::Arcs: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      std::vector<Arc> arcs;
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        arcs.push_back({as_small_int(field(*recs[v], "h", p), p + ".h"),
                        as_small_int(field(*recs[v], "t", p), p + ".t")});
      }
      file.model = validated("$.items", [&] { return ArcModel(std::move(arcs)); });
      break;
    }
    case ModelKind::Permutation: {
      const json& pi = field(doc, "pi", "$");
      if (!pi.is_array()) schema("$.pi", "expected an array");
      std::vector<int> seq;
      for (std::size_t i = 0; i < pi.size(); ++i) seq.push_back(as_small_int(pi[i], "$.pi[" + std::to_string(i) + "]"));
      file.model = validated("$.pi", [&] { return Permutation(std::move(seq)); });
      break;
    }
    case ModelKind::Trapezoid: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      std::vector<Trapezoid> traps;
      bool lines = !recs.empty();
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        Trapezoid t{as_small_int(field(*recs[v], "a", p), p + ".a"), as_small_int(field(*recs[v], "b", p), p + ".b"),
                    as_small_int(field(*recs[v], "c", p), p + ".c"), as_small_int(field(*recs[v], "d", p), p + ".d")};
        lines = lines && t.a == t.b && t.c == t.d;
        traps.push_back(t);
      }
      file.model = validated("$.items", [&] {
        if (!lines) return TrapezoidModel(std::move(traps));
        std::vector<std::pair<int, int>> tb;
        for (const auto& t : traps) tb.emplace_back(t.a, t.c);
        return TrapezoidModel::lines(tb);
      });
      break;
    }
    case ModelKind::Dotted: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      std::vector<DottedInterval> dots;
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        DottedInterval x{as_int(field(*recs[v], "s", p), p + ".s"), as_int(field(*recs[v], "t", p), p + ".t"),
                         as_int(field(*recs[v], "d", p), p + ".d")};
        validated(p, [&] {
          validate(x);
          return 0;
        });
        dots.push_back(x);
      }
      file.model = std::move(dots);
      break;
    }
    case ModelKind::Tolerance: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      ToleranceRep rep;
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        rep.intervals.push_back({as_rational(field(*recs[v], "a", p), p + ".a"),
                                 as_rational(field(*recs[v], "b", p), p + ".b")});
        const json& tol = field(*recs[v], "tol", p);
        if (tol.is_string() && tol.get<std::string>() == "inf") {
          rep.tolerances.push_back(Tolerance::inf());
        } else {
          rep.tolerances.push_back({as_rational(tol, p + ".tol"), false});
        }
      }
      validated("$.items", [&] {
        validate(rep);
        return 0;
      });
      file.model = std::move(rep);
      break;
    }
    case ModelKind::Chords: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      ChordModel m;
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        m.chords.emplace_back(as_small_int(field(*recs[v], "x", p), p + ".x"),
                              as_small_int(field(*recs[v], "y", p), p + ".y"));
        if (m.chords.back().first == m.chords.back().second) {
          throw Error(Errc::ValidationError, p + ": chord endpoints must differ");
        }
      }
      validated("$.items", [&] { return build_circle_graph(m); });
      file.model = std::move(m);
      break;
    }
    case ModelKind::Disks: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      DiskPoints pts;
      pts.r = as_rational(field(doc, "r", "$"), "$.r");
      if (pts.r <= 0) throw Error(Errc::ValidationError, "$.r: radius must be positive");
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        pts.points.emplace_back(as_rational(field(*recs[v], "x", p), p + ".x"),
                                as_rational(field(*recs[v], "y", p), p + ".y"));
      }
      file.model = std::move(pts);
      break;
    }
    case ModelKind::Boxes: {
      const json& items = items_of(doc);
      auto recs = by_id(items);
      KBoxModel m;
      m.k = 0;
      for (std::size_t v = 0; v < recs.size(); ++v) {
        std::string p = item_path(recs, items, v);
        const json& sides = field(*recs[v], "intervals", p);
        if (!sides.is_array()) schema(p + ".intervals", "expected an array");
        std::vector<Interval> box;
        for (std::size_t c = 0; c < sides.size(); ++c) {
          std::string q = p + ".intervals[" + std::to_string(c) + "]";
          if (!sides[c].is_array() || sides[c].size() != 2) schema(q, "expected [l, u]");
          box.push_back({as_rational(sides[c][0], q + "[0]"), as_rational(sides[c][1], q + "[1]")});
        }
        if (v == 0) m.k = static_cast<int>(box.size());
        m.boxes.push_back(std::move(box));
      }
      if (m.boxes.empty()) m.k = 1;
      validated("$.items", [&] {
        validate(m);
        return 0;
      });
      file.model = std::move(m);
      break;
    }
    case ModelKind::Graph: {
      int n = as_small_int(field(doc, "n", "$"), "$.n");
      const json& edges = field(doc, "edges", "$");
      if (!edges.is_array()) schema("$.edges", "expected an array");
      std::vector<Edge> list;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string p = "$.edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) schema(p, "expected [u, v]");
        list.emplace_back(as_small_int(edges[i][0], p + "[0]"), as_small_int(edges[i][1], p + "[1]"));
      }
      file.model = validated("$.edges", [&] { return Graph(n, std::move(list)); });
      break;
    }
  }

  if (auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_array()) schema("$.weights", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      file.weights.push_back(as_rational((*it)[i], "$.weights[" + std::to_string(i) + "]"));
      if (file.weights.back() < 0) {
        throw Error(Errc::ValidationError, "$.weights[" + std::to_string(i) + "]: weights must be nonnegative");
      }
    }
    if (static_cast<int>(file.weights.size()) != model_size(file)) {
      throw Error(Errc::ValidationError, "$.weights: expected " + std::to_string(model_size(file)) + " weights");
    }
  }
  return file;
}

int model_size(const ModelFile& file) {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IntervalModel> || std::is_same_v<T, ArcModel> ||
                      std::is_same_v<T, Permutation> || std::is_same_v<T, TrapezoidModel>) {
          return m.size();
        } else if constexpr (std::is_same_v<T, std::vector<DottedInterval>>) {
          return static_cast<int>(m.size());
        } else if constexpr (std::is_same_v<T, ToleranceRep>) {
          return static_cast<int>(m.intervals.size());
        } else if constexpr (std::is_same_v<T, ChordModel>) {
          return static_cast<int>(m.chords.size());
        } else if constexpr (std::is_same_v<T, DiskPoints>) {
          return static_cast<int>(m.points.size());
        } else if constexpr (std::is_same_v<T, KBoxModel>) {
          return static_cast<int>(m.boxes.size());
        } else {
          return m.order();
        }
      },
      file.model);
}

std::string emit_model_file(const ModelFile& file) {
  ojson doc;
  doc["kind"] = std::string(kind_name(file.kind));
  ojson items = ojson::array();
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IntervalModel>) {
          for (Vertex v = 1; v <= m.size(); ++v) {
            items.push_back({{"id", v}, {"a", rational_json(m[v].a)}, {"b", rational_json(m[v].b)}});
          }
        } else if constexpr (std::is_same_v<T, ArcModel>) {
          for (Vertex v = 1; v <= m.size(); ++v) items.push_back({{"id", v}, {"h", m[v].h}, {"t", m[v].t}});
        } else if constexpr (std::is_same_v<T, Permutation>) {
          doc["pi"] = m.sequence();
        } else if constexpr (std::is_same_v<T, TrapezoidModel>) {
          for (Vertex v = 1; v <= m.size(); ++v) {
            items.push_back({{"id", v}, {"a", m[v].a}, {"b", m[v].b}, {"c", m[v].c}, {"d", m[v].d}});
          }
        } else if constexpr (std::is_same_v<T, std::vector<DottedInterval>>) {
          for (std::size_t i = 0; i < m.size(); ++i) {
            items.push_back({{"id", i + 1}, {"s", m[i].s}, {"t", m[i].t}, {"d", m[i].d}});
          }
        } else if constexpr (std::is_same_v<T, ToleranceRep>) {
          for (std::size_t i = 0; i < m.intervals.size(); ++i) {
            const Tolerance& t = m.tolerances[i];
            items.push_back({{"id", i + 1},
                             {"a", rational_json(m.intervals[i].a)},
                             {"b", rational_json(m.intervals[i].b)},
                             {"tol", t.infinite ? ojson("inf") : rational_json(t.value)}});
          }
        } else if constexpr (std::is_same_v<T, ChordModel>) {
          for (std::size_t i = 0; i < m.chords.size(); ++i) {
            items.push_back({{"id", i + 1}, {"x", m.chords[i].first}, {"y", m.chords[i].second}});
          }
        } else if constexpr (std::is_same_v<T, DiskPoints>) {
          doc["r"] = rational_json(m.r);
          for (std::size_t i = 0; i < m.points.size(); ++i) {
            items.push_back({{"id", i + 1}, {"x", rational_json(m.points[i].first)}, {"y", rational_json(m.points[i].second)}});
          }
        } else if constexpr (std::is_same_v<T, KBoxModel>) {
          for (std::size_t i = 0; i < m.boxes.size(); ++i) {
            ojson sides = ojson::array();
            for (const auto& iv : m.boxes[i]) sides.push_back(interval_json(iv));
            items.push_back({{"id", i + 1}, {"intervals", sides}});
          }
        } else {
          doc["n"] = m.order();
          ojson edges = ojson::array();
          for (auto [u, v] : m.edges()) edges.push_back({u, v});
          doc["edges"] = edges;
        }
      },
      file.model);
  if (file.kind != ModelKind::Permutation && file.kind != ModelKind::Graph) doc["items"] = items;
  if (!file.weights.empty()) {
    ojson w = ojson::array();
    for (const auto& x : file.weights) w.push_back(rational_json(x));
    doc["weights"] = w;
  }
  return doc.dump(2) + "\n";
}

Graph model_graph(const ModelFile& file) {
  Graph g = std::visit(
      [](const auto& m) -> Graph {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IntervalModel>) return build_interval_graph(m);
        else if constexpr (std::is_same_v<T, ArcModel>) return build_circular_arc_graph(m);
        else if constexpr (std::is_same_v<T, Permutation>) return build_permutation_graph(m);
        else if constexpr (std::is_same_v<T, TrapezoidModel>) return build_trapezoid_graph(m);
        else if constexpr (std::is_same_v<T, std::vector<DottedInterval>>) return build_ddig(m).graph;
        else if constexpr (std::is_same_v<T, ToleranceRep>) return build_tolerance_graph(m);
        else if constexpr (std::is_same_v<T, ChordModel>) return build_circle_graph(m);
        else if constexpr (std::is_same_v<T, DiskPoints>) return build_unit_disk_graph(m);
        else if constexpr (std::is_same_v<T, KBoxModel>) return build_box_graph(m);
        else return m;
      },
      file.model);
  return file.weights.empty() ? g : g.with_weights(file.weights);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::BadParams, "empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(rng());  // the full 64-bit range
  // Values below `threshold` (2^64 mod range) would bias the remainder.
  const std::uint64_t threshold = (0 - range) % range;
  while (true) {
    std::uint64_t x = rng();
    if (x >= threshold) return lo + static_cast<std::int64_t>(x % range);
  }
}

ModelFile generate_model(const GeneratorSpec& spec) {
  if (spec.n < 1) throw Error(Errc::BadParams, "n must be positive");
  if (spec.max_len < 0 || spec.k < 0 || spec.jump < 1 || spec.r <= 0) {
    throw Error(Errc::BadParams, "generator parameters out of range");
  }
  const int n = spec.n;
  std::mt19937_64 rng(spec.seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return uniform_int(rng, lo, hi); };
  ModelFile file;
  file.kind = spec.kind;
  switch (spec.kind) {
    case ModelKind::Interval: {
      // Each interval starts within max_len of the current reach, so the
      // union stays connected.
      std::int64_t max_len = spec.max_len ? spec.max_len : pick(2, 60);
      std::int64_t reach = 0;
      std::vector<Interval> raw;
      for (int i = 0; i < n; ++i) {
        std::int64_t a = i == 0 ? 0 : pick(std::max<std::int64_t>(0, reach - max_len), reach);
        std::int64_t b = a + pick(1, max_len);
        reach = std::max(reach, b);
        raw.push_back({Rational(a), Rational(b)});
      }
      file.model = normalize(IntervalModel(std::move(raw))).model;
      break;
    }
    case ModelKind::Arcs: {
      const std::int64_t circle = 16LL * n;
      std::int64_t span = spec.max_len ? std::min<std::int64_t>(16LL * spec.max_len, circle - 1) : pick(1, circle - 1);
      std::set<std::int64_t> used;
      std::vector<RawArc> raw;
      while (static_cast<int>(raw.size()) < n) {
        std::int64_t h = pick(0, circle - 1);
        std::int64_t t = (h + pick(1, span)) % circle;
        if (used.count(h) || used.count(t)) continue;
        used.insert(h);
        used.insert(t);
        raw.push_back({Rational(h), Rational(t)});
      }
      file.model = canonicalize(raw).model;
      break;
    }
    case ModelKind::Permutation: {
      std::vector<int> seq(n);
      std::iota(seq.begin(), seq.end(), 1);
      shuffle(seq, rng);
      file.model = Permutation(std::move(seq));
      break;
    }
    case ModelKind::Trapezoid: {
      std::int64_t max_len = spec.max_len ? spec.max_len : pick(1, 4LL * n);
      auto side = [&] {
        std::vector<std::pair<std::int64_t, std::int64_t>> spans;
        for (int i = 0; i < n; ++i) {
          std::int64_t a = pick(0, 4LL * n);
          spans.emplace_back(a, a + pick(1, max_len));
        }
        return rank_endpoints(spans);
      };
      auto top = side();
      auto bottom = side();
      std::vector<Trapezoid> traps;
      for (int i = 0; i < n; ++i) traps.push_back({top[i].first, top[i].second, bottom[i].first, bottom[i].second});
      std::sort(traps.begin(), traps.end(), [](const Trapezoid& x, const Trapezoid& y) { return x.b < y.b; });
      file.model = TrapezoidModel(std::move(traps));
      break;
    }
    case ModelKind::Dotted: {
      std::vector<DottedInterval> dots;
      for (int i = 0; i < n; ++i) {
        std::int64_t s = pick(1, 50), d = pick(1, spec.jump), count = pick(0, 8);
        dots.push_back({s, s + count * d, d});
      }
      file.model = std::move(dots);
      break;
    }
    case ModelKind::Tolerance: {
      ToleranceRep rep;
      for (int i = 0; i < n; ++i) {
        std::int64_t a = pick(0, 3LL * n);
        rep.intervals.push_back({Rational(a), Rational(a + pick(0, 10))});
        if (pick(0, 9) == 0) {
          rep.tolerances.push_back(Tolerance::inf());
        } else {
          rep.tolerances.push_back({Rational(pick(1, 8), pick(1, 2)), false});
        }
      }
      file.model = std::move(rep);
      break;
    }
    case ModelKind::Chords: {
      std::vector<int> pos(2 * n);
      std::iota(pos.begin(), pos.end(), 1);
      shuffle(pos, rng);
      ChordModel m;
      for (int i = 0; i < n; ++i) m.chords.emplace_back(pos[2 * i], pos[2 * i + 1]);
      file.model = std::move(m);
      break;
    }
    case ModelKind::Disks: {
      DiskPoints pts;
      pts.r = spec.r;
      std::int64_t side = 1;
      while (side * side < n) ++side;
      for (int i = 0; i < n; ++i) {
        pts.points.emplace_back(Rational(pick(0, 4 * side), 4), Rational(pick(0, 4 * side), 4));
      }
      file.model = std::move(pts);
      break;
    }
    case ModelKind::Boxes: {
      KBoxModel m;
      m.k = spec.k ? spec.k : static_cast<int>(pick(1, 3));
      for (int i = 0; i < n; ++i) {
        std::vector<Interval> box;
        for (int c = 0; c < m.k; ++c) {
          std::int64_t lo = pick(0, 20);
          box.push_back({Rational(lo), Rational(lo + pick(0, 8))});
        }
        m.boxes.push_back(std::move(box));
      }
      file.model = std::move(m);
      break;
    }
    case ModelKind::Graph: {
      std::vector<Edge> edges;
      for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
          if (pick(0, 99) < 30) edges.emplace_back(u, v);
        }
      }
      file.model = Graph(n, std::move(edges));
      break;
    }
    default:
      throw Error(Errc::BadParams, "unknown model kind");
  }
  for (int i = 0; i < n; ++i) file.weights.push_back(Rational(pick(1, 9)));
  return file;
}

}  // namespace isect
