#include "cli.hpp"

#include "svg.hpp"

#include <tricut/arrangement.hpp>
#include <tricut/cell_finder.hpp>
#include <tricut/errors.hpp>
#include <tricut/jordan.hpp>
#include <tricut/lattice.hpp>
#include <tricut/wedge.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <set>
#include <sstream>

namespace tricut::cli {

namespace {

constexpr std::size_t kWedgeOracleLimit = 24;
constexpr std::size_t kMaskLimit = 63;
constexpr std::size_t kLLineOracleLimit = 30;

template <class T>
const T& need(const Instance& inst, const std::string& solver, const char* what) {
  if (const T* p = std::get_if<T>(&inst)) return *p;
  throw PreconditionViolated("solver " + solver + " needs an instance with " + what);
}

int answer_int(const Json& answer, const char* key) {
  if (!answer.is_object() || !answer.contains(key) || !answer.at(key).is_number_integer())
    throw PreconditionViolated(std::string("answer lacks integer field \"") + key + "\"");
  return answer.at(key).get<int>();
}

const Json& answer_field(const Json& answer, const char* key) {
  if (!answer.is_object() || !answer.contains(key))
    throw PreconditionViolated(std::string("answer lacks field \"") + key + "\"");
  return answer.at(key);
}

ColorCounts complement_counts(const ColorCounts& inside, const ColorCounts& all) {
  ColorCounts out;
  for (Color c : kPrimaryColors) out[c] = all[c] - inside[c];
  return out;
}

template <class P>
ColorCounts tally(const std::vector<P>& pts) {
  ColorCounts c;
  for (const auto& p : pts)
    if (p.color != Color::Black) c[p.color] += 1;
  return c;
}

ColorCounts tally_lines(const std::vector<ColoredLine>& lines) {
  ColorCounts c;
  for (const auto& l : lines)
    if (l.color != Color::Black) c[l.color] += 1;
  return c;
}

int balance_of(const ColorCounts& c, int parts, const char* what) {
  if (!c.balanced(c.red()) || c.red() % parts != 0)
    throw PreconditionViolated(std::string(what) + " must hold a multiple of " + std::to_string(parts) +
                               " elements of each color");
  return c.red() / parts;
}

// Independent oracle for segments: a segment with endpoints in faces F, G
// crosses exactly the lines on which the sign vectors of F and G differ.
std::set<std::uint64_t> balanced_face_pairs(const std::vector<ColoredLine>& lines, int n) {
  if (lines.size() > kMaskLimit) return {};
  auto signs = enumerate_face_signs(lines);
  std::vector<std::uint64_t> masks;
  for (const auto& s : signs) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] > 0) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  std::set<std::uint64_t> out;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      std::uint64_t x = masks[i] ^ masks[j];
      ColorCounts c;
      for (std::size_t l = 0; l < lines.size(); ++l)
        if (x >> l & 1U) c[lines[l].color] += 1;
      if (c.balanced(n)) out.insert(x);
    }
  return out;
}

std::uint64_t separating_mask(const Segment& s, const std::vector<ColoredLine>& lines) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int a = lines[i].line.side(s.p), b = lines[i].line.side(s.q);
    if (a == 0 || b == 0) throw EndpointOnLine("segment endpoint lies on a line");
    if (a != b) m |= std::uint64_t{1} << i;
  }
  return m;
}

Json encode_polygon(const std::vector<Point>& poly) {
  Json a = Json::array();
  for (const auto& p : poly) a.push_back(encode(p));
  return a;
}

std::vector<Point> decode_polygon(const Json& j) {
  std::vector<Point> out;
  if (j.is_array())
    for (const auto& p : j) out.push_back(decode_point(p));
  return out;
}

Point pad_lo(const Point& lo, const Point& hi, const Rat& frac) {
  const Rat w = hi.x - lo.x, h = hi.y - lo.y;
  const Rat span = std::max(std::max(w, h), Rat(1));
  return {lo.x - frac * span, lo.y - frac * span};
}

Point pad_hi(const Point& lo, const Point& hi, const Rat& frac) {
  const Rat w = hi.x - lo.x, h = hi.y - lo.y;
  const Rat span = std::max(std::max(w, h), Rat(1));
  return {hi.x + frac * span, hi.y + frac * span};
}

std::pair<Point, Point> bounds(const std::vector<Point>& pts) {
  Point lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {lo, hi};
}

void draw_wedge(SvgCanvas& svg, const DoubleWedge& w) {
  LabelledPolygon frame{{svg.lo(), {svg.hi().x, svg.lo().y}, svg.hi(), {svg.lo().x, svg.hi().y}},
                        {kBoxEdge, kBoxEdge, kBoxEdge, kBoxEdge}};
  const bool pair1 = w.sector == DoubleWedge::Sector::Pair1;
  for (int s1 : {1, -1}) {
    int s2 = pair1 ? -s1 : s1;
    LabelledPolygon sector = clip(clip(frame, w.line1, s1, 0), w.line2, s2, 1);
    svg.polygon(sector.vertices, "#ff9f1c", 0.25);
  }
  svg.line(w.line1, "#555555", 1.5);
  svg.line(w.line2, "#555555", 1.5);
}

void draw_lline(SvgCanvas& svg, const LLine& l) {
  for (Ray r : l.rays) {
    Point end = l.corner;
    if (r == Ray::Up) end.y = svg.hi().y;
    if (r == Ray::Down) end.y = svg.lo().y;
    if (r == Ray::Left) end.x = svg.lo().x;
    if (r == Ray::Right) end.x = svg.hi().x;
    svg.segment(l.corner, end, "#ff9f1c", 3);
  }
}

std::string render_lines(const std::vector<ColoredLine>& lines, const std::string& solver, const Json& answer) {
  Arrangement arr = build_arrangement(lines);
  std::vector<Point> corners{arr.box_lo(), arr.box_hi()};
  auto [lo, hi] = bounds(corners);
  SvgCanvas svg(pad_lo(lo, hi, make_rat(1, 10)), pad_hi(lo, hi, make_rat(1, 10)));
  std::vector<Point> face;
  if (solver == "cell" && answer.is_object() && answer.contains("face"))
    face = decode_polygon(answer["face"]["polygon"]);
  else if (solver.empty()) {
    try {
      face = find_complete_face(lines).face().polygon;
    } catch (const PreconditionViolated&) {
      // Not a 3-colored arrangement; draw the lines only.
    }
  }
  svg.polygon(face, "#ffd166", 0.6);
  for (const auto& l : lines) svg.line(l.line, color_hex(l.color), 2);
  if (answer.is_object() && answer.contains("segment")) {
    Segment s = decode_segment(answer["segment"]);
    svg.segment(s.p, s.q, "#000000", 3);
  }
  return svg.str();
}

std::string render_points(const std::vector<ColoredPoint>& pts, const Json& answer) {
  auto [lo, hi] = bounds(positions(pts));
  SvgCanvas svg(pad_lo(lo, hi, make_rat(1, 5)), pad_hi(lo, hi, make_rat(1, 5)));
  if (answer.is_object() && answer.contains("wedge")) draw_wedge(svg, decode_wedge(answer["wedge"]));
  for (const auto& p : pts) svg.dot(p.at, color_hex(p.color), 5);
  return svg.str();
}

Point on_circle(double t) {
  const double a = 2 * std::numbers::pi * t;
  return {Rat(std::cos(a)), Rat(std::sin(a))};
}

std::string render_circle(const std::vector<CirclePoint>& pts, const Json& answer) {
  SvgCanvas svg({make_rat(-6, 5), make_rat(-6, 5)}, {make_rat(6, 5), make_rat(6, 5)});
  const std::string r = svg.fmt(svg.scale());
  auto arc_path = [&](double lo, double hi) {
    Point a = on_circle(lo), b = on_circle(hi);
    // Counterclockwise in the plane is clockwise on screen once y is flipped.
    return "M " + svg.x(a.x) + " " + svg.y(a.y) + " A " + r + " " + r + " 0 " + (hi - lo > 0.5 ? "1" : "0") +
           " 0 " + svg.x(b.x) + " " + svg.y(b.y);
  };
  svg.path(arc_path(0, 0.5) + " " + arc_path(0.5, 1), "#bbbbbb", 1.5);
  if (answer.is_object() && answer.contains("arcs")) {
    ArcSet a = decode_arcset(answer["arcs"]);
    for (const auto& arc : a.arcs()) {
      double lo = to_double(arc.lo), hi = to_double(arc.hi);
      if (hi - lo >= 1) {
        svg.path(arc_path(0, 0.5) + " " + arc_path(0.5, 1), "#ff9f1c", 6);
        continue;
      }
      svg.path(arc_path(lo, hi), "#ff9f1c", 6);
    }
  }
  for (const auto& p : pts) svg.dot(on_circle(to_double(p.t)), color_hex(p.color), 6);
  return svg.str();
}

std::string render_lattice(const std::vector<LatticeColoredPoint>& pts, const Json& answer) {
  std::vector<Point> at;
  for (const auto& p : pts) at.push_back({Rat(static_cast<long>(p.x)), Rat(static_cast<long>(p.y))});
  auto [lo, hi] = bounds(at);
  SvgCanvas svg({lo.x - 2, lo.y - 2}, {hi.x + 2, hi.y + 2});
  for (Rat x = lo.x - 2; x <= hi.x + 2; x += 1) svg.segment({x, lo.y - 2}, {x, hi.y + 2}, "#eeeeee", 1);
  for (Rat y = lo.y - 2; y <= hi.y + 2; y += 1) svg.segment({lo.x - 2, y}, {hi.x + 2, y}, "#eeeeee", 1);
  if (answer.is_object() && answer.contains("lline")) draw_lline(svg, decode_lline(answer["lline"]));
  for (std::size_t i = 0; i < pts.size(); ++i) svg.dot(at[i], color_hex(pts[i].color), 6);
  return svg.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path);
  if (!f) throw PreconditionViolated("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw PreconditionViolated("cannot write " + path);
  f << text;
}

GenKind default_kind(const std::string& solver) {
  if (solver == "cell" || solver == "segment") return GenKind::SimpleLines3C;
  if (solver == "arcs") return GenKind::CirclePoints3C;
  if (solver == "lline") return GenKind::LatticeRedHull;
  return GenKind::Points3C;
}

}  // namespace

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names{"cell", "wedge111", "wedge", "segment", "arcs", "lline"};
  return names;
}

Json solve(const std::string& solver, const Instance& inst, int k) {
  if (solver == "cell") {
    const auto& lines = need<std::vector<ColoredLine>>(inst, solver, "lines");
    CompleteFaceResult r = find_complete_face(lines);
    const Face& f = r.face();
    return Json{{"face", {{"interior", encode(f.interior_point())}, {"boundary", f.boundary()},
                          {"polygon", encode_polygon(f.polygon)}}},
                {"segment", encode(extract_111_segment(r.arrangement, f))}};
  }
  if (solver == "wedge111" || solver == "wedge") {
    const auto& pts = need<std::vector<ColoredPoint>>(inst, solver, "points");
    DoubleWedge w = solver == "wedge" ? sweep_balanced_wedge(pts).wedge : find_111_wedge(pts).wedge;
    Json out{{"wedge", encode(w)}};
    out["dual_segment"] = w.line1.vertical() || w.line2.vertical() ? Json() : encode(dual_segment_of(w));
    return out;
  }
  if (solver == "segment") {
    const auto& lines = need<std::vector<ColoredLine>>(inst, solver, "lines");
    HalvingSegment h = halving_segment(lines);
    return Json{{"segment", encode(h.segment)}};
  }
  if (solver == "arcs") {
    const auto& pts = need<std::vector<CirclePoint>>(inst, solver, "circle_points");
    return Json{{"k", k}, {"arcs", encode(find_k_arcset(pts, k))}};
  }
  if (solver == "lline") {
    const auto& pts = need<std::vector<LatticeColoredPoint>>(inst, solver, "lattice_points");
    BalancedLLine b = find_balanced_lline(pts);
    return Json{{"k", b.k}, {"lline", encode(b.line)}};
  }
  throw PreconditionViolated("unknown solver " + solver);
}

VerificationReport verify(const std::string& solver, const Instance& inst, const Json& answer,
                          const std::string& instance_id) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.instance_id = instance_id;
  r.solver = solver;
  r.answer = answer.dump();

  if (solver == "cell") {
    const auto& lines = need<std::vector<ColoredLine>>(inst, solver, "lines");
    Arrangement arr = build_arrangement(lines);
    const Face& f = arr.face(arr.locate(decode_point(answer_field(answer_field(answer, "face"), "interior"))));
    // Counts here are the three edge-type parities (rg, rb, gb).
    ColorCounts parity;
    if (f.bounded) {
      auto p = cycle_parity(arr.dual_cycle(f));
      parity = ColorCounts{{p[0], p[1], p[2]}};
    }
    r.target = ColorCounts{{1, 1, 1}};
    r.counts = {parity, count_segment_crossings(decode_segment(answer_field(answer, "segment")), lines).colors};
    auto all = scan_all_complete_faces(arr);
    r.oracle_checked = true;
    r.oracle_answers = all.size();
    r.member = std::find(all.begin(), all.end(), f.id) != all.end() && r.counts[1] == r.target;
  } else if (solver == "wedge111" || solver == "wedge") {
    const auto& pts = need<std::vector<ColoredPoint>>(inst, solver, "points");
    const int n = solver == "wedge" ? balance_of(tally(pts), 2, "points") : 1;
    DoubleWedge w = decode_wedge(answer_field(answer, "wedge"));
    ColorCounts inside = wedge_counts(w, pts);
    r.target = ColorCounts{{n, n, n}};
    r.counts = {inside, complement_counts(inside, tally(pts))};
    if (pts.size() <= kWedgeOracleLimit) {
      auto oracle = brute_oracle_wedges(pts, n);
      r.oracle_checked = true;
      r.oracle_answers = oracle.size();
      r.member = std::binary_search(oracle.begin(), oracle.end(), wedge_mask(w, pts));
    }
  } else if (solver == "segment") {
    const auto& lines = need<std::vector<ColoredLine>>(inst, solver, "lines");
    const int n = balance_of(tally_lines(lines), 2, "lines");
    Segment s = decode_segment(answer_field(answer, "segment"));
    CrossingCounts c = count_segment_crossings(s, lines);
    r.target = ColorCounts{{n, n, n}};
    r.counts = {c.colors};
    if (lines.size() <= kMaskLimit) {
      auto pairs = balanced_face_pairs(lines, n);
      r.oracle_checked = true;
      r.oracle_answers = pairs.size();
      r.member = pairs.count(separating_mask(s, lines)) > 0;
    }
  } else if (solver == "arcs") {
    const auto& pts = need<std::vector<CirclePoint>>(inst, solver, "circle_points");
    validate_circle_points(pts);
    const int k = answer_int(answer, "k");
    ArcSet a = decode_arcset(answer_field(answer, "arcs"));
    ColorCounts inside = arcset_color_counts(a, pts);
    r.target = ColorCounts{{k, k, k}};
    r.counts = {inside, complement_counts(inside, tally(pts))};
    if (pts.size() <= kMaskLimit) {
      auto oracle = enumerate_2arc_sets(pts, k);
      r.oracle_checked = true;
      r.oracle_answers = oracle.size();
      r.member = a.component_count() <= 2 && std::binary_search(oracle.begin(), oracle.end(), arcset_mask(a, pts));
    }
  } else if (solver == "lline") {
    const auto& pts = need<std::vector<LatticeColoredPoint>>(inst, solver, "lattice_points");
    const int n = validate_lattice_points(pts);
    const int k = answer_int(answer, "k");
    LLine l = decode_lline(answer_field(answer, "lline"));
    auto [one, two] = lline_counts(l, pts);
    r.target = ColorCounts{{k, k, k}};
    r.counts = {one, two};
    if (pts.size() <= kLLineOracleLimit) {
      auto oracle = brute_oracle_llines(pts);
      const auto key = partition_key(lline_mask(l, pts), pts.size());
      r.oracle_checked = true;
      r.oracle_answers = oracle.size();
      r.member = k >= 1 && k <= n - 1 && std::any_of(oracle.begin(), oracle.end(), [&](const OracleLLine& o) {
                   return partition_key(o.mask, pts.size()) == key;
                 });
    }
  } else {
    throw PreconditionViolated("unknown solver " + solver);
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string render(const Instance& inst, const std::string& solver, const Json& answer) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if (v.empty()) throw PreconditionViolated("nothing to render");
        if constexpr (std::is_same_v<T, std::vector<ColoredLine>>) return render_lines(v, solver, answer);
        else if constexpr (std::is_same_v<T, std::vector<ColoredPoint>>) return render_points(v, answer);
        else if constexpr (std::is_same_v<T, std::vector<CirclePoint>>) return render_circle(v, answer);
        else return render_lattice(v, answer);
      },
      inst);
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced partitions of 3-colored geometric sets, with exact arithmetic."};
  app.name(argv.empty() ? "tricut" : argv.front());
  app.require_subcommand(1, 1);

  std::string kind_text, in_path, out_path, solver, format = "json";
  int n = 3, k = -1;
  std::uint64_t seed = 0;
  bool with_report = false;
  const std::vector<std::string> formats{"json", "svg"};

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--kind", kind_text, "Instance kind")->required();
  gen->add_option("--n", n, "Points or lines per color");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--format", format)->check(CLI::IsMember(formats));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* sol = app.add_subcommand("solve", "Run a solver on an instance");
  sol->add_option("solver", solver, "cell | wedge111 | wedge | segment | arcs | lline")
      ->required()
      ->check(CLI::IsMember(solver_names()));
  sol->add_option("--in", in_path, "Instance JSON (default: generate one)");
  sol->add_option("--kind", kind_text, "Kind to generate when --in is absent");
  sol->add_option("--n", n, "Balance target; wedge and segment generate 2n per color");
  sol->add_option("--seed", seed, "Seed for generation");
  sol->add_option("--k", k, "Target count per color (arcs)");
  sol->add_flag("--verify", with_report, "Embed an oracle verification report");
  sol->add_option("--format", format)->check(CLI::IsMember(formats));
  sol->add_option("--out", out_path, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Re-check a solver output against the oracles");
  ver->add_option("--in", in_path, "Solver output JSON")->required();
  ver->add_option("--out", out_path, "Output file (default stdout)");

  auto* ren = app.add_subcommand("render", "Draw an instance or solver output as SVG");
  ren->add_option("--in", in_path, "Instance or solver output JSON")->required();
  ren->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (gen->parsed()) {
      auto kind = parse_kind(kind_text);
      if (!kind) throw PreconditionViolated("unknown kind " + kind_text);
      GenSpec spec{*kind, n, seed};
      Instance inst = generate(spec);
      write_output(out_path, format == "svg" ? render(inst, "", Json()) : encode_instance(inst, spec).dump(2) + "\n",
                   out);
      return kExitOk;
    }
    if (sol->parsed()) {
      Json instance_json;
      std::string instance_id;
      if (!in_path.empty()) {
        instance_json = parse_json(read_input(in_path));
        instance_id = in_path;
      } else {
        GenKind kind = default_kind(solver);
        if (!kind_text.empty()) {
          auto parsed = parse_kind(kind_text);
          if (!parsed) throw PreconditionViolated("unknown kind " + kind_text);
          kind = *parsed;
        }
        const bool doubled = (solver == "wedge" || solver == "segment") && kind_text.empty();
        GenSpec spec{kind, doubled ? 2 * n : n, seed};
        instance_json = encode_instance(generate(spec), spec);
        instance_id = std::string(kind_name(kind)) + ":n=" + std::to_string(spec.n) + ":seed=" + std::to_string(seed);
      }
      Instance inst = decode_instance(instance_json);
      if (solver == "arcs" && k < 0) throw PreconditionViolated("solve arcs needs --k");
      Json answer = solve(solver, inst, k);
      if (format == "svg") {
        write_output(out_path, render(inst, solver, answer), out);
        return kExitOk;
      }
      Json result{{"solver", solver}, {"instance_id", instance_id}, {"instance", instance_json}, {"answer", answer}};
      if (with_report) result["verification"] = encode(verify(solver, inst, answer, instance_id));
      write_output(out_path, result.dump(2) + "\n", out);
      return kExitOk;
    }
    if (ver->parsed()) {
      Json j = parse_json(read_input(in_path));
      if (!j.is_object() || !j.contains("solver") || !j.contains("instance") || !j.contains("answer"))
        throw PreconditionViolated("expected a solver output with solver, instance and answer");
      std::string id = j.contains("instance_id") ? j["instance_id"].get<std::string>() : in_path;
      VerificationReport r =
          verify(j["solver"].get<std::string>(), decode_instance(j["instance"]), j["answer"], id);
      write_output(out_path, encode(r).dump(2) + "\n", out);
      if (!r.consistent()) {
        err << "certificate rejected\n";
        return kExitPrecondition;
      }
      return kExitOk;
    }
    if (ren->parsed()) {
      Json j = parse_json(read_input(in_path));
      const bool is_solution = j.is_object() && j.contains("solver") && j.contains("instance");
      Instance inst = decode_instance(is_solution ? j["instance"] : j);
      std::string svg = is_solution ? render(inst, j["solver"].get<std::string>(), j.value("answer", Json()))
                                    : render(inst, "", Json());
      write_output(out_path, svg, out);
      return kExitOk;
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    if (!e.trace().empty()) err << "trace: " << e.trace() << "\n";
    return kExitInternal;
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitPrecondition;
}

}  // namespace tricut::cli
