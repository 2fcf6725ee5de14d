#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosetgrowth/cosetgrowth.hpp"

namespace cosetgrowth::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  std::int64_t budget_ms = 0;
  std::string json_path;
  std::string csv_path;
};

// A finished command: the JSON report, an optional CSV table, pass/fail.
struct Outcome {
  bool pass = true;
  Json report;
  std::optional<std::string> csv;
  bool csv_primary = false;     // print the CSV, not the JSON, when no file is named
  std::string report_path;  // command-specific copy of the JSON report
};

// ---- files ----

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::io_error, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::io_error, "cannot move " + tmp.string() + " to " + path + ": " + ec.message());
}

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

std::vector<Word> load_subgroup(const std::string& path, const Presentation& p) {
  return parse_subgroup(read_file(path), p);
}

// ---- formatting ----

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += csv_field(cells[i]);
    }
    return s + "\r\n";
  };
  std::string out = line(header);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::string series_csv(const GrowthSeries& s) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < s.counts.size(); ++r) {
    rows.push_back({std::to_string(r), std::to_string(s.counts[r]), s.exact[r] ? "true" : "false"});
  }
  return csv_table({"r", "count", "exact"}, rows);
}

Json series_json(const GrowthSeries& s) {
  Json j;
  j["radius"] = s.radius();
  j["counts"] = s.counts;
  Json exact = Json::array();
  for (bool e : s.exact) exact.push_back(e);
  j["exact"] = exact;
  j["meta"] = s.meta;
  return j;
}

Json words_json(const Presentation& p, const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(p.format(w));
  return out;
}

Json piece_json(const Presentation& p, const PieceReport& r) {
  Json j;
  j["max_piece"] = r.max_piece_length;
  j["per_relator"] = r.per_relator;
  if (r.witness) {
    j["witness"] = Json::array({p.format(r.witness->first), p.format(r.witness->second)});
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json graph_json(const CoreGraph& g, const Presentation& p) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["basis"] = words_json(p, g.basis());
  j["finite_index"] = is_finite_index(g);
  j["trivial"] = is_trivial_subgroup(g);
  return j;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw Error(ErrorCode::invalid_argument, "not a non-negative integer: " + item);
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

WordProblemOracle make_oracle(const Presentation& p, const std::string& method, std::size_t bfs_radius,
                              std::optional<std::size_t> margin) {
  if (method == "free") return WordProblemOracle::free(p);
  if (method == "dehn") return WordProblemOracle::dehn(p);
  if (method == "bfs") return WordProblemOracle::bfs_ball(p, bfs_radius, margin);
  return p.relators().empty() ? WordProblemOracle::free(p)
                              : WordProblemOracle::automatic(p, bfs_radius);
}

// ---- subcommands ----

struct ScCheckArgs {
  std::string presentation;
  std::string lambda = "1/6";
};

Outcome sc_check(const ScCheckArgs& a) {
  const Presentation p = load_presentation(a.presentation);
  const Rational lambda = parse_rational(a.lambda);
  const SymmetrizedSet set(p);
  Outcome o;
  o.report["config"] = {{"presentation", a.presentation}, {"lambda", to_string(lambda)}};
  o.report["presentation"] = serialize(p);
  const bool ok = check_metric_condition(set, lambda);
  Json pieces = piece_json(p, max_piece(set));
  for (auto& [k, v] : pieces.items()) o.report[k] = v;
  std::vector<std::size_t> lengths;
  for (const Word& r : p.relators()) lengths.push_back(r.size());
  o.report["relator_lengths"] = lengths;
  o.report["symmetrized_size"] = set.size();
  o.report["lambda"] = to_string(lambda);
  o.report["satisfies"] = ok;
  o.pass = ok;
  return o;
}

struct RipsArgs {
  std::string in;
  std::string lambda = "1/6";
  std::size_t initial_run = 4;
  std::size_t max_run = 1024;
  std::string out;
  std::string report;
};

std::string family_name(RipsFamily f) {
  switch (f) {
    case RipsFamily::relator: return "relator";
    case RipsFamily::conjugate_left: return "conjugate_left";
    case RipsFamily::conjugate_right: return "conjugate_right";
  }
  return "?";
}

Outcome rips_build(const RipsArgs& a) {
  const Presentation g = load_presentation(a.in);
  RipsOptions opts;
  opts.lambda = parse_rational(a.lambda);
  opts.initial_run_length = a.initial_run;
  opts.max_run_length = a.max_run;
  const RipsData data = build_rips(g, opts);
  const Presentation& h = data.result;

  Outcome o;
  o.report["config"] = {{"in", a.in},
                        {"lambda", to_string(opts.lambda)},
                        {"initial_run", a.initial_run},
                        {"max_run", a.max_run}};
  o.report["source"] = serialize(g);
  o.report["run_length"] = data.run_length;
  o.report["lambda"] = to_string(data.lambda);
  Json gmap;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    gmap[h.generator_names()[i]] = i < g.rank() ? g.generator_names()[i] : "1";
  }
  o.report["generator_map"] = gmap;
  o.report["kernel_generators"] = Json::array({h.generator_names()[data.t1()], h.generator_names()[data.t2()]});
  Json rels = Json::array();
  for (std::size_t i = 0; i < data.relators.size(); ++i) {
    const RipsRelator& r = data.relators[i];
    Json e;
    e["family"] = family_name(r.family);
    e["source_index"] = r.source_index;
    if (r.family != RipsFamily::relator) e["t_index"] = r.t_index + 1;
    e["run"] = Json::array({r.run.first, r.run.last});
    e["length"] = h.relators()[i].size();
    rels.push_back(e);
  }
  o.report["relators"] = rels;
  o.report["certificate"] = piece_json(h, data.certificate);
  o.report["certified"] = true;
  o.report["presentation"] = serialize(h);
  if (!a.out.empty()) write_atomic(a.out, serialize(h) + "\n");
  o.report_path = a.report;
  return o;
}

struct StallingsArgs {
  std::size_t rank = 0;
  std::string presentation;
  std::string subgroup;
  std::vector<std::string> members;
  std::string intersect;
};

Outcome stallings(const StallingsArgs& a) {
  Presentation p;
  if (!a.presentation.empty()) {
    p = load_presentation(a.presentation);
    if (!p.relators().empty()) throw Error(ErrorCode::invalid_argument, "stallings needs a free presentation");
  } else if (a.rank > 0) {
    p = Presentation::free_group(a.rank);
  } else {
    throw Error(ErrorCode::invalid_argument, "give --rank or --presentation");
  }
  const CoreGraph g = fold_core(load_subgroup(a.subgroup, p), p.rank());
  Outcome o;
  o.report["config"] = {{"rank", p.rank()},
                        {"subgroup", a.subgroup},
                        {"members", a.members},
                        {"intersect", a.intersect}};
  o.report["subgroup"] = graph_json(g, p);
  Json members = Json::array();
  for (const std::string& text : a.members) {
    const Word w = p.parse_word(text);
    const bool in = membership(g, w);
    members.push_back({{"word", p.format(w)}, {"member", in}});
    o.pass = o.pass && in;
  }
  o.report["members"] = members;
  if (!a.intersect.empty()) {
    const CoreGraph other = fold_core(load_subgroup(a.intersect, p), p.rank());
    o.report["other"] = graph_json(other, p);
    o.report["intersection"] = graph_json(intersection_pullback(g, other), p);
  }
  return o;
}

struct GrowthArgs {
  std::string presentation;
  std::size_t radius = 0;
  std::string oracle = "auto";
  std::optional<std::size_t> bfs_radius;
  std::optional<std::size_t> margin;
};

Outcome growth(const GrowthArgs& a) {
  const Presentation p = load_presentation(a.presentation);
  const auto oracle = make_oracle(p, a.oracle, a.bfs_radius.value_or(a.radius), a.margin);
  const GrowthSeries s = growth_function(p, oracle, a.radius);
  Outcome o;
  o.report["config"] = {{"presentation", a.presentation},
                        {"radius", a.radius},
                        {"oracle", a.oracle},
                        {"bfs_radius", a.bfs_radius.value_or(a.radius)}};
  o.report["oracle"] = std::string(to_string(oracle.method()));
  o.report["series"] = series_json(s);
  o.csv = series_csv(s);
  o.csv_primary = true;
  return o;
}

struct DcosetArgs {
  std::string presentation;
  std::string a_path;
  std::string b_path;
  std::size_t radius = 0;
  std::string buffers = "0,1,2,3";
  std::string backend = "buffered";
  std::string oracle = "auto";
  std::optional<std::size_t> bfs_radius;
};

Outcome dcoset_growth(const DcosetArgs& a) {
  const Presentation p = load_presentation(a.presentation);
  const std::vector<Word> ga = load_subgroup(a.a_path, p), gb = load_subgroup(a.b_path, p);
  Outcome o;
  o.report["config"] = {{"presentation", a.presentation}, {"A", a.a_path}, {"B", a.b_path},
                        {"radius", a.radius},             {"backend", a.backend}, {"buffers", a.buffers},
                        {"oracle", a.oracle}};
  GrowthSeries s;
  if (a.backend == "free") {
    if (!p.relators().empty()) throw Error(ErrorCode::invalid_argument, "free backend needs a free presentation");
    s = double_coset_growth_free(p.rank(), fold_core(ga, p.rank()), fold_core(gb, p.rank()), a.radius);
    s.meta = serialize(p);
  } else {
    const std::vector<std::size_t> buffers = parse_size_list(a.buffers);
    const std::size_t reach = a.radius + (buffers.empty() ? 0 : *std::max_element(buffers.begin(), buffers.end()));
    const auto oracle = make_oracle(p, a.oracle, a.bfs_radius.value_or(reach), std::nullopt);
    const BufferedGrowth b = double_coset_growth_buffered(p, oracle, ga, gb, a.radius, buffers);
    s = b.series;
    o.report["oracle"] = std::string(to_string(oracle.method()));
    Json per = Json::array();
    for (std::size_t i = 0; i < b.buffers.size(); ++i) {
      per.push_back({{"buffer", b.buffers[i]}, {"counts", b.per_buffer[i]}});
    }
    o.report["per_buffer"] = per;
  }
  s.meta += " A=" + a.a_path + " B=" + a.b_path;
  o.report["series"] = series_json(s);
  o.csv = series_csv(s);
  o.csv_primary = true;
  return o;
}

struct Thm1Args {
  std::string g;
  std::size_t radius = 4;
  std::string lambda = "1/6";
  std::size_t initial_run = 4;
  std::size_t max_run = 1024;
  std::string buffers = "0,1,2,3";
  bool no_buffered = false;
  std::string oracle = "auto";
};

Outcome thm1(const Thm1Args& a) {
  const Presentation g = load_presentation(a.g);
  Theorem1Options opts;
  opts.rips.lambda = parse_rational(a.lambda);
  opts.rips.initial_run_length = a.initial_run;
  opts.rips.max_run_length = a.max_run;
  opts.buffers = parse_size_list(a.buffers);
  opts.run_buffered = !a.no_buffered;
  // Balls of G up to the radius are all that is ever asked of the oracle.
  const auto oracle = make_oracle(g, a.oracle, a.radius, std::nullopt);
  const Theorem1Report r = theorem1_check(g, oracle, a.radius, opts);

  Outcome o;
  o.report["config"] = {{"G", a.g},
                        {"radius", a.radius},
                        {"lambda", to_string(opts.rips.lambda)},
                        {"initial_run", a.initial_run},
                        {"max_run", a.max_run},
                        {"buffers", opts.run_buffered ? Json(opts.buffers) : Json(nullptr)},
                        {"oracle", a.oracle}};
  o.report["G"] = serialize(g);
  o.report["oracle_G"] = std::string(to_string(r.oracle_g));
  o.report["oracle_H"] = std::string(to_string(r.oracle_h));
  o.report["rips"] = {{"run_length", r.rips.run_length},
                      {"lambda", to_string(r.rips.lambda)},
                      {"relators", r.rips.result.relators().size()},
                      {"max_relator_length", r.rips.result.max_relator_length()},
                      {"max_piece", r.rips.certificate.max_piece_length}};
  Json rows = Json::array();
  std::vector<std::vector<std::string>> csv_rows;
  for (const Theorem1Row& row : r.rows) {
    Json j{{"r", row.r}, {"gr_exact", row.gr_exact}, {"f_G", row.f_g}};
    if (opts.run_buffered) {
      j["buffered"] = row.buffered;
      j["buffered_stable"] = row.buffered_stable;
    }
    rows.push_back(j);
    csv_rows.push_back({std::to_string(row.r), std::to_string(row.gr_exact), std::to_string(row.f_g),
                        opts.run_buffered ? std::to_string(row.buffered) : "",
                        opts.run_buffered ? (row.buffered_stable ? "true" : "false") : ""});
  }
  o.report["rows"] = rows;
  o.report["h_ball_size"] = r.h_ball_size;
  o.report["beta_checked"] = r.beta_checked;
  o.report["beta_violations"] = r.beta_violations;
  o.report["equality_holds"] = r.equality_holds;
  o.report["chain_holds"] = r.chain_holds;
  o.report["pass"] = r.pass();
  o.csv = csv_table({"r", "gr_exact", "f_G", "buffered", "buffered_stable"}, csv_rows);
  o.pass = r.pass();
  return o;
}

// ---- thm2 config ----

Theorem2Config parse_thm2_config(const Json& j, Json& resolved) {
  static const std::vector<std::string> known = {"rank", "A", "B", "c", "d", "N_exp", "x", "y",
                                                 "c0", "beta", "t_band", "radius", "q"};
  if (!j.is_object()) throw Error(ErrorCode::config_invalid, "config must be a JSON object");
  for (auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw Error(ErrorCode::config_invalid, "unknown config key: " + k);
    }
  }
  Theorem2Config cfg;
  try {
    cfg.rank = j.value("rank", std::size_t{2});
    const Presentation f = Presentation::free_group(cfg.rank);
    auto word = [&](const char* key) { return f.parse_word(j.at(key).get<std::string>()); };
    auto words = [&](const char* key) {
      std::vector<Word> out;
      for (const auto& s : j.at(key)) out.push_back(f.parse_word(s.get<std::string>()));
      return out;
    };
    cfg.a_generators = words("A");
    cfg.b_generators = words("B");
    cfg.c = word("c");
    cfg.d = word("d");
    cfg.n_exp = j.value("N_exp", std::size_t{2});
    if (j.contains("x")) cfg.x = word("x");
    if (j.contains("y")) cfg.y = word("y");
    cfg.c0 = j.value("c0", std::size_t{3});
    if (j.contains("beta")) {
      const Json& b = j.at("beta");
      cfg.beta_bound = parse_rational(b.is_string() ? b.get<std::string>() : b.dump());
    }
    if (j.contains("t_band")) {
      const auto band = j.at("t_band").get<std::vector<std::size_t>>();
      if (band.size() != 2) throw Error(ErrorCode::config_invalid, "t_band must be [min, max]");
      cfg.t_min = band[0];
      cfg.t_max = band[1];
    }
    cfg.radius = j.value("radius", std::size_t{8});
    if (j.contains("q")) {
      const Json& q = j.at("q");
      cfg.q = QuasiParams(parse_rational(q.at("epsilon").get<std::string>()),
                          parse_rational(q.at("eta").get<std::string>()));
    }
    resolved = {{"rank", cfg.rank},
                {"A", words_json(f, cfg.a_generators)},
                {"B", words_json(f, cfg.b_generators)},
                {"c", f.format(cfg.c)},
                {"d", f.format(cfg.d)},
                {"N_exp", cfg.n_exp},
                {"x", cfg.x ? Json(f.format(*cfg.x)) : Json(nullptr)},
                {"y", cfg.y ? Json(f.format(*cfg.y)) : Json(nullptr)},
                {"c0", cfg.c0},
                {"beta", to_string(cfg.beta_bound)},
                {"t_band", {cfg.t_min, cfg.t_max}},
                {"radius", cfg.radius},
                {"q", cfg.q ? Json{{"epsilon", to_string(cfg.q->epsilon)}, {"eta", to_string(cfg.q->eta)}}
                            : Json(nullptr)}};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::config_invalid, e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::config_invalid, e.what());
  }
  return cfg;
}

struct Thm2Args {
  std::string config;
};

Outcome thm2(const Thm2Args& a) {
  Json raw;
  try {
    raw = Json::parse(read_file(a.config));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::config_invalid, e.what());
  }
  Json resolved;
  const Theorem2Config cfg = parse_thm2_config(raw, resolved);
  const Theorem2Report r = theorem2_experiment(cfg);
  const Presentation f = Presentation::free_group(cfg.rank);

  Outcome o;
  o.report["config"] = resolved;
  o.report["config"]["path"] = a.config;
  o.report["series"] = series_json(r.series);
  o.report["free_counts"] = r.free_counts;
  Json ratios = Json::array();
  for (std::size_t k = 0; k < r.series.counts.size(); ++k) {
    ratios.push_back(to_decimal(static_cast<double>(r.series.counts[k]) / static_cast<double>(r.free_counts[k])));
  }
  o.report["ratios"] = ratios;
  Json steps = Json::array();
  for (std::size_t k = 0; k + 1 < r.series.counts.size(); ++k) {
    steps.push_back(to_decimal(static_cast<double>(r.series.counts[k + 1]) / static_cast<double>(r.series.counts[k])));
  }
  o.report["step_ratios"] = steps;
  o.report["window"] = {r.window_begin, cfg.radius};
  o.report["lambda_hat"] = to_decimal(r.lambda_hat);
  o.report["lambda_hat_exact"] = to_string(r.lambda_hat);
  Json table = Json::array();
  static constexpr const char* kSlots[] = {"x", "x^-1", "y", "y^-1"};
  for (const ProductEntry& e : r.separators.product_table) {
    table.push_back({{"pair", {kSlots[e.first], kSlots[e.second]}}, {"value", to_string(e.value)}});
  }
  o.report["separators"] = {{"x", f.format(r.separators.x)},
                            {"y", f.format(r.separators.y)},
                            {"c0", r.separators.c0},
                            {"beta", to_string(r.separators.beta_bound)},
                            {"product_table", table}};
  o.report["q"] = {{"epsilon", to_string(r.q.epsilon)}, {"eta", to_string(r.q.eta)}};
  o.report["m"] = r.m;
  o.report["distinct_words"] = r.distinct_words;
  o.report["distinct_double_cosets"] = r.distinct_cosets;
  o.report["collision_factor"] = to_decimal(r.collision_factor());
  o.report["quasigeodesic_words"] = r.quasigeodesic_words;
  o.report["lambda_positive"] = r.lambda_positive();
  o.report["collisions_bounded"] = r.collisions_bounded();
  Json samples = Json::array();
  for (const Theorem2Sample& s : r.samples) {
    samples.push_back({{"t", f.format(s.t)},
                       {"z", f.format(s.z)},
                       {"w", f.format(s.w)},
                       {"s", f.format(s.s)},
                       {"canonical", f.format(s.canonical)}});
  }
  o.report["samples"] = samples;
  o.report["pass"] = r.pass();
  o.csv = series_csv(r.series);
  o.pass = r.pass();
  return o;
}

struct Claim3Args {
  std::string presentation;
  std::size_t c0 = 3;
  std::string beta = "0";
  std::size_t trials = 100;
  std::size_t max_length = 12;
  std::size_t exclusivity = 1000;
  std::size_t slack = 2;
  std::size_t distance_radius = 16;
};

Word random_reduced(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  Letters w;
  while (w.size() < len) {
    const Letter l = Letter::from_code(
        static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, 2 * rank - 1)(rng)));
    if (!w.empty() && w.back().cancels(l)) continue;
    w.push_back(l);
  }
  return Word(w);
}

Outcome claim3(const Claim3Args& a, std::uint64_t seed) {
  const Presentation p = load_presentation(a.presentation);
  if (p.rank() == 0) throw Error(ErrorCode::invalid_argument, "claim3 needs at least one generator");
  const Rational beta = parse_rational(a.beta);
  const DistanceOracle dist =
      p.relators().empty() ? free_distance()
                           : oracle_distance(WordProblemOracle::automatic(p, a.distance_radius), a.distance_radius);
  SeparatorSearch search;
  search.slack = a.slack;
  const SeparatorPair sep = find_separators(p, dist, a.c0, beta, search);
  const QuasiParams q = calibrated_params(sep);

  Outcome o;
  o.report["config"] = {{"presentation", a.presentation}, {"c0", a.c0},
                        {"beta", to_string(beta)},       {"trials", a.trials},
                        {"max_length", a.max_length},     {"exclusivity_trials", a.exclusivity},
                        {"slack", a.slack},               {"seed", seed}};
  Json table = Json::array();
  static constexpr const char* kSlots[] = {"x", "x^-1", "y", "y^-1"};
  for (const ProductEntry& e : sep.product_table) {
    table.push_back({{"pair", {kSlots[e.first], kSlots[e.second]}}, {"value", to_string(e.value)}});
  }
  o.report["separators"] = {{"x", p.format(sep.x)}, {"y", p.format(sep.y)}, {"product_table", table}};
  o.report["q"] = {{"epsilon", to_string(q.epsilon)}, {"eta", to_string(q.eta)}};

  std::mt19937_64 rng(seed);
  Json trials = Json::array();
  std::size_t successes = 0;
  for (std::size_t i = 0; i < a.trials; ++i) {
    const Word u = random_reduced(rng, p.rank(), a.max_length);
    const Word v = random_reduced(rng, p.rank(), a.max_length);
    Json t{{"u", p.format(u)}, {"v", p.format(v)}};
    try {
      const Word z = select_connector(u.letters(), v.letters(), sep, q, dist);
      t["connector"] = p.format(z);
      t["ok"] = true;
      ++successes;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::none_qualify) throw;
      t["connector"] = nullptr;
      t["ok"] = false;
      t["certificates"] = e.what();
    }
    trials.push_back(t);
  }
  std::size_t violations = 0, worst = 0;
  for (std::size_t i = 0; i < a.exclusivity; ++i) {
    const Word u = random_reduced(rng, p.rank(), a.max_length);
    const std::size_t large = count_large_products(u, sep, beta, dist);
    worst = std::max(worst, large);
    if (large > 1) ++violations;
  }
  o.report["trials"] = trials;
  o.report["successes"] = successes;
  o.report["exclusivity"] = {{"trials", a.exclusivity}, {"violations", violations}, {"max_large_products", worst}};
  o.pass = successes == a.trials && violations == 0;
  o.report["pass"] = o.pass;
  return o;
}

struct FitArgs {
  std::string series;
  std::string counts;
  std::size_t window = 3;
};

Outcome fit(const FitArgs& a) {
  GrowthSeries s;
  if (!a.series.empty()) {
    std::stringstream in(read_file(a.series));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (header) {
        header = false;
        continue;
      }
      std::stringstream cells(line);
      std::string r, count;
      std::getline(cells, r, ',');
      std::getline(cells, count, ',');
      const auto parsed = parse_size_list(count);
      if (parsed.size() != 1) throw Error(ErrorCode::invalid_argument, "bad CSV row: " + line);
      s.counts.push_back(parsed[0]);
      s.exact.push_back(true);
    }
  } else if (!a.counts.empty()) {
    for (std::size_t c : parse_size_list(a.counts)) {
      s.counts.push_back(c);
      s.exact.push_back(true);
    }
  } else {
    throw Error(ErrorCode::invalid_argument, "give --series or --counts");
  }
  const double rate = fit_rate(s, a.window);
  Outcome o;
  o.report["config"] = {{"series", a.series}, {"counts", a.counts}, {"window", a.window}};
  o.report["counts"] = s.counts;
  o.report["rate"] = to_decimal(rate);
  return o;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::syntax_error:
    case ErrorCode::unknown_generator:
    case ErrorCode::empty_relator:
    case ErrorCode::invalid_argument:
    case ErrorCode::config_invalid:
    case ErrorCode::io_error:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth of groups and double cosets from finite presentations", "cosetgrowth"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized trials")->capture_default_str();
  app.add_option("--budget-ms", g.budget_ms, "wall-clock budget in milliseconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--json", g.json_path, "write the JSON report here");
  app.add_option("--csv", g.csv_path, "write the CSV table here");

  ScCheckArgs sc;
  auto* c_sc = app.add_subcommand("sc-check", "piece lengths and the C'(lambda) condition");
  c_sc->add_option("--presentation", sc.presentation)->required()->check(CLI::ExistingFile);
  c_sc->add_option("--lambda", sc.lambda)->capture_default_str();

  RipsArgs rp;
  auto* c_rips = app.add_subcommand("rips-build", "certified Rips construction over G");
  c_rips->add_option("--in", rp.in)->required()->check(CLI::ExistingFile);
  c_rips->add_option("--lambda", rp.lambda)->capture_default_str();
  c_rips->add_option("--initial-run", rp.initial_run)->capture_default_str()->check(CLI::PositiveNumber);
  c_rips->add_option("--max-run", rp.max_run)->capture_default_str();
  c_rips->add_option("--out", rp.out, "write H here");
  c_rips->add_option("--report", rp.report, "write the JSON report here");

  StallingsArgs st;
  auto* c_st = app.add_subcommand("stallings", "core graph, membership, intersection");
  auto* st_rank = c_st->add_option("--rank", st.rank);
  auto* st_pres = c_st->add_option("--presentation", st.presentation)->check(CLI::ExistingFile);
  st_rank->excludes(st_pres);
  c_st->add_option("--subgroup", st.subgroup)->required()->check(CLI::ExistingFile);
  c_st->add_option("--member", st.members, "word to test; repeatable");
  c_st->add_option("--intersect", st.intersect)->check(CLI::ExistingFile);

  GrowthArgs gr;
  auto* c_gr = app.add_subcommand("growth", "growth function f(r)");
  c_gr->add_option("--presentation", gr.presentation)->required()->check(CLI::ExistingFile);
  c_gr->add_option("--radius", gr.radius)->required();
  c_gr->add_option("--oracle", gr.oracle)->capture_default_str()->check(
      CLI::IsMember({"auto", "free", "dehn", "bfs"}));
  c_gr->add_option("--bfs-radius", gr.bfs_radius);
  c_gr->add_option("--margin", gr.margin);

  DcosetArgs dc;
  auto* c_dc = app.add_subcommand("dcoset-growth", "double coset growth gr(H, A, B)(r)");
  c_dc->add_option("--presentation", dc.presentation)->required()->check(CLI::ExistingFile);
  c_dc->add_option("--A", dc.a_path)->required()->check(CLI::ExistingFile);
  c_dc->add_option("--B", dc.b_path)->required()->check(CLI::ExistingFile);
  c_dc->add_option("--radius", dc.radius)->required();
  c_dc->add_option("--buffers", dc.buffers)->capture_default_str();
  c_dc->add_option("--backend", dc.backend)->capture_default_str()->check(CLI::IsMember({"buffered", "free"}));
  c_dc->add_option("--oracle", dc.oracle)->capture_default_str()->check(
      CLI::IsMember({"auto", "free", "dehn", "bfs"}));
  c_dc->add_option("--bfs-radius", dc.bfs_radius);

  Thm1Args t1;
  auto* c_t1 = app.add_subcommand("thm1", "gr(H, N, N) against f_G for the Rips group H");
  c_t1->add_option("--G", t1.g)->required()->check(CLI::ExistingFile);
  c_t1->add_option("--radius", t1.radius)->capture_default_str();
  c_t1->add_option("--lambda", t1.lambda)->capture_default_str();
  c_t1->add_option("--initial-run", t1.initial_run)->capture_default_str()->check(CLI::PositiveNumber);
  c_t1->add_option("--max-run", t1.max_run)->capture_default_str();
  c_t1->add_option("--buffers", t1.buffers)->capture_default_str();
  c_t1->add_flag("--no-buffered", t1.no_buffered, "skip the buffered cross-check");
  c_t1->add_option("--oracle", t1.oracle, "oracle for G")->capture_default_str()->check(
      CLI::IsMember({"auto", "free", "dehn", "bfs"}));

  Thm2Args t2;
  auto* c_t2 = app.add_subcommand("thm2", "free-group lower-bound experiment");
  c_t2->add_option("--config", t2.config)->required()->check(CLI::ExistingFile);

  Claim3Args c3;
  auto* c_c3 = app.add_subcommand("claim3", "separators and connector selection trials");
  c_c3->add_option("--presentation", c3.presentation)->required()->check(CLI::ExistingFile);
  c_c3->add_option("--c0", c3.c0)->capture_default_str();
  c_c3->add_option("--beta", c3.beta)->capture_default_str();
  c_c3->add_option("--trials", c3.trials)->capture_default_str();
  c_c3->add_option("--max-length", c3.max_length)->capture_default_str();
  c_c3->add_option("--exclusivity-trials", c3.exclusivity)->capture_default_str();
  c_c3->add_option("--slack", c3.slack)->capture_default_str();
  c_c3->add_option("--distance-radius", c3.distance_radius)->capture_default_str();

  FitArgs ft;
  auto* c_fit = app.add_subcommand("fit-rate", "geometric-mean growth rate of a series");
  auto* fit_series = c_fit->add_option("--series", ft.series, "CSV with columns r,count,exact")
                         ->check(CLI::ExistingFile);
  auto* fit_counts = c_fit->add_option("--counts", ft.counts, "comma-separated counts");
  fit_series->excludes(fit_counts);
  c_fit->add_option("--window", ft.window)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit_error = [&](const std::string& code, const std::string& detail) {
    const Json j{{"error", code}, {"detail", detail}};
    err << j.dump() << "\n";
    if (!g.json_path.empty()) {
      try {
        write_atomic(g.json_path, j.dump(2) + "\n");
      } catch (const Error&) {
      }
    }
  };

  try {
    std::optional<ScopedDeadline> deadline;
    if (g.budget_ms > 0) deadline.emplace(std::chrono::milliseconds(g.budget_ms));

    Outcome o;
    std::string command;
    if (c_sc->parsed()) {
      command = "sc-check", o = sc_check(sc);
    } else if (c_rips->parsed()) {
      command = "rips-build", o = rips_build(rp);
    } else if (c_st->parsed()) {
      command = "stallings", o = stallings(st);
    } else if (c_gr->parsed()) {
      command = "growth", o = growth(gr);
    } else if (c_dc->parsed()) {
      command = "dcoset-growth", o = dcoset_growth(dc);
    } else if (c_t1->parsed()) {
      command = "thm1", o = thm1(t1);
    } else if (c_t2->parsed()) {
      command = "thm2", o = thm2(t2);
    } else if (c_c3->parsed()) {
      command = "claim3", o = claim3(c3, g.seed);
    } else {
      command = "fit-rate", o = fit(ft);
    }
    if (!g.csv_path.empty() && !o.csv) {
      err << command << ": no CSV output for this command\n";
      return 2;
    }

    Json report;
    report["command"] = command;
    report["version"] = std::string(version());
    report["seed"] = g.seed;
    report["budget_ms"] = g.budget_ms;
    for (auto& [k, v] : o.report.items()) report[k] = v;
    report["status"] = o.pass ? "pass" : "fail";

    if (!g.json_path.empty()) write_atomic(g.json_path, report.dump(2) + "\n");
    if (!o.report_path.empty()) write_atomic(o.report_path, report.dump(2) + "\n");
    if (!g.csv_path.empty()) write_atomic(g.csv_path, *o.csv);
    if (o.csv_primary && g.csv_path.empty()) {
      out << *o.csv;
    } else if (g.json_path.empty() && o.report_path.empty()) {
      out << report.dump(2) << "\n";
    } else {
      out << command << ": " << (o.pass ? "pass" : "fail") << "\n";
    }
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    emit_error(std::string(to_string(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cosetgrowth::cli
