#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "sl2green/borel.hpp"
#include "sl2green/correspondence.hpp"
#include "sl2green/gtree.hpp"
#include "sl2green/indres.hpp"
#include "sl2green/labels.hpp"
#include "sl2green/verify.hpp"

namespace sl2green::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr int kOracleLimit = 7;
constexpr int kMaxPrime = 46337;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string p;
  std::string format = "json";
  int jobs = 1;
  bool allow_large = false;
  std::string output;
};

// ---- labels -----------------------------------------------------------------

struct ParsedLabel {
  char kind = 'U';
  std::vector<long long> v;
};

ParsedLabel parse_label(const std::string& text) {
  static const std::regex re(R"(^([UMVP]):(-?\d+(?:,-?\d+)*)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw UsageError("cannot parse label '" + text + "'; expected U:a,b  M:i,l,s,eps  V:t  or  P:t");
  }
  ParsedLabel out;
  out.kind = m[1].str()[0];
  std::stringstream ss(m[2].str());
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.v.push_back(std::stoll(item));
    } catch (const std::out_of_range&) {
      throw UsageError("number '" + item + "' in label '" + text + "' is out of range");
    }
  }
  const std::size_t arity = out.kind == 'U' ? 2 : out.kind == 'M' ? 4 : 1;
  if (out.v.size() != arity) {
    throw UsageError("label '" + text + "' needs " + std::to_string(arity) + " parameters");
  }
  for (long long x : out.v) {
    if (x < -1000000000LL || x > 1000000000LL) throw UsageError("label parameter out of range in '" + text + "'");
  }
  return out;
}

int as_int(long long x) { return static_cast<int>(x); }

json label_json(const ULabel& u) { return {{"kind", "U"}, {"params", {{"a", u.a}, {"b", u.b}}}}; }

json label_json(const WalkLabel& w) {
  return {{"kind", "walk"},
          {"params", {{"i", w.block}, {"l", w.start}, {"s", w.length}, {"eps", w.sign}}}};
}

json simple_json(int t) { return {{"kind", "V"}, {"params", {{"t", t}}}}; }
json proj_json(int t) { return {{"kind", "projG"}, {"params", {{"t", t}}}}; }

// Simple walks are shown as the simple module they are.
json hook_json(const PrimeContext& ctx, const WalkLabel& w) {
  if (w.length == 1) return simple_json(edge_to_simple(ctx, w.block, w.start + 1).t);
  return label_json(w);
}

json decomposition_json(const BDecomposition& d) {
  json arr = json::array();
  for (const auto& [u, n] : d.mult) {
    json e = label_json(u);
    e["mult"] = n;
    arr.push_back(e);
  }
  return arr;
}

json decomposition_json(const GDecomposition& d) {
  json arr = json::array();
  for (const auto& [w, n] : d.walks) {
    json e = label_json(w);
    e["mult"] = n;
    arr.push_back(e);
  }
  for (const auto& [t, n] : d.proj) {
    json e = proj_json(t);
    e["mult"] = n;
    arr.push_back(e);
  }
  return arr;
}

json factors_json(const std::map<int, Multiplicity>& f) {
  json arr = json::array();
  for (const auto& [t, n] : f) {
    if (n != 0) arr.push_back({{"t", t}, {"mult", n}});
  }
  return arr;
}

std::string label_text(const json& j) {
  const std::string kind = j.at("kind");
  const auto& q = j.at("params");
  std::ostringstream os;
  if (kind == "U") {
    os << "U(" << q.at("a") << "," << q.at("b") << ")";
  } else if (kind == "walk") {
    os << "M(" << q.at("i") << "," << q.at("l") << "," << q.at("s") << "," << q.at("eps") << ")";
  } else if (kind == "V") {
    os << "V(" << q.at("t") << ")";
  } else {
    os << "P(" << q.at("t") << ")";
  }
  if (j.contains("mult") && j.at("mult") != 1) os << "^" << j.at("mult");
  return os.str();
}

// ---- prime handling ---------------------------------------------------------

int parse_prime(const std::string& s) {
  long long v = 0;
  try {
    std::size_t used = 0;
    v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw UsageError("--p expects an integer, got '" + s + "'");
  }
  if (v > kMaxPrime) throw UsageError("p = " + s + " exceeds the supported maximum " + std::to_string(kMaxPrime));
  PrimeContext check(static_cast<int>(v));
  return static_cast<int>(v);
}

std::vector<int> parse_prime_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_prime(item));
  if (out.empty()) throw UsageError("--p expects at least one prime");
  return out;
}

// ---- commands ---------------------------------------------------------------

WalkLabel walk_from(const PrimeContext& ctx, const ParsedLabel& l, json& result) {
  const WalkLabel raw{as_int(l.v[0]), as_int(l.v[1]), as_int(l.v[2]), as_int(l.v[3])};
  const WalkLabel w = canonicalize_walk(ctx, raw);
  if (w != raw) {
    result["notice"] = "walk " + to_string(raw) + " canonicalized to " + to_string(w);
  }
  return w;
}

json cmd_correspond(const PrimeContext& ctx, const ParsedLabel& l, std::ostream& err) {
  json r;
  if (l.kind == 'U') {
    const ULabel u = validate_ulabel(ctx, l.v[0], l.v[1]);
    if (u.is_projective(ctx)) throw DomainError("projective label has no Green correspondent");
    const WalkLabel w = green_of_u(ctx, u);
    const auto b = g_boundaries(ctx, w);
    r["input"] = label_json(u);
    r["correspondent"] = label_json(w);
    r["dim"] = walk_dim(ctx, w);
    r["block"] = w.block;
    r["boundaries"] = json::array({hook_json(ctx, b.left), hook_json(ctx, b.right)});
    r["factors"] = factors_json(walk_factors(ctx, w));
    r["summary"] = to_string(u) + " <-> " + to_string(w);
    return r;
  }
  WalkLabel w;
  if (l.kind == 'M') {
    w = walk_from(ctx, l, r);
    if (r.contains("notice")) err << "notice: " << r["notice"].get<std::string>() << "\n";
  } else if (l.kind == 'V') {
    const int t = as_int(l.v[0]);
    const auto [i, j] = simple_to_edge(ctx, t);
    w = WalkLabel{i, j - 1, 1, -1};
  } else {
    throw DomainError("projective label has no Green correspondent");
  }
  const ULabel u = green_of_walk(ctx, w);
  const auto bb = b_boundaries(ctx, u);
  r["input"] = label_json(w);
  r["correspondent"] = label_json(u);
  r["dim"] = u.b;
  r["block"] = u.block();
  r["boundaries"] = json::array({{{"label", label_json(bb.top_rim)}, {"distance", bb.top_distance}},
                                 {{"label", label_json(bb.simple_rim)}, {"distance", bb.simple_distance}}});
  std::map<int, Multiplicity> f;
  for (int c = 0; c <= ctx.p() - 2; ++c) f[c] = theta(ctx, u.a, u.b, c);
  json fa = json::array();
  for (const auto& [c, n] : f) {
    if (n != 0) fa.push_back({{"a", c}, {"mult", n}});
  }
  r["factors"] = fa;
  r["summary"] = to_string(w) + " <-> " + to_string(u);
  return r;
}

json cmd_ind(const PrimeContext& ctx, const ParsedLabel& l) {
  if (l.kind != 'U') throw UsageError("ind expects a B-module label U:a,b");
  const ULabel u = validate_ulabel(ctx, l.v[0], l.v[1]);
  const auto d = ind_u(ctx, u);
  const long long dim = g_dim(ctx, d);
  const long long expect = (ctx.p() + 1LL) * u.b;
  if (dim != expect) throw InternalError("ind: dimension " + std::to_string(dim) + " != " + std::to_string(expect));
  return {{"input", label_json(u)},
          {"decomposition", decomposition_json(d)},
          {"dim", dim},
          {"expected_dim", expect},
          {"dim_check", true},
          {"summary", to_string(d)}};
}

json cmd_res(const PrimeContext& ctx, const ParsedLabel& l, std::ostream& err) {
  json r;
  BDecomposition d;
  long long expect = 0;
  if (l.kind == 'M') {
    const WalkLabel w = walk_from(ctx, l, r);
    if (r.contains("notice")) err << "notice: " << r["notice"].get<std::string>() << "\n";
    d = res_walk(ctx, w);
    expect = walk_dim(ctx, w);
    r["input"] = label_json(w);
  } else if (l.kind == 'V') {
    const int t = as_int(l.v[0]);
    if (t < 1 || t > ctx.p()) throw DomainError("simple index t = " + std::to_string(t) + " outside [1, p]");
    d.add(res_simple_g(ctx, t));
    expect = t;
    r["input"] = simple_json(t);
  } else if (l.kind == 'P') {
    const int t = as_int(l.v[0]);
    d = res_projective_g(ctx, t);
    expect = projective_cover_dim(ctx, t);
    r["input"] = proj_json(t);
  } else {
    throw UsageError("res expects a G-module label M:i,l,s,eps  V:t  or  P:t");
  }
  if (d.dim() != expect) throw InternalError("res: dimension mismatch");
  r["decomposition"] = decomposition_json(d);
  r["dim"] = d.dim();
  r["expected_dim"] = expect;
  r["dim_check"] = true;
  r["summary"] = to_string(d);
  return r;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

json cmd_lift(const PrimeContext& ctx, const std::vector<std::string>& files) {
  FactorVectorG ell_vec;
  BDecomposition res;
  bool have_ell = false, have_res = false;
  try {
    for (const auto& f : files) {
      const json j = read_json_file(f);
      if (!j.is_object()) throw UsageError("lift input '" + f + "' must be a JSON object");
      if (j.contains("ell")) {
        have_ell = true;
        for (const auto& [k, v] : j.at("ell").items()) {
          std::size_t used = 0;
          const int t = std::stoi(k, &used);
          if (used != k.size()) throw UsageError("ell key '" + k + "' is not an integer");
          ell_vec[t] += v.get<Multiplicity>();
        }
      }
      if (j.contains("res")) {
        have_res = true;
        for (const auto& e : j.at("res")) {
          res.add(validate_ulabel(ctx, e.at("a").get<long long>(), e.at("b").get<long long>()),
                  e.at("mult").get<Multiplicity>());
        }
      }
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed lift input: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed lift input: non-numeric key");
  }
  if (!have_ell) throw UsageError("lift input needs an \"ell\" object");
  if (!have_res) res = BDecomposition{};
  const auto d = lift_decomposition(ctx, ell_vec, res);
  return {{"decomposition", decomposition_json(d)}, {"dim", g_dim(ctx, d)}, {"summary", to_string(d)}};
}

// ---- tables -----------------------------------------------------------------

struct Sheet {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string label_str(const ULabel& u) { return to_string(u); }

json cmd_tables(const PrimeContext& ctx, const std::string& which, std::vector<Sheet>& sheets) {
  const int p = ctx.p(), h = ctx.half();
  json r;
  r["table"] = which;
  if (which == "cartan-B") {
    json blocks = json::array();
    for (int i : {0, 1}) {
      const auto& c = b_cartan(ctx, i);
      json rows = json::array(), gamma = json::array(), delta = json::array();
      Sheet sg{"cartan-B block " + std::to_string(i) + " gamma", {"simple"}, {}};
      Sheet sd{"cartan-B block " + std::to_string(i) + " delta", {"simple"}, {}};
      for (int k = 0; k < h; ++k) {
        const std::string name = "S" + std::to_string(i + 2 * k);
        rows.push_back(name);
        sg.header.push_back(name);
        sd.header.push_back(name);
      }
      for (int rr = 0; rr < h; ++rr) {
        json gr = json::array(), dr = json::array();
        std::vector<std::string> gs{rows[rr].get<std::string>()}, ds{rows[rr].get<std::string>()};
        for (int cc = 0; cc < h; ++cc) {
          gr.push_back(c.gamma[rr][cc]);
          dr.push_back(to_string(c.delta[rr][cc]));
          gs.push_back(std::to_string(c.gamma[rr][cc]));
          ds.push_back(to_string(c.delta[rr][cc]));
        }
        gamma.push_back(gr);
        delta.push_back(dr);
        sg.rows.push_back(gs);
        sd.rows.push_back(ds);
      }
      blocks.push_back({{"block", i}, {"simples", rows}, {"gamma", gamma}, {"delta", delta}});
      sheets.push_back(sg);
      sheets.push_back(sd);
    }
    r["blocks"] = blocks;
  } else if (which == "cartan-G") {
    json blocks = json::array();
    for (int i : {0, 1}) {
      const auto& c = g_cartan(ctx, i);
      const auto tree = brauer_tree_g(ctx, i);
      json B = json::array(), G = json::array();
      Sheet sb{"cartan-G block " + std::to_string(i) + " B", {"simple"}, {}};
      Sheet sg{"cartan-G block " + std::to_string(i) + " Gamma", {"simple"}, {}};
      for (int t : tree.edges) {
        sb.header.push_back("V" + std::to_string(t));
        sg.header.push_back("V" + std::to_string(t));
      }
      for (int rr = 0; rr < h; ++rr) {
        json br = json::array(), gr = json::array();
        std::vector<std::string> bs{"V" + std::to_string(tree.edges[rr])}, gs = bs;
        for (int cc = 0; cc < h; ++cc) {
          br.push_back(c.B[rr][cc]);
          gr.push_back(to_string(c.Gamma[rr][cc]));
          bs.push_back(std::to_string(c.B[rr][cc]));
          gs.push_back(to_string(c.Gamma[rr][cc]));
        }
        B.push_back(br);
        G.push_back(gr);
        sb.rows.push_back(bs);
        sg.rows.push_back(gs);
      }
      blocks.push_back({{"block", i}, {"edges", tree.edges}, {"B", B}, {"Gamma", G}});
      sheets.push_back(sb);
      sheets.push_back(sg);
    }
    r["blocks"] = blocks;
  } else if (which == "quiver-B") {
    std::map<ULabel, std::vector<ULabel>> adj;
    for (const auto& u : nonprojective_ulabels(ctx)) adj[u];
    for (const auto& [from, to] : b_quiver_arrows(ctx)) adj[from].push_back(to);
    json adjacency = json::array();
    Sheet sa{"quiver-B adjacency", {"vertex", "targets"}, {}};
    for (const auto& [u, outs] : adj) {
      json o = json::array();
      std::string joined;
      for (const auto& v : outs) {
        o.push_back(label_json(v));
        joined += (joined.empty() ? "" : " ") + label_str(v);
      }
      adjacency.push_back({{"vertex", label_json(u)}, {"targets", o}});
      sa.rows.push_back({label_str(u), joined});
    }
    json orbits = json::array();
    Sheet so{"quiver-B omega2 orbits", {"orbit", "members"}, {}};
    int k = 0;
    for (const auto& orbit : omega2_orbits(ctx)) {
      json o = json::array();
      std::string joined;
      for (const auto& v : orbit) {
        o.push_back(label_json(v));
        joined += (joined.empty() ? "" : " ") + label_str(v);
      }
      orbits.push_back(o);
      so.rows.push_back({std::to_string(k++), joined});
    }
    r["adjacency"] = adjacency;
    r["omega2_orbits"] = orbits;
    sheets.push_back(sa);
    sheets.push_back(so);
  } else if (which == "hooks-G") {
    json blocks = json::array();
    for (int i : {0, 1}) {
      json hooks = json::array();
      Sheet s{"hooks-G block " + std::to_string(i), {"hook", "dim", "boundary", "distance"}, {}};
      for (const auto& hk : g_hooks(ctx, i)) {
        const json lj = hook_json(ctx, hk.walk);
        hooks.push_back({{"label", lj},
                         {"dim", walk_dim(ctx, hk.walk)},
                         {"boundary", hk.boundary},
                         {"distance", hk.distance}});
        s.rows.push_back({label_text(lj), std::to_string(walk_dim(ctx, hk.walk)),
                          "dim=" + std::to_string(hk.boundary) + " mod p", std::to_string(hk.distance)});
      }
      blocks.push_back({{"block", i}, {"hooks", hooks}});
      sheets.push_back(s);
    }
    r["blocks"] = blocks;
  } else if (which == "brauer-trees") {
    json gtrees = json::array(), btrees = json::array();
    Sheet sg{"brauer-trees G", {"block", "edge", "simple", "vertices"}, {}};
    Sheet sb{"brauer-trees B", {"block", "edge", "simple", "vertices"}, {}};
    for (int i : {0, 1}) {
      const auto tree = brauer_tree_g(ctx, i);
      json edges = json::array();
      for (int j = 1; j <= h; ++j) {
        edges.push_back({{"edge", j}, {"simple", tree.edges[j - 1]}, {"vertices", {j, j + 1}}});
        sg.rows.push_back({std::to_string(i), std::to_string(j), "V" + std::to_string(tree.edges[j - 1]),
                           std::to_string(j) + "-" + std::to_string(j + 1) +
                               (j + 1 == tree.exceptional ? "*" : "")});
      }
      gtrees.push_back({{"block", i},
                        {"shape", "line"},
                        {"edges", edges},
                        {"exceptional_vertex", tree.exceptional},
                        {"multiplicity", tree.multiplicity}});
      json bedges = json::array();
      for (int k = 0; k < h; ++k) {
        bedges.push_back({{"edge", k + 1}, {"simple", i + 2 * k}, {"vertices", {0, k + 1}}});
        sb.rows.push_back({std::to_string(i), std::to_string(k + 1), "S" + std::to_string(i + 2 * k),
                           "0*-" + std::to_string(k + 1)});
      }
      btrees.push_back({{"block", i},
                        {"shape", "star"},
                        {"edges", bedges},
                        {"exceptional_vertex", 0},
                        {"multiplicity", 2}});
    }
    r["G"] = gtrees;
    r["B"] = btrees;
    r["semisimple_block"] = {{"simple", p}};
    sheets.push_back(sg);
    sheets.push_back(sb);
  } else {
    throw UsageError("unknown table '" + which + "'; choose cartan-B, cartan-G, quiver-B, hooks-G or brauer-trees");
  }
  return r;
}

// ---- verify -----------------------------------------------------------------

json cmd_verify(const std::vector<int>& primes, bool oracle, int jobs, bool& all_pass) {
  VerifyOptions opts{primes, oracle, jobs};
  const auto results = run_verify(opts);
  json inv = json::array();
  int passed = 0, failed = 0;
  for (const auto& r : results) {
    inv.push_back({{"name", r.name},
                   {"p", r.p},
                   {"pass", r.pass},
                   {"cases", r.cases},
                   {"counterexamples", r.counterexamples}});
    (r.pass ? passed : failed)++;
  }
  all_pass = failed == 0;
  return {{"primes", primes}, {"oracle", oracle}, {"invariants", inv}, {"passed", passed}, {"failed", failed}};
}

// ---- rendering --------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_csv(const std::vector<Sheet>& sheets, std::ostream& os) {
  bool first = true;
  for (const auto& s : sheets) {
    if (!first) os << "\n";
    first = false;
    os << "# " << s.name << "\n";
    for (std::size_t k = 0; k < s.header.size(); ++k) os << (k ? "," : "") << csv_field(s.header[k]);
    os << "\n";
    for (const auto& row : s.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
      os << "\n";
    }
  }
}

void render_sheets_text(const std::vector<Sheet>& sheets, std::ostream& os) {
  bool first = true;
  for (const auto& s : sheets) {
    if (!first) os << "\n";
    first = false;
    os << s.name << "\n";
    std::vector<std::size_t> width(s.header.size(), 0);
    for (std::size_t k = 0; k < s.header.size(); ++k) width[k] = s.header[k].size();
    for (const auto& row : s.rows) {
      for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) {
        os << (k ? "  " : "  ") << std::left << std::setw(static_cast<int>(width[k])) << cells[k];
      }
      os << "\n";
    };
    line(s.header);
    for (const auto& row : s.rows) line(row);
  }
}

bool is_label(const json& j) { return j.is_object() && j.contains("kind") && j.contains("params"); }

void render_text(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [k, v] : j.items()) {
    os << pad << k << ":";
    if (is_label(v)) {
      os << " " << label_text(v) << "\n";
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_label)) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : " + ") + label_text(e);
      os << " " << joined << "\n";
    } else if (v.is_object()) {
      os << "\n";
      render_text(v, os, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "\n";
      for (const auto& e : v) {
        const bool flat = std::none_of(e.begin(), e.end(), [](const json& x) { return x.is_structured(); });
        if (!flat) {
          os << pad << "  -\n";
          render_text(e, os, indent + 4);
          continue;
        }
        os << pad << "  -";
        for (const auto& [ek, ev] : e.items()) os << " " << ek << "=" << (ev.is_string() ? ev.get<std::string>() : ev.dump());
        os << "\n";
      }
    } else if (v.is_string()) {
      os << " " << v.get<std::string>() << "\n";
    } else {
      os << " " << v.dump() << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Green correspondence between SL2(F_p) and its Borel subgroup"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--p", o.p, "odd prime (verify: comma-separated list)")->required();
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", o.jobs, "worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", o.allow_large, "allow oracle primes above 7");
  app.add_option("--output", o.output, "write output to FILE");
  app.footer(
      "Labels: U:a,b (F[B]-module U_{a,b}), M:i,l,s,eps (walk module), V:t (simple), P:t (projective cover).\n"
      "Walk labels are canonicalized; a notice is printed when the input was not canonical.\n"
      "Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 internal inconsistency,\n"
      "4 inconsistent module data.");

  std::string label, which;
  std::vector<std::string> files;
  bool oracle = false;
  auto* correspond = app.add_subcommand("correspond", "Green correspondent of a label");
  correspond->add_option("label", label, "U:a,b  M:i,l,s,eps  or  V:t")->required();
  auto* ind = app.add_subcommand("ind", "decomposition of Ind_B^G(U_{a,b})");
  ind->add_option("label", label, "U:a,b")->required();
  auto* res = app.add_subcommand("res", "decomposition of a restriction to B");
  res->add_option("label", label, "M:i,l,s,eps  V:t  or  P:t")->required();
  auto* lift = app.add_subcommand("lift", "G-module from composition factors and restriction data");
  lift->add_option("files", files, "JSON files with {\"ell\": {t: mult}} and {\"res\": [{a, b, mult}]}")
      ->required();
  auto* tables = app.add_subcommand("tables", "dump a table");
  tables->add_option("which", which, "cartan-B, cartan-G, quiver-B, hooks-G or brauer-trees")->required();
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_flag("--oracle", oracle, "include the matrix oracle");
  for (auto* sub : {correspond, ind, res, lift, tables, verify}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::vector<Sheet> sheets;
    json result;
    int code = kOk;
    int p_value = 0;
    std::string command;
    if (verify->parsed()) {
      command = "verify";
      const auto primes = parse_prime_list(o.p);
      for (int p : primes) {
        if (oracle && p > kOracleLimit && !o.allow_large) {
          throw UsageError("oracle runs are limited to p <= 7; pass --allow-large for p = " + std::to_string(p));
        }
      }
      if (o.format == "csv") throw UsageError("csv output is only available for tables");
      bool ok = true;
      result = cmd_verify(primes, oracle, o.jobs, ok);
      p_value = primes.front();
      code = ok ? kOk : kVerifyFailed;
    } else {
      p_value = parse_prime(o.p);
      const PrimeContext ctx(p_value);
      if (o.format == "csv" && !tables->parsed()) throw UsageError("csv output is only available for tables");
      if (correspond->parsed()) {
        command = "correspond";
        result = cmd_correspond(ctx, parse_label(label), err);
      } else if (ind->parsed()) {
        command = "ind";
        result = cmd_ind(ctx, parse_label(label));
      } else if (res->parsed()) {
        command = "res";
        result = cmd_res(ctx, parse_label(label), err);
      } else if (lift->parsed()) {
        command = "lift";
        result = cmd_lift(ctx, files);
      } else {
        command = "tables";
        result = cmd_tables(ctx, which, sheets);
      }
    }

    json env;
    env["schema_version"] = kSchemaVersion;
    env["p"] = p_value;
    env["command"] = command;
    env["result"] = result;

    std::ofstream file;
    if (!o.output.empty()) {
      file.open(o.output);
      if (!file) throw UsageError("cannot open output file '" + o.output + "'");
    }
    std::ostream& dst = o.output.empty() ? out : file;
    if (o.format == "json") {
      dst << env.dump(2) << "\n";
    } else if (o.format == "csv") {
      render_csv(sheets, dst);
    } else if (!sheets.empty()) {
      dst << "p = " << p_value << "\n";
      render_sheets_text(sheets, dst);
    } else if (command == "verify") {
      for (const auto& r : result["invariants"]) {
        dst << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>() << " p=" << r["p"]
            << " cases=" << r["cases"];
        for (const auto& c : r["counterexamples"]) dst << "\n    " << c.get<std::string>();
        dst << "\n";
      }
      dst << result["passed"] << " passed, " << result["failed"] << " failed\n";
    } else {
      dst << "command: " << command << "\np: " << p_value << "\n";
      render_text(result, dst, 0);
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistentData& e) {
    err << "error: inconsistent module data: " << e.what() << "\n";
    return kInconsistent;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace sl2green::cli
