#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pseudoknot/bracket.hpp"
#include "pseudoknot/error.hpp"
#include "pseudoknot/flype.hpp"
#include "pseudoknot/gauss.hpp"
#include "pseudoknot/invariant.hpp"
#include "pseudoknot/json_io.hpp"
#include "pseudoknot/knot_table.hpp"
#include "pseudoknot/moves.hpp"
#include "pseudoknot/render.hpp"
#include "pseudoknot/wereset.hpp"

namespace fs = std::filesystem;
using namespace pk;

namespace {

// Input/output failures that are the caller's fault; exit code 2.
struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";        // json | text | paper
  std::string input_format = "auto";  // auto | pd | gauss
  std::string table;
  unsigned workers = 1;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UserError("cannot read " + path);
    ss << in.rdbuf();
  }
  // drop comment lines
  std::string out, line;
  while (std::getline(ss, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw UserError("cannot write " + path.string());
}

bool looks_like_gauss(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return false;
  const char c = text[first];
  if (c == 'O' || c == 'U') return true;
  return c == 'P' && first + 1 < text.size() && (text[first + 1] == 'h' || text[first + 1] == 't');
}

// A diagram read from a file, remembering how it was written.
struct Input {
  bool gauss = false;
  PseudoGaussDiagram g;
  std::optional<PseudoPD> pd;  // only for PD input
};

Input load(const std::string& path, const Config& cfg) {
  const std::string text = read_input(path);
  Input in;
  in.gauss = cfg.input_format == "gauss" || (cfg.input_format == "auto" && looks_like_gauss(text));
  if (in.gauss) {
    std::string code;
    for (char c : text) {
      if (c != '\n' && c != '\r' && c != ' ' && c != '\t') code += c;
    }
    in.g = parse_gauss(code);
  } else {
    in.pd = parse_pd(text);
    in.g = pd_to_gauss(*in.pd);
  }
  return in;
}

const PseudoPD& need_pd(const Input& in, const char* command) {
  if (!in.pd) throw UserError(std::string(command) + " needs PD input");
  return *in.pd;
}

PseudoPD as_pd(const Input& in) { return in.pd ? *in.pd : gauss_to_pd(in.g); }

KnotTable load_table(const Config& cfg) {
  std::string path = cfg.table;
  if (path.empty()) {
    const char* env = std::getenv(kTableEnvironmentVariable);
    path = env && *env ? env : PK_DEFAULT_TABLE;
  }
  if (!fs::exists(path)) throw UserError("knot table not found: " + path);
  return load_table_file(path);
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string chords_text(const DecoratedChordDiagram& c) {
  if (c.empty()) return "empty\n";
  std::ostringstream out;
  out << "canonical " << to_hex(canonical_form(c)) << '\n';
  for (const auto& ch : c.chords()) out << "chord " << ch.a << ' ' << ch.b << ' ' << ch.decoration << '\n';
  return out.str();
}

std::vector<int> parse_choices(const std::string& s) {
  std::vector<int> out;
  for (char c : s) {
    if (c == '+') {
      out.push_back(1);
    } else if (c == '-') {
      out.push_back(-1);
    } else if (c != ',' && c != ' ') {
      throw UserError(std::string("bad choice character '") + c + "'");
    }
  }
  return out;
}

FlypeSite read_site(const PseudoPD& d, const std::string& path) {
  const Json j = parse_json(read_input(path));
  // Crossing and tangle are enough; a full site is checked against them.
  const auto tangle = j.value("tangle", std::vector<int>{});
  FlypeSite site = make_flype_site(d, j.value("crossing", 0), tangle);
  if (j.contains("boundary")) {
    const FlypeSite given = flype_site_from_json(j);
    if (given != site) throw ValidationError("flype site does not match the diagram");
  }
  return site;
}

int run(int argc, char** argv) {
  CLI::App app{"Invariants and moves for knot pseudodiagrams"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "paper"}))
      ->capture_default_str();
  app.add_option("--input-format", cfg.input_format, "Input format; auto looks at the first token")
      ->check(CLI::IsMember({"auto", "pd", "gauss"}))
      ->capture_default_str();
  app.add_option("--table", cfg.table, "Knot table file (default: $PSEUDOKNOT_TABLE, then the bundled table)");
  app.add_option("--workers", cfg.workers, "Threads for were-set enumeration")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::string input;
  const auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Diagram file, - for stdin")->required(); };

  auto* i_cmd = app.add_subcommand("i", "Decorated chord diagram invariant");
  add_input(i_cmd);
  bool single_pass = false;
  i_cmd->add_flag("--single-pass", single_pass, "Delete adjacent prechords only once");

  auto* were_cmd = app.add_subcommand("wereset", "Distribution of knot types over all resolutions");
  add_input(were_cmd);

  auto* resolve_cmd = app.add_subcommand("resolve", "Resolve every precrossing");
  add_input(resolve_cmd);
  std::string choices;
  resolve_cmd->add_option("--choices", choices, "One + or - per precrossing, ascending id")->required();

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a classical diagram");
  add_input(jones_cmd);

  auto* flype_cmd = app.add_subcommand("flype", "Shadow flype");
  add_input(flype_cmd);
  std::string site_path;
  bool list_sites = false;
  flype_cmd->add_option("--site", site_path, "JSON file with crossing and tangle");
  flype_cmd->add_flag("--list", list_sites, "List the flype sites instead");

  auto* family_cmd = app.add_subcommand("family", "Write a flype-related pair of shadows");
  int fam_m = 2, fam_n = 2;
  std::string out_dir;
  family_cmd->add_option("--m", fam_m, "Length of the flyped twist")->capture_default_str();
  family_cmd->add_option("--n", fam_n, "Length of the other twist")->capture_default_str();
  family_cmd->add_option("--out", out_dir, "Output directory")->required();

  auto* scramble_cmd = app.add_subcommand("scramble", "Apply random moves");
  add_input(scramble_cmd);
  std::uint64_t seed = 0;
  std::size_t steps = 30;
  unsigned insert_percent = 70;
  bool classical_only = false;
  scramble_cmd->add_option("--seed", seed)->capture_default_str();
  scramble_cmd->add_option("--steps", steps)->capture_default_str();
  scramble_cmd->add_option("--insert-percent", insert_percent)->check(CLI::Range(0u, 100u))->capture_default_str();
  scramble_cmd->add_flag("--classical-only", classical_only, "Use only R1, R2 and R3");

  auto* render_cmd = app.add_subcommand("render", "SVG drawing of the Gauss diagram");
  add_input(render_cmd);
  std::string out_path;
  bool render_i = false;
  render_cmd->add_option("--out", out_path, "SVG file")->required();
  render_cmd->add_flag("--invariant", render_i, "Draw the decorated chord diagram instead");

  auto* check_cmd = app.add_subcommand("check", "Validate a diagram and summarize it");
  add_input(check_cmd);

  auto* table_cmd = app.add_subcommand("table", "Build a knot table from PD sources");
  std::string sources_path, table_out;
  table_cmd->add_option("--sources", sources_path, "Source file of named PD codes")->required();
  table_cmd->add_option("--out", table_out, "Table file to write (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const bool json = cfg.format == "json";

  if (i_cmd->parsed()) {
    const Input in = load(input, cfg);
    const auto c = compute_i(in.g, single_pass ? KinkDeletion::single_pass : KinkDeletion::fixpoint);
    if (json) {
      print_json(to_json(c));
    } else {
      std::cout << chords_text(c);
    }
  } else if (were_cmd->parsed()) {
    const PseudoPD d = as_pd(load(input, cfg));
    if (d.precrossing_count() >= 32) throw UserError("too many precrossings to enumerate");
    const WereSet w = wereset(d, load_table(cfg), cfg.workers);
    if (json) {
      print_json(to_json(w));
    } else if (cfg.format == "paper") {
      std::cout << render_paper_style(w) << '\n';
    } else {
      std::cout << render_text(w);
    }
  } else if (resolve_cmd->parsed()) {
    const Input in = load(input, cfg);
    const std::vector<int> c = parse_choices(choices);
    if (in.gauss) {
      const PseudoGaussDiagram r = resolve_gauss(in.g, c);
      json ? print_json(to_json(r)) : void(std::cout << r.to_string() << '\n');
    } else {
      const ResolvedPD r = resolve(*in.pd, c);
      json ? print_json(to_json(r.pd())) : void(std::cout << r.pd().to_string() << '\n');
    }
  } else if (jones_cmd->parsed()) {
    const PseudoPD d = as_pd(load(input, cfg));
    if (!d.is_resolved()) throw UserError("jones needs a diagram without precrossings; use resolve first");
    const Classification c = classify(ResolvedPD(d), load_table(cfg));
    const std::string name = c.name ? c.name->to_string() : "";
    if (json) {
      Json j = {{"jones", to_json(c.jones)}, {"knot", nullptr}};
      if (c.name) j["knot"] = name;
      print_json(j);
    } else {
      std::cout << c.jones.to_string("t") << '\n' << (c.name ? name : "unknown") << '\n';
    }
  } else if (flype_cmd->parsed()) {
    const PseudoPD d = need_pd(load(input, cfg), "flype");
    if (list_sites) {
      Json arr = Json::array();
      for (const FlypeSite& s : enumerate_flype_sites(d)) arr.push_back(to_json(s));
      if (json) {
        print_json(arr);
      } else {
        for (const Json& s : arr) std::cout << s.dump() << '\n';
      }
    } else {
      if (site_path.empty()) throw UserError("flype needs --site or --list");
      const PseudoPD q = shadow_flype_pd(d, read_site(d, site_path));
      json ? print_json(to_json(q)) : void(std::cout << q.to_string() << '\n');
    }
  } else if (family_cmd->parsed()) {
    const FamilyPair f = family(fam_m, fam_n);
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UserError("cannot create " + dir.string());
    const std::string stem = "family_" + std::to_string(fam_m) + "_" + std::to_string(fam_n);
    const fs::path first = dir / (stem + "_first.pd"), second = dir / (stem + "_second.pd");
    write_file(first, f.first.to_string() + '\n');
    write_file(second, f.second.to_string() + '\n');
    const auto i1 = compute_i(pd_to_gauss(f.first));
    const auto i2 = compute_i(pd_to_gauss(f.second));
    const Json manifest = {{"m", fam_m},
                           {"n", fam_n},
                           {"first", first.filename().string()},
                           {"second", second.filename().string()},
                           {"site", to_json(f.site)},
                           {"i_first", to_hex(canonical_form(i1))},
                           {"i_second", to_hex(canonical_form(i2))},
                           {"i_equal", i_equal(i1, i2)}};
    write_file(dir / (stem + ".json"), manifest.dump(2) + '\n');
    if (json) {
      print_json(manifest);
    } else {
      std::cout << first.string() << '\n' << second.string() << '\n' << (dir / (stem + ".json")).string() << '\n';
    }
  } else if (scramble_cmd->parsed()) {
    const Input in = load(input, cfg);
    std::vector<MoveSite> log;
    const PseudoGaussDiagram g = scramble(in.g, seed, steps, {insert_percent, !classical_only}, &log);
    if (json) {
      Json moves = Json::array();
      for (const MoveSite& s : log) moves.push_back(to_json(s));
      print_json({{"seed", seed}, {"steps", steps}, {"result", to_json(g)}, {"moves", moves}});
    } else {
      std::cout << g.to_string() << '\n';
    }
  } else if (render_cmd->parsed()) {
    const Input in = load(input, cfg);
    write_file(out_path, render_i ? render_svg(compute_i(in.g)) : render_svg(in.g));
  } else if (check_cmd->parsed()) {
    const Input in = load(input, cfg);
    const auto chords = underlying_chord_diagram(in.g);
    Json j = {{"format", in.gauss ? "gauss" : "pd"},
              {"crossings", in.g.crossing_count()},
              {"precrossings", in.g.precrossing_ids().size()},
              {"evenness", evenness_check(chords)}};
    if (in.pd) j["planar"] = is_planar(*in.pd);
    if (json) {
      print_json(j);
    } else {
      for (const auto& [k, v] : j.items()) std::cout << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  } else if (table_cmd->parsed()) {
    std::ifstream src(sources_path);
    if (!src) throw UserError("cannot read " + sources_path);
    const KnotTable t = build_table(read_sources(src));
    std::ostringstream out;
    if (json) {
      out << to_json(t).dump(2) << '\n';
    } else {
      write_table(out, t);
    }
    if (table_out.empty()) {
      std::cout << out.str();
    } else {
      write_file(table_out, out.str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
