// icosian: build, verify and export the icosian polytopes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "icosian/errors.hpp"
#include "icosian/parallel.hpp"
#include "icosian/serialize.hpp"
#include "icosian/verify.hpp"

using namespace icosian;

namespace {

constexpr int kUsage = 2;

const std::vector<std::string> kObjects = {"e8",     "600cell", "24cell",
                                           "120cell", "snub24", "dual-snub24"};

void write_text(const std::string &path, const std::string &body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out)
    throw std::runtime_error("write to " + path + " failed");
}

Json with_object(const std::string &name, Json body) {
  Json out = {{"object", name}};
  out.update(body);
  return out;
}

Json build_object(const std::string &name) {
  if (name == "e8") {
    const VertexSet roots = e8_roots().roots;
    return {{"object", name},
            {"counts", {{"vertices", roots.size()}}},
            {"vertices", to_json(roots)}};
  }
  if (name == "600cell")
    return with_object(name,
                       to_json(cell_census(binary_icosahedral().elements)));
  if (name == "24cell")
    return with_object(name,
                       to_json(cell_census(binary_tetrahedral().elements)));
  if (name == "120cell") {
    const Cell120 &j = build_120cell();
    auto indices = [&](const VertexSet &part) {
      std::vector<std::size_t> out;
      for (const auto &q : part)
        out.push_back(*index_of(j.vertices, q));
      return out;
    };
    return {{"object", name},
            {"counts", {{"vertices", j.vertices.size()}}},
            {"vertices", to_json(j.vertices)},
            {"parts",
             {{"T'", indices(j.t_prime)},
              {"S'", indices(j.s_prime)},
              {"M", indices(j.m)},
              {"N", indices(j.n)}}}};
  }
  if (name == "snub24")
    return with_object(name, to_json(snub24_complex()));
  if (name == "dual-snub24")
    return with_object(name, to_json(dual_complex()));
  throw InvalidSelector("unknown object " + name);
}

struct ExportOptions {
  std::string object;
  std::string format = "off";
  std::optional<std::size_t> cell;
  bool vertex_figure = false;
  bool dual_cell = false;
  int precision = 17;
  std::string out;
};

Mesh select_mesh(const ExportOptions &o) {
  if (o.vertex_figure) {
    if (o.object != "snub24")
      throw InvalidSelector("--vertex-figure applies to snub24 only");
    return vertex_figure_mesh(canonical_p());
  }
  if (o.dual_cell) {
    if (o.object != "dual-snub24")
      throw InvalidSelector("--dual-cell applies to dual-snub24 only");
    return dual_cell_mesh(canonical_p());
  }
  const std::size_t k = *o.cell;
  if (o.object == "snub24")
    return cell_mesh(snub24_complex(), k);
  if (o.object == "600cell")
    return cell_mesh(cell_census(binary_icosahedral().elements), k);
  if (o.object == "24cell")
    return cell_mesh(cell_census(binary_tetrahedral().elements), k);
  if (o.object == "dual-snub24") {
    const DualComplex &d = dual_complex();
    if (k >= d.cells.size())
      throw InvalidSelector("cell index out of range");
    return dual_cell_mesh(d.cells[k].base_vertex);
  }
  throw InvalidSelector("--cell does not apply to " + o.object);
}

int run_export(const ExportOptions &o) {
  const int selectors = o.cell.has_value() + o.vertex_figure + o.dual_cell;
  if (selectors > 1)
    throw InvalidSelector("choose one of --cell, --vertex-figure, --dual-cell");
  if (selectors == 0) {
    if (o.format == "off")
      throw InvalidSelector("OFF export needs --cell, --vertex-figure or "
                            "--dual-cell");
    write_text(o.out, build_object(o.object).dump(1) + "\n");
    return 0;
  }
  const Mesh mesh = select_mesh(o);
  if (o.format == "json") {
    write_text(o.out, with_object(o.object, to_json(mesh)).dump(1) + "\n");
  } else {
    std::ostringstream s;
    write_off(s, mesh, o.precision);
    write_text(o.out, s.str());
  }
  return 0;
}

int run_verify(const std::string &suite, const std::string &out) {
  const auto certs = run_suite(suite);
  bool ok = true;
  Json all = Json::array();
  for (const auto &c : certs) {
    for (const auto &k : c.checks) {
      const bool flagged = k.note.starts_with("reference-flag:");
      std::cout << (k.pass ? (flagged ? "FLAG" : "PASS") : "FAIL") << "  "
                << c.suite << ": " << k.name;
      if (!k.pass)
        std::cout << " (expected " << k.expected << ", computed "
                  << k.computed << ")";
      if (flagged)
        std::cout << " -- " << k.note;
      std::cout << '\n';
    }
    std::cout << c.suite << ": " << (c.overall() ? "PASS" : "FAIL") << " ("
              << c.checks.size() << " checks, " << c.flags() << " flagged)\n";
    ok = ok && c.overall();
    all.push_back(to_json(c));
  }
  if (!out.empty()) {
    Json doc = certs.size() == 1 ? all[0] : Json{{"suite", suite},
                                                 {"overall", ok},
                                                 {"certificates", all}};
    write_text(out, doc.dump(2) + "\n");
  }
  std::cout << "overall: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : 1;
}

unsigned parse_weights(const std::vector<int> &w) {
  if (w.size() != 4)
    throw BadParameter("--weights needs four entries a,b,c,d");
  unsigned mask = 0;
  for (int x : w) {
    if (x != 0 && x != 1)
      throw BadParameter("weights are 0 or 1");
    mask = (mask << 1) | static_cast<unsigned>(x);
  }
  if (mask == 0)
    throw BadParameter("weights 0,0,0,0 give the zero vector");
  return mask;
}

int run_orbit(const std::vector<int> &weights, bool decompose) {
  const unsigned mask = parse_weights(weights);
  if (!decompose) {
    std::cout << h4_orbit(mask).size() << '\n';
    return 0;
  }
  const WeightOrbitReport r = weight_orbit_report(mask);
  std::cout << format_decomposition(r.orbit_size, r.decomposition) << '\n';
  return r.orbit_stabilizer_ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact icosian polytopes: build, verify, export"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (default: ICOSIAN_THREADS or all cores)");

  std::string build_obj, build_out;
  auto *build = app.add_subcommand("build", "Write an object as exact JSON");
  build->add_option("object", build_obj)->required()->check(
      CLI::IsMember(kObjects));
  build->add_option("--out", build_out, "Output file")->required();

  std::string suite, verify_out;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--out", verify_out, "Certificate JSON file");

  ExportOptions ex;
  std::size_t cell_index = 0;
  auto *exp = app.add_subcommand("export", "Export a cell or vertex figure");
  exp->add_option("object", ex.object)->required()->check(
      CLI::IsMember(kObjects));
  exp->add_option("--format", ex.format)->check(CLI::IsMember({"off", "json"}));
  auto *cell_opt = exp->add_option("--cell", cell_index, "Cell index");
  exp->add_flag("--vertex-figure", ex.vertex_figure,
                "Vertex figure of the snub 24-cell at p");
  exp->add_flag("--dual-cell", ex.dual_cell,
                "Cell of the dual snub 24-cell at p");
  exp->add_option("--precision", ex.precision, "Significant digits in OFF")
      ->check(CLI::Range(1, 300));
  exp->add_option("--out", ex.out, "Output file (default stdout)");

  std::vector<int> weights;
  bool decompose = false;
  auto *orb = app.add_subcommand("orbit", "W(H4) orbit of a weight");
  orb->add_option("--weights", weights, "a,b,c,d with entries 0 or 1")
      ->required()
      ->delimiter(',');
  orb->add_flag("--decompose", decompose, "Split under W(D4):C3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (threads)
    set_thread_count(threads);

  try {
    if (*build) {
      write_text(build_out, build_object(build_obj).dump(1) + "\n");
      return 0;
    }
    if (*verify)
      return run_verify(suite, verify_out);
    if (*exp) {
      if (cell_opt->count())
        ex.cell = cell_index;
      return run_export(ex);
    }
    if (*orb)
      return run_orbit(weights, decompose);
  } catch (const InvalidSelector &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameter &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
