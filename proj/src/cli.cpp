#include "orbicheck/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbicheck/gluing.hpp"
#include "orbicheck/homology.hpp"
#include "orbicheck/manifold.hpp"
#include "orbicheck/orbifold.hpp"
#include "orbicheck/quotient.hpp"

namespace orbicheck::cli {

namespace {

using nlohmann::json;

// Thrown for input problems that end the run with exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(bool json_mode) : json_mode_(json_mode) {}

  void line(const std::string& text) { text_ << text << '\n'; }
  void fail(const std::string& text) {
    ++failures_;
    text_ << "FAIL: " << text << '\n';
    doc_["failures"].push_back(text);
  }
  json& doc() { return doc_; }
  int failures() const { return failures_; }

  void emit(std::ostream& out) {
    if (json_mode_) {
      if (!doc_.contains("failures")) doc_["failures"] = json::array();
      doc_["passed"] = failures_ == 0;
      out << doc_.dump(2) << '\n';
    } else {
      out << text_.str();
    }
  }

 private:
  bool json_mode_;
  std::ostringstream text_;
  json doc_ = json::object();
  int failures_ = 0;
};

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

// Results computed once per run and shared by the subcommands.
struct Pipeline {
  const RunConfig& config;
  Report& report;
  std::optional<GluingTable> table;
  std::optional<QuotientComplex> complex;

  const GluingTable& load() {
    if (!table) {
      try {
        table = read_complex_file(config.complex_path);
      } catch (const ParseError& e) {
        throw InputError(config.complex_path + ": " + e.what());
      }
    }
    return *table;
  }

  bool validate_step() {
    const auto& t = load();
    auto diagnostics = validate(t);
    report.line("complex: " + config.complex_path);
    report.line("simplices: " + std::to_string(t.size()));
    report.line("glued facets: " + std::to_string(t.assigned_slot_count()) + " of " +
                std::to_string(t.size() * label_count(t.labels())));
    report.line("diagnostics: " + std::to_string(diagnostics.size()));
    json j = {{"simplices", t.size()},
              {"glued_facets", t.assigned_slot_count()},
              {"diagnostics", json::array()}};
    for (const auto& d : diagnostics) {
      report.fail(d.message);
      j["diagnostics"].push_back(
          {{"simplex", d.simplex}, {"omitted", d.omitted}, {"message", d.message},
           {"kind", d.kind == Diagnostic::Kind::involution ? "involution" : "self_gluing"}});
    }
    report.doc()["validate"] = j;
    return diagnostics.empty();
  }

  const QuotientComplex& quotient() {
    if (!complex) complex = build_quotient(load());
    return *complex;
  }

  bool manifold_step() {
    const auto& qc = quotient();
    auto fv = qc.f_vector();
    report.line("f-vector: " + join(fv));
    report.line("euler characteristic: " + std::to_string(euler_characteristic(qc)));
    json j = {{"f_vector", fv}, {"euler_characteristic", euler_characteristic(qc)}};
    if (qc.has_boundary()) {
      report.fail("complex has unglued facets");
      report.doc()["manifold"] = j;
      return false;
    }
    auto m = verify_closed_pl_manifold(qc, config.passes);
    report.line("links checked: vertices " + std::to_string(m.checked.at(0)) + ", edges " +
                std::to_string(m.checked.at(1)) + ", triangles " + std::to_string(m.checked.at(2)));
    j["links_checked"] = m.checked;
    j["link_failures"] = json::array();
    for (const auto& f : m.failures) {
      report.fail("link of " + std::to_string(f.dimension) + "-face " + std::to_string(f.face) + ": " +
                  to_string(f.status) + (f.reason.empty() ? "" : " (" + f.reason + ")"));
      j["link_failures"].push_back(
          {{"dimension", f.dimension}, {"face", f.face}, {"status", to_string(f.status)}, {"reason", f.reason}});
    }
    j["closed_pl_manifold"] = m.passed();
    report.line(std::string("manifold: ") + (m.passed() ? "closed PL 4-manifold" : "not certified"));
    report.doc()["manifold"] = j;
    return m.passed();
  }

  void homology_step() {
    const auto& qc = quotient();
    auto h = homology(qc);
    json groups = json::array();
    for (const auto& g : h) {
      report.line("H_" + std::to_string(g.degree) + " = " + format_group(g));
      groups.push_back({{"degree", g.degree}, {"free_rank", g.free_rank}, {"torsion", g.torsion},
                        {"text", format_group(g)}});
    }
    bool orientable = fundamental_cycle(qc).has_value();
    report.line(std::string("orientable: ") + (orientable ? "yes" : "no"));
    report.doc()["homology"] = {{"groups", groups}, {"orientable", orientable}};
  }

  void pi1_step() {
    const auto& qc = quotient();
    auto p = presentation(qc);
    report.line("presentation: " + std::to_string(p.generators) + " generators, " +
                std::to_string(p.relators.size()) + " relators");
    auto s = tietze_simplify(p, config.passes);
    report.line("simplified: " + format_presentation(s));
    const bool trivial = is_trivially_presented(s);
    auto ab = abelianization(s);
    report.line(std::string("pi1: ") + (trivial ? "trivial" : "not shown trivial; abelianization " + format_group(ab)));
    report.doc()["pi1"] = {{"generators", p.generators},
                           {"relators", p.relators.size()},
                           {"simplified_generators", s.generators},
                           {"simplified_relators", s.relators.size()},
                           {"simplified", format_presentation(s)},
                           {"trivial", trivial},
                           {"abelianization", format_group(ab)}};
  }

  void orbifold_step() {
    CoxeterMatrix cox(1);
    try {
      cox = read_coxeter_file(config.coxeter_path);
    } catch (const ParseError& e) {
      throw InputError(config.coxeter_path + ": " + e.what());
    }
    if (cox.rank() != kMaxLabels) throw InputError(config.coxeter_path + ": rank must be 5");
    const auto& qc = quotient();
    json j;

    auto g = gram_matrix(cox);
    auto sig = signature(g, config.tol);
    std::ostringstream sig_text;
    sig_text << "(" << sig.positive << ", " << sig.negative << ", " << sig.zero << ")";
    report.line("coxeter: " + config.coxeter_path);
    report.line("gram signature: " + sig_text.str());
    auto lanner = lanner_check(cox, config.tol);
    report.line("lanner: " + std::string(lanner.compact_hyperbolic ? "compact hyperbolic" : "not compact hyperbolic") +
                ", det " + fixed(lanner.determinant, 9));
    j["geometry"] = {{"signature", {sig.positive, sig.negative, sig.zero}},
                     {"compact_hyperbolic", lanner.compact_hyperbolic},
                     {"determinant", lanner.determinant}};
    if (!lanner.compact_hyperbolic) {
      report.fail("Coxeter simplex is not a compact hyperbolic simplex");
      report.doc()["orbifold"] = j;
      return;
    }
    std::optional<SimplexRealization> realization;
    try {
      realization = realize_simplex(cox, config.tol);
      report.line("realization residual: " + sci(realization->gram_residual));
      j["geometry"]["realization_residual"] = realization->gram_residual;
    } catch (const std::runtime_error& e) {
      report.fail(std::string("realization: ") + e.what());
    }

    std::vector<TriangleRecord> triangles;
    try {
      triangles = triangle_report(qc, cox);
    } catch (const OrbifoldError& e) {
      for (const auto& p : e.problems()) report.fail(p);
      report.doc()["orbifold"] = j;
      return;
    }
    report.line("triangles: " + std::to_string(triangles.size()) + " classes, every degree divides 2m");
    j["triangles"] = json::array();
    for (const auto& t : triangles) {
      const auto& members = qc.face(2, t.triangle).members;
      report.line("  t" + std::to_string(t.triangle) + " " + format_labels(t.labels) + " pi/" + std::to_string(t.m) +
                  " degree " + std::to_string(t.degree) + " weight " + std::to_string(t.weight) + " members " +
                  join(members));
      j["triangles"].push_back({{"id", t.triangle},
                                {"labels", label_list(t.labels)},
                                {"m", t.m},
                                {"degree", t.degree},
                                {"weight", t.weight},
                                {"members", members}});
    }

    try {
      auto right = pi_over_2_exceptions(qc, cox);
      report.line("right-angled triangles of degree 2: " + std::to_string(right.size()));
      j["right_angled_degree_2"] = right;
    } catch (const OrbifoldError& e) {
      for (const auto& p : e.problems()) report.fail(p);
    }

    try {
      auto vertices = vertex_report(qc, cox);
      j["vertices"] = json::array();
      report.line("vertices:");
      for (const auto& v : vertices) {
        report.line("  v" + std::to_string(v.vertex) + " label " + std::to_string(v.label) + " degree " +
                    std::to_string(v.degree) + " diagram " + v.diagram + " |W| " + std::to_string(v.group_order) +
                    " local order " + std::to_string(v.local_order));
        j["vertices"].push_back({{"id", v.vertex},
                                 {"label", v.label},
                                 {"degree", v.degree},
                                 {"diagram", v.diagram},
                                 {"group_order", v.group_order},
                                 {"local_order", v.local_order}});
      }
    } catch (const OrbifoldError& e) {
      for (const auto& p : e.problems()) report.fail(p);
    }

    auto locus = locus_components(qc, cox);
    report.line("locus components: " + std::to_string(locus.components.size()));
    j["components"] = json::array();
    for (const auto& c : locus.components) {
      report.line("  " + c.name + ": triangles " + join(c.triangles) + "; weight " + std::to_string(c.weight()) +
                  "; edges " + join(c.edges) + "; vertices " + join(c.vertices) + "; chi " +
                  std::to_string(c.euler_characteristic) + "; Z-cycle " + (c.cycle_signs ? "yes" : "no") +
                  "; mod-2 cycle " + (c.mod2_cycle ? "yes" : "no"));
      json cj = {{"name", c.name},
                 {"triangles", c.triangles},
                 {"representatives", json::array()},
                 {"weights", c.weights},
                 {"edges", c.edges},
                 {"interior_edges", c.interior_edges},
                 {"mirror_edges", c.mirror_edges},
                 {"vertices", c.vertices},
                 {"euler_characteristic", c.euler_characteristic},
                 {"mod2_cycle", c.mod2_cycle},
                 {"cycle_signs", c.cycle_signs ? json(*c.cycle_signs) : json(nullptr)}};
      for (int t : c.triangles) {
        auto rep = qc.face(2, t).representative();
        cj["representatives"].push_back({{"simplex", rep.simplex}, {"labels", label_list(rep.labels)}});
      }
      j["components"].push_back(cj);
    }
    j["junctions"] = json::array();
    for (const auto& jn : locus.junctions) {
      const auto& a = locus.components[jn.first].name;
      const auto& b = locus.components[jn.second].name;
      report.line("  junction " + a + "/" + b + ": vertices " + join(jn.shared_vertices) + "; edges " +
                  (jn.shared_edges.empty() ? std::string("none") : join(jn.shared_edges)));
      j["junctions"].push_back(
          {{"components", {a, b}}, {"shared_vertices", jn.shared_vertices}, {"shared_edges", jn.shared_edges}});
    }

    if (realization) {
      j["flatness"] = json::array();
      for (const auto& c : locus.components) {
        auto flat = flatness_check(qc, *realization, c, config.angle_tol);
        report.line("flatness " + c.name + ": " + std::to_string(flat.edges.size()) + " interior edges, max residual " +
                    sci(flat.max_residual));
        json fj = {{"component", c.name}, {"max_residual", flat.max_residual}, {"edges", json::array()}};
        for (const auto& e : flat.edges) {
          fj["edges"].push_back({{"edge", e.edge}, {"angle", e.angle}, {"residual", e.residual}, {"flat", e.flat}});
          if (!e.flat)
            report.fail("component " + c.name + " bends at edge " + std::to_string(e.edge) + ": angle " +
                        fixed(e.angle) + " between t" + std::to_string(e.first) + " and t" + std::to_string(e.second));
        }
        j["flatness"].push_back(fj);
      }
    }

    try {
      auto classes = locus_classes(qc, locus);
      j["locus_classes"] = json::array();
      report.line("locus classes in H_2:");
      for (const auto& cls : classes) {
        report.line("  [" + cls.name + "] = " + std::to_string(cls.multiple) + " x generator (up to sign)");
        j["locus_classes"].push_back({{"chain", cls.name}, {"multiple", cls.multiple}, {"signs", cls.signs}});
      }
    } catch (const OrbifoldError& e) {
      for (const auto& p : e.problems()) report.fail(p);
    } catch (const std::invalid_argument& e) {
      report.fail(std::string("locus classes: ") + e.what());
    }
    report.doc()["orbifold"] = j;
  }

  void export_step() {
    const auto& qc = quotient();
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw InputError("cannot create " + config.out_dir + ": " + ec.message());
    auto maps = boundary_matrices(qc);
    json files = json::array();
    for (std::size_t d = 0; d < maps.size(); ++d) {
      fs::path path = fs::path(config.out_dir) / ("boundary_" + std::to_string(d + 1) + ".txt");
      std::ofstream os(path);
      if (!os) throw InputError("cannot write " + path.string());
      write_matrix(os, maps[d]);
      if (!os) throw InputError("cannot write " + path.string());
      report.line("wrote " + path.string() + " (" + std::to_string(maps[d].rows()) + " x " +
                  std::to_string(maps[d].cols()) + ")");
      files.push_back({{"path", path.string()}, {"rows", maps[d].rows()}, {"cols", maps[d].cols()}});
    }
    report.doc()["export"] = files;
  }
};

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.tol > 0) || !(config.angle_tol > 0)) {
    err << "error: tolerances must be positive\n";
    return kExitInputError;
  }
  if (config.passes < 1) {
    err << "error: pass budget must be at least 1\n";
    return kExitInputError;
  }
  Report report(config.json);
  report.doc()["format_version"] = kFormatVersion;
  report.doc()["command"] = config.command;
  Pipeline pipe{config, report, {}, {}};
  try {
    const auto& c = config.command;
    if (c == "validate") {
      pipe.validate_step();
    } else if (c == "export-chain") {
      if (pipe.validate_step()) pipe.export_step();
    } else if (pipe.validate_step()) {
      if (c == "manifold") {
        pipe.manifold_step();
      } else if (c == "homology") {
        pipe.homology_step();
      } else if (c == "pi1") {
        pipe.pi1_step();
      } else if (c == "orbifold") {
        if (pipe.manifold_step()) {
          pipe.homology_step();
          pipe.orbifold_step();
        }
      } else {
        err << "error: unknown command " << c << '\n';
        return kExitInputError;
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    report.fail(e.what());
  }
  report.emit(out);
  if (report.failures() > 0) {
    err << report.failures() << " check(s) failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify face-pairing triangulations as hyperbolic Coxeter orbifolds", "orbicheck"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("complex", config.complex_path, "face-pairing file")->required();
    sub->add_flag("--json", config.json, "emit one JSON document");
    sub->add_option("--tol", config.tol, "geometry tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--angle-tol", config.angle_tol, "flatness tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--passes", config.passes, "Tietze pass budget")->check(CLI::Range(1, 1000000));
    return sub;
  };
  add_common(app.add_subcommand("validate", "check the gluing table"));
  add_common(app.add_subcommand("manifold", "certify every link as a PL sphere"));
  add_common(app.add_subcommand("homology", "integral homology of the quotient"));
  add_common(app.add_subcommand("pi1", "simplify the fundamental group presentation"));
  add_common(app.add_subcommand("orbifold", "full orbifold verification"))
      ->add_option("--coxeter", config.coxeter_path, "Coxeter matrix file")
      ->required();
  add_common(app.add_subcommand("export-chain", "write the boundary matrices"))
      ->add_option("--out", config.out_dir, "destination directory")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  return execute(config, out, err);
}

}  // namespace orbicheck::cli
