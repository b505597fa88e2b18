// tgwa: command-line front end for the TGWA engine.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tgwa/analysis.hpp"
#include "tgwa/cartan.hpp"
#include "tgwa/errors.hpp"
#include "tgwa/io.hpp"
#include "tgwa/simplicity.hpp"

using namespace tgwa;
using nlohmann::json;

namespace {

constexpr int kDecided = 0;
constexpr int kUsage = 1;
constexpr int kUnknown = 2;
constexpr int kInternal = 3;

struct Flags {
  std::string input;
  std::string json_path;
  std::string element, lhs, rhs;
  std::string q = "2";
  std::string out;
  std::string name = "tq";
  long deg_cap = 4;
  long coeff_cap = 2;
  long d_bound = 25;
  long m_cap = 3;
  long box = 3;
  long degree_cap = 12;
  long bound = 64;
  long weyl_degree = 3;
  bool timing = false;
};

struct CommandResult {
  int code = kDecided;
  json result = json::object();
  std::string text;
};

int exit_code(const Verdict& v) { return v.is_unknown() ? kUnknown : kDecided; }

std::string verdict_line(const std::string& what, const Verdict& v) {
  std::string s = what + ": " + to_string(v.outcome);
  if (v.is_unknown()) {
    for (const auto& b : v.blockers) s += "\n  blocker: " + b;
  } else if (!v.summary.empty()) {
    s += " (" + v.summary + ")";
  }
  return s;
}

struct Session {
  DatumFile file;
  std::unique_ptr<Engine> engine;
  const std::vector<std::string>& names() const { return file.datum.display_names(); }
};

Session open_session(const Flags& f) {
  Session s;
  s.file = load_datum(f.input);
  s.engine = std::make_unique<Engine>(s.file.datum, EngineOptions{f.degree_cap});
  return s;
}

std::string require_flag(const std::string& value, const std::string& flag) {
  if (value.empty()) throw CLI::ValidationError(flag, "is required for this command");
  return value;
}

GCM read_gcm_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') return parse_gcm(arg);
  return load_gcm(arg);
}

json lattice_json(const Lattice& l) {
  json basis = json::array();
  for (const auto& b : l.basis()) {
    json v = json::array();
    for (const auto& c : b) v.push_back(c.get_si());
    basis.push_back(v);
  }
  return basis;
}

std::string basis_text(const Lattice& l) {
  std::string s = "{";
  bool first = true;
  for (const auto& b : l.basis()) {
    s += (first ? "" : ", ") + to_string(b);
    first = false;
  }
  return s + "}";
}

std::string matrix_text(const std::vector<std::vector<long>>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

using Handler = std::function<CommandResult(const Flags&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  h["validate"] = [](const Flags& f) {
    CommandResult o;
    DatumFile file = load_datum(f.input);
    ValidationReport r = validate_datum(file.datum);
    o.result["valid"] = r.valid;
    o.result["regularly_graded"] = r.regularly_graded;
    o.text = "valid: true\nregularly graded: " + std::string(r.regularly_graded ? "true" : "false");
    return o;
  };

  h["consistency"] = [](const Flags& f) {
    CommandResult o;
    DatumFile file = load_datum(f.input);
    Verdict v = check_consistency(file.datum);
    o.result = v.to_json();
    o.text = v.is_yes() ? "consistent: true" : "consistent: false; " + v.summary;
    return o;
  };

  h["reduce"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    Element a = parse_element(*s.engine, require_flag(f.element, "--element"));
    o.result["normal_form"] = to_string(a, s.file.datum.variables);
    o.text = to_string(a, s.names());
    return o;
  };

  auto binary = [](bool bracket) {
    return [bracket](const Flags& f) {
      CommandResult o;
      Session s = open_session(f);
      Element a = parse_element(*s.engine, require_flag(f.lhs, "--lhs"));
      Element b = parse_element(*s.engine, require_flag(f.rhs, "--rhs"));
      Element c = bracket ? s.engine->commutator(a, b) : s.engine->multiply(a, b);
      o.result["value"] = to_string(c, s.file.datum.variables);
      const bool zero = s.engine->is_zero_in_A(c);
      o.result["zero_in_A"] = zero;
      o.text = to_string(c, s.names()) + "\nzero in A: " + (zero ? "true" : "false");
      return o;
    };
  };
  h["mul"] = binary(false);
  h["commutator"] = binary(true);

  h["zero-test"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    Element a = parse_element(*s.engine, require_flag(f.element, "--element"));
    const bool zero = s.engine->is_zero_in_A(a);
    o.result["zero_in_A"] = zero;
    o.result["zero_in_A_prime"] = a.is_zero();
    o.text = std::string("zero in A: ") + (zero ? "true" : "false");
    return o;
  };

  h["gamma"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    Element a = parse_element(*s.engine, require_flag(f.lhs, "--lhs"));
    Element b = parse_element(*s.engine, require_flag(f.rhs, "--rhs"));
    Poly g = s.engine->gamma(a, b);
    o.result["gamma"] = to_string(g, s.file.datum.variables);
    o.text = "gamma = " + to_string(g, s.names());
    return o;
  };

  h["kernel"] = [](const Flags& f) {
    CommandResult o;
    DatumFile file = load_datum(f.input);
    KernelDescription k = kernel_of_sigma(file.datum, f.box);
    o.result = k.to_json();
    o.text = "basis " + basis_text(k.lattice) + ", " + (k.certified ? "certified" : "uncertified") +
             " (" + to_string(k.method) + ")";
    if (!k.certified) o.code = kUnknown;
    return o;
  };

  h["finitistic"] = [](const Flags& f) {
    CommandResult o;
    DatumFile file = load_datum(f.input);
    CartanProfile p = finitistic_profile(file.datum, f.bound);
    o.result = p.to_json();
    if (p.all_known()) {
      o.text = "cartan matrix: " + matrix_text(p.cartan());
    } else {
      o.text = "finitistic profile has unknown entries";
      o.code = kUnknown;
    }
    return o;
  };

  h["lie-type"] = [](const Flags& f) {
    CommandResult o;
    DatumFile file = load_datum(f.input);
    CartanProfile p = finitistic_profile(file.datum, f.bound);
    if (!p.all_known()) {
      o.result["type_A1n"] = nullptr;
      o.text = "lie type: unknown (profile has unknown entries)";
      o.code = kUnknown;
      return o;
    }
    const bool a1n = lie_type_is_A1n(p);
    o.result["type_A1n"] = a1n;
    o.result["cartan"] = p.cartan();
    o.text = "cartan matrix: " + matrix_text(p.cartan()) + "\ntype (A_1)^n: " + (a1n ? "true" : "false");
    return o;
  };

  h["zn-simple"] = [](const Flags& f) {
    CommandResult o;
    DatumFile file = load_datum(f.input);
    Verdict v = zn_simplicity(file.datum);
    o.result = v.to_json();
    o.text = verdict_line("Z^n-simple", v);
    o.code = exit_code(v);
    return o;
  };

  h["center"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    Verdict v = center_contained_in_R(*s.engine, kernel_of_sigma(s.file.datum, f.box), {f.deg_cap, f.coeff_cap});
    o.result = v.to_json();
    o.text = verdict_line("center contained in R", v);
    o.code = exit_code(v);
    return o;
  };

  h["centralizer"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    Verdict v = centralizer_commutative(*s.engine, kernel_of_sigma(s.file.datum, f.box), f.m_cap);
    o.result = v.to_json();
    o.text = verdict_line("centralizer of R commutative", v);
    o.code = exit_code(v);
    return o;
  };

  h["simplicity"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    SimplicityOptions opts{f.d_bound, f.box, f.weyl_degree, {f.deg_cap, f.coeff_cap}};
    SimplicityReport r = [&] {
      const TGWDatum& d = s.file.datum;
      if (d.rank == 1 && d.variable_count() == 1) {
        try {
          return jordan_rank1(*s.engine, opts);
        } catch (const FamilyMismatch&) {
        }
      }
      return orchestrate_simplicity(*s.engine, opts);
    }();
    o.result = r.to_json();
    o.text = r.headline();
    o.code = exit_code(r.verdict);
    return o;
  };

  h["cartan-build"] = [](const Flags& f) {
    CommandResult o;
    GCM c = read_gcm_argument(f.input);
    DatumFile file;
    file.datum = build_tq(c, parse_rational(f.q));
    file.datum.name = f.name;
    file.description = "T_q(C) for C = " + matrix_text(c) + ", q = " + f.q;
    o.result["datum"] = datum_to_json(file);
    o.text = write_datum(file);
    if (!f.out.empty()) {
      std::ofstream out(f.out, std::ios::binary);
      if (!out) throw IoError("cannot write '" + f.out + "'");
      out << o.text;
      o.text = "wrote " + f.out;
    }
    return o;
  };

  h["cartan-kernel"] = [](const Flags& f) {
    CommandResult o;
    GCM c = read_gcm_argument(f.input);
    Lattice l = kernel_basis_components(c);
    json comps = json::array();
    for (const auto& comp : coxeter_components(c)) {
      json v = json::array();
      for (auto x : comp) v.push_back(x + 1);
      comps.push_back(v);
    }
    o.result["components"] = comps;
    o.result["basis"] = lattice_json(l);
    o.text = "components " + comps.dump() + "\nbasis " + basis_text(l);
    return o;
  };

  h["verify-relation"] = [](const Flags& f) {
    CommandResult o;
    Session s = open_session(f);
    Element a = parse_element(*s.engine, require_flag(f.lhs, "--lhs"));
    Element b = parse_element(*s.engine, f.rhs.empty() ? "0" : f.rhs);
    const bool holds = verify_relation(*s.engine, a, b);
    o.result["holds"] = holds;
    o.text = std::string("relation holds: ") + (holds ? "true" : "false");
    return o;
  };

  h["examples"] = [](const Flags& f) {
    CommandResult o;
    if (f.input.empty()) {
      o.result["fixtures"] = bundled_fixture_names();
      for (const auto& n : bundled_fixture_names()) o.text += (o.text.empty() ? "" : "\n") + n;
    } else {
      std::string text = bundled_fixture(f.input);
      o.result["fixture"] = json::parse(text);
      o.text = text;
      if (!o.text.empty() && o.text.back() == '\n') o.text.pop_back();
    }
    return o;
  };

  return h;
}

const std::map<std::string, std::string> kDescriptions{
    {"validate", "Load and validate a datum file"},
    {"consistency", "Check the consistency conditions"},
    {"reduce", "Normal form of an element expression"},
    {"mul", "Product of --lhs and --rhs"},
    {"commutator", "Commutator [--lhs, --rhs]"},
    {"zero-test", "Decide whether --element is zero in A"},
    {"gamma", "Gradation form of --lhs and --rhs"},
    {"kernel", "Kernel of the Z^n-action on R"},
    {"finitistic", "Finitistic profile and Cartan matrix"},
    {"lie-type", "Decide whether the Lie type is (A_1)^n"},
    {"zn-simple", "Decide Z^n-simplicity of R"},
    {"center", "Decide whether the center lies in R"},
    {"centralizer", "Decide commutativity of the centralizer of R"},
    {"simplicity", "Decide simplicity of A"},
    {"cartan-build", "Build T_q(C) from a Cartan matrix (file or inline JSON)"},
    {"cartan-kernel", "Coxeter components and kernel basis of a Cartan matrix"},
    {"verify-relation", "Decide --lhs = --rhs in A (rhs defaults to 0)"},
    {"examples", "List bundled fixtures, or print one"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in twisted generalized Weyl algebras"};
  app.require_subcommand(1);
  Flags flags;
  auto table = handlers();

  for (const auto& [name, desc] : kDescriptions) {
    CLI::App* sub = app.add_subcommand(name, desc);
    const bool optional_input = name == "examples";
    auto* in = sub->add_option("input", flags.input,
                               name.rfind("cartan", 0) == 0 ? "Cartan matrix file or JSON" : "Datum file or fixture name");
    if (!optional_input) in->required();
    sub->add_option("--json", flags.json_path, "Write the report as JSON to a path (- for stdout)");
    sub->add_option("--deg-cap", flags.deg_cap, "Degree cap for the center search");
    sub->add_option("--coeff-cap", flags.coeff_cap, "Coefficient-degree cap for the center search");
    sub->add_option("--d-bound", flags.d_bound, "Bound on d for the ideal condition");
    sub->add_option("--m-cap", flags.m_cap, "Degree cap for centralizer bracket checks");
    sub->add_option("--box", flags.box, "Box radius for uncertified kernel search");
    sub->add_option("--degree-cap", flags.degree_cap, "Engine bound on total degree of enumerated monomials");
    sub->add_option("--bound", flags.bound, "Orbit length bound for the finitistic profile");
    sub->add_option("--weyl-degree", flags.weyl_degree, "Per-index degree for the Weyl-pair certificate");
    sub->add_option("--element,-e", flags.element, "Element expression");
    sub->add_option("--lhs", flags.lhs, "Left element expression");
    sub->add_option("--rhs", flags.rhs, "Right element expression");
    sub->add_option("--q", flags.q, "Nonzero rational parameter q");
    sub->add_option("--out,-o", flags.out, "Output path for cartan-build");
    sub->add_option("--name", flags.name, "Datum name for cartan-build");
    sub->add_flag("--timing", flags.timing, "Include wall time in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  const auto start = std::chrono::steady_clock::now();
  CommandResult o;
  try {
    o = table.at(command)(flags);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalReductionStuck& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const UnknownEntries& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  std::cout << o.text << "\n";
  if (flags.timing)
    std::cout << "wall time: " << std::chrono::duration<double, std::milli>(elapsed).count() << " ms\n";
  if (!flags.json_path.empty()) {
    json report;
    report["command"] = command;
    report["input"] = flags.input;
    if (command != "examples" && command.rfind("cartan", 0) != 0) {
      try {
        report["input_sha256"] = load_datum(flags.input).digest;
      } catch (const Error&) {
      }
    } else if (command.rfind("cartan", 0) == 0) {
      report["input_sha256"] = sha256_hex(flags.input.front() == '[' ? flags.input : read_file(flags.input));
    }
    report["caps"] = {{"deg_cap", flags.deg_cap},   {"coeff_cap", flags.coeff_cap}, {"d_bound", flags.d_bound},
                      {"m_cap", flags.m_cap},       {"box", flags.box},             {"degree_cap", flags.degree_cap},
                      {"bound", flags.bound},       {"weyl_degree", flags.weyl_degree}};
    report["result"] = o.result;
    report["exit_code"] = o.code;
    if (flags.timing)
      report["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    const std::string dumped = report.dump(2) + "\n";
    if (flags.json_path == "-") {
      std::cout << dumped;
    } else {
      std::ofstream out(flags.json_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << flags.json_path << "'\n";
        return kUsage;
      }
      out << dumped;
    }
  }
  return o.code;
}
