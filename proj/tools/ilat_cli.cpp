#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ilat/census.hpp"
#include "ilat/congruence.hpp"
#include "ilat/constructions.hpp"
#include "ilat/document.hpp"

namespace {

using namespace ilat;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot open " + path);
  out << text;
}

/// The congruence family selected by --kind; con0/con01 filter the richest
/// family the document supports.
CongruenceFamily family_of(const Structure& s, const std::string& kind) {
  if (kind == "lattice") return all_congruences(s.lat);
  if (kind == "i") return i_congruences(s.as_involution());
  if (kind == "bz") return bz_congruences(s.as_bz());
  auto richest = [&] {
    if (s.has_brouwer()) return bz_congruences(s.as_bz());
    if (s.has_involution()) return i_congruences(s.as_involution());
    return all_congruences(s.lat);
  };
  if (kind == "con0") return con0(s.lat, richest());
  if (kind == "con01") return con01(s.lat, richest());
  throw Error(ErrorCode::ParseError, "unknown congruence kind " + kind);
}

int thread_count() {
  if (const char* env = std::getenv("ILAT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // library default
}

struct Options {
  std::string file;
  std::string out;
  std::string kind = "lattice";
  bool count_only = false;
  bool show_involution = false;
  int quotient_index = -1;
  std::string construct_name;
  std::vector<int> construct_params;
  std::vector<std::string> construct_inputs;
  int census_n = 0;
  int census_cap = kDefaultCensusCap;
  std::string census_report;
  std::string census_csv;
  std::vector<std::string> census_verify;
};

int cmd_validate(const Options& opt) {
  parse_structure(read_input(opt.file));
  std::cout << "OK\n";
  return 0;
}

int cmd_con(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  CongruenceFamily family = family_of(s, opt.kind);
  if (opt.count_only) {
    std::cout << family.count() << "\n";
    return 0;
  }
  std::cout << "count " << family.count() << "\n";
  for (long i = 0; i < family.count(); ++i)
    std::cout << i << "\t" << format_partition(family.members[i], s.lat.labels) << "\n";
  return 0;
}

int cmd_atoms(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  auto at = atoms(family_of(s, opt.kind));
  std::cout << "count " << at.size() << "\n";
  for (const auto& p : at) std::cout << format_partition(p, s.lat.labels) << "\n";
  return 0;
}

int cmd_narrows(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  auto list = narrows(s.lat);
  std::cout << "count " << list.size() << "\n";
  for (const auto& iv : list)
    std::cout << "[" << s.lat.labels[iv.lo] << "," << s.lat.labels[iv.hi] << "]\n";
  return 0;
}

int cmd_classify(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  if (!s.has_involution())
    throw Error(ErrorCode::ParseError, "classify needs an involution");
  ClassFlags f = s.has_brouwer() ? classify(s.as_bz()) : classify(s.as_involution());
  auto line = [](const char* name, bool v) {
    std::cout << name << ": " << (v ? "yes" : "no") << "\n";
  };
  line("i-lattice", f.i_lattice);
  line("bounded-i", f.bounded);
  line("pseudo-Kleene", f.pseudo_kleene);
  line("De Morgan", f.de_morgan);
  line("Kleene", f.kleene);
  line("paraorthomodular", f.paraorthomodular);
  line("BZ", f.bz);
  line("antiortholattice", f.antiortholattice);
  line("orthomodular", f.orthomodular);
  return 0;
}

int cmd_si(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  bool si = is_subdirectly_irreducible(family_of(s, opt.kind));
  std::cout << (si ? "yes" : "no") << "\n";
  return 0;
}

int cmd_quotient(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  CongruenceFamily family = family_of(s, opt.kind);
  if (opt.quotient_index < 0 || opt.quotient_index >= family.count())
    throw Error(ErrorCode::ParseError, "--by index out of range; family has " +
                                           std::to_string(family.count()) + " members");
  const Partition& theta = family.members[opt.quotient_index];
  LatticeDocument doc;
  if (s.has_brouwer() && is_bz_congruence(s.as_bz(), theta))
    doc = to_document(quotient(s.as_bz(), theta));
  else if (s.has_involution() && is_i_congruence(s.as_involution(), theta))
    doc = to_document(quotient(s.as_involution(), theta));
  else
    doc = to_document(quotient(s.lat, theta));
  write_output(opt.out, emit_json(doc));
  return 0;
}

int cmd_construct(const Options& opt) {
  Structure result;
  if (!opt.construct_inputs.empty()) {
    // combinators over input documents
    std::vector<Structure> parts;
    for (const auto& f : opt.construct_inputs) parts.push_back(parse_structure(read_input(f)));
    if (parts.size() != 2)
      throw Error(ErrorCode::ParseError, "combinators take exactly two -i inputs");
    const std::string& name = opt.construct_name;
    bool both_i = parts[0].has_involution() && parts[1].has_involution();
    if (name == "osum") {
      result.lat = ordinal_sum(parts[0].lat, parts[1].lat);
    } else if (name == "hsum") {
      if (both_i) {
        auto r = horizontal_sum(parts[0].as_involution(), parts[1].as_involution());
        result.lat = r.base;
        result.invol = r.invol;
      } else {
        result.lat = horizontal_sum(parts[0].lat, parts[1].lat);
      }
    } else if (name == "prod") {
      if (both_i) {
        auto r = direct_product(parts[0].as_involution(), parts[1].as_involution());
        result.lat = r.base;
        result.invol = r.invol;
      } else {
        result.lat = direct_product(parts[0].lat, parts[1].lat);
      }
    } else if (name == "triple") {
      // M + K + M^d from a plain lattice M and an i-lattice K
      auto r = i_ordinal_triple(parts[0].lat, parts[1].as_involution());
      result.lat = r.base;
      result.invol = r.invol;
    } else {
      throw Error(ErrorCode::ParseError, "unknown combinator " + name);
    }
  } else {
    auto built = catalog_build(opt.construct_name, opt.construct_params);
    if (!built)
      throw Error(ErrorCode::ParseError, "unknown catalog name " + opt.construct_name);
    result.lat = built->base;
    result.invol = built->invol;
  }
  if (result.invol) {
    // antiortholattices carry their trivial Brouwer complement
    try {
      BZLattice bz = trivial_brouwer(result.as_involution());
      result.brouwer = bz.brouwer;
    } catch (const Error&) {
    }
  }
  write_output(opt.out, emit_json(to_document(result)));
  return 0;
}

int cmd_census(const Options& opt) {
  CensusData data = run_census(opt.census_n, opt.census_cap, thread_count());
  CensusRecord rec = census_record(data);
  for (const auto& what : opt.census_verify) {
    if (what == "maxcgkl") verify_max_theorem(data);
    else if (what == "maxcgaol") verify_bz_theorem(data);
    else if (what == "maxcglat") verify_lattice_theorem(data);
    else if (what == "second") verify_second_largest(data);
    else throw Error(ErrorCode::ParseError, "unknown verification " + what);
    std::cout << "verified " << what << " at n=" << opt.census_n << "\n";
  }
  if (!opt.census_report.empty()) write_output(opt.census_report, census_record_json(rec));
  if (!opt.census_csv.empty()) write_output(opt.census_csv, census_record_csv(rec));
  if (opt.census_report.empty() && opt.census_csv.empty())
    std::cout << census_record_json(rec);
  return 0;
}

int cmd_examples_table(const Options&) {
  bool all_ok = true;
  std::cout << "name      n   con  expected  con_i  expected  status\n";
  for (const auto& row : worked_examples()) {
    long con = all_congruences(row.algebra.base).count();
    long coni = i_congruences(row.algebra).count();
    bool ok = con == row.expected_con && coni == row.expected_con_i;
    all_ok = all_ok && ok;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-8s %3d %5ld %9ld %6ld %9ld  %s", row.name.c_str(),
                  row.algebra.n(), con, row.expected_con, coni, row.expected_con_i,
                  ok ? "ok" : "MISMATCH");
    std::cout << buf << "\n";
  }
  if (!all_ok) throw Error(ErrorCode::TheoremViolated, "example table mismatch");
  return 0;
}

int cmd_dot(const Options& opt) {
  Structure s = parse_structure(read_input(opt.file));
  write_output(opt.out, emit_dot(s, opt.show_involution));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite i-lattice congruence toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "input document (JSON); - or absent reads stdin");
  };
  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--kind", opt.kind, "congruence family: lattice|i|bz|con0|con01")
        ->check(CLI::IsMember({"lattice", "i", "bz", "con0", "con01"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a document");
  add_file(validate_cmd);

  auto* con_cmd = app.add_subcommand("con", "list or count congruences");
  add_file(con_cmd);
  add_kind(con_cmd);
  con_cmd->add_flag("--count-only", opt.count_only, "print only the count");

  auto* atoms_cmd = app.add_subcommand("atoms", "atoms of the congruence lattice");
  add_file(atoms_cmd);
  add_kind(atoms_cmd);

  auto* narrows_cmd = app.add_subcommand("narrows", "list the narrows");
  add_file(narrows_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "class membership flags");
  add_file(classify_cmd);

  auto* si_cmd = app.add_subcommand("si", "subdirect irreducibility");
  add_file(si_cmd);
  add_kind(si_cmd);

  auto* quot_cmd = app.add_subcommand("quotient", "quotient by a congruence");
  add_file(quot_cmd);
  add_kind(quot_cmd);
  quot_cmd->add_option("--by", opt.quotient_index, "index into the family listing")->required();
  quot_cmd->add_option("-o,--output", opt.out, "output file; - or absent writes stdout");

  auto* cons_cmd = app.add_subcommand("construct", "build a catalog structure or combinator");
  cons_cmd->add_option("name", opt.construct_name, "catalog name or osum|hsum|prod|triple")
      ->required();
  cons_cmd->add_option("params", opt.construct_params, "numeric parameters");
  cons_cmd->add_option("-i,--input", opt.construct_inputs, "input documents for combinators");
  cons_cmd->add_option("-o,--output", opt.out, "output file; - or absent writes stdout");

  auto* census_cmd = app.add_subcommand("census", "exhaustive census up to isomorphism");
  census_cmd->add_option("n", opt.census_n, "structure size")->required();
  census_cmd->add_option("--max", opt.census_cap, "raise the size cap (up to 10)")
      ->check(CLI::Range(1, kHardCensusCap));
  census_cmd->add_option("--report", opt.census_report, "write the record as JSON");
  census_cmd->add_option("--csv", opt.census_csv, "write the histogram as CSV");
  census_cmd->add_option("--verify", opt.census_verify,
                         "maxcgkl|maxcgaol|maxcglat|second (repeatable)");

  auto* table_cmd = app.add_subcommand("examples-table", "worked examples, computed vs expected");
  (void)table_cmd;

  auto* dot_cmd = app.add_subcommand("dot", "emit a Hasse diagram in DOT form");
  add_file(dot_cmd);
  dot_cmd->add_option("-o,--output", opt.out, "output file; - or absent writes stdout");
  dot_cmd->add_flag("--show-involution", opt.show_involution, "dashed involution edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand("validate")) return cmd_validate(opt);
    if (app.got_subcommand("con")) return cmd_con(opt);
    if (app.got_subcommand("atoms")) return cmd_atoms(opt);
    if (app.got_subcommand("narrows")) return cmd_narrows(opt);
    if (app.got_subcommand("classify")) return cmd_classify(opt);
    if (app.got_subcommand("si")) return cmd_si(opt);
    if (app.got_subcommand("quotient")) return cmd_quotient(opt);
    if (app.got_subcommand("construct")) return cmd_construct(opt);
    if (app.got_subcommand("census")) return cmd_census(opt);
    if (app.got_subcommand("examples-table")) return cmd_examples_table(opt);
    if (app.got_subcommand("dot")) return cmd_dot(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::TheoremViolated ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
