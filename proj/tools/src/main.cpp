#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multiarr_cli/commands.hpp"
#include "multiarr_cli/corpus.hpp"

namespace cli = multiarr::cli;

namespace {

// Echo of the invocation without flags that cannot change the result.
std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--json") continue;
    if (arg == "--jobs") {
      ++i;
      continue;
    }
    if (arg.rfind("--jobs=", 0) == 0) continue;
    out += (out.empty() ? "" : " ") + arg;
  }
  return out;
}

int write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : cli::builtin_corpus()) {
    const auto path = std::filesystem::path(dir) / e.file;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cli::DocumentError("cannot write " + path.string());
    out << cli::serialize_document(e.doc);
    std::cout << path.string() << "\n";
  }
  return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with 2-multiarrangements and central 3-arrangements"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned jobs = 0;
  app.add_flag("--json", json, "Emit canonical JSON instead of the human report");
  app.add_option("--jobs", jobs, "Worker threads for scans (default: available cores)");

  std::string file = "-";
  auto* exp = app.add_subcommand("exp", "Exponents, Delta and a basis of a 2-multiarrangement");
  exp->add_option("file", file, "Arrangement document ('-' for stdin)");

  cli::LatticeOptions lat;
  std::optional<int> total;
  std::optional<std::string> verify;
  auto* lattice = app.add_subcommand("lattice", "Scan a region of the multiplicity lattice");
  lattice->add_option("file", file, "Arrangement document ('-' for stdin)");
  lattice->add_option("--caps", lat.caps, "Per-line caps, e.g. 4,4,4")->delimiter(',')->allow_extra_args(false)->required();
  lattice->add_option("--total", total, "Cap on |m|");
  lattice->add_option("--verify", verify, "one | limit | str (default: all three)");
  lattice->add_option("--budget", lat.budget, "Refuse regions with more points than this");

  std::vector<int> m0;
  auto* shift = app.add_subcommand("shift", "Shift-isomorphism certificate for m0");
  shift->add_option("file", file, "Arrangement document ('-' for stdin)");
  shift->add_option("--m0", m0, "m0 as a,b,c (default: the document multiplicity)")->delimiter(',')->allow_extra_args(false);

  std::optional<std::size_t> h0;
  auto* free = app.add_subcommand("free", "Freeness of a central 3-arrangement or a coned affine 2-arrangement");
  free->add_option("file", file, "Arrangement document ('-' for stdin)");
  free->add_option("--H0", h0, "Index of the restriction plane");

  std::string suite = "desk";
  std::optional<std::string> corpus_dir;
  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify_all->add_option("--suite", suite, "Suite name (desk)");
  verify_all->add_option("--corpus", corpus_dir, "Directory of documents replacing the bundled corpus");

  std::string out_dir;
  auto* corpus = app.add_subcommand("corpus", "Write the bundled documents as JSON files");
  corpus->add_option("dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*corpus) return write_corpus(out_dir);
    cli::Report report;
    if (*exp) {
      report = cli::cmd_exp(cli::read_document(file));
    } else if (*lattice) {
      lat.total_cap = total;
      lat.verify = verify;
      lat.jobs = jobs;
      report = cli::cmd_lattice(cli::read_document(file), lat);
    } else if (*shift) {
      report = cli::cmd_shift(cli::read_document(file), m0, jobs);
    } else if (*free) {
      report = cli::cmd_free(cli::read_document(file), h0);
    } else {
      report = cli::cmd_verify_all(suite, corpus_dir, jobs);
    }
    report.command = command_echo(argc, argv);
    std::cout << (json ? cli::render_json(report) : cli::render_human(report));
    return report.exit_code;
  } catch (const cli::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitInput;
  } catch (const multiarr::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const multiarr::FieldMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const multiarr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitViolation;
  }
}
