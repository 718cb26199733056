#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semimorph/anyimage.hpp"
#include "semimorph/io.hpp"
#include "semimorph/verify.hpp"

namespace semimorph {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  out << bytes;
  if (!out) fail(Errc::io_error, "failed writing '" + path + "'");
}

inline bool has_suffix(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

enum class FileFormat { netpbm, json };

inline FileFormat sniff_format(const std::string& path,
                               std::string_view bytes) {
  if (has_suffix(path, ".json")) return FileFormat::json;
  if (has_suffix(path, ".pbm") || has_suffix(path, ".pgm") ||
      has_suffix(path, ".pnm"))
    return FileFormat::netpbm;
  for (char ch : bytes) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? FileFormat::json : FileFormat::netpbm;
  }
  fail(Errc::unsupported_format, "'" + path + "' is empty");
}

/// Loads a file and reconciles it with the --semiring flag. JSON documents
/// are self-describing; a conflicting flag is a hard error. PGM loads as
/// maxplus unless the flag asks for the k/255 fuzzy reinterpretation.
inline AnyImage load_image(const std::string& path,
                           const std::optional<SemiringKind>& flag,
                           std::ostream& warn) {
  std::string bytes = read_file(path);
  FileFormat fmt = sniff_format(path, bytes);
  if (fmt == FileFormat::json) {
    JsonReadResult res = read_matrix_json(bytes);
    if (res.quantization_note)
      warn << "note: values in '" << path
           << "' were rounded to the nearest 1/255\n";
    AnyImage img = std::move(res.image);
    if (flag && *flag != kind_of(img))
      fail(Errc::carrier_mismatch,
           "'" + path + "' declares semiring '" +
               std::string(semiring_name_of(img)) + "' but --semiring says '" +
               std::string(semiring_name(*flag)) + "'");
    return img;
  }

  AnyImage img = read_netpbm(bytes);
  SemiringKind file_kind = kind_of(img);
  if (!flag || *flag == file_kind) return img;
  if (file_kind == SemiringKind::maxplus && *flag == SemiringKind::minmax)
    return AnyImage{pgm_as_minmax(std::get<Image<MaxPlusSemiring>>(img))};
  fail(Errc::carrier_mismatch,
       "'" + path + "' holds '" + std::string(semiring_name(file_kind)) +
           "' pixels but --semiring says '" +
           std::string(semiring_name(*flag)) + "'");
}

inline void write_image(const std::string& path, const AnyImage& img) {
  std::string bytes;
  if (has_suffix(path, ".json")) {
    bytes = write_matrix_json(img);
  } else if (has_suffix(path, ".pbm") || has_suffix(path, ".pgm") ||
             has_suffix(path, ".pnm")) {
    bytes = write_netpbm(img);
  } else {
    fail(Errc::unsupported_format,
         "cannot infer output format from '" + path +
             "' (use .pbm, .pgm or .json)");
  }
  write_file(path, bytes);
}

}  // namespace detail

/// Command-line driver. Returns 0 on success, 1 on domain errors, 2 on usage
/// errors. Everything it prints goes to the given streams.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"mathematical morphology as semiring convolution", "semimorph"};
  app.require_subcommand(1);

  const std::vector<std::string> semiring_names{"boolean", "maxplus", "minmax",
                                                "counting"};
  const std::vector<std::string> mode_names{"full", "same", "valid"};

  struct MorphArgs {
    std::string input, se, output, semiring, mode;
  };
  MorphArgs dil, ero, ope, clo;

  auto add_common = [&](CLI::App* cmd, MorphArgs& a) {
    cmd->add_option("-i,--input", a.input, "source image file")->required();
    cmd->add_option("-s,--se", a.se, "structuring element file")->required();
    cmd->add_option("-o,--output", a.output, "output file")->required();
    cmd->add_option("--semiring", a.semiring, "carrier of the computation")
        ->check(CLI::IsMember(semiring_names));
  };
  auto add_mode = [&](CLI::App* cmd, MorphArgs& a, const char* dflt) {
    a.mode = dflt;
    cmd->add_option("--mode", a.mode, "output domain convention")
        ->check(CLI::IsMember(mode_names))
        ->capture_default_str();
  };

  CLI::App* dilate_cmd =
      app.add_subcommand("dilate", "semiring convolution of image with SE");
  add_common(dilate_cmd, dil);
  add_mode(dilate_cmd, dil, "full");

  CLI::App* erode_cmd =
      app.add_subcommand("erode", "residual sweep, the adjoint of dilate");
  add_common(erode_cmd, ero);
  add_mode(erode_cmd, ero, "valid");

  CLI::App* open_cmd = app.add_subcommand("open", "erode then dilate back");
  add_common(open_cmd, ope);
  CLI::App* close_cmd = app.add_subcommand("close", "dilate then erode back");
  add_common(close_cmd, clo);

  std::string verify_semiring;
  int verify_trials = 1000;
  std::uint64_t verify_seed = 42;
  std::string json_report;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the randomised law suites for one semiring");
  verify_cmd
      ->add_option("--semiring", verify_semiring, "semiring under test")
      ->required()
      ->check(CLI::IsMember(semiring_names));
  verify_cmd->add_option("--trials", verify_trials, "trials per law")
      ->check(CLI::Range(1, 10'000'000))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "RNG seed")
      ->capture_default_str();
  verify_cmd->add_option("--json-report", json_report,
                         "also write the report as JSON to this path");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto flag_kind =
      [](const std::string& s) -> std::optional<SemiringKind> {
    if (s.empty()) return std::nullopt;
    return semiring_from_name(s);
  };

  try {
    auto run_morph = [&](const MorphArgs& a, auto&& op) {
      auto kind = flag_kind(a.semiring);
      AnyImage f = detail::load_image(a.input, kind, err);
      AnyImage g = detail::load_image(a.se, kind, err);
      detail::write_image(a.output, op(f, g));
      return 0;
    };

    if (dilate_cmd->parsed()) {
      Mode mode = *mode_from_name(dil.mode);
      return run_morph(dil, [&](const AnyImage& f, const AnyImage& g) {
        return any_dilate(f, g, mode);
      });
    }
    if (erode_cmd->parsed()) {
      Mode mode = *mode_from_name(ero.mode);
      return run_morph(ero, [&](const AnyImage& f, const AnyImage& g) {
        return any_erode(f, g, mode);
      });
    }
    if (open_cmd->parsed()) return run_morph(ope, any_opening);
    if (close_cmd->parsed()) return run_morph(clo, any_closing);

    // verify
    SemiringKind kind = semiring_from_name(verify_semiring);
    std::vector<LawReport> reports = run_laws(kind, verify_trials, verify_seed);
    out << "semiring: " << verify_semiring << "\n";
    out << "trials: " << verify_trials << "\n";
    out << "seed: " << verify_seed << "\n";
    int failed = 0;
    for (const LawReport& r : reports) {
      if (r.passed) {
        out << "law " << r.law << ": PASS\n";
      } else {
        ++failed;
        std::string path = r.law + ".counterexample.json";
        detail::write_file(path, r.counterexample);
        out << "law " << r.law << ": FAIL (counterexample written to " << path
            << ")\n";
      }
    }
    out << "result: " << (reports.size() - failed) << "/" << reports.size()
        << " laws passed\n";

    if (!json_report.empty()) {
      nlohmann::json j{{"semiring", verify_semiring},
                       {"trials", verify_trials},
                       {"seed", verify_seed}};
      nlohmann::json laws = nlohmann::json::array();
      for (const LawReport& r : reports) {
        nlohmann::json entry{
            {"law", r.law}, {"trials", r.trials}, {"passed", r.passed}};
        entry["counterexample"] =
            r.passed ? nlohmann::json()
                     : nlohmann::json::parse(r.counterexample);
        laws.push_back(std::move(entry));
      }
      j["laws"] = std::move(laws);
      detail::write_file(json_report, j.dump(2) + "\n");
    }
    return failed == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace semimorph
