#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "opgraph/document.hpp"
#include "opgraph/exporters.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct ExtractArgs {
  std::string input;
  std::string format = "json";
  std::string out_path;
  std::string lexicon_path;
  bool strict = false;
  bool normalize_case = false;
};

int fail_usage(const std::string& message) {
  std::cerr << "opgraph: error: " << message << "\n";
  return 2;
}

bool read_input(const std::string& path, std::string& text, std::string& error) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
    return true;
  }
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    error = "no such file: " + path;
    return false;
  }
  if (std::filesystem::is_directory(path, ec)) {
    error = "is a directory: " + path;
    return false;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open: " + path;
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

bool write_output(const std::filesystem::path& path, const std::string& payload,
                  std::string& error) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    error = "cannot write: " + path.string();
    return false;
  }
  out << payload;
  if (!out) {
    error = "write failed: " + path.string();
    return false;
  }
  return true;
}

int run_extract(const ExtractArgs& args) {
  std::string text;
  std::string error;
  if (!read_input(args.input, text, error)) return fail_usage(error);

  opgraph::io::PipelineOptions options;
  options.strict = args.strict;
  options.normalize_case = args.normalize_case;
  if (!args.lexicon_path.empty()) {
    try {
      options.lexicon.merge(opgraph::Lexicon::load_file(args.lexicon_path));
    } catch (const std::exception& e) {
      return fail_usage(e.what());
    }
  }

  opgraph::io::ExtractionDocument doc;
  try {
    doc = opgraph::io::run_pipeline(text, options);
  } catch (const opgraph::io::StrictParseError& e) {
    std::cerr << "opgraph: " << e.what() << "\n";
    return 1;
  }

  if (args.format == "csv") {
    if (args.out_path.empty()) {
      return fail_usage("--format csv writes two files and requires --out DIRECTORY");
    }
    const std::filesystem::path dir(args.out_path);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return fail_usage("cannot create directory: " + dir.string());
    const opgraph::io::CsvTables tables = opgraph::io::export_csv(doc);
    if (!write_output(dir / "elements.csv", tables.elements, error)) return fail_usage(error);
    if (!write_output(dir / "relations.csv", tables.relations, error)) return fail_usage(error);
    return 0;
  }

  std::string payload;
  if (args.format == "json") {
    payload = opgraph::io::export_json(doc);
  } else if (args.format == "dot") {
    payload = opgraph::io::export_dot(doc.graph);
  } else {
    payload = opgraph::io::export_graphml(doc.graph);
  }

  if (args.out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  if (!write_output(args.out_path, payload, error)) return fail_usage(error);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opgraph: compiles controlled-language operation descriptions into labeled process graphs"};
  app.require_subcommand(1);

  ExtractArgs args;
  CLI::App* extract = app.add_subcommand("extract", "Extract elements and relations from text");
  extract->add_option("input", args.input, "Input text file, or - for standard input")->required();
  extract->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "graphml", "csv"}))
      ->capture_default_str();
  extract->add_option("--out", args.out_path,
                      "Output file (directory for --format csv); default standard output");
  extract->add_flag("--strict", args.strict, "Abort on the first unparseable sentence");
  extract->add_flag("--normalize-case", args.normalize_case,
                    "Merge graph nodes whose surfaces differ only by case");
  extract->add_option("--lexicon", args.lexicon_path,
                      "Extra lexicon file merged with the built-in vocabulary");

  CLI::App* version = app.add_subcommand("version", "Print version information");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "opgraph: error: " << e.what() << "\n";
    return 2;
  }

  if (version->parsed()) {
    std::cout << "opgraph " << kToolVersion << "\n";
    return 0;
  }
  return run_extract(args);
}
