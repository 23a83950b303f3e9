#include "smx/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <unistd.h>
#include <vector>

#include "smx/error.hpp"
#include "smx/textio.hpp"

namespace smx::cli {

namespace {

namespace fs = std::filesystem;

// Unreadable or unparsable input, tagged with the file name (exit 1).
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// "-" is stdin, read once even when named twice (`sub - -`).
std::string read_all(const std::string& path, std::istream& in,
                     std::optional<std::string>& stdin_text) {
  if (path == "-") {
    if (!stdin_text) {
      stdin_text.emplace(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return *stdin_text;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoFailure(path + ": cannot open for reading");
  std::string text((std::istreambuf_iterator<char>(file)), {});
  if (file.bad()) throw IoFailure(path + ": read failed");
  return text;
}

SuperNMatrix load(const std::string& path, std::istream& in,
                  std::optional<std::string>& stdin_text) {
  const auto text = read_all(path, in, stdin_text);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw IoFailure(path + ": " + e.what());
  }
}

void write_atomically(const std::string& path, const std::string& text) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoFailure(path + ": cannot open for writing");
    file << text;
    file.close();
    if (!file) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoFailure(path + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoFailure(path + ": " + ec.message());
  }
}

void emit(const SuperNMatrix& result, const std::string& output, std::ostream& out) {
  const auto text = format(result);
  if (output.empty()) {
    out << text;
  } else {
    write_atomically(output, text);
  }
}

bool is_incompatible(ErrorKind kind) {
  return kind == ErrorKind::DimensionMismatch || kind == ErrorKind::PartitionMismatch ||
         kind == ErrorKind::ArityMismatch;
}

// Names the first pair of equal components of an improper union.
std::string identical_pair(const SuperNMatrix& u) {
  const auto& c = u.components();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (strict_eq(c[i], c[j])) {
        return "identical components " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
      }
    }
  }
  return "identical components";
}

}  // namespace

std::string report_to_json(const ClassReport& report) {
  nlohmann::ordered_json j;
  j["arity"] = report.arity;
  auto shapes = nlohmann::json::array();
  for (auto s : report.component_shapes) shapes.push_back(to_string(s));
  j["component_shapes"] = shapes;
  j["union_shape"] = report.union_shape.labels();
  j["symmetry"] = to_string(report.symmetry);
  j["semi_super"] = report.semi_super;
  j["proper"] = report.proper;
  return j.dump(2) + "\n";
}

std::string report_to_text(const ClassReport& report) {
  std::ostringstream os;
  const auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
    return s;
  };
  std::vector<std::string> shapes;
  for (auto s : report.component_shapes) shapes.emplace_back(to_string(s));
  os << "arity: " << report.arity << "\n"
     << "component_shapes: " << join(shapes) << "\n"
     << "union_shape: " << join(report.union_shape.labels()) << "\n"
     << "symmetry: " << to_string(report.symmetry) << "\n"
     << "semi_super: " << (report.semi_super ? "true" : "false") << "\n"
     << "proper: " << (report.proper ? "true" : "false") << "\n";
  return os.str();
}

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact block-partitioned matrix algebra over .smx files", "smx"};
  app.require_subcommand(1);

  std::string file_a, file_b, output, scalar_text, side = "right", mode = "strict";
  bool json = false;
  std::function<int()> action;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "Write the result here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "Validate a file and print its class report");
  check->add_option("FILE", file_a)->required();
  check->add_flag("--json", json, "Machine-readable report");

  auto* classify = app.add_subcommand("classify", "Print the class report");
  classify->add_option("FILE", file_a)->required();
  classify->add_flag("--json", json, "Machine-readable report");

  const auto binary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("A", file_a)->required();
    sub->add_option("B", file_b)->required();
    return sub;
  };
  auto* add_cmd = binary("add", "A + B");
  add_output(add_cmd);
  auto* sub_cmd = binary("sub", "A - B");
  add_output(sub_cmd);
  auto* mul_cmd = binary("mul", "Block product A B");
  add_output(mul_cmd);
  auto* eq_cmd = binary("eq", "Print true/false");
  eq_cmd->add_option("--mode", mode, "strict compares partitions too")
      ->check(CLI::IsMember({"strict", "value"}));

  auto* scale_cmd = app.add_subcommand("scale", "lambda A");
  scale_cmd->add_option("RATIONAL", scalar_text)->required();
  scale_cmd->add_option("A", file_a)->required();
  add_output(scale_cmd);

  auto* transpose_cmd = app.add_subcommand("transpose", "Transpose with dual partitions");
  transpose_cmd->add_option("A", file_a)->required();
  add_output(transpose_cmd);

  auto* gram_cmd = app.add_subcommand("gram", "A A^T (right) or A^T A (left)");
  gram_cmd->add_option("A", file_a)->required();
  gram_cmd->add_option("--side", side)->required()->check(CLI::IsMember({"left", "right"}));
  add_output(gram_cmd);

  auto* flatten_cmd = app.add_subcommand("flatten", "Drop all partitions");
  flatten_cmd->add_option("A", file_a)->required();
  add_output(flatten_cmd);

  std::optional<std::string> stdin_text;
  const auto load = [&](const std::string& path) { return cli::load(path, in, stdin_text); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  const auto report = [&](bool strict_check) {
    const auto u = load(file_a);
    const auto r = union_class(u);
    out << (json ? report_to_json(r) : report_to_text(r));
    if (strict_check && !r.proper) {
      err << "smx: not a proper union: " << identical_pair(u) << "\n";
      return static_cast<int>(kImproper);
    }
    return static_cast<int>(kOk);
  };

  try {
    if (check->parsed()) return report(true);
    if (classify->parsed()) return report(false);
    if (eq_cmd->parsed()) {
      const auto a = load(file_a);
      const auto b = load(file_b);
      const bool same = mode == "strict" ? union_strict_eq(a, b) : union_value_eq(a, b);
      out << (same ? "true" : "false") << "\n";
      return kOk;
    }

    SuperNMatrix result = [&]() {
      if (add_cmd->parsed()) return union_add(load(file_a), load(file_b));
      if (sub_cmd->parsed()) return union_sub(load(file_a), load(file_b));
      if (mul_cmd->parsed()) return union_mul(load(file_a), load(file_b));
      if (scale_cmd->parsed()) {
        const auto lambda = Rational::parse(scalar_text);
        if (!lambda) {
          throw Error(ErrorKind::InvalidRational, "'" + scalar_text + "' is not a rational");
        }
        return union_scale(*lambda, load(file_a));
      }
      if (transpose_cmd->parsed()) return union_transpose(load(file_a));
      if (gram_cmd->parsed()) {
        return union_gram(load(file_a), side == "left" ? Side::Left : Side::Right);
      }
      return union_flatten(load(file_a));
    }();
    emit(result, output, out);
    return kOk;
  } catch (const Error& e) {
    err << "smx: " << e.what() << "\n";
    return is_incompatible(e.kind()) ? kIncompatible : kIoOrParse;
  } catch (const IoFailure& e) {
    err << "smx: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const fs::filesystem_error& e) {
    err << "smx: " << e.what() << "\n";
    return kIoOrParse;
  }
}

}  // namespace smx::cli
