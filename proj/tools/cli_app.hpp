#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "caterpillar/caterpillar.hpp"

// Command-line front end. Kept in a header so tests can drive it with
// in-memory streams.

namespace caterpillar::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

namespace detail {

using json = nlohmann::json;

inline std::string big(const BigCount& v) { return v.str(); }

inline json report_json(const CountReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.spine_len},
                    {"class_order", big(row.class_order)},
                    {"symmetric", big(row.symmetric_order)},
                    {"orbits", big(row.orbit_count)}});
  }
  return {{"n_vertices", r.n_vertices},
          {"rows", rows},
          {"total", big(r.total_by_sum)},
          {"closed_form", big(r.total_closed_form)}};
}

enum class GraphFormat { spine, graph6, edgelist, dot };

inline const std::map<std::string, GraphFormat> kGraphFormats{{"spine", GraphFormat::spine},
                                                               {"graph6", GraphFormat::graph6},
                                                               {"edgelist", GraphFormat::edgelist},
                                                               {"dot", GraphFormat::dot}};

inline void write_graph(std::ostream& os, GraphFormat f, const Tree& t, const Spine& s, std::size_t index) {
  switch (f) {
    case GraphFormat::spine: os << to_literal(s) << '\n'; break;
    case GraphFormat::graph6: os << to_graph6(t) << '\n'; break;
    case GraphFormat::edgelist: write_edge_list(os, t); break;
    case GraphFormat::dot: write_dot(os, t, "caterpillar_" + std::to_string(index)); break;
  }
}

inline Tree read_graph(std::istream& in, GraphFormat f) {
  if (f == GraphFormat::graph6) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (caterpillar::detail::trim(line).empty()) continue;
      try {
        return from_graph6(line);
      } catch (const InputError& e) {
        throw InputError(e.what(), line_no);
      }
    }
    throw InputError("no graph6 line in input");
  }
  return read_edge_list(in);
}

// Where output goes: the caller's stream, or a file given by --out.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ostream* stream_;
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace detail

// Runs one invocation. Returns the process exit status:
// 0 success, 1 domain or verification failure, 2 usage or parse error.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::GraphFormat;
  CLI::App app{"Count, enumerate, encode and verify non-isomorphic caterpillar trees"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string out_path;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output to this file instead of standard output");
  };

  // count
  std::uint64_t count_n = 0;
  std::optional<std::uint64_t> count_to;
  bool breakdown = false;
  bool machine = false;
  auto* count = app.add_subcommand("count", "Number of caterpillars on N vertices");
  count->add_option("N", count_n, "Vertex count (>= 3)")->required();
  count->add_option("--to", count_to, "Print one row per vertex count from N to this value");
  count->add_flag("--breakdown", breakdown, "Per spine length table (class order, symmetric, orbits)");
  count->add_flag("--machine", machine, "Machine-readable JSON output");
  add_out(count);

  // enumerate
  std::uint64_t enum_n = 0;
  GraphFormat enum_format = GraphFormat::spine;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every non-isomorphic caterpillar on N vertices");
  enumerate->add_option("N", enum_n, "Vertex count (>= 3)")->required();
  enumerate->add_option("--format", enum_format, "spine | graph6 | edgelist | dot")
      ->transform(CLI::CheckedTransformer(detail::kGraphFormats, CLI::ignore_case));
  add_out(enumerate);

  // encode / recognize
  std::string input_path = "-";
  GraphFormat input_format = GraphFormat::edgelist;
  const std::map<std::string, GraphFormat> input_formats{{"edgelist", GraphFormat::edgelist},
                                                         {"graph6", GraphFormat::graph6}};
  auto* encode_cmd = app.add_subcommand("encode", "Print the canonical spine of a caterpillar");
  auto* recognize_cmd = app.add_subcommand("recognize", "Classify a graph: caterpillar, tree, or neither");
  for (auto* sub : {encode_cmd, recognize_cmd}) {
    sub->add_option("input", input_path, "Input file, '-' for standard input");
    sub->add_option("--format", input_format, "edgelist | graph6")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
    add_out(sub);
  }

  // decode
  std::string spine_literal;
  GraphFormat decode_format = GraphFormat::edgelist;
  auto* decode_cmd = app.add_subcommand("decode", "Build the caterpillar induced by a spine");
  decode_cmd->add_option("spine", spine_literal, "Spine literal, e.g. 2,1,3")->required();
  decode_cmd->add_option("--format", decode_format, "edgelist | graph6 | dot | spine")
      ->transform(CLI::CheckedTransformer(detail::kGraphFormats, CLI::ignore_case));
  add_out(decode_cmd);

  // bijection
  std::string map_name;
  auto* bijection = app.add_subcommand("bijection", "Apply f, g, h or an inverse to a symmetric spine");
  bijection->add_option("map", map_name, "f | f-inv | g | g-inv | h | h-inv")
      ->required()
      ->check(CLI::IsMember({"f", "f-inv", "g", "g-inv", "h", "h-inv"}));
  bijection->add_option("spine", spine_literal, "Spine literal")->required();
  add_out(bijection);

  // symmetric
  std::uint64_t sym_n = 0, sym_k = 0;
  bool list = false;
  auto* symmetric = app.add_subcommand("symmetric", "Number of palindromic spines in a spine class");
  symmetric->add_option("N", sym_n, "Vertex count")->required();
  symmetric->add_option("k", sym_k, "Spine length")->required();
  symmetric->add_flag("--list", list, "Also list the palindromic spines");
  symmetric->add_flag("--machine", machine, "Machine-readable JSON output");
  add_out(symmetric);

  // verify
  verify::Options vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Run every consistency check up to Nmax");
  verify_cmd->add_option("Nmax", vopt.n_max, "Largest vertex count (>= 3)")->required();
  verify_cmd->add_option("--oracle-max", vopt.oracle_ceiling, "Largest N for the brute-force census (<= 10)")
      ->capture_default_str();
  verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_out(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    detail::Sink sink(out, out_path);
    std::ostream& os = *sink;

    if (*count) {
      const std::uint64_t last = count_to.value_or(count_n);
      if (count_n < 3) throw DomainError("count requires N >= 3: the closed form and spine classes start at 3 vertices");
      if (last < count_n) throw DomainError("--to must be >= N");
      const bool range = count_to.has_value();
      if (breakdown) {
        detail::json docs = detail::json::array();
        for (std::uint64_t n = count_n; n <= last; ++n) {
          const auto report = caterpillar_count_sum(n);
          if (machine) {
            docs.push_back(detail::report_json(report));
          } else {
            if (n != count_n) os << '\n';
            if (range) os << "# N=" << n << '\n';
            write_report_tsv(os, report);
          }
        }
        if (machine) os << (range ? docs : docs.front()).dump(2) << '\n';
      } else if (range) {
        detail::json rows = detail::json::array();
        if (!machine) os << "N\tcaterpillars\n";
        for (std::uint64_t n = count_n; n <= last; ++n) {
          const auto c = caterpillar_count_closed(n);
          if (machine) {
            rows.push_back({{"n_vertices", n}, {"caterpillars", detail::big(c)}});
          } else {
            os << n << '\t' << c << '\n';
          }
        }
        if (machine) os << detail::json{{"counts", rows}}.dump(2) << '\n';
      } else if (machine) {
        os << detail::json{{"n_vertices", count_n}, {"caterpillars", detail::big(caterpillar_count_closed(count_n))}}
                  .dump(2)
           << '\n';
      } else {
        os << caterpillar_count_closed(count_n) << '\n';
      }
      return kOk;
    }

    if (*enumerate) {
      if (enum_n < 3) throw DomainError("enumerate requires N >= 3");
      std::size_t index = 0;
      for (Caterpillars stream(enum_n); !stream.done(); stream.advance()) {
        if (enum_format == GraphFormat::spine) {
          os << stream.spine() << '\n';
        } else {
          const auto item = stream.value();
          if (enum_format == GraphFormat::edgelist && index > 0) os << '\n';
          detail::write_graph(os, enum_format, item.tree, item.spine.spine(), index);
        }
        ++index;
      }
      os.flush();
      return kOk;
    }

    if (*encode_cmd || *recognize_cmd) {
      std::ifstream file;
      std::istream* src = &in;
      if (input_path != "-") {
        file.open(input_path, std::ios::binary);
        if (!file) throw InputError("cannot open input file '" + input_path + "'");
        src = &file;
      }
      const Tree g = detail::read_graph(*src, input_format);
      const auto c = recognize(g);
      if (*encode_cmd) {
        const auto* cat = std::get_if<IsCaterpillar>(&c);
        if (!cat) {
          err << "error: not a caterpillar (" << tag_name(c) << ")\n";
          return kFailure;
        }
        os << cat->spine << '\n';
        return kOk;
      }
      os << tag_name(c);
      if (const auto* cat = std::get_if<IsCaterpillar>(&c)) os << ' ' << cat->spine;
      if (const auto* bad = std::get_if<NotATree>(&c)) os << ": " << bad->reason;
      os << '\n';
      return std::holds_alternative<IsCaterpillar>(c) ? kOk : kFailure;
    }

    if (*decode_cmd) {
      const auto s = parse_spine(spine_literal);
      detail::write_graph(os, decode_format, decode(s), s, 0);
      return kOk;
    }

    if (*bijection) {
      const auto s = parse_spine(spine_literal);
      const std::map<std::string, std::function<Spine(const Spine&)>> maps{
          {"f", bij_f}, {"f-inv", bij_f_inv}, {"g", bij_g}, {"g-inv", bij_g_inv}, {"h", bij_h}, {"h-inv", bij_h_inv}};
      try {
        const auto image = maps.at(map_name)(s);
        os << image << ' ' << class_params(image) << '\n';
      } catch (const BijectionDomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kFailure;
      }
      return kOk;
    }

    if (*symmetric) {
      const auto p = SpineClassParams::make(sym_n, sym_k);
      const auto order = symmetric_class_order(p);
      std::vector<std::string> members;
      if (list) {
        for (Compositions c(p); !c.done(); c.advance()) {
          if (is_palindrome(c.current())) members.push_back(to_literal(c.value()));
        }
      }
      if (machine) {
        detail::json doc{{"n_vertices", sym_n}, {"spine_len", sym_k}, {"symmetric", detail::big(order)}};
        if (list) doc["spines"] = members;
        os << doc.dump(2) << '\n';
      } else {
        os << order << '\n';
        for (const auto& m : members) os << m << '\n';
      }
      return kOk;
    }

    if (*verify_cmd) {
      const auto results = verify::run_all(vopt);
      bool all = true;
      for (const auto& r : results) {
        os << r;
        all = all && r.passed;
      }
      os << (all ? "ALL PASS" : "VERIFICATION FAILED") << '\n';
      return all ? kOk : kFailure;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace caterpillar::cli
