#pragma once

// Command-line front end. run_cli() holds all behaviour so it can be driven
// in-process; tools/xdproj.cpp only forwards argv.
//
// Exit codes: 0 success, 2 usage, 3 parse, 4 shape/dims, 5 numeric
// (overflow, capacity, degenerate input).

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xdp/codec.hpp"
#include "xdp/cs_analysis.hpp"
#include "xdp/io.hpp"

namespace xdp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kShape = 4,
  kNumeric = 5,
};

namespace detail {

inline Side parse_side(const std::string& s) {
  return s == "right" ? Side::Right : Side::Left;
}

inline void require_arity(const Hypermatrix& h, const Dims& dims,
                          const char* flag) {
  if (dims.size() != h.order()) {
    throw ShapeError(std::string(flag) + " has " + std::to_string(dims.size()) +
                     " entries but the input has order " +
                     std::to_string(h.order()));
  }
}

inline std::string format_g7(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

inline std::string report_block(const RoundTripReport& r) {
  using io::format_double;
  return "l2_error=" + format_double(r.l2_error) + "\n" +
         "rmse=" + format_double(r.rmse) + "\n" +
         "dv_error=" + format_double(r.dv_error) + "\n" +
         "compression_ratio=" + format_double(r.compression_ratio) + "\n";
}

inline std::string spark_text(const std::optional<Spark>& s) {
  return s ? to_string(*s) : "skipped";
}

}  // namespace detail

inline int cmd_compress(const std::string& input, const std::string& output,
                        const Dims& target, Side side, std::ostream& out) {
  const io::Payload payload = io::read_payload(input);
  const Hypermatrix a = io::to_hypermatrix(payload);
  detail::require_arity(a, target, "--target-dims");
  const CodecSpec spec{a.dims(), target, side};
  io::write_payload(output, io::like_payload(payload, compress_nd(a, spec)));
  out << "compression_ratio=" << io::format_double(spec.compression_ratio())
      << "\n";
  return kOk;
}

inline int cmd_decompress(const std::string& input, const std::string& output,
                          const Dims& source, Side side, std::ostream& out) {
  const io::Payload payload = io::read_payload(input);
  const Hypermatrix b = io::to_hypermatrix(payload);
  detail::require_arity(b, source, "--source-dims");
  const CodecSpec spec{source, b.dims(), side};
  io::write_payload(output, io::like_payload(payload, decompress_nd(b, spec)));
  out << "compression_ratio=" << io::format_double(spec.compression_ratio())
      << "\n";
  return kOk;
}

inline int cmd_roundtrip(const std::string& input, const Dims& target,
                         Side side, const std::string& report_path,
                         std::ostream& out) {
  const Hypermatrix a = io::to_hypermatrix(io::read_payload(input));
  detail::require_arity(a, target, "--target-dims");
  const RoundTrip rt = roundtrip(a, CodecSpec{a.dims(), target, side});
  const std::string block = detail::report_block(rt.report);
  out << block;
  if (!report_path.empty()) io::detail::write_file(report_path, block);
  return kOk;
}

inline int cmd_analyze(const std::string& matrix_path, dim_t kron_s,
                       std::ostream& out, std::ostream& err) {
  const SensingMatrix a(io::read_csv_matrix(matrix_path));
  if (a.overdetermined()) {
    err << "warning: sensing matrix has " << a.rows() << " rows and "
        << a.cols() << " columns (rows >= cols)\n";
  }
  const CsSummary s = recovery_bound(a);
  out << "spark=" << detail::spark_text(s.spark) << "\n"
      << "coherence=" << detail::format_g7(s.coherence) << "\n"
      << "sparsity_bound=" << detail::format_g7(s.sparsity_bound) << "\n"
      << "max_guaranteed_k="
      << (s.max_guaranteed_k ? std::to_string(*s.max_guaranteed_k) : "inf")
      << "\n";
  if (kron_s > 0) {
    const KronInvarianceReport r = kron_invariance_report(a, kron_s);
    out << "kron_s=" << r.s << "\n"
        << "spark_kron=" << detail::spark_text(r.spark_kron) << "\n"
        << "coherence_kron=" << detail::format_g7(r.mu_kron) << "\n"
        << "spark_equal="
        << (r.spark_a ? (*r.spark_a == *r.spark_kron ? "true" : "false")
                      : "skipped")
        << "\n"
        << "coherence_equal="
        << (std::abs(r.mu_a - r.mu_kron) <= 1e-12 ? "true" : "false") << "\n";
  }
  return kOk;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Cross-dimensional projection codec and compressed-sensing "
               "analytics",
               "xdproj"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string report;
  std::string side_name = "left";
  Dims dims;
  dim_t kron_s = 0;

  auto add_side = [&](CLI::App* sub) {
    sub->add_option("--side", side_name, "left or right system")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
  };
  auto add_dims = [&](CLI::App* sub, const std::string& flag,
                      const std::string& help) {
    sub->add_option(flag, dims, help)->delimiter(',')->required();
  };

  auto* compress = app.add_subcommand("compress", "project a signal to smaller dims");
  compress->add_option("input", input)->required();
  compress->add_option("output", output)->required();
  add_dims(compress, "--target-dims", "comma-separated target dims");
  add_side(compress);

  auto* decompress =
      app.add_subcommand("decompress", "project a compressed signal back up");
  decompress->add_option("input", input)->required();
  decompress->add_option("output", output)->required();
  add_dims(decompress, "--source-dims", "comma-separated dims to recover");
  add_side(decompress);

  auto* rt = app.add_subcommand("roundtrip", "compress, decompress, report error");
  rt->add_option("input", input)->required();
  add_dims(rt, "--target-dims", "comma-separated target dims");
  add_side(rt);
  rt->add_option("--report", report, "write the report block to this file");

  auto* analyze =
      app.add_subcommand("analyze", "spark, coherence and sparsity bound");
  analyze->add_option("matrix", input, "CSV matrix, one row per line")
      ->required();
  analyze->add_option("--kron-s", kron_s, "also compare against A ⊗ I_s")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const Side side = detail::parse_side(side_name);
  try {
    if (compress->parsed()) return cmd_compress(input, output, dims, side, out);
    if (decompress->parsed()) {
      return cmd_decompress(input, output, dims, side, out);
    }
    if (rt->parsed()) return cmd_roundtrip(input, dims, side, report, out);
    return cmd_analyze(input, kron_s, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << "\n";
    return kShape;
  } catch (const InvalidDimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kShape;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kNumeric;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kNumeric;
  } catch (const DegenerateError& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kNumeric;
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace xdp::cli
