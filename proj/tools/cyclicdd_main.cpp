// cyclicdd: code algebra queries, single-frame decoding, BLER simulation and
// parity-check matrix utilities.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclicdd/code.hpp"
#include "cyclicdd/derivative.hpp"
#include "cyclicdd/error.hpp"
#include "cyclicdd/parity_matrix.hpp"
#include "cyclicdd/pipeline.hpp"
#include "cyclicdd/simulation.hpp"

using namespace cyclicdd;

namespace {

constexpr int kExitLibraryError = 2;

std::uint32_t parse_hex_u32(const std::string& text) {
  if (text.empty()) return 0;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used, 16);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != text.size() || v > 0xFFFFFFFFul) fail(ErrorKind::ParseError, "invalid hex value '" + text + "'");
  return static_cast<std::uint32_t>(v);
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

void print_set(std::ostream& out, const std::string& label, const Field& field, const ExponentSet& s) {
  const auto bound = bch_bound(s);
  out << label << "_k: " << s.size() << '\n'
      << label << "_exponents: " << join(s.members()) << '\n'
      << label << "_representatives: " << join(s.representatives()) << '\n'
      << label << "_bch_bound: " << bound.cyclic << '\n'
      << label << "_bch_bound_extended: " << bound.extended << '\n'
      << label << "_generator: " << generator_from_exponent_set(s, field).to_hex() << '\n';
}

struct CodeOptions {
  std::uint64_t n = 0;
  std::string gen_hex;
  std::string spec;
  std::string prim_poly;
};

void add_code_options(CLI::App* cmd, CodeOptions& o) {
  cmd->add_option("--n", o.n, "Code length (2^m or 2^m - 1)");
  cmd->add_option("--gen-hex", o.gen_hex, "Generator polynomial, bit i = coefficient of x^i");
  cmd->add_option("--code", o.spec, "Code spec: <n>:<hex>, bch:<n>:<delta> or rm:<r>:<m>");
  cmd->add_option("--prim-poly", o.prim_poly, "Primitive polynomial in hex (default per m)");
}

CyclicCode code_from(const CodeOptions& o) {
  const auto poly = parse_hex_u32(o.prim_poly);
  if (!o.spec.empty()) return parse_code_spec(o.spec, poly);
  if (o.n == 0 || o.gen_hex.empty()) fail(ErrorKind::InvalidArgument, "give --code, or both --n and --gen-hex");
  return parse_code_spec(std::to_string(o.n) + ":" + o.gen_hex, poly);
}

std::vector<double> read_numbers(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(token, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != token.size()) fail(ErrorKind::ParseError, "not a number in " + path + ": '" + token + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended cyclic codes and derivative decoding"};
  app.require_subcommand(1);

  // code info|dd|da
  auto* code_cmd = app.add_subcommand("code", "Exponent sets, descendants and ascendants");
  code_cmd->require_subcommand(1);
  CodeOptions code_opts;
  bool print_matrix = false;
  auto* info_cmd = code_cmd->add_subcommand("info", "Dimension, exponent set, representatives, BCH bound");
  auto* dd_cmd = code_cmd->add_subcommand("dd", "Cyclic derivative descendant");
  auto* da_cmd = code_cmd->add_subcommand("da", "Cyclic derivative ascendant");
  for (auto* c : {info_cmd, dd_cmd, da_cmd}) {
    add_code_options(c, code_opts);
    c->add_flag("--matrix", print_matrix, "Also print the generator matrix as 0/1 rows");
  }

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "Decode LLR frames read from a file");
  CodeOptions dec_code;
  DecoderSettings dec;
  std::string algo = "dd-spa";
  std::string llr_in;
  std::string decode_out;
  add_code_options(decode_cmd, dec_code);
  decode_cmd->add_option("--algo", algo, "dd-spa | dd-osd | dd-mld | spa | osd | mld")->capture_default_str();
  decode_cmd->add_option("--directions", dec.directions, "all | k:<count>:<seed>")->capture_default_str();
  decode_cmd->add_option("--max-iter", dec.dd_max_iterations, "Derivative-decoding iterations")->capture_default_str();
  decode_cmd->add_option("--spa-iter", dec.spa_max_iterations, "SPA iterations")->capture_default_str();
  decode_cmd->add_option("--osd-order", dec.osd_order, "OSD order")->capture_default_str();
  decode_cmd->add_option("--hmatrix", dec.hmatrix, "auto | eg:<mu>:<s> | dual-orbit:<w> | alist:<path>")
      ->capture_default_str();
  decode_cmd->add_flag("--minimal", dec.minimal, "Decode the minimal descendant with cyclic shifts");
  decode_cmd->add_option("--llr-in", llr_in, "Whitespace-separated LLRs, one or more frames")->required();
  decode_cmd->add_option("--out", decode_out, "Output file for decoded 0/1 rows (default stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo BLER simulation");
  std::string config_path;
  std::string csv_out;
  sim_cmd->add_option("--config", config_path, "JSON configuration")->required();
  sim_cmd->add_option("--out", csv_out, "CSV output (default stdout)");

  // hmatrix eg|dual-orbit|check
  auto* h_cmd = app.add_subcommand("hmatrix", "Parity-check matrices in alist format");
  h_cmd->require_subcommand(1);
  unsigned eg_m = 0, eg_mu = 0, eg_s = 0;
  std::string eg_poly;
  std::string alist_path;
  auto* eg_cmd = h_cmd->add_subcommand("eg", "Line incidence matrix of EG(mu, 2^s), mu * s = m");
  eg_cmd->add_option("--m", eg_m, "Field degree")->required();
  eg_cmd->add_option("--prim-poly", eg_poly, "Primitive polynomial in hex");
  eg_cmd->add_option("--mu", eg_mu, "Geometry dimension")->required();
  eg_cmd->add_option("--s", eg_s, "Subfield degree")->required();
  eg_cmd->add_option("--alist", alist_path, "Output file")->required();

  auto* orbit_cmd = h_cmd->add_subcommand("dual-orbit", "Low-weight dual codewords");
  CodeOptions h_code;
  bool descendant = false;
  unsigned max_weight = 0;
  add_code_options(orbit_cmd, h_code);
  orbit_cmd->add_flag("--descendant", descendant, "Use the cyclic descendant of the code");
  orbit_cmd->add_option("--max-weight", max_weight, "Largest row weight (0: smallest full-rank set)");
  orbit_cmd->add_option("--alist", alist_path, "Output file")->required();

  auto* check_cmd = h_cmd->add_subcommand("check", "Verify an alist matrix against a code");
  add_code_options(check_cmd, h_code);
  check_cmd->add_flag("--descendant", descendant, "Check against the cyclic descendant of the code");
  check_cmd->add_option("--alist", alist_path, "Input file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (code_cmd->parsed()) {
      const auto code = code_from(code_opts);
      const auto& f = code.field();
      std::cout << "n: " << code.length() << "\nm: " << f.m() << "\nprim_poly: 0x" << std::hex << std::uppercase
                << f.spec().prim_poly << std::dec << '\n';
      print_set(std::cout, "code", f, code.exponents());
      if (info_cmd->parsed()) {
        if (print_matrix) std::cout << code.generator_matrix().to_string();
      } else if (dd_cmd->parsed()) {
        const auto dd = CyclicCode::from_exponent_set(code.field_ptr(), cyclic_dd(code.exponents()));
        print_set(std::cout, "dd", f, dd.exponents());
        std::cout << "minimal_dd_k: " << minimal_dd_basis(code, f.one()).dimension() << '\n';
        if (print_matrix) std::cout << dd.generator_matrix().to_string();
      } else {
        const auto da = CyclicCode::from_exponent_set(code.field_ptr(), cyclic_da(code.exponents()));
        print_set(std::cout, "da", f, da.exponents());
        if (print_matrix) std::cout << da.generator_matrix().to_string();
      }
    } else if (decode_cmd->parsed()) {
      dec.algorithm = parse_algorithm(algo);
      const FrameDecoder decoder(code_from(dec_code), dec);
      const auto values = read_numbers(llr_in);
      const std::size_t n = decoder.code().length();
      if (values.empty() || values.size() % n != 0) {
        fail(ErrorKind::ParseError, "LLR count " + std::to_string(values.size()) + " is not a multiple of n = " +
                                        std::to_string(n));
      }
      std::ofstream file;
      if (!decode_out.empty()) {
        file.open(decode_out);
        if (!file) fail(ErrorKind::IoError, "cannot write " + decode_out);
      }
      std::ostream& out = decode_out.empty() ? std::cout : file;
      for (std::size_t start = 0; start < values.size(); start += n) {
        const auto report = decoder.decode(std::span<const double>(values).subspan(start, n));
        for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << static_cast<int>(report.codeword[i]);
        out << '\n';
        std::cerr << "frame " << start / n << ": converged=" << report.converged << " iterations=" << report.iterations
                  << " inner_iterations=" << report.inner_iterations << " flops=" << report.flops << '\n';
      }
    } else if (sim_cmd->parsed()) {
      const auto result = run_monte_carlo(load_config(config_path));
      if (csv_out.empty()) {
        write_results(std::cout, result);
      } else {
        write_results(std::filesystem::path(csv_out), result);
      }
    } else if (eg_cmd->parsed()) {
      const Field f(eg_poly.empty() ? FieldSpec::with_default_polynomial(eg_m) : FieldSpec{eg_m, parse_hex_u32(eg_poly)});
      const auto h = eg_line_parity_matrix(eg_mu, eg_s, f);
      save_alist(alist_path, h);
      std::cout << "rows: " << h.rows() << "\ncols: " << h.cols() << '\n';
    } else if (orbit_cmd->parsed() || check_cmd->parsed()) {
      const auto code = code_from(h_code);
      const auto target =
          descendant ? CyclicCode::from_exponent_set(code.field_ptr(), cyclic_dd(code.exponents())) : code;
      if (orbit_cmd->parsed()) {
        const auto h = max_weight ? dual_orbit_parity_matrix(target.generator_matrix(), max_weight)
                                  : dual_orbit_parity_matrix_full_rank(target.generator_matrix());
        save_alist(alist_path, h);
        std::cout << "rows: " << h.rows() << "\ncols: " << h.cols() << '\n';
      } else {
        const auto h = load_alist(alist_path);
        const bool ok = h.cols() == target.length() && h.orthogonal_to(target.generator_matrix());
        const auto rank = h.to_dense().rank();
        std::cout << "rows: " << h.rows() << "\ncols: " << h.cols() << "\nrank: " << rank
                  << "\ndual_dimension: " << target.length() - target.dimension()
                  << "\northogonal: " << (ok ? "yes" : "no") << '\n';
        if (!ok) fail(ErrorKind::InvalidArgument, "matrix is not a parity-check matrix of the code");
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLibraryError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLibraryError;
  }
  return EXIT_SUCCESS;
}
