#include "cyclicdd/pipeline.hpp"

#include <bit>
#include <charconv>
#include <vector>

#include "cyclicdd/derivative.hpp"
#include "cyclicdd/error.hpp"

namespace cyclicdd {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorKind::ParseError, what + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::shared_ptr<const Field> make_field(unsigned m, std::uint32_t prim_poly) {
  return std::make_shared<const Field>(prim_poly ? FieldSpec{m, prim_poly} : FieldSpec::with_default_polynomial(m));
}

// Stand-alone decoders report no outer iterations; the decoder's own
// iterations go to inner_iterations.
DecodeReport single_pass(const SoftDecoder& decoder, std::span<const double> llr, const CyclicCode& code) {
  auto r = decoder.decode(llr);
  DecodeReport report;
  report.iterations = 0;
  report.converged = r.converged && code.satisfies_checks(r.bits);
  report.flops = r.flops;
  report.inner_calls = 1;
  report.inner_iterations = r.iterations;
  report.codeword = std::move(r.bits);
  return report;
}

}  // namespace

unsigned degree_for_length(std::uint64_t n) {
  for (unsigned m = kMinFieldDegree; m <= kMaxFieldDegree; ++m) {
    const std::uint64_t len = std::uint64_t{1} << m;
    if (n == len || n == len - 1) return m;
  }
  fail(ErrorKind::InvalidArgument, "length " + std::to_string(n) + " is neither 2^m nor 2^m - 1 for 2 <= m <= 16");
}

CyclicCode parse_code_spec(const std::string& spec, std::uint32_t prim_poly) {
  const auto parts = split(spec, ':');
  if (parts.size() == 3 && parts[0] == "bch") {
    const unsigned m = degree_for_length(parse_uint(parts[1], "bch length"));
    const auto delta = static_cast<unsigned>(parse_uint(parts[2], "bch designed distance"));
    auto field = make_field(m, prim_poly);
    return CyclicCode::from_exponent_set(field, bch_exponent_set(m, delta));
  }
  if (parts.size() == 3 && parts[0] == "rm") {
    const auto r = static_cast<unsigned>(parse_uint(parts[1], "rm order"));
    const auto m = static_cast<unsigned>(parse_uint(parts[2], "rm degree"));
    auto field = make_field(m, prim_poly);
    return CyclicCode::from_exponent_set(field, rm_exponent_set(r, m));
  }
  if (parts.size() == 2) {
    const unsigned m = degree_for_length(parse_uint(parts[0], "code length"));
    auto field = make_field(m, prim_poly);
    return CyclicCode::from_generator(field, Gf2Poly::from_hex(parts[1]));
  }
  fail(ErrorKind::ParseError, "code spec must be <n>:<hex>, bch:<n>:<delta> or rm:<r>:<m>, got '" + spec + "'");
}

SparseParityMatrix parse_parity_spec(const std::string& spec, const BinaryMatrix& generator, const Field& field) {
  SparseParityMatrix h;
  if (spec == "auto") {
    h = dual_orbit_parity_matrix_full_rank(generator);
  } else if (spec.rfind("alist:", 0) == 0) {
    h = load_alist(spec.substr(6));
  } else {
    const auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "eg") {
      h = eg_line_parity_matrix(static_cast<unsigned>(parse_uint(parts[1], "eg dimension")),
                                static_cast<unsigned>(parse_uint(parts[2], "eg subfield bits")), field);
    } else if (parts.size() == 2 && parts[0] == "dual-orbit") {
      h = dual_orbit_parity_matrix(generator, static_cast<unsigned>(parse_uint(parts[1], "dual-orbit weight")));
    } else {
      fail(ErrorKind::ParseError,
           "parity spec must be auto, eg:<mu>:<s>, dual-orbit:<w> or alist:<path>, got '" + spec + "'");
    }
  }
  if (h.cols() != generator.cols()) fail(ErrorKind::InvalidArgument, "parity-check matrix has the wrong length");
  if (!h.orthogonal_to(generator)) fail(ErrorKind::InvalidArgument, "parity-check matrix is not orthogonal to the code");
  return h;
}

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::DdSpa: return "dd-spa";
    case Algorithm::DdOsd: return "dd-osd";
    case Algorithm::DdMld: return "dd-mld";
    case Algorithm::Spa: return "spa";
    case Algorithm::Osd: return "osd";
    case Algorithm::Mld: return "mld";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  for (auto a : {Algorithm::DdSpa, Algorithm::DdOsd, Algorithm::DdMld, Algorithm::Spa, Algorithm::Osd, Algorithm::Mld})
    if (to_string(a) == text) return a;
  fail(ErrorKind::ParseError, "unknown algorithm '" + std::string(text) + "'");
}

FrameDecoder::FrameDecoder(const CyclicCode& code, const DecoderSettings& settings)
    : code_(code), settings_(settings) {
  const Field& field = code_.field();
  const auto algo = settings_.algorithm;
  if (is_derivative(algo)) {
    directions_ = DirectionSet::parse(settings_.directions, field);
    const bool fold = settings_.minimal && algo != Algorithm::DdSpa;
    if (settings_.minimal) {
      inner_generator_ = minimal_dd_basis(code_, field.one()).basis;
    } else {
      const auto dd = CyclicCode::from_exponent_set(code_.field_ptr(), cyclic_dd(code_.exponents()));
      inner_generator_ = dd.generator_matrix();
    }
    const BinaryMatrix decoding_matrix = fold ? fold_generator(inner_generator_, field, field.one()) : inner_generator_;
    std::shared_ptr<const SoftDecoder> base;
    switch (algo) {
      case Algorithm::DdSpa:
        base = std::make_shared<SpaDecoder>(parse_parity_spec(settings_.hmatrix, inner_generator_, field),
                                            settings_.spa_max_iterations);
        break;
      case Algorithm::DdOsd: base = std::make_shared<OsdDecoder>(decoding_matrix, settings_.osd_order); break;
      default: base = std::make_shared<MldDecoder>(decoding_matrix); break;
    }
    inner_ = fold ? std::make_shared<PairFoldedDecoder>(base, field, field.one()) : base;
    return;
  }
  inner_generator_ = code_.generator_matrix();
  switch (algo) {
    case Algorithm::Spa:
      inner_ = std::make_shared<SpaDecoder>(parse_parity_spec(settings_.hmatrix, inner_generator_, field),
                                            settings_.spa_max_iterations);
      break;
    case Algorithm::Osd: inner_ = std::make_shared<OsdDecoder>(inner_generator_, settings_.osd_order); break;
    default: inner_ = std::make_shared<MldDecoder>(inner_generator_); break;
  }
}

DecodeReport FrameDecoder::decode(std::span<const double> llr) const {
  if (!is_derivative(settings_.algorithm)) return single_pass(*inner_, llr, code_);
  if (settings_.minimal) return dd_decode_minimal(llr, code_, *inner_, directions_, settings_.dd_max_iterations);
  return dd_decode_cyclic(llr, code_, *inner_, directions_, settings_.dd_max_iterations);
}

}  // namespace cyclicdd
