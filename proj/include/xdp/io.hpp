#pragma once

// Signal file formats.
//
//   CSV vector  one value per line; '#' starts a comment; blank lines ignored.
//   CSV matrix  one row per line, values separated by commas.
//   PGM         P2 (ASCII) or P5 (binary), maxval <= 255. Pixels are read as
//               reals; on write they are clamped to [0, 255] and rounded half
//               away from zero. Dims are (height, width).
//   XDH         "XDH1", u32 order d, d × u64 dims, prod(dims) × f64 values in
//               lexicographic order. All integers and floats little-endian.

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "xdp/hypermatrix.hpp"
#include "xdp/matrix.hpp"

namespace xdp::io {

enum class Format { CsvVector, Pgm, Xdh };

enum class PgmEncoding { Ascii, Binary };

struct PgmImage {
  DenseMatrix pixels;  // rows = height
  PgmEncoding encoding = PgmEncoding::Binary;
};

using Payload = std::variant<MixedVector, PgmImage, Hypermatrix>;

/// Shortest decimal text that parses back to exactly v.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

inline double parse_double(std::string_view tok, std::size_t line_no) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() ||
      !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                     std::string(tok) + "'");
  }
  return v;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ParseError("write to '" + path + "' failed");
}

template <class T>
void put_le(std::string& out, T v) {
  static_assert(std::is_unsigned_v<T>);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
}

template <class T>
T get_le(std::string_view bytes, std::size_t& pos) {
  if (bytes.size() - pos < sizeof(T)) throw ParseError("XDH: truncated file");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    v |= static_cast<T>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
  }
  pos += sizeof(T);
  return v;
}

}  // namespace detail

// --- CSV -------------------------------------------------------------------

inline MixedVector parse_csv_vector(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto body = detail::strip_comment(line);
    if (body.empty()) continue;
    values.push_back(detail::parse_double(body, line_no));
  }
  if (values.empty()) throw ParseError("CSV vector: no values");
  return MixedVector(std::move(values));
}

inline std::string format_csv_vector(const MixedVector& x) {
  std::string out;
  for (double v : x) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

inline DenseMatrix parse_csv_matrix(std::string_view text) {
  std::vector<double> values;
  dim_t cols = 0;
  dim_t rows = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto body = detail::strip_comment(line);
    if (body.empty()) continue;
    dim_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      values.push_back(detail::parse_double(
          body.substr(start, comma == std::string_view::npos
                                 ? std::string_view::npos
                                 : comma - start),
          line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("CSV matrix: line " + std::to_string(line_no) + " has " +
                       std::to_string(count) + " values, expected " +
                       std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("CSV matrix: no rows");
  return DenseMatrix(rows, cols, std::move(values));
}

// --- PGM -------------------------------------------------------------------

inline PgmImage parse_pgm(std::string_view bytes) {
  std::size_t pos = 0;
  auto skip_space_and_comments = [&] {
    while (pos < bytes.size()) {
      const char c = bytes[pos];
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto next_uint = [&](const char* what) -> std::uint64_t {
    skip_space_and_comments();
    std::uint64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), v);
    if (ec != std::errc() || ptr == bytes.data() + pos) {
      throw ParseError(std::string("PGM: bad ") + what);
    }
    pos = static_cast<std::size_t>(ptr - bytes.data());
    return v;
  };

  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw ParseError("PGM: missing P2/P5 magic");
  }
  const PgmEncoding enc = bytes[1] == '2' ? PgmEncoding::Ascii : PgmEncoding::Binary;
  pos = 2;
  const auto width = next_uint("width");
  const auto height = next_uint("height");
  const auto maxval = next_uint("maxval");
  if (width == 0 || height == 0) throw ParseError("PGM: empty image");
  if (maxval == 0 || maxval > 255) {
    throw ParseError("PGM: maxval must be in [1, 255]");
  }
  const dim_t n = checked_mul(width, height);
  std::vector<double> px(n);
  if (enc == PgmEncoding::Ascii) {
    for (dim_t i = 0; i < n; ++i) {
      const auto v = next_uint("pixel");
      if (v > maxval) throw ParseError("PGM: pixel exceeds maxval");
      px[i] = static_cast<double>(v);
    }
  } else {
    // Exactly one whitespace byte separates maxval from the raster.
    if (pos >= bytes.size() ||
        !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      throw ParseError("PGM: malformed header");
    }
    ++pos;
    if (bytes.size() - pos < n) throw ParseError("PGM: truncated raster");
    for (dim_t i = 0; i < n; ++i) {
      px[i] = static_cast<double>(static_cast<unsigned char>(bytes[pos + i]));
    }
  }
  return {DenseMatrix(height, width, std::move(px)), enc};
}

/// Clamp to [0, 255], round half away from zero.
inline unsigned pgm_pixel(double v) {
  return static_cast<unsigned>(std::round(std::clamp(v, 0.0, 255.0)));
}

inline std::string format_pgm(const PgmImage& img) {
  const DenseMatrix& m = img.pixels;
  std::string out = img.encoding == PgmEncoding::Ascii ? "P2\n" : "P5\n";
  out += std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n255\n";
  if (img.encoding == PgmEncoding::Binary) {
    for (double v : m.values()) out.push_back(static_cast<char>(pgm_pixel(v)));
    return out;
  }
  for (dim_t i = 0; i < m.rows(); ++i) {
    for (dim_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(pgm_pixel(m(i, j)));
    }
    out += '\n';
  }
  return out;
}

// --- XDH -------------------------------------------------------------------

inline constexpr std::string_view kXdhMagic = "XDH1";

inline std::string format_xdh(const Hypermatrix& a) {
  std::string out(kXdhMagic);
  detail::put_le(out, static_cast<std::uint32_t>(a.order()));
  for (dim_t d : a.dims()) detail::put_le(out, static_cast<std::uint64_t>(d));
  for (double v : a.values()) {
    detail::put_le(out, std::bit_cast<std::uint64_t>(v));
  }
  return out;
}

inline Hypermatrix parse_xdh(std::string_view bytes) {
  if (bytes.substr(0, kXdhMagic.size()) != kXdhMagic) {
    throw ParseError("XDH: missing magic");
  }
  std::size_t pos = kXdhMagic.size();
  const auto order = detail::get_le<std::uint32_t>(bytes, pos);
  if (order == 0) throw ParseError("XDH: order 0");
  if ((bytes.size() - pos) / 8 < order) throw ParseError("XDH: truncated file");
  Dims dims(order);
  for (auto& d : dims) {
    d = detail::get_le<std::uint64_t>(bytes, pos);
    if (d == 0) throw ParseError("XDH: zero dimension");
  }
  dim_t n = 0;
  try {
    n = checked_product(dims);
  } catch (const OverflowError&) {
    throw ParseError("XDH: dimension product overflows");
  }
  if ((bytes.size() - pos) / 8 != n || (bytes.size() - pos) % 8 != 0) {
    throw ParseError("XDH: payload holds " + std::to_string(bytes.size() - pos) +
                     " bytes, expected " + std::to_string(n) + " values");
  }
  std::vector<double> values(n);
  for (auto& v : values) {
    v = std::bit_cast<double>(detail::get_le<std::uint64_t>(bytes, pos));
  }
  return Hypermatrix(std::move(dims), std::move(values));
}

// --- Files -----------------------------------------------------------------

/// XDH by magic, PGM by P2/P5 magic, otherwise CSV vector.
inline Format detect_format(std::string_view bytes) {
  if (bytes.substr(0, kXdhMagic.size()) == kXdhMagic) return Format::Xdh;
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5')) {
    return Format::Pgm;
  }
  return Format::CsvVector;
}

inline Payload parse_payload(std::string_view bytes) {
  switch (detect_format(bytes)) {
    case Format::Xdh:
      return parse_xdh(bytes);
    case Format::Pgm:
      return parse_pgm(bytes);
    case Format::CsvVector:
      break;
  }
  return parse_csv_vector(bytes);
}

inline std::string format_payload(const Payload& p) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MixedVector>) return format_csv_vector(v);
        if constexpr (std::is_same_v<T, PgmImage>) return format_pgm(v);
        if constexpr (std::is_same_v<T, Hypermatrix>) return format_xdh(v);
      },
      p);
}

inline Payload read_payload(const std::string& path) {
  return parse_payload(detail::read_file(path));
}

inline void write_payload(const std::string& path, const Payload& p) {
  detail::write_file(path, format_payload(p));
}

inline DenseMatrix read_csv_matrix(const std::string& path) {
  return parse_csv_matrix(detail::read_file(path));
}

/// Payload as a hypermatrix: vectors are order 1, images order 2.
inline Hypermatrix to_hypermatrix(const Payload& p) {
  return std::visit(
      [](const auto& v) -> Hypermatrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MixedVector>) return Hypermatrix::from_vector(v);
        if constexpr (std::is_same_v<T, PgmImage>) return Hypermatrix::from_matrix(v.pixels);
        if constexpr (std::is_same_v<T, Hypermatrix>) return v;
      },
      p);
}

/// Wraps `h` in the same format family as `like`.
inline Payload like_payload(const Payload& like, const Hypermatrix& h) {
  return std::visit(
      [&](const auto& v) -> Payload {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MixedVector>) return vectorize(h);
        if constexpr (std::is_same_v<T, PgmImage>) return PgmImage{h.to_matrix(), v.encoding};
        if constexpr (std::is_same_v<T, Hypermatrix>) return h;
      },
      like);
}

}  // namespace xdp::io
