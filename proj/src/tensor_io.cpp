#include "boundcal/tensor_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "boundcal/error.hpp"

namespace boundcal {

namespace {

constexpr char kNpyMagic[8] = {'\x93', 'N', 'U', 'M', 'P', 'Y', '\x01', '\x00'};
constexpr char kModelMagic[4] = {'B', 'C', 'Q', 'R'};
constexpr std::uint32_t kModelVersion = 1;

void put_u16le(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f64le(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
}

void put_f32le(std::string& out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32le(out, bits);
}

std::uint32_t get_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

double get_f64le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

float get_f32le(const unsigned char* p) {
  const std::uint32_t bits = get_u32le(p);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoFailure, "cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) raise(Errc::IoFailure, "read failed for " + path);
  return bytes;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::IoFailure, "cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) raise(Errc::IoFailure, "write failed for " + path);
}

// Extracts the token following "'key':" in the npy header dict.
std::string dict_value(const std::string& header, const std::string& key, const std::string& path) {
  const std::string needle = "'" + key + "':";
  const auto pos = header.find(needle);
  if (pos == std::string::npos)
    raise(Errc::BadMagic, "npy header of " + path + " lacks key '" + key + "'");
  std::size_t i = pos + needle.size();
  while (i < header.size() && header[i] == ' ') ++i;
  if (i >= header.size()) raise(Errc::BadMagic, "npy header of " + path + " truncated");
  if (header[i] == '\'') {
    const auto end = header.find('\'', i + 1);
    if (end == std::string::npos) raise(Errc::BadMagic, "unterminated string in npy header");
    return header.substr(i + 1, end - i - 1);
  }
  if (header[i] == '(') {
    const auto end = header.find(')', i);
    if (end == std::string::npos) raise(Errc::BadMagic, "unterminated tuple in npy header");
    return header.substr(i, end - i + 1);
  }
  std::size_t end = i;
  while (end < header.size() && header[end] != ',' && header[end] != '}' && header[end] != ' ')
    ++end;
  return header.substr(i, end - i);
}

std::vector<std::size_t> parse_shape(const std::string& tuple, const std::string& path) {
  std::vector<std::size_t> shape;
  std::size_t i = 1;  // skip '('
  while (i < tuple.size() && tuple[i] != ')') {
    while (i < tuple.size() && (tuple[i] == ' ' || tuple[i] == ',')) ++i;
    if (i >= tuple.size() || tuple[i] == ')') break;
    if (!std::isdigit(static_cast<unsigned char>(tuple[i])))
      raise(Errc::BadMagic, "malformed shape tuple in npy header of " + path);
    std::size_t v = 0;
    while (i < tuple.size() && std::isdigit(static_cast<unsigned char>(tuple[i]))) {
      v = v * 10 + static_cast<std::size_t>(tuple[i] - '0');
      ++i;
    }
    shape.push_back(v);
  }
  return shape;
}

std::string format_shape(const std::vector<std::size_t>& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(shape[i]);
  }
  if (shape.size() == 1) s += ",";
  s += ")";
  return s;
}

}  // namespace

std::size_t NpyArray::element_count() const {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

NpyArray read_npy(const std::string& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() < 10 || std::memcmp(bytes.data(), kNpyMagic, 6) != 0)
    raise(Errc::BadMagic, path + " is not an npy file");
  if (bytes[6] != '\x01' || bytes[7] != '\x00')
    raise(Errc::BadMagic, path + " uses an unsupported npy version");
  const auto* u = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t header_len = static_cast<std::size_t>(u[8]) | (static_cast<std::size_t>(u[9]) << 8);
  if (bytes.size() < 10 + header_len) raise(Errc::TruncatedPayload, path + " header truncated");
  const std::string header = bytes.substr(10, header_len);

  const std::string descr = dict_value(header, "descr", path);
  std::size_t item = 0;
  if (descr == "<f8") {
    item = 8;
  } else if (descr == "<f4") {
    item = 4;
  } else {
    raise(Errc::UnsupportedDtype, path + " dtype '" + descr + "' (need '<f4' or '<f8')");
  }
  const std::string order = dict_value(header, "fortran_order", path);
  if (order != "False") raise(Errc::FortranOrderUnsupported, path + " stores Fortran order");

  NpyArray arr;
  arr.shape = parse_shape(dict_value(header, "shape", path), path);
  const std::size_t count = arr.element_count();
  const std::size_t have = bytes.size() - 10 - header_len;
  if (have < count * item)
    raise(Errc::TruncatedPayload, path + " payload holds " + std::to_string(have) +
                                      " bytes, need " + std::to_string(count * item));
  arr.values.resize(count);
  const unsigned char* p = u + 10 + header_len;
  if (item == 8) {
    for (std::size_t i = 0; i < count; ++i) arr.values[i] = get_f64le(p + 8 * i);
  } else {
    for (std::size_t i = 0; i < count; ++i) arr.values[i] = static_cast<double>(get_f32le(p + 4 * i));
  }
  return arr;
}

void write_npy(const std::string& path, const std::vector<std::size_t>& shape,
               const std::vector<double>& values) {
  std::size_t count = 1;
  for (auto d : shape) count *= d;
  if (values.size() != count)
    raise(Errc::LengthMismatch, "shape wants " + std::to_string(count) + " values, got " +
                                    std::to_string(values.size()));

  std::string dict = "{'descr': '<f8', 'fortran_order': False, 'shape': " + format_shape(shape) + ", }";
  const std::size_t unpadded = 10 + dict.size() + 1;
  const std::size_t padded = (unpadded + 63) / 64 * 64;
  dict.append(padded - unpadded, ' ');
  dict.push_back('\n');
  if (dict.size() > 0xFFFF) raise(Errc::LengthMismatch, "npy header too large");

  std::string out;
  out.reserve(10 + dict.size() + 8 * count);
  out.append(kNpyMagic, 8);
  put_u16le(out, static_cast<std::uint16_t>(dict.size()));
  out += dict;
  for (double v : values) put_f64le(out, v);
  write_file(path, out);
}

void write_pgm(const std::string& path, std::size_t height, std::size_t width,
               const std::vector<double>& values) {
  if (values.size() != height * width)
    raise(Errc::LengthMismatch, "grid length does not match H*W");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0 || values[i] > 1.0)
      raise(Errc::ValueOutOfRange,
            "grid value " + std::to_string(values[i]) + " at index " + std::to_string(i));
  }
  std::string out = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  out.reserve(out.size() + values.size());
  for (double v : values)
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::floor(255.0 * v + 0.5))));
  write_file(path, out);
}

void write_model(const std::string& path, const QrModel& model) {
  std::string out;
  out.append(kModelMagic, 4);
  put_u32le(out, kModelVersion);
  put_u32le(out, static_cast<std::uint32_t>(model.patch));
  put_u32le(out, static_cast<std::uint32_t>(model.hidden));
  put_u32le(out, static_cast<std::uint32_t>(model.channels));
  for (const double* p : parameter_view(model)) put_f32le(out, static_cast<float>(*p));
  write_file(path, out);
}

QrModel read_model(const std::string& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() < 20 || std::memcmp(bytes.data(), kModelMagic, 4) != 0)
    raise(Errc::BadMagic, path + " is not a model file");
  const auto* u = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::uint32_t version = get_u32le(u + 4);
  if (version != kModelVersion)
    raise(Errc::VersionMismatch,
          path + " has format version " + std::to_string(version) + ", expected " +
              std::to_string(kModelVersion));
  const std::uint32_t patch = get_u32le(u + 8);
  const std::uint32_t hidden = get_u32le(u + 12);
  const std::uint32_t channels = get_u32le(u + 16);
  if (patch < 1 || patch % 2 == 0 || hidden < 1 || channels < 1)
    raise(Errc::SizeMismatch, path + " declares invalid dimensions");

  QrModel m;
  m.patch = patch;
  m.hidden = hidden;
  m.channels = channels;
  m.w1.resize(m.hidden * m.patch_inputs());
  m.b1.resize(m.hidden);
  m.w_lower.resize(m.hidden);
  m.w_point.resize(m.hidden);
  m.w_upper.resize(m.hidden);

  const auto params = parameter_view(m);
  const std::size_t expected = 20 + 4 * params.size();
  if (bytes.size() != expected)
    raise(Errc::SizeMismatch, path + " holds " + std::to_string(bytes.size()) +
                                  " bytes, header implies " + std::to_string(expected));
  const unsigned char* p = u + 20;
  for (std::size_t i = 0; i < params.size(); ++i)
    *params[i] = static_cast<double>(get_f32le(p + 4 * i));
  return m;
}

}  // namespace boundcal
