#ifndef BOUNDCAL_TENSOR_IO_HPP
#define BOUNDCAL_TENSOR_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "boundcal/qr_trainer.hpp"

namespace boundcal {

struct NpyArray {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  std::size_t element_count() const;
};

// NPY version 1.0, little-endian float32/float64 payloads only, C order.
// float32 values are widened to float64 on read.
NpyArray read_npy(const std::string& path);

// Writes dtype '<f8', header padded with spaces to a 64-byte multiple and
// terminated by a newline.
void write_npy(const std::string& path, const std::vector<std::size_t>& shape,
               const std::vector<double>& values);

// Binary PGM ("P5"), maxval 255, pixel = round-half-up of 255 * value.
void write_pgm(const std::string& path, std::size_t height, std::size_t width,
               const std::vector<double>& values);

// Model container: "BCQR" magic, format version, then k / hidden / channels as
// little-endian uint32, then every weight as little-endian float32 in
// parameter_view order.
void write_model(const std::string& path, const QrModel& model);
QrModel read_model(const std::string& path);

}  // namespace boundcal

#endif
