#pragma once

// Serialization of sampled fields and coefficient fields.
//
// Field files: one line of JSON header, then the payload of interleaved
// (re, im) values in row-major (alpha1, alpha2, x) order, either as CSV
// ("re,im" per line) or as raw little-endian float64.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sdwt/types.hpp"

namespace sdwt {

enum class FieldEncoding { Csv, Binary };

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

void write_field(const std::filesystem::path& path, const SampledField& field,
                 FieldEncoding encoding = FieldEncoding::Csv);
SampledField read_field(const std::filesystem::path& path);

// Streams the coefficient CSV (header row + one row per point).
void write_coefficient_csv(std::ostream& out, const CoefficientField& field);
// Writes `<stem>.csv` and `<stem>.json` (quadrature meta + extra JSON text).
void write_coefficients(const std::filesystem::path& stem, const CoefficientField& field,
                        std::string_view extra_meta_json = "{}");
// Reads a coefficient CSV. Points are rebuilt from (mu, phi, theta).
CoefficientField read_coefficient_csv(const std::filesystem::path& path);

}  // namespace sdwt
