#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/claims.hpp"

namespace qwalk {

/// Shortest-form rendering with 17 significant digits ("nan" for NaN).
std::string format_real(double value);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// Top-level JSON array of
///   {claim_id, predicted, observed, tolerance, verdict, notes}
/// where predicted/observed are null, a number, {"re", "im"}, or an array of
/// numbers.
std::string claims_to_json(const std::vector<ClaimReport>& reports);
std::string claims_to_text(const std::vector<ClaimReport>& reports);

/// Throws IoError when the file cannot be written in full.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

/// Creates the directory (and parents); throws IoError on failure.
void ensure_directory(const std::filesystem::path& dir);

}  // namespace qwalk
