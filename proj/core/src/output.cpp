#include "qwalk/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

json value_to_json(const ClaimValue& value) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Complex>) {
          return json{{"re", v.real()}, {"im", v.imag()}};
        } else {
          return v;
        }
      },
      value);
}

std::string value_to_text(const ClaimValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "n/a";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, Complex>) {
          return format_real(v.real()) + (v.imag() < 0 ? " - " : " + ") +
                 format_real(std::abs(v.imag())) + "i";
        } else {
          std::string out = "[";
          for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? ", " : "") + format_real(v[i]);
          }
          return out + "]";
        }
      },
      value);
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') {
      out += '"';
    }
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string claims_to_json(const std::vector<ClaimReport>& reports) {
  json array = json::array();
  for (const ClaimReport& r : reports) {
    array.push_back({
        {"claim_id", r.claim_id},
        {"predicted", value_to_json(r.predicted)},
        {"observed", value_to_json(r.observed)},
        {"tolerance", r.tolerance},
        {"verdict", std::string(to_string(r.verdict))},
        {"notes", r.notes},
    });
  }
  return array.dump(2) + "\n";
}

std::string claims_to_text(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  for (const ClaimReport& r : reports) {
    out << "[" << to_string(r.verdict) << "] " << r.claim_id << "\n"
        << "  predicted: " << value_to_text(r.predicted) << "\n"
        << "  observed:  " << value_to_text(r.observed) << "\n"
        << "  tolerance: " << format_real(r.tolerance) << "\n"
        << "  notes:     " << r.notes << "\n\n";
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir.string() +
                  (ec ? ": " + ec.message() : std::string{}));
  }
}

}  // namespace qwalk
