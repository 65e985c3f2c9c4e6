#include "magsense/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace magsense::io {

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                      std::chars_format::scientific, 16);
    if (result.ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buffer.data(), result.ptr);
}

std::string spectrum_csv(const SpectrumSeries& series) {
    const bool flagged = series.gap_count() > 0;
    std::string out(spectrum_header);
    if (flagged) out += ",flag";
    out += '\n';
    for (const auto& row : series.rows) {
        out += format_double(row.omega_over_kappa_m);
        if (row.point) {
            const auto& p = *row.point;
            for (double v : {p.response, p.added_noise, p.output_spectrum, p.noise_power,
                             p.sensitivity}) {
                out += ',';
                out += format_double(v);
            }
            if (flagged) out += ',';
        } else {
            out += ",,,,,,";
            out += row.gap_reason;
        }
        out += '\n';
    }
    return out;
}

std::string ratio_csv(const RatioSeries& series) {
    const bool flagged = series.gap_count() > 0;
    std::string out(ratio_header);
    if (flagged) out += ",flag";
    out += '\n';
    for (const auto& row : series.rows) {
        out += format_double(row.omega_over_kappa_m);
        if (row.response_ratio) {
            out += ',' + format_double(*row.response_ratio);
            out += ',' + format_double(*row.noise_ratio);
            if (flagged) out += ',';
        } else {
            out += ",,,";
            out += row.gap_reason;
        }
        out += '\n';
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!file) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
    }
}

}  // namespace magsense::io
