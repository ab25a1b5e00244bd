#ifndef MELKIT_CSV_HPP
#define MELKIT_CSV_HPP

#include <string>
#include <vector>

namespace melkit {

/// Formats a real with 17 significant digits (round-trip exact for doubles).
std::string format_real(double v);

std::string format_int(long long v);

/// Splits one CSV line on commas. Fields in this project never contain
/// commas or quotes, so no quoting rules are needed.
std::vector<std::string> split_csv_line(const std::string& line);

/// Reads a whole CSV file into rows of fields. Throws Errc::io when the file
/// cannot be opened.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

/// Writes rows as comma-separated UTF-8 text. Throws Errc::io on failure.
void write_csv(const std::string& path, const std::vector<std::vector<std::string>>& rows);

double parse_real(const std::string& s);
long long parse_int(const std::string& s);

} // namespace melkit

#endif
