#ifndef MELKIT_ERROR_HPP
#define MELKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace melkit {

/// Error categories; the CLI maps them to exit codes (io=2, value=3, config=4).
enum class Errc {
    io,      // missing/unreadable/unwritable files
    format,  // file exists but cannot be decoded (bad PNG, wrong bit depth, bad CSV)
    value,   // invalid argument or domain violation (empty mask, unknown id, ...)
    config,  // invalid run configuration
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(Errc::io, msg); }
[[noreturn]] inline void throw_format(const std::string& msg) { throw Error(Errc::format, msg); }
[[noreturn]] inline void throw_value(const std::string& msg) { throw Error(Errc::value, msg); }
[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(Errc::config, msg); }

} // namespace melkit

#endif
