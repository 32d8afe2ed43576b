#ifndef REALSAMPLE_CLI_SYSTEMFILE_HPP
#define REALSAMPLE_CLI_SYSTEMFILE_HPP

#include <realsample/errors.hpp>
#include <realsample/polycore/blocks.hpp>
#include <realsample/polycore/parse.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace realsample {

/// Malformed system file; `line` is 1-based.
class SystemFileError : public std::runtime_error {
public:
    SystemFileError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), message_(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t line_;
};

/// Could not open or read a file.
class InputFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SystemFile {
    Ring ring;
    std::vector<Polynomial> polys;
    std::optional<BlockSplit> split;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

/// Text after `key` (followed by ':') from the start of s.
inline std::optional<std::string> after_key(const std::string& s, const std::string& key) {
    if (s.size() <= key.size() || s.compare(0, key.size(), key) != 0 || s[key.size()] != ':') return std::nullopt;
    return s.substr(key.size() + 1);
}

}  // namespace detail

/// `vars: x y z`, an optional `blocks: X0 x | L0 l`, then one polynomial per
/// line. `#` starts a comment; blank lines are skipped.
inline SystemFile parse_system_text(const std::string& text) {
    SystemFile out;
    bool have_vars = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = detail::trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (!have_vars) {
            auto rest = detail::after_key(line, "vars");
            if (!rest) throw SystemFileError("expected 'vars:' header", lineno);
            auto names = detail::words(*rest);
            if (names.empty()) throw SystemFileError("no variables declared", lineno);
            try {
                out.ring = Ring(names);
            } catch (const std::exception& e) {
                throw SystemFileError(e.what(), lineno);
            }
            have_vars = true;
            continue;
        }
        if (auto rest = detail::after_key(line, "blocks")) {
            if (out.split || !out.polys.empty()) throw SystemFileError("'blocks:' must follow 'vars:' directly", lineno);
            auto bar = rest->find('|');
            if (bar == std::string::npos) throw SystemFileError("'blocks:' needs an X-block and an l-block separated by '|'", lineno);
            BlockSplit split{detail::words(rest->substr(0, bar)), detail::words(rest->substr(bar + 1)), std::nullopt,
                             std::nullopt};
            try {
                split.validate(out.ring);
            } catch (const std::exception& e) {
                throw SystemFileError(e.what(), lineno);
            }
            out.split = std::move(split);
            continue;
        }
        try {
            out.polys.push_back(parse_polynomial(line, out.ring));
        } catch (const ParseError& e) {
            throw SystemFileError(e.what(), lineno);
        } catch (const std::invalid_argument& e) {
            throw SystemFileError(e.what(), lineno);
        }
    }
    if (!have_vars) throw SystemFileError("missing 'vars:' header", lineno == 0 ? 1 : lineno);
    return out;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputFileError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline SystemFile read_system_file(const std::string& path) {
    try {
        return parse_system_text(read_text_file(path));
    } catch (const SystemFileError& e) {
        throw SystemFileError(e.message() + " (" + path + ")", e.line());
    }
}

/// Writes a system back in the same format.
inline std::string format_system(const SystemFile& sys) {
    std::string out = "vars:";
    for (const auto& v : sys.ring.names()) out += " " + v;
    out += "\n";
    if (sys.split) {
        out += "blocks:";
        for (const auto& v : sys.split->x_vars) out += " " + v;
        out += " |";
        for (const auto& v : sys.split->l_vars) out += " " + v;
        out += "\n";
    }
    for (const auto& f : sys.polys) out += f.to_string() + "\n";
    return out;
}

}  // namespace realsample

#endif
