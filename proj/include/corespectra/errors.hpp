#ifndef CORESPECTRA_ERRORS_HPP
#define CORESPECTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corespectra {

// Malformed input data (bad tokens, out-of-range indices, unreadable files).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Input is well-formed but in a format this tool does not handle.
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller broke a documented precondition.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

// A runtime guard tripped (work would exceed a hard resource limit).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rank correlation is undefined (zero rank variance on one side).
class undefined_correlation : public std::runtime_error {
public:
    explicit undefined_correlation(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool condition, const char* msg) {
    if (!condition) throw contract_error(msg);
}

}  // namespace corespectra

#endif
