#ifndef BBP_ERRORS_HPP
#define BBP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bbp {

// Exit-code taxonomy shared with the CLI.
enum class errc {
    ok = 0,
    parse = 2,
    domain = 3,
    verification = 4,
    internal = 5,
    indeterminate = 6,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(errc::parse, msg) {}
};

struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(errc::domain, msg) {}
};

// regroup() cannot express (1-s)^m as +-1/b.
struct regroup_impossible : error {
    explicit regroup_impossible(const std::string& msg) : error(errc::domain, msg) {}
};

// combine() operands have no common base power.
struct combine_impossible : error {
    explicit combine_impossible(const std::string& msg) : error(errc::domain, msg) {}
};

// eval_bbp() refused a conditionally convergent form.
struct needs_regrouping : error {
    explicit needs_regrouping(const std::string& msg) : error(errc::domain, msg) {}
};

struct unsupported_point : error {
    explicit unsupported_point(const std::string& msg) : error(errc::domain, msg) {}
};

struct verification_failure : error {
    explicit verification_failure(const std::string& msg) : error(errc::verification, msg) {}
};

struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(errc::internal, msg) {}
};

// Spigot carry ambiguity survived all guard retries.
struct indeterminate_digits : error {
    explicit indeterminate_digits(const std::string& msg) : error(errc::indeterminate, msg) {}
};

// Root certification could not reach the requested radius.
struct inconclusive : error {
    explicit inconclusive(const std::string& msg) : error(errc::indeterminate, msg) {}
};

} // namespace bbp

#endif
