#pragma once

#include "fatness/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fatness {

struct UnknownCase : Error {
    using Error::Error;
};

/// "key = value" lines; keys may repeat, '#' starts a comment.
class Fixture {
public:
    static Fixture parse(const std::string& text, std::string name = {});
    static Fixture load(const std::string& path);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& comments() const { return comments_; }
    bool has(const std::string& key) const;
    /// Throws ParseError when the key is absent or repeated.
    std::string text(const std::string& key) const;
    std::vector<std::string> all(const std::string& key) const;
    /// Keys starting with prefix, in file order.
    std::vector<std::pair<std::string, std::string>> with_prefix(const std::string& prefix) const;
    Rational rational(const std::string& key) const;
    std::vector<Rational> rationals(const std::string& key) const;

private:
    std::string name_;
    std::vector<std::string> comments_;
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::vector<std::string> split_words(const std::string& s);
std::vector<Rational> parse_rational_list(const std::string& s);

struct CaseCheck {
    std::string label;
    bool ok = false;
    std::string detail;
};

struct CaseReport {
    std::string name;
    std::vector<std::string> description;
    std::vector<CaseCheck> checks;
    bool pass() const;
    std::string report() const;
};

const std::vector<std::string>& reproduce_cases();
/// FATCHECK_DATA_DIR from the environment, else the source tree's data directory.
std::string default_data_dir();
CaseReport run_reproduce(const std::string& name, const std::string& data_dir = default_data_dir());

}  // namespace fatness
