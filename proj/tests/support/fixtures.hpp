#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ddeq/parser.hpp"

namespace ddeq::testfix {

inline std::string fixture_path(const std::string& name) {
    return std::string(DDEQ_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ParsedEquation load_equation(const std::string& name) {
    return parse_equation_file(read_fixture(name));
}

inline ExpPoly expr(const std::string& text, const Session& session) {
    return lower_exppoly(*parse_expression(text), session);
}

inline ExpPoly expr(const std::string& text) {
    Session session;
    return expr(text, session);
}

} // namespace ddeq::testfix
