#pragma once

#include "fresco/ahat.hpp"
#include "fresco/fresco.hpp"

#include <istream>
#include <string>

namespace fresco {

struct ParseError : std::invalid_argument {
  ParseError(int line, const std::string& what);
  int line;
};

// rank k order N / lambdas ... / S j e:c ...; '#' starts a comment
FrescoPresentation parse_presentation(std::istream& in);
FrescoPresentation parse_presentation(const std::string& text);
FrescoPresentation read_presentation(const std::string& path);

// theta e:c ...; c at e = 1 must be nonzero
ChangeOfVariable parse_theta(std::istream& in);
ChangeOfVariable parse_theta(const std::string& text);
ChangeOfVariable read_theta(const std::string& path);
std::string format_theta(const ChangeOfVariable& cv);

}  // namespace fresco
