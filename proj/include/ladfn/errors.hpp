#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ladfn {

// Invalid argument or violated precondition: 0 in a function domain, a
// composite where a prime is required, a zero denominator.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Evaluation failed at a specific point; the message names the point.
struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection of a function expression while parsing.  `position` is a byte
// offset into the input; `found` is the lexeme at that position (empty at
// end of input).
struct parse_error : std::runtime_error {
  std::size_t position;
  std::string expected;
  std::string found;

  parse_error(std::size_t pos, std::string exp, std::string fnd)
      : std::runtime_error("parse error at offset " + std::to_string(pos) +
                           ": expected " + exp + ", found " +
                           (fnd.empty() ? std::string("end of input")
                                        : "'" + fnd + "'")),
        position(pos),
        expected(std::move(exp)),
        found(std::move(fnd)) {}
};

// Semantic rejection while turning a parsed expression into a function.
struct build_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ladfn
