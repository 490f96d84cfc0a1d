#pragma once

#include <ostream>
#include <string>

#include "ladfn/dirichlet.hpp"

namespace ladfn {

// Streaming row helpers, so large tables can be emitted without being held
// in memory, plus whole-table writers for the common case.

inline std::string tsv_header() { return "n\tvalue"; }

inline std::string tsv_row(const Int& n, const Rational& value) {
  return n.str() + "\t" + value.str();
}

inline std::string jsonl_row(const Int& n, const Rational& value) {
  return "{\"n\": " + n.str() + ", \"num\": \"" + value.num().str() +
         "\", \"den\": \"" + value.den().str() + "\"}";
}

inline void write_tsv(std::ostream& os, const ValueTable& table) {
  os << tsv_header() << '\n';
  for (std::size_t k = 1; k <= table.limit(); ++k)
    os << tsv_row(Int(k), table[k]) << '\n';
}

inline void write_jsonl(std::ostream& os, const ValueTable& table) {
  for (std::size_t k = 1; k <= table.limit(); ++k)
    os << jsonl_row(Int(k), table[k]) << '\n';
}

}  // namespace ladfn
