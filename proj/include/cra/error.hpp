#pragma once

#include <stdexcept>
#include <string>

namespace cra {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

struct NotASubgroup : Error {
  explicit NotASubgroup(const std::string& reason) : Error("not a subgroup: " + reason) {}
};

struct NotNormal : Error {
  explicit NotNormal(const std::string& reason) : Error("not a normal subgroup: " + reason) {}
};

struct NotAQuotientIso : Error {
  explicit NotAQuotientIso(const std::string& reason)
      : Error("not a quotient isomorphism: " + reason) {}
};

struct ConventionUnsatisfiable : Error {
  explicit ConventionUnsatisfiable(const std::string& reason)
      : Error("coset convention unsatisfiable: " + reason) {}
};

struct InvalidTriple : Error {
  explicit InvalidTriple(const std::string& reason) : Error("invalid group triple: " + reason) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& reason) : Error("index out of range: " + reason) {}
};

struct InvalidSize : Error {
  explicit InvalidSize(const std::string& reason) : Error("invalid size: " + reason) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& reason)
      : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

struct ResolutionError : Error {
  explicit ResolutionError(const std::string& reason) : Error("resolution error: " + reason) {}
};

}  // namespace cra
