#include "cra/report.hpp"

#include <sstream>

#include "cra/bits.hpp"

namespace cra {

void Report::fail(std::string condition, std::string where, std::string witness) {
  failures.push_back({std::move(condition), std::move(where), std::move(witness)});
}

void Report::note(std::string text) { notes.push_back(std::move(text)); }

void Report::merge(const Report& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& f : failures)
    os << "failure " << f.condition << " " << f.where << " :: " << f.witness << "\n";
  for (const auto& n : notes) os << "note " << n << "\n";
  return os.str();
}

std::string set_to_string(const Bits& b) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace cra
