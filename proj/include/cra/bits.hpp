#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cra {

// Finite sets of small indices (group elements, coset positions, atom ids).
using Bits = boost::dynamic_bitset<>;

inline Bits bits_of(std::size_t size, std::initializer_list<std::size_t> members) {
  Bits b(size);
  for (auto m : members) b.set(m);
  return b;
}

inline Bits singleton(std::size_t size, std::size_t i) {
  Bits b(size);
  b.set(i);
  return b;
}

inline std::vector<std::size_t> members(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

// Renders a set as "{0,2,5}"; used by reports and dumps.
std::string set_to_string(const Bits& b);

}  // namespace cra
