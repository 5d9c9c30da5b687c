#ifndef GIRARD_IO_HPP
#define GIRARD_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "girard/couple.hpp"
#include "girard/lattice.hpp"
#include "girard/quantale.hpp"

namespace girard {

/// Lattice text format, one statement per line:
///   elements: a b c ...
///   covers: a<b, b<c, ...
/// '#' starts a comment; repeated covers lines accumulate.
FiniteLattice parse_lattice_text(std::string_view text);
std::string lattice_to_text(const FiniteLattice& l);

/// Quantale format: the lattice lines plus total multiplication lines
///   mul: a*b=c, ...
/// An optional `dualizer: d` line designates a cyclic dualizing element
/// (checked by the consumer, not here). Omitted products are an error.
struct ParsedQuantale {
  Quantale q;
  std::optional<int> dualizer;
};
ParsedQuantale parse_quantale_text(std::string_view text);
std::string quantale_to_text(const Quantale& q,
                             std::optional<int> dualizer = std::nullopt);

/// Couple format: `[C]` and `[Q]` quantale blocks followed by a `[couple]`
/// block with phi/actl/actr assignments and an optional dualizer:
///   phi: c -> a
///   actl: a*c = c2
///   actr: c*a = c2
///   dualizer: d
Couple parse_couple_text(std::string_view text);
std::string couple_to_text(const Couple& k);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace girard

#endif
