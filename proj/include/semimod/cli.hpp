#pragma once

// Command dispatch for the semimod tool.
//
//   semimod validate FILES...
//   semimod classify MORPHISM FILES...
//   semimod exactness SEQUENCE FILES...
//   semimod lemma NAME DIAGRAM FILES...
//   semimod snake DIAGRAM FILES...
//   semimod search PROPERTY [--semiring NAME] [FILES...]
//   semimod corpus LEMMA|snake [--count N]
//
// Exit codes: 0 success or verified, 1 refuted / counterexample found / not
// exact, 2 hypothesis failure or bad input.

#include <iosfwd>
#include <string>
#include <vector>

namespace semimod {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semimod
