/*
   Copyright 2026 The gwcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GWCALC_SYNTAX_HPP
#define GWCALC_SYNTAX_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "gwcalc/charclass.hpp"
#include "gwcalc/enumgeo.hpp"
#include "gwcalc/gwclass.hpp"
#include "gwcalc/polynomial.hpp"

namespace gwcalc {

/// "3", "-2/5", "+7". Throws ParseError.
mpq_class parse_rational(const std::string& text);

/// "<a1,...,an>". A zero entry throws DegenerateForm.
QForm parse_form(const std::string& text, const Field& field = Field::rationals());

/// Sums of optionally scaled forms: "<2> + <3> - <6>", "15<1> + 12<-1>", "-2<1>", "0".
GWClass parse_gwclass(const std::string& text, const Field& field = Field::rationals());

/// Comma separated coefficients, lowest degree first; brackets optional.
QPoly parse_coefficients(const std::string& text);

std::vector<std::string> coefficient_strings(const QPoly& p);

/// E1, Sym(3,E1), E1 (+) E2, E1 (x) E2, det-(Sym(2,E1)).
BundleExpr parse_bundle(const std::string& text);

/// "G3+" -> (3, +1).
std::pair<unsigned, int> parse_map_name(const std::string& text);

/// P<n>, Gr2,<n>, Fl<m>.
CellularSpace parse_space(const std::string& text);

}  // namespace gwcalc

#endif
