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

#ifndef GWCALC_TRACEFORM_HPP
#define GWCALC_TRACEFORM_HPP

#include "gwcalc/polynomial.hpp"
#include "gwcalc/qform.hpp"

namespace gwcalc {

ZPoly cyclotomic(unsigned n);

/// Minimal polynomial of zeta_n + zeta_n^{-1}, for n >= 3.
ZPoly real_cyclotomic_minpoly(unsigned n);

/// Gram matrix of the trace form in the power basis of Q[y]/(f).
RationalMatrix trace_gram(const ZPoly& f);

QForm trace_form_Q4p(unsigned p);

/// <p> + Q_{4p} is a sum of p squares.
bool verify_Tp(unsigned p);

/// Root lattice A_{n-1} in the basis e_i - e_{i+1}.
RationalMatrix a_lattice_gram(unsigned n);

bool verify_bayer_suarez(unsigned p);

/// Trace form of Q(zeta_p + zeta_p^{-1}) against its closed form and w2 = (2, p^{(p-3)/2}).
bool serre_w2_check(unsigned p);

}  // namespace gwcalc

#endif
