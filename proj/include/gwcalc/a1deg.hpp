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

#ifndef GWCALC_A1DEG_HPP
#define GWCALC_A1DEG_HPP

#include "gwcalc/gwclass.hpp"
#include "gwcalc/polynomial.hpp"
#include "gwcalc/qform.hpp"

namespace gwcalc {

/// t -> A(t)/B(t), pointed at infinity.
struct RationalMapP1 {
    QPoly numerator;
    QPoly denominator;
};

/// Real and imaginary parts of a polynomial with Gaussian integer coefficients.
struct GaussianPair {
    ZPoly re;
    ZPoly im;

    GaussianPair operator*(const GaussianPair& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
};

/// Throws NotPointed or NotCoprime.
void validate(const RationalMapP1& f);

RationalMapP1 make_map(QPoly numerator, QPoly denominator);

/// A = Re(t + s*i)^m, B = Im(t + s*i)^m with s = +1 or -1.
RationalMapP1 build_G(unsigned m, int sign);

RationalMatrix bezout_form(const RationalMapP1& f);

GWClass a1_degree(const RationalMapP1& f);

bool derivative_identity_check(unsigned p);

}  // namespace gwcalc

#endif
