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

#ifndef GWCALC_ENUMGEO_HPP
#define GWCALC_ENUMGEO_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gwcalc/gwclass.hpp"

namespace gwcalc {

/// Homogeneous symmetric polynomial in x, y. coeffs[k] multiplies x^{D-k} y^k.
class SymPoly2 {
   public:
    /// Throws NotSymmetric.
    explicit SymPoly2(std::vector<mpz_class> coeffs);

    /// prod_{i=0}^{n} ((n - i) x + i y), the top Chern class of Sym^n of a rank-2 dual.
    static SymPoly2 weight_product(unsigned n);
    /// (x + y)^k
    static SymPoly2 sigma1_power(unsigned k);

    unsigned degree() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<mpz_class>& coefficients() const noexcept { return c_; }

    SymPoly2 operator+(const SymPoly2& o) const;
    SymPoly2 operator*(const SymPoly2& o) const;
    SymPoly2 operator*(const mpz_class& s) const;

    std::string to_string() const;

    friend bool operator==(const SymPoly2&, const SymPoly2&) = default;

   private:
    struct Unchecked {};
    SymPoly2(std::vector<mpz_class> coeffs, Unchecked) : c_(std::move(coeffs)) {}

    std::vector<mpz_class> c_;
};

/// Degree of P over Gr(2, d + 2). Throws WrongDegree unless deg P = 2d.
mpz_class integrate_gr2(unsigned d, const SymPoly2& p);

mpz_class lines_count(unsigned d);

/// (2d-1)!! <1> + ((N_d - (2d-1)!!)/2) h. Throws ParityViolation.
GWClass quadratic_lines_class(unsigned d);

struct CellularSpace {
    enum class Kind { ProjectiveSpace, Grassmannian, Product, ExplicitCells };

    Kind kind = Kind::ExplicitCells;
    std::string name;
    unsigned n = 0;
    std::vector<CellularSpace> factors;
    std::vector<unsigned> cells;

    static CellularSpace projective(unsigned n);
    static CellularSpace grassmannian2(unsigned n);
    static CellularSpace product(std::vector<CellularSpace> parts, std::string name = {});
    static CellularSpace explicit_cells(std::vector<unsigned> dims);
    /// Partial flags with 2-dimensional steps: the product Gr(2,2) x ... x Gr(2,2m).
    static CellularSpace flag(unsigned m);

    /// Number of cells in each dimension.
    std::vector<std::uint64_t> cell_counts() const;
};

GWClass cellular_euler(const CellularSpace& x, const Field& field = Field::rationals());

std::int64_t real_euler(const CellularSpace& x);

mpz_class flag_chi_top(unsigned m);

GWClass chi_NT_GL2(const Field& field = Field::rationals());

}  // namespace gwcalc

#endif
