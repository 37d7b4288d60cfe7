#pragma once

// Text and JSON formats shared by the command-line tool and the tests.

#include <string>
#include <string_view>

#include "fueterkit/operator_calculus.hpp"
#include "fueterkit/quaternion.hpp"
#include "fueterkit/slice_function.hpp"

namespace fueterkit::io {

/// Accepts "[w, x, y, z]" or a sum of terms such as "1+2i-0.5j+k" or
/// "1 + 2*e1 - e3". A term is a real number, a unit (i, j, k, e1, e2, e3) or a
/// number times a unit. "2e1" is the number 20; write "2*e1" or "2 e1" for
/// the quaternion. Throws ParseError.
Quaternion parse_quaternion(std::string_view text);

/// "x,y,z" (normalized), or a quaternion form whose imaginary part is used.
ImaginaryUnit parse_imaginary_unit(std::string_view text);

/// Shortest round-trip-stable "%.15g" form, with -0 printed as 0.
std::string format_number(double x);

/// [w,x,y,z]
std::string quaternion_json(const Quaternion& q);

/// {"dim": d, "T0": [[..]], ..., "T3": [[..]]}; missing components are zero.
/// Throws ParseError for malformed input and NonCommuting from validation.
CommutingOperator parse_operator_json(std::string_view text);
CommutingOperator read_operator_file(const std::string& path);
std::string operator_json(const CommutingOperator& T);

/// {"M0":[[..]],"M1":[[..]],"M2":[[..]],"M3":[[..]]}. Entries below
/// chop * (1 + ||M||) are printed as 0.
std::string matrix_json(const QuaternionMatrix& m, double chop = 1e-12);

/// "u,v,multiplicity" header then one line per sphere.
std::string spectrum_csv(const SSpectrum& spectrum);

/// Built-in functions: "one", "powN" (N >= 0), "exp",
/// "poly:c0,c1,..." and "rational:n0,n1,.../d0,d1,..." with ascending real
/// coefficients. Throws InvalidArgument for unknown names.
SliceFunction parse_function(std::string_view name);

/// JSON list of coefficients a_n, each a quaternion [w,x,y,z] or a real, as a
/// left (sum q^n a_n) or right (sum a_n q^n) series.
SliceFunction parse_series_json(std::string_view text, Side side, double radius);

Side parse_side(std::string_view name);

}  // namespace fueterkit::io
