#include "fueterkit/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "fueterkit/error.hpp"

namespace fueterkit::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

double json_number(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_fail(where + " must be finite");
  return v;
}

Quaternion quaternion_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return Quaternion(json_number(j, where));
  if (!j.is_array() || j.size() != 4) parse_fail(where + " must be [w,x,y,z] or a number");
  return {json_number(j[0], where), json_number(j[1], where), json_number(j[2], where),
          json_number(j[3], where)};
}

Eigen::MatrixXd matrix_from_json(const json& j, int dim, const std::string& name) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    parse_fail(name + " must have " + std::to_string(dim) + " rows");
  }
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      parse_fail(name + " row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    }
    for (int k = 0; k < dim; ++k) m(i, k) = json_number(row[static_cast<std::size_t>(k)], name);
  }
  return m;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
    if (item.empty() || end == item.c_str() || (end && *end) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "bad coefficient '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
  return out;
}

void matrix_rows(std::ostringstream& os, const Eigen::MatrixXd& m, double floor) {
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      const double v = m(i, j);
      os << format_number(std::abs(v) < floor ? 0.0 : v);
    }
    os << ']';
  }
  os << ']';
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    return quaternion_from_json(parse_json(text), "quaternion");
  }

  const std::string s(text);
  const char* p = s.c_str();
  auto skip = [&] {
    while (*p && std::isspace(static_cast<unsigned char>(*p))) ++p;
  };
  std::array<double, 4> acc{0, 0, 0, 0};
  bool any = false;
  skip();
  while (*p) {
    double sign = 1.0;
    bool signed_term = false;
    while (*p == '+' || *p == '-') {
      if (*p == '-') sign = -sign;
      signed_term = true;
      ++p;
      skip();
    }
    if (any && !signed_term) parse_fail("expected '+' or '-' between terms in '" + s + "'");

    double coeff = 1.0;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(*p)) || *p == '.') {
      char* end = nullptr;
      coeff = std::strtod(p, &end);
      if (end == p) parse_fail("bad number in '" + s + "'");
      p = end;
      has_number = true;
      skip();
      if (*p == '*') {
        ++p;
        skip();
      }
    }

    int unit = 0;
    if (*p == 'i') {
      unit = 1;
      ++p;
    } else if (*p == 'j') {
      unit = 2;
      ++p;
    } else if (*p == 'k') {
      unit = 3;
      ++p;
    } else if (*p == 'e' && p[1] >= '1' && p[1] <= '3') {
      unit = p[1] - '0';
      p += 2;
    } else if (!has_number) {
      parse_fail("expected a number or a unit in '" + s + "'");
    }
    if (!std::isfinite(coeff)) parse_fail("non-finite coefficient in '" + s + "'");
    acc[static_cast<std::size_t>(unit)] += sign * coeff;
    any = true;
    skip();
  }
  if (!any) parse_fail("empty quaternion");
  return {acc[0], acc[1], acc[2], acc[3]};
}

ImaginaryUnit parse_imaginary_unit(std::string_view text) {
  const std::string s(text);
  if (s.find(',') != std::string::npos && s.find('[') == std::string::npos) {
    std::vector<double> v;
    try {
      v = parse_real_list(s);
    } catch (const Error&) {
      parse_fail("imaginary unit must be \"x,y,z\"");
    }
    if (v.size() != 3) parse_fail("imaginary unit must be \"x,y,z\"");
    return ImaginaryUnit::from_vector(v[0], v[1], v[2]);
  }
  return ImaginaryUnit::from_quaternion(parse_quaternion(text));
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  if (std::isnan(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string quaternion_json(const Quaternion& q) {
  return "[" + format_number(q.w) + "," + format_number(q.x) + "," + format_number(q.y) + "," +
         format_number(q.z) + "]";
}

CommutingOperator parse_operator_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) parse_fail("operator JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) parse_fail("operator JSON needs integer \"dim\"");
  const int dim = j["dim"].get<int>();
  if (dim < 1) parse_fail("operator dimension must be positive");
  std::array<Eigen::MatrixXd, 4> c;
  for (int i = 0; i < 4; ++i) {
    const std::string key = "T" + std::to_string(i);
    c[static_cast<std::size_t>(i)] =
        j.contains(key) ? matrix_from_json(j[key], dim, key) : Eigen::MatrixXd::Zero(dim, dim);
  }
  return CommutingOperator(std::move(c));
}

CommutingOperator read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open operator file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_operator_json(ss.str());
}

std::string operator_json(const CommutingOperator& T) {
  std::ostringstream os;
  os << "{\"dim\":" << T.dim();
  for (int i = 0; i < 4; ++i) {
    os << ",\"T" << i << "\":";
    matrix_rows(os, T.component(i), 0.0);
  }
  os << '}';
  return os.str();
}

std::string matrix_json(const QuaternionMatrix& m, double chop) {
  const double floor = chop * (1.0 + m.norm());
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < 4; ++i) {
    if (i) os << ',';
    os << "\"M" << i << "\":";
    matrix_rows(os, m.component(i), floor);
  }
  os << '}';
  return os.str();
}

std::string spectrum_csv(const SSpectrum& spectrum) {
  std::string out = "u,v,multiplicity\n";
  for (const SpectralSphere& sp : spectrum) {
    out += format_number(sp.u) + "," + format_number(sp.v) + "," + format_number(sp.multiplicity) + "\n";
  }
  return out;
}

SliceFunction parse_function(std::string_view name) {
  const std::string s(name);
  if (s == "one") return SliceFunction::intrinsic(stem_polynomial({1.0}));
  if (s == "exp") return SliceFunction::intrinsic(stem_exp());
  if (s.rfind("pow", 0) == 0 && s.size() > 3) {
    const std::string digits = s.substr(3);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4) {
      throw Error(ErrorCode::InvalidArgument, "bad power in function name '" + s + "'");
    }
    return SliceFunction::intrinsic(stem_power(std::stoi(digits)));
  }
  if (s.rfind("poly:", 0) == 0) return SliceFunction::intrinsic(stem_polynomial(parse_real_list(s.substr(5))));
  if (s.rfind("rational:", 0) == 0) {
    const std::string body = s.substr(9);
    const auto slash = body.find('/');
    if (slash == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "rational function needs 'numerator/denominator'");
    }
    return SliceFunction::intrinsic(
        stem_rational(parse_real_list(body.substr(0, slash)), parse_real_list(body.substr(slash + 1))));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown function '" + s + "'");
}

SliceFunction parse_series_json(std::string_view text, Side side, double radius) {
  const json j = parse_json(text);
  if (!j.is_array() || j.empty()) parse_fail("series coefficients must be a non-empty JSON list");
  std::vector<Quaternion> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coeffs.push_back(quaternion_from_json(j[i], "coefficient " + std::to_string(i)));
  }
  return side == Side::Left ? SliceFunction::left_series(std::move(coeffs), radius)
                            : SliceFunction::right_series(std::move(coeffs), radius);
}

Side parse_side(std::string_view name) {
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  throw Error(ErrorCode::InvalidArgument, "side must be 'left' or 'right'");
}

}  // namespace fueterkit::io
