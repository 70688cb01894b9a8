#include <charconv>
#include <nlohmann/json.hpp>
#include <system_error>

#include "phin/error.hpp"
#include "phin/format.hpp"
#include "phin/stft.hpp"
#include "phin/subspace.hpp"

namespace phin {

namespace {

using nlohmann::json;

json complex_array(const std::vector<std::complex<double>>& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

std::vector<std::complex<double>> read_complex_array(const json& arr) {
  if (!arr.is_array()) throw ShapeError("expected an array of [re, im] pairs");
  std::vector<std::complex<double>> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (item.is_number()) {
      out.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2) {
      out.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw ShapeError("complex values must be numbers or [re, im] pairs");
    }
  }
  return out;
}

json axis_json(const UniformAxis& a) { return {{"lo", a.lo}, {"step", a.step}, {"count", a.count}}; }

UniformAxis read_axis(const json& j) {
  return UniformAxis{j.at("lo").get<double>(), j.at("step").get<double>(), j.at("count").get<std::size_t>()};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw DomainError("not a number: '" + text + "'");
  return v;
}

std::string to_json(const HaarCoeffs& c) {
  const json j = {{"j", c.j()}, {"even", complex_array(c.even())}, {"odd", complex_array(c.odd())}};
  return j.dump();
}

HaarCoeffs haar_coeffs_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    return HaarCoeffs(j.at("j").get<int>(), read_complex_array(j.at("even")), read_complex_array(j.at("odd")));
  } catch (const json::exception& e) {
    throw ShapeError(std::string("HaarCoeffs JSON: ") + e.what());
  }
}

std::string to_csv(const Spectrogram& spec) {
  std::string out = "omega,t,re,im\n";
  for (std::size_t iw = 0; iw < spec.omega().size(); ++iw) {
    const std::string w = format_double(spec.omega()[iw]);
    for (std::size_t it = 0; it < spec.t().size(); ++it) {
      const auto v = spec.at(iw, it);
      out += w;
      out += ',';
      out += format_double(spec.t()[it]);
      out += ',';
      out += format_double(v.real());
      out += ',';
      out += format_double(v.imag());
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const Spectrogram& spec) {
  const json j = {{"n", spec.order().value()},
                  {"window_norm_sq", spec.window_norm_sq()},
                  {"omega", axis_json(spec.omega())},
                  {"t", axis_json(spec.t())},
                  {"values", complex_array(spec.values())}};
  return j.dump();
}

Spectrogram spectrogram_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    return Spectrogram(Order(j.at("n").get<int>()), read_axis(j.at("omega")), read_axis(j.at("t")),
                       read_complex_array(j.at("values")), j.at("window_norm_sq").get<double>());
  } catch (const json::exception& e) {
    throw ShapeError(std::string("Spectrogram JSON: ") + e.what());
  }
}

}  // namespace phin
