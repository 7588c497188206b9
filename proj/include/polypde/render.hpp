#ifndef POLYPDE_RENDER_HPP
#define POLYPDE_RENDER_HPP

// Plain-text and LaTeX rendering.  Plain output round-trips through
// parse_poly with the same variable list.

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace polypde {

namespace detail {

inline void check_vars(int dim, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != dim)
    throw dimension_mismatch(std::to_string(vars.size()) + " names for " +
                             std::to_string(dim) + " variables");
}

inline std::string latex_rational(const rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  std::string s = r < 0 ? "-" : "";
  return s + "\\frac{" + big_int(abs(numerator(r))).str() + "}{" +
         denominator(r).str() + "}";
}

inline std::string latex_scalar(const gaussian_rational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re() != 0) out += latex_rational(z.re());
  if (z.im() != 0) {
    if (z.im() > 0 && !out.empty()) out += '+';
    if (z.im() == 1)
      out += 'i';
    else if (z.im() == -1)
      out += "-i";
    else
      out += latex_rational(z.im()) + "i";
  }
  return out;
}

// Shared term-by-term printer; the three hooks cover the plain/LaTeX
// differences.
template <class ScalarFn, class PowerFn>
std::string render_poly(const multi_poly& p,
                        const std::vector<std::string>& vars,
                        ScalarFn scalar_text, PowerFn power_text,
                        const char* times) {
  check_vars(p.dim(), vars);
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [a, c] : p.terms()) {
    bool neg = c.re() != 0 ? c.re() < 0 : c.im() < 0;
    gaussian_rational mag = neg ? -c : c;

    std::string mono;
    for (int j = 0; j < p.dim(); ++j) {
      if (a[j] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += power_text(vars[static_cast<std::size_t>(j)], a[j]);
    }

    std::string body;
    if (mono.empty()) {
      body = scalar_text(mag);
      if (mag.re() != 0 && mag.im() != 0) body = "(" + body + ")";
    } else if (mag == gaussian_rational(1)) {
      body = mono;
    } else {
      std::string cs = scalar_text(mag);
      if (mag.re() != 0 && mag.im() != 0) cs = "(" + cs + ")";
      body = cs + times + mono;
    }

    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace detail

inline std::string to_plain(const multi_poly& p,
                            const std::vector<std::string>& vars) {
  return detail::render_poly(
      p, vars, [](const gaussian_rational& z) { return format_scalar(z); },
      [](const std::string& v, int k) {
        return k == 1 ? v : v + "^" + std::to_string(k);
      },
      "");
}

inline std::string to_latex(const multi_poly& p,
                            const std::vector<std::string>& vars) {
  return detail::render_poly(
      p, vars,
      [](const gaussian_rational& z) { return detail::latex_scalar(z); },
      [](const std::string& v, int k) {
        return k == 1 ? v : v + "^{" + std::to_string(k) + "}";
      },
      " ");
}

// The factor e^{i root.x} as text: "e^{ix - y}" style, or "1" when root = 0.
inline std::string exponential_plain(const point& root,
                                     const std::vector<std::string>& vars) {
  detail::check_vars(static_cast<int>(root.size()), vars);
  multi_poly phase(static_cast<int>(root.size()));
  for (std::size_t j = 0; j < root.size(); ++j)
    phase.add_term(multi_index::unit(static_cast<int>(root.size()),
                                     static_cast<int>(j)),
                   gaussian_rational::i() * root[j]);
  if (phase.is_zero()) return "1";
  return "e^{" + to_plain(phase, vars) + "}";
}

inline std::string exponential_latex(const point& root,
                                     const std::vector<std::string>& vars) {
  detail::check_vars(static_cast<int>(root.size()), vars);
  multi_poly phase(static_cast<int>(root.size()));
  for (std::size_t j = 0; j < root.size(); ++j)
    phase.add_term(multi_index::unit(static_cast<int>(root.size()),
                                     static_cast<int>(j)),
                   gaussian_rational::i() * root[j]);
  if (phase.is_zero()) return "1";
  return "e^{" + to_latex(phase, vars) + "}";
}

}  // namespace polypde

#endif
