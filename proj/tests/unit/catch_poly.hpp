#pragma once

#include <catch_amalgamated.hpp>

#include "reflectq/exactalg/poly.hpp"

template <>
struct Catch::StringMaker<reflectq::alg::Poly> {
  static std::string convert(const reflectq::alg::Poly& p) { return p.to_string(); }
};

#include "reflectq/exactalg/ratfunc.hpp"

template <>
struct Catch::StringMaker<reflectq::alg::RatFunc> {
  static std::string convert(const reflectq::alg::RatFunc& f) { return f.to_string(); }
};

#include "reflectq/exactalg/series.hpp"

template <>
struct Catch::StringMaker<reflectq::alg::PowerSeries> {
  static std::string convert(const reflectq::alg::PowerSeries& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) out += "[" + std::to_string(k) + "] " + s[k].to_string() + "\n";
    return out;
  }
};
