#include "arrlab/arrangement.hpp"

#include "arrlab/errors.hpp"

namespace arrlab {

char sign_char(Sign s) {
  switch (s) {
    case Sign::Negative: return '-';
    case Sign::Zero: return '0';
    case Sign::Positive: return '+';
  }
  return '?';
}

std::string to_string(const SignVector& signs) {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out.push_back(sign_char(s));
  return out;
}

SignVector parse_sign_vector(const std::string& text) {
  SignVector out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '-': out.push_back(Sign::Negative); break;
      case '0': out.push_back(Sign::Zero); break;
      case '+': out.push_back(Sign::Positive); break;
      default: throw InputError("invalid sign character in \"" + text + "\"");
    }
  }
  return out;
}

Rational Hyperplane::evaluate(const RationalVector& x) const {
  if (x.dim() != a.dim()) throw InputError("hyperplane evaluation: dimension mismatch");
  return dot(a, x) - b;
}

Sign sign_of_affine_eval(const Hyperplane& h, const RationalVector& x) {
  return static_cast<Sign>(h.evaluate(x).sign());
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)) {
  if (dim_ < 2) throw InputError("arrangement dimension must be at least 2");
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    auto& h = hyperplanes_[i];
    if (h.a.dim() != dim_) {
      throw InputError("hyperplane " + std::to_string(i + 1) + " has dimension " +
                       std::to_string(h.a.dim()) + ", expected " + std::to_string(dim_));
    }
    if (h.a.is_zero()) throw InputError("hyperplane " + std::to_string(i + 1) + " has a zero normal");
    h.index = i;
  }
}

SignVector Arrangement::sign_vector(const RationalVector& x) const {
  SignVector out;
  out.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) out.push_back(sign_of_affine_eval(h, x));
  return out;
}

Arrangement Arrangement::without(std::size_t i) const {
  std::vector<Hyperplane> hs;
  for (std::size_t k = 0; k < hyperplanes_.size(); ++k) {
    if (k != i) hs.push_back(hyperplanes_[k]);
  }
  return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::prefix(std::size_t count) const {
  return Arrangement(dim_, std::vector<Hyperplane>(hyperplanes_.begin(),
                                                   hyperplanes_.begin() + static_cast<long>(count)));
}

Arrangement Arrangement::permuted(const std::vector<std::size_t>& order) const {
  std::vector<Hyperplane> hs;
  hs.reserve(order.size());
  for (std::size_t k : order) hs.push_back(hyperplanes_.at(k));
  return Arrangement(dim_, std::move(hs));
}

SimplicityReport check_simple(const Arrangement& arr) {
  const std::size_t d = arr.dim();
  const std::size_t n = arr.size();
  SimplicityReport report;
  if (n < d + 1) {
    report.reason = "a simple arrangement needs at least d+1 = " + std::to_string(d + 1) +
                    " hyperplanes, got " + std::to_string(n);
    return report;
  }
  bool failed = false;
  for_each_combination(n, d, [&](const std::vector<std::size_t>& subset) {
    if (failed) return;
    RationalMatrix m(d, d);
    RationalVector rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) = arr[subset[r]].a[c];
      rhs[r] = arr[subset[r]].b;
    }
    auto point = solve_linear_system(m, rhs);
    if (!point) {
      failed = true;
      report.witness = subset;
      report.reason = "hyperplanes have no unique common point";
      return;
    }
    std::vector<std::size_t> through;
    for (std::size_t i = 0; i < n; ++i) {
      if (arr[i].evaluate(*point).is_zero()) through.push_back(i);
    }
    if (through.size() > d) {
      failed = true;
      report.witness = through;
      report.reason = "more than d hyperplanes pass through one point";
    }
  });
  report.is_simple = !failed;
  return report;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace arrlab
