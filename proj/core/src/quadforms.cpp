// Copyright 2026 The rayclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rayclass/quadforms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "rayclass/arith.hpp"
#include "rayclass/bounds.hpp"
#include "rayclass/error.hpp"

namespace rayclass::quadforms {
namespace {

__extension__ using i128 = __int128;

Int checked(i128 v, const char* what) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw ResourceError(std::string(what) + ": intermediate overflow");
  }
  return static_cast<Int>(v);
}

Int c_from(Int a, Int b, Int d) {
  const i128 num = static_cast<i128>(b) * b - d;
  return checked(num / (4 * static_cast<i128>(a)), "quadratic form");
}

std::int64_t ab_key(Int a, Int b) { return a * (Int{1} << 32) + (b + (Int{1} << 31)); }

}  // namespace

Int QuadForm::discriminant() const {
  return checked(static_cast<i128>(b) * b - 4 * static_cast<i128>(a) * c, "discriminant");
}

bool QuadForm::is_primitive() const {
  return std::gcd(std::gcd(a, b), c) == 1;
}

bool QuadForm::is_reduced() const {
  if (!(std::abs(b) <= a && a <= c)) {
    return false;
  }
  if ((std::abs(b) == a || a == c) && b < 0) {
    return false;
  }
  return true;
}

QuadForm reduce(QuadForm f) {
  if (!f.is_positive_definite()) {
    throw DomainError("reduce: form " + to_string(f) + " is not positive definite");
  }
  const Int d = f.discriminant();
  while (true) {
    if (f.b <= -f.a || f.b > f.a) {
      Int r = arith::mod(f.b, 2 * f.a);
      if (r > f.a) {
        r -= 2 * f.a;
      }
      f.b = r;
      f.c = c_from(f.a, f.b, d);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) {
      f.b = -f.b;
    }
    return f;
  }
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const Int d = f.discriminant();
  if (g.discriminant() != d) {
    throw ParentMismatch("compose: forms of different discriminants");
  }
  QuadForm f1 = f;
  QuadForm f2 = g;
  if (f1.a > f2.a) {
    std::swap(f1, f2);
  }
  const Int s = (f1.b + f2.b) / 2;
  const Int n = f2.b - s;
  Int y1 = 0;
  Int dd = f1.a;
  if (f2.a % f1.a != 0) {
    const auto [g1, u, v] = arith::ext_gcd(f2.a, f1.a);
    (void)v;
    y1 = u;
    dd = g1;
  }
  Int x2 = 0;
  Int y2 = -1;
  Int d1 = dd;
  if (s % dd != 0) {
    const auto [g2, u, v] = arith::ext_gcd(s, dd);
    x2 = u;
    y2 = -v;
    d1 = g2;
  }
  const Int v1 = f1.a / d1;
  const Int v2 = f2.a / d1;
  const i128 r_raw = static_cast<i128>(y1) * y2 % v1 * n - static_cast<i128>(x2) * f2.c;
  i128 r = r_raw % v1;
  if (r < 0) {
    r += v1;
  }
  const Int b3 = checked(f2.b + 2 * static_cast<i128>(v2) * r, "compose");
  const Int a3 = checked(static_cast<i128>(v1) * v2, "compose");
  return reduce(QuadForm{a3, b3, c_from(a3, b3, d)});
}

QuadForm inverse(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

QuadForm principal_form(Int discriminant) {
  if (discriminant >= 0 || arith::mod(discriminant, 4) > 1) {
    throw DomainError("principal_form: need a negative discriminant = 0, 1 mod 4");
  }
  const Int b = arith::mod(discriminant, 2);
  return QuadForm{1, b, (b * b - discriminant) / 4};
}

std::string to_string(const QuadForm& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

FormClassGroup class_group(Int fundamental, Int conductor, std::uint64_t limit) {
  if (fundamental >= 0 || !arith::is_fundamental_discriminant(fundamental)) {
    throw DomainError("class_group: " + std::to_string(fundamental) +
                      " is not a negative fundamental discriminant");
  }
  if (conductor < 1) {
    throw DomainError("class_group: conductor must be >= 1");
  }
  const i128 disc = static_cast<i128>(fundamental) * conductor * conductor;
  if (-disc > static_cast<i128>(limit)) {
    throw ResourceError("class_group: |D| exceeds limit " + std::to_string(limit));
  }
  const Int d = static_cast<Int>(disc);

  FormClassGroup cl;
  cl.discriminant_ = d;
  cl.fundamental_ = fundamental;
  cl.conductor_ = conductor;

  const Int a_max = static_cast<Int>(arith::isqrt(static_cast<std::uint64_t>(-d) / 3));
  for (Int a = 1; a <= a_max; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      if (arith::mod(b - d, 2) != 0) {
        continue;
      }
      const Int num = b * b - d;
      if (num % (4 * a) != 0) {
        continue;
      }
      const Int c = num / (4 * a);
      if (c < a || (a == c && b < 0)) {
        continue;
      }
      const QuadForm q{a, b, c};
      if (q.is_primitive()) {
        cl.forms_.push_back(q);
      }
    }
  }
  std::sort(cl.forms_.begin(), cl.forms_.end());
  for (std::size_t i = 0; i < cl.forms_.size(); ++i) {
    cl.index_by_ab_.emplace(ab_key(cl.forms_[i].a, cl.forms_[i].b), i);
  }
  const std::size_t h = cl.forms_.size();

  // Grow the span of the forms one generator at a time, recording for each
  // generator the first power that falls back into the span.
  std::vector<std::vector<abelian::Int>> coords(h);
  std::vector<bool> in_span(h, false);
  std::vector<std::size_t> span{0};
  in_span[0] = true;
  std::vector<std::vector<abelian::Int>> relations;
  std::vector<QuadForm> gens;
  auto idx = [&](const QuadForm& q) { return cl.index_by_ab_.at(ab_key(q.a, q.b)); };
  for (std::size_t cand = 0; cand < h; ++cand) {
    if (in_span[cand]) {
      continue;
    }
    const QuadForm g = cl.forms_[cand];
    const std::size_t r = gens.size();
    QuadForm power = g;
    abelian::Int n = 1;
    while (!in_span[idx(power)]) {
      power = compose(power, g);
      ++n;
    }
    std::vector<abelian::Int> rel = coords[idx(power)];
    for (auto& x : rel) {
      x = -x;
    }
    rel.resize(r + 1, 0);
    rel[r] = n;
    relations.push_back(std::move(rel));

    const std::vector<std::size_t> old_span = span;
    for (std::size_t s : old_span) {
      coords[s].resize(r + 1, 0);
    }
    QuadForm gk = g;
    for (abelian::Int k = 1; k < n; ++k) {
      for (std::size_t s : old_span) {
        const std::size_t t = idx(compose(cl.forms_[s], gk));
        coords[t] = coords[s];
        coords[t][r] = k;
        in_span[t] = true;
        span.push_back(t);
      }
      gk = compose(gk, g);
    }
    gens.push_back(g);
  }
  const std::size_t rank = gens.size();
  for (auto& rel : relations) {
    rel.resize(rank, 0);
  }
  for (auto& c : coords) {
    c.resize(rank, 0);
  }

  const abelian::Presentation p = abelian::decompose_relations(rank, relations);
  cl.group_ = p.group;
  if (cl.group_.order() != h) {
    throw std::logic_error("class_group: presentation order differs from class number");
  }
  cl.form_by_linear_index_.assign(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    cl.elements_.push_back(p.coordinates(coords[i]));
    const std::uint64_t li = cl.group_.linear_index(cl.elements_.back());
    if (cl.form_by_linear_index_[li] != h) {
      throw std::logic_error("class_group: two forms map to the same element");
    }
    cl.form_by_linear_index_[li] = i;
  }
  return cl;
}

std::size_t FormClassGroup::index_of(const QuadForm& f) const {
  if (f.discriminant() != discriminant_ || !f.is_primitive()) {
    throw DomainError("index_of: " + to_string(f) + " is not a primitive form of discriminant " +
                      std::to_string(discriminant_));
  }
  const QuadForm r = reduce(f);
  return index_by_ab_.at(ab_key(r.a, r.b));
}

abelian::GroupElement FormClassGroup::element_of(const QuadForm& f) const {
  return elements_[index_of(f)];
}

const QuadForm& FormClassGroup::form_of(const abelian::GroupElement& e) const {
  return forms_[form_by_linear_index_[group_.linear_index(e)]];
}

std::optional<QuadForm> prime_form(const FormClassGroup& cl, std::uint64_t p) {
  if (!arith::is_prime(p)) {
    throw DomainError("prime_form: " + std::to_string(p) + " is not prime");
  }
  if (cl.conductor() % static_cast<Int>(p) == 0) {
    throw DomainError("prime_form: " + std::to_string(p) + " divides the conductor");
  }
  const Int d = cl.discriminant();
  const auto pi = static_cast<Int>(p);
  Int b = 0;
  if (p == 2) {
    switch (arith::mod(d, 8)) {
      case 1: b = 1; break;
      case 0: b = 0; break;
      case 4: b = 2; break;
      default: return std::nullopt;
    }
  } else {
    const int k = arith::kronecker(d, p);
    if (k == -1) {
      return std::nullopt;
    }
    // b = sqrt(D) mod p, lifted to b = D mod 2 in [0, 2p).
    Int root = static_cast<Int>(
        *arith::sqrt_mod_prime(static_cast<std::uint64_t>(arith::mod(d, pi)), p));
    if (arith::mod(root - d, 2) != 0) {
      root = pi - root;
    }
    const Int other = arith::mod(-root, 2 * pi);
    b = std::min(root, other);
  }
  return QuadForm{pi, b, c_from(pi, b, d)};
}

ConnectivityResult verify_connectivity(Int fundamental, Int conductor, std::uint64_t h_plus,
                                       std::uint64_t limit) {
  if (h_plus != 1) {
    throw DomainError("verify_connectivity: h_plus is 1 for imaginary quadratic fields");
  }
  const FormClassGroup cl = class_group(fundamental, conductor, limit);
  ConnectivityResult r;
  r.fundamental_discriminant = fundamental;
  r.conductor = conductor;
  r.discriminant = cl.discriminant();
  r.conductor_norm = static_cast<std::uint64_t>(conductor * conductor);
  r.class_number = cl.class_number();
  const auto inv = cl.group().invariant_factors();
  r.invariant_factors.assign(inv.begin(), inv.end());
  const auto abs_fund = static_cast<std::uint64_t>(-fundamental);
  r.bound = bounds::isogeny_bound(abs_fund, r.conductor_norm, h_plus);
  for (const auto& ex : bounds::isogeny_small_case_exceptions()) {
    if (ex.field_discriminant == fundamental && ex.conductor_norm == r.conductor_norm) {
      r.exceptional = true;
      r.note = "small-case exception; ring class group has order " +
               std::to_string(r.class_number);
    }
  }

  const abelian::Subgroup whole = abelian::whole_group(cl.group());
  abelian::Subgroup closure = abelian::trivial_subgroup(cl.group());
  for (std::uint64_t p = 2; static_cast<double>(p) < r.bound; ++p) {
    if (!arith::is_prime(p) || conductor % static_cast<Int>(p) == 0) {
      continue;
    }
    const auto q = prime_form(cl, p);
    if (!q) {
      continue;
    }
    ++r.primes_below_bound;
    if (closure == whole) {
      continue;
    }
    const abelian::GroupElement e = cl.element_of(*q);
    if (closure.contains(e)) {
      continue;
    }
    closure = abelian::join(closure, e);
    r.generating_primes.push_back(p);
    if (closure == whole) {
      r.threshold_prime = p;
    }
  }
  r.pass = closure == whole;
  if (!r.pass) {
    r.note = "primes below the bound generate a proper subgroup of order " +
             std::to_string(closure.order());
  }
  return r;
}

std::vector<Int> negative_fundamental_discriminants(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Int> out;
  for (std::uint64_t a = std::max<std::uint64_t>(lo, 3); a <= hi; ++a) {
    const Int d = -static_cast<Int>(a);
    if (arith::is_fundamental_discriminant(d)) {
      out.push_back(d);
    }
  }
  return out;
}

std::vector<ConnectivityResult> scan_discriminants(std::uint64_t absdisc_min,
                                                   std::uint64_t absdisc_max,
                                                   Int conductor_min, Int conductor_max,
                                                   const QuadScanConfig& config) {
  if (conductor_min < 1 || conductor_max < conductor_min) {
    throw DomainError("scan_discriminants: need 1 <= conductor_min <= conductor_max");
  }
  const auto discs = negative_fundamental_discriminants(absdisc_min, absdisc_max);
  const auto per = static_cast<std::size_t>(conductor_max - conductor_min + 1);
  const std::size_t total = discs.size() * per;
  std::vector<ConnectivityResult> out(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      out[i] = verify_connectivity(discs[i / per], conductor_min + static_cast<Int>(i % per), 1,
                                   config.discriminant_limit);
      const std::size_t finished = ++done;
      if (config.progress) {
        std::lock_guard lock(progress_mutex);
        config.progress(finished, total);
      }
    }
  };
  const unsigned jobs = std::max(1U, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }
  return out;
}

}  // namespace rayclass::quadforms
