// Acceptance criteria. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "pellsum/power_sum.hpp"
#include "pellsum/verify.hpp"

using namespace pellsum;

namespace {

using NP = PellParams<Rational>;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

// Oracle: forward recurrence 2P(n+2) = 2R P(n+1) + R P(n), P(0) = 0, P(1) = 2/R.
template <Field F>
std::vector<F> oracle_seq(const F& R, long hi) {
  std::vector<F> v{F(0), F(2) / R};
  while (static_cast<long>(v.size()) <= hi) {
    const std::size_t k = v.size();
    v.push_back(R * v[k - 1] + R * v[k - 2] / F(2));
  }
  return v;
}

// Negative indices by running the recurrence backwards.
Rational oracle_at(const Rational& R, long n) {
  if (n >= 0) return oracle_seq(R, n)[static_cast<std::size_t>(n)];
  Rational a(0), b = Rational(2) / R;  // P(k), P(k+1) with k = 0
  for (long k = 0; k > n; --k) {
    Rational prev = (Rational(2) * b - Rational(2) * R * a) / R;
    b = a;
    a = prev;
  }
  return a;
}

Rational ipow(const Rational& x, long e) {
  Rational r(1);
  for (long i = 0; i < e; ++i) r = r * x;
  return r;
}

Rational choose(long n, long k) {
  Rational r(1);
  for (long i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

const std::vector<Rational> kSeriesR = {Rational(2), Rational(4), Rational(3, 2)};
constexpr long kSeriesTerms = 19;

std::vector<Rational> brute_sums(const Rational& R, long m, long ell, long n_max) {
  const auto P = oracle_seq(R, m * n_max);
  std::vector<Rational> out;
  Rational acc(0);
  for (long k = 0; k <= n_max; ++k) {
    acc = acc + ipow(P[static_cast<std::size_t>(m * k)], ell);
    out.push_back(acc);
  }
  return out;
}

std::vector<Rational> expand(const ZFunc& f, const Rational& R, long N) {
  return series_at(SumFraction{f.num(), f.den()}, R, N);
}

Outcome ac1() {
  const Sym R = Sym::variable();
  const std::vector<Sym> table = {Sym(0),
                                  Sym(2) / R,
                                  Sym(2),
                                  Sym(2) * R + Sym(1),
                                  Sym(2) * R * (R + Sym(1)),
                                  (R / Sym(2)) * (Sym(4) * R * R + Sym(6) * R + Sym(1)),
                                  (R * R / Sym(2)) * (Sym(2) * R + Sym(3)) * (Sym(2) * R + Sym(1))};
  const auto sp = symbolic_params();
  for (long n = 0; n <= 6; ++n) {
    const Sym got = pell_iter(sp, n);
    if (got != table[static_cast<std::size_t>(n)]) return {false, "n=" + std::to_string(n) + " got " + got.str()};
    if (pell_fast(sp, n) != got) return {false, "fast evaluator differs at n=" + std::to_string(n)};
  }
  return {true, "n=0..6 match in Q(R)"};
}

Outcome ac2() {
  const long classical[] = {0, 1, 2, 5, 12, 29, 70, 169, 408, 985};
  const NP p(Rational(2));
  for (long n = 0; n <= 9; ++n) {
    if (pell_iter(p, n) != Rational(classical[n]) || pell_fast(p, n) != Rational(classical[n])) {
      return {false, "n=" + std::to_string(n)};
    }
  }
  return {true, "P_2(0..9) = 0 1 2 5 12 29 70 169 408 985"};
}

Outcome ac3() {
  const std::vector<Rational> rs = {Rational(2),    Rational(4),    Rational(8),    Rational(1),
                                    Rational(3, 2), Rational(1, 4), Rational(2, 3), Rational(-1, 2)};
  std::vector<std::future<std::string>> jobs;
  for (const auto& R : rs) {
    jobs.push_back(std::async(std::launch::async, [R] {
      const NP p(R);
      const auto ref = oracle_seq(R, 200);
      for (long n = 0; n <= 200; ++n) {
        const auto& want = ref[static_cast<std::size_t>(n)];
        if (pell_iter(p, n) != want || pell_fast(p, n) != want || pell_binet(p, n) != want) {
          return "R=" + R.str() + " n=" + std::to_string(n);
        }
      }
      return std::string();
    }));
  }
  for (auto& j : jobs) {
    auto bad = j.get();
    if (!bad.empty()) return {false, bad};
  }
  return {true, "8 R values, n=0..200"};
}

Outcome ac4() {
  for (const auto& R : {Rational(2), Rational(4), Rational(8), Rational(3, 2), Rational(1, 4)}) {
    const auto P = oracle_seq(R, 52 * 10);
    for (long m = 1; m <= 10; ++m) {
      const Rational b = pow(Rational(2), m);
      const Rational c = R * (R + Rational(1)) * pow(Rational(2), m - 1) * oracle_at(R, m) -
                         R * R * pow(Rational(2), m - 2) * oracle_at(R, m - 2);
      const Rational d = pow(-R, m);
      for (long n = 0; n <= 50; ++n) {
        auto i = [&](long k) { return P[static_cast<std::size_t>(k)]; };
        if (!(b * i((n + 2) * m) - c * i((n + 1) * m) + d * i(n * m)).is_zero()) {
          return {false, "R=" + R.str() + " m=" + std::to_string(m) + " n=" + std::to_string(n)};
        }
      }
      if (!subsequence_recurrence_check(NP(R), m, 50)) return {false, "library check R=" + R.str()};
    }
  }
  const auto sp = symbolic_params();
  const Sym R = sp.R;
  const auto P = oracle_seq(R, 12 * 4);
  for (long m = 1; m <= 4; ++m) {
    const Sym pm2 = m >= 2 ? P[static_cast<std::size_t>(m - 2)] : pell_iter(sp, m - 2);
    const Sym b = pow(Sym(2), m);
    const Sym c = R * (R + Sym(1)) * pow(Sym(2), m - 1) * P[static_cast<std::size_t>(m)] -
                  R * R * pow(Sym(2), m - 2) * pm2;
    const Sym d = pow(-R, m);
    for (long n = 0; n <= 10; ++n) {
      auto i = [&](long k) { return P[static_cast<std::size_t>(k)]; };
      if (!(b * i((n + 2) * m) - c * i((n + 1) * m) + d * i(n * m)).is_zero()) {
        return {false, "symbolic m=" + std::to_string(m) + " n=" + std::to_string(n)};
      }
    }
  }
  return {true, "numeric m<=10 n<=50 (5 R), symbolic m<=4 n<=10"};
}

Outcome ac5() {
  const std::vector<Rational> rs = {Rational(2), Rational(4), Rational(8), Rational(1), Rational(3, 2), Rational(1, 4)};
  std::vector<std::future<std::string>> jobs;
  for (const auto& R : rs) {
    jobs.push_back(std::async(std::launch::async, [R] {
      const NP p(R);
      const auto P = oracle_seq(R, 30);
      for (long ell = 1; ell <= 9; ++ell) {
        const auto form = linearize(ell);
        for (long n = 0; n <= 30; ++n) {
          if (eval_linearized(form, p, n) != ipow(P[static_cast<std::size_t>(n)], ell)) {
            return "R=" + R.str() + " ell=" + std::to_string(ell) + " n=" + std::to_string(n);
          }
        }
      }
      return std::string();
    }));
  }
  for (auto& j : jobs) {
    auto bad = j.get();
    if (!bad.empty()) return {false, bad};
  }
  const auto sp = symbolic_params();
  const auto SP = oracle_seq(sp.R, 6);
  for (long ell = 1; ell <= 5; ++ell) {
    const auto form = linearize(ell);
    for (long n = 0; n <= 6; ++n) {
      if (eval_linearized(form, sp, n) != pow(SP[static_cast<std::size_t>(n)], ell)) {
        return {false, "symbolic ell=" + std::to_string(ell) + " n=" + std::to_string(n)};
      }
    }
  }

  // Odd formula with C(m, j) and P((m-2j) n), at m=1, R=2, n=2.
  const Rational R(2);
  const long m = 1, n = 2;
  Rational printed(0);
  for (long j = 0; j <= m; ++j) {
    const Rational sign = j % 2 ? Rational(-1) : Rational(1);
    printed = printed + sign * choose(m, j) * oracle_at(R, (m - 2 * j) * n) * ipow(-R / Rational(2), j * n);
  }
  printed = printed * ipow(Rational(2), 2 * m) / (ipow(R, 3 * m) * ipow(R + Rational(2), m));
  const Rational corrected = eval_linearized(linearize_odd(m), NP(R), n);
  const Rational truth = ipow(oracle_at(R, n), 3);
  if (printed == truth || corrected != Rational(8) || truth != Rational(8)) {
    return {false, "printed " + printed.str() + ", corrected " + corrected.str()};
  }
  auto rep = run_verify(Suite::identities, VerifyBounds::quick());
  auto rec = std::find_if(rep.records.begin(), rep.records.end(),
                          [](const CheckRecord& r) { return r.id == "identities.odd_power_binomial"; });
  if (rec == rep.records.end() || rec->status != CheckStatus::paper_discrepancy_confirmed || rec->expected != "8" ||
      rec->actual != printed.str()) {
    return {false, "discrepancy record missing or wrong"};
  }
  return {true, "ell<=9 n<=30 (6 R), symbolic ell<=5 n<=6; printed odd form gives " + printed.str() +
                    ", corrected gives 8 (recorded)"};
}

Outcome ac6() {
  const std::vector<Rational> rs = {Rational(2), Rational(4), Rational(8), Rational(3, 2), Rational(1, 4), Rational(2, 3)};
  std::vector<LinearizedForm> forms;
  for (long ell = 1; ell <= 7; ++ell) forms.push_back(linearize(ell));
  struct Tally {
    std::string bad;
    long resonances = 0;
    long cells = 0;
  };
  std::vector<std::future<Tally>> jobs;
  for (const auto& R : rs) {
    for (long m = 1; m <= 4; ++m) {
      jobs.push_back(std::async(std::launch::async, [R, m, &forms] {
        Tally t;
        const NP p(R);
        for (long ell = 1; ell <= 7; ++ell) {
          const auto want = brute_sums(R, m, ell, 60);
          for (long n = 0; n <= 60; ++n) {
            const PowerSumRequest<Rational> req{p, m, ell, n};
            const auto got = power_sum_closed(req, forms[static_cast<std::size_t>(ell - 1)]);
            t.resonances += got.resonances;
            ++t.cells;
            if (got.value != want[static_cast<std::size_t>(n)] || power_sum_brute(req) != got.value) {
              t.bad = "R=" + R.str() + " m=" + std::to_string(m) + " ell=" + std::to_string(ell) +
                      " n=" + std::to_string(n);
              return t;
            }
          }
        }
        return t;
      }));
    }
  }
  long resonance_total = 0, resonance_at_two_thirds = 0, cells = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto t = jobs[i].get();
    if (!t.bad.empty()) return {false, t.bad};
    resonance_total += t.resonances;
    cells += t.cells;
    if (rs[i / 4] == Rational(2, 3)) resonance_at_two_thirds += t.resonances;
  }
  if (resonance_at_two_thirds == 0) return {false, "R=2/3 never took the resonance fallback"};
  return {true, std::to_string(cells) + " cells exact; resonance fallback used " + std::to_string(resonance_total) +
                    " times (" + std::to_string(resonance_at_two_thirds) + " at R=2/3)"};
}

Outcome ac7() {
  const Rational R(2);
  const long m = 1, n = 2;
  const NP p(R);
  const Rational corrected = weighted_partial_sum(subsequence_gf(p, m), Rational(1), n).value;
  // Printed sigma = 1 form: a/(b+c+d) + (b P(m(n+1)) + d P(mn))/(b+c+d).
  const Rational b = ipow(Rational(2), m);
  const Rational c = -(R * (R + Rational(1)) * ipow(Rational(2), m - 1) * oracle_at(R, m) -
                       R * R * oracle_at(R, m - 2) / Rational(2));
  const Rational d = ipow(-R, m);
  const Rational a = b * oracle_at(R, m);
  const Rational den = b + c + d;
  const Rational printed = a / den + (b * oracle_at(R, m * (n + 1)) + d * oracle_at(R, m * n)) / den;
  const Rational truth = oracle_at(R, 0) + oracle_at(R, 1) + oracle_at(R, 2);
  if (corrected != Rational(3) || truth != Rational(3) || printed != Rational(-2)) {
    return {false, "corrected " + corrected.str() + ", printed " + printed.str()};
  }
  auto rep = run_verify(Suite::identities, VerifyBounds::quick());
  auto rec = std::find_if(rep.records.begin(), rep.records.end(),
                          [](const CheckRecord& r) { return r.id == "identities.partial_sum_sign"; });
  if (rec == rep.records.end() || rec->status != CheckStatus::paper_discrepancy_confirmed || rec->expected != "3" ||
      rec->actual != "-2") {
    return {false, "verify report does not record 3 vs -2"};
  }
  return {true, "corrected 3, printed -2, both in the verify report"};
}

// Printed first example, transcribed.
const char* const kFirstExample[] = {
    "16*(R-2)/((1-z)*R^2*(R+2)^2*(3*R-2))",
    "16*(-z*R+z*R^2+2)/((R+2)*(3*R-2)*R^2*(z^2*R^2-4*z*R*(R+1)+4))",
    "-16*1/((z*R+2)*R^2*(R+2)^2)",
};

// Printed second example, transcribed.
const char* const kSecondExample[] = {
    "512*(R^6+32*R^4+32*R^3+64)/((R+2)^2*(3*R-2)*(7*R^2-2*R+4)*(3*R^2+6*R+4)*(R^2+2*R-4)*(R^3-4*R^2-8)*(z-1))",
    "-384*(z*R^6-64)/((z^2*R^6-16*z*R^3*(R+1)+64)*R*(R^3-4*R^2-8)*(R^2+2*R-4)*(R+2)^2)",
    "-128*(2*R+3)*(2*R+1)*(z*R^6-64)/((z^2*R^6-16*z*R^3*(R+1)*(4*R^2+8*R+1)+64)*R*(3*R^2+6*R+4)"
    "*(7*R^2-2*R+4)*(3*R-2)*(R+2)^2)",
};

Outcome ac8() {
  ZFunc total(0);
  for (const char* f : kFirstExample) total = total + parse_zfunc(f);
  for (const auto& R : kSeriesR) {
    if (expand(total, R, kSeriesTerms) != brute_sums(R, 1, 2, kSeriesTerms)) return {false, "R=" + R.str()};
  }
  const auto at2 = expand(total, Rational(2), 4);
  const std::vector<Rational> spot = {Rational(0), Rational(1), Rational(5), Rational(30), Rational(174)};
  if (at2 != spot) return {false, "spot values at R=2"};
  return {true, "20 terms at R=2,4,3/2; R=2 starts 0, 1, 5, 30, 174"};
}

Outcome ac9() {
  const auto derived = power_sum_gf(2, 3);
  for (const auto& R : kSeriesR) {
    if (series_at(derived, R, kSeriesTerms) != brute_sums(R, 2, 3, kSeriesTerms)) {
      return {false, "derived series differs from brute force at R=" + R.str()};
    }
  }
  std::vector<ZFunc> derived_z;
  for (const auto& f : derived.fractions) derived_z.push_back(to_zfunc(f));
  long mismatched = 0;
  for (const char* text : kSecondExample) {
    const ZFunc printed = parse_zfunc(text);
    if (std::find(derived_z.begin(), derived_z.end(), printed) == derived_z.end()) ++mismatched;
  }
  // The variant with R^4 in the middle denominator is not the derived fraction.
  const Poly<Sym> one{Sym(1)};
  const ZFunc r4_inv(one, parse_zfunc("64-16*R^4*(R+1)*z+R^6*z^2").num());
  for (const auto& d : derived_z) {
    if (ZFunc(one, d.den()) == r4_inv) return {false, "derived denominator matches the R^4 variant"};
  }

  // Every mismatched printed fraction must carry a discrepancy record.
  long flagged = 0, failed = 0;
  for (const auto& rec : verify_paper_examples()) {
    if (rec.id.rfind("examples.sum_P(2k)^3.", 0) != 0) continue;
    failed += rec.status == CheckStatus::fail;
    if (rec.id.find(".fraction") != std::string::npos) flagged += rec.status == CheckStatus::paper_discrepancy_confirmed;
  }
  if (failed > 0) return {false, std::to_string(failed) + " failing records"};
  if (flagged != mismatched) {
    return {false, std::to_string(mismatched) + " printed fractions differ but " + std::to_string(flagged) +
                       " records flag them"};
  }
  return {true, "derived series exact at R=2,4,3/2; " + std::to_string(mismatched) +
                    " of 3 printed fractions differ from the derived ones, each flagged"};
}

Outcome ac10() {
  for (long N = 1; N <= 12; ++N) {
    if (!laurent_identity_check(N)) return {false, "library N=" + std::to_string(N)};
    // Both sides times x^(2N) are polynomials of degree <= 4N; 4N+1 points decide equality.
    for (long k = 1; k <= 4 * N + 1; ++k) {
      const Rational x(k + 1, k);
      const Rational xi = x.inverse();
      const Rational lhs = ipow(x, 2 * N) - ipow(xi, 2 * N);
      Rational s(0);
      for (long l = 0; l < N; ++l) s = s + choose(N + l, N - l - 1) * ipow(x - xi, 2 * l + 1);
      if (lhs != (x + xi) * s) return {false, "N=" + std::to_string(N) + " x=" + x.str()};
    }
  }
  return {true, "N=1..12"};
}

Outcome ac11() {
  const NP p(Rational(2));
  const auto recs = run_bench({{p, 1, 3, 10000}});
  const auto& b = recs.front();
  const auto oracle = brute_sums(Rational(2), 1, 3, 10000).back();
  const Rational closed = power_sum_closed(PowerSumRequest<Rational>{p, 1, 3, 10000}).value;
  if (!b.equal || closed != oracle) return {false, "closed form differs from brute force"};
  const bool cheap = b.closed_mults * 100 < b.brute_mults;
  return {cheap, "closed " + std::to_string(b.closed_mults) + " vs brute " + std::to_string(b.brute_mults) +
                     " bigint multiplications"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "value table P_R(0..6)", 1, ac1},
      {2, "classical Pell specialization", 1, ac2},
      {3, "three-way evaluator agreement", 10, ac3},
      {4, "subsequence recurrence", 60, ac4},
      {5, "linearization oracle and odd-form discrepancy", 120, ac5},
      {6, "closed-form power sums vs brute force", 300, ac6},
      {7, "sigma = 1 sign adjudication", 1, ac7},
      {8, "first generating-function example", 30, ac8},
      {9, "second generating-function example", 60, ac9},
      {10, "Laurent identity", 5, ac10},
      {11, "performance witness", 120, ac11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("[%s] AC%d %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), s, c.limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
