// Copyright 2026 The momrec Authors
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

#include "momrec/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

namespace momrec {

LaurentMap reconstruct(const MomentMatrix& M, int n, int m,
                       const ArnoldiOptions& opts) {
  if (!(1 < m && m < n)) throw IndexOutOfRange("m must satisfy 1 < m < n");
  auto [basis, H] = arnoldi_orthonormalize(M, n, opts);
  (void)basis;
  ScaledDiagonals sd = scaled_diagonals(H, n, m);
  LaurentMap map(std::move(sd.b_est), std::move(sd.coeff_est));
  // h_{n+1,n} is real by construction; keep the repair hook for maps
  // assembled from loaded Hessenberg data.
  return map;
}

std::vector<CurveSample> curve_points(const LaurentMap& map, int K) {
  if (K < 3) throw IndexOutOfRange("curve sampling needs K >= 3");
  mpfr_prec_t p = map.prec();
  Real two_pi = Real::pi(p);
  two_pi.scale2(1);
  std::vector<CurveSample> out;
  out.reserve(K);
  for (int i = 0; i < K; ++i) {
    Real theta = two_pi * Real::of_si(i, p) / Real::of_si(K, p);
    Complex w = Complex::unit(theta);
    out.push_back(CurveSample{theta, map.eval(w)});
  }
  return out;
}

Real sup_distance(const LaurentMap& ref, const LaurentMap& est, int K) {
  if (K < 64) throw IndexOutOfRange("sup distance needs K >= 64");
  mpfr_prec_t p = std::max(ref.prec(), est.prec());
  Real two_pi = Real::pi(p);
  two_pi.scale2(1);
  Real worst(p);
  for (int i = 0; i < K; ++i) {
    Real theta = two_pi * Real::of_si(i, p) / Real::of_si(K, p);
    Complex w = Complex::unit(theta);
    worst = Real::max(worst, (ref.eval(w) - est.eval(w)).abs());
  }
  return worst;
}

namespace {

MomentMatrix domain_moments(const DomainSpec& domain, int N,
                            const PrecisionContext& ctx, int workers) {
  DomainSpec r = domain.resolved(ctx);
  if (r.is_polygon()) return polygon_moments(r, N, ctx, workers);
  return parametric_moments(r, N, default_quadrature_nodes(N), ctx, workers);
}

}  // namespace

std::vector<RateRow> rate_table(const DomainSpec& domain,
                                const LaurentMap& reference,
                                const std::vector<int>& n_list, int k,
                                const PrecisionContext& ctx, int workers) {
  if (n_list.empty()) return {};
  for (size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw IndexOutOfRange("n_list must be strictly increasing");
  if (k < 0 || k > reference.order())
    throw IndexOutOfRange("coefficient index k outside the reference map");
  int n_max = n_list.back();
  mpfr_prec_t prec = ctx.bits;
  MomentMatrix M = domain_moments(domain, n_max + 1, ctx, workers);

  std::vector<RateRow> rows(n_list.size(), RateRow(prec));
  // Each row re-runs Arnoldi on the shared moment table; rows are
  // independent so worker partitioning cannot change any value.
  auto run_row = [&](size_t i) {
    int n = n_list[i];
    ArnoldiOptions opts;
    opts.quiet = true;
    auto [basis, H] = arnoldi_orthonormalize(M, n, opts);
    (void)basis;
    ScaledDiagonals sd = scaled_diagonals(H, n, std::max(2, k));
    RateRow row(prec);
    row.n = n;
    row.b_est = sd.b_est;
    row.t = reference.b - row.b_est;
    row.bk_est = sd.coeff_est[k];
    row.tk = (reference.coeffs[k] - row.bk_est).re;
    rows[i] = std::move(row);
  };
  if (workers <= 1 || n_list.size() == 1) {
    for (size_t i = 0; i < n_list.size(); ++i) run_row(i);
  } else {
    std::vector<std::thread> pool;
    size_t count = n_list.size();
    int nw = std::min<size_t>(workers, count);
    for (int w = 0; w < nw; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < count; i += nw) run_row(i);
      });
    for (auto& th : pool) th.join();
  }

  // Rate estimators from consecutive rows; undefined when an error
  // vanishes to rounding (flagged by leaving s undefined).
  Real floor = Real::pow2(-(static_cast<long>(prec) / 2), prec);
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    Real at = Real::abs(rows[i].t), an = Real::abs(rows[i + 1].t);
    Real ratio_n = Real::of_si(rows[i + 1].n, prec) / Real::of_si(rows[i].n, prec);
    if (at > floor && an > floor) {
      rows[i].s = Real::log(at / an) / Real::log(ratio_n);
      rows[i].s_defined = true;
    }
    Real atk = Real::abs(rows[i].tk), ank = Real::abs(rows[i + 1].tk);
    if (atk > floor && ank > floor) {
      rows[i].sk = Real::log(atk / ank) / Real::log(ratio_n);
      rows[i].sk_defined = true;
    }
  }
  return rows;
}

std::string curves_svg(const std::vector<CurveSample>& reconstructed,
                       const std::vector<CurveSample>* reference) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto scan = [&](const std::vector<CurveSample>& cs) {
    for (const CurveSample& s : cs) {
      double x = s.point.re.to_double();
      double y = s.point.im.to_double();
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  };
  scan(reconstructed);
  if (reference) scan(*reference);
  double w = xmax - xmin, h = ymax - ymin;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  double mx = 0.05 * w, my = 0.05 * h;

  std::ostringstream svg;
  svg.precision(8);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (xmin - mx)
      << " " << (-(ymax + my)) << " " << (w + 2 * mx) << " " << (h + 2 * my)
      << "\">\n";
  auto polyline = [&](const std::vector<CurveSample>& cs, const char* color,
                      const char* dash) {
    svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << (0.004 * std::max(w, h)) << "\"" << dash << " points=\"";
    for (const CurveSample& s : cs)
      svg << s.point.re.to_double() << "," << -s.point.im.to_double() << " ";
    if (!cs.empty())
      svg << cs.front().point.re.to_double() << ","
          << -cs.front().point.im.to_double();
    svg << "\"/>\n";
  };
  if (reference)
    polyline(*reference, "#202020", " stroke-dasharray=\"0.04 0.02\"");
  polyline(reconstructed, "#c02020", "");
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace momrec
