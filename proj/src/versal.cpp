#include "fresco/fresco.hpp"

#include <algorithm>

namespace fresco {

namespace {

struct Reduced {
  std::vector<TruncSeries> sigma;  // Sigma_1 ... Sigma_k, Sigma_k = 1
  SVec phi;
};

// P_{k-1} = (a - l2 b) s2^-1 ... (a - lk b) sk^-1 on a vector of m
SVec tail_operator(const AbModule& m, const std::vector<Scalar>& lambdas, const std::vector<TruncSeries>& sigma, SVec v) {
  int k = static_cast<int>(lambdas.size());
  for (int j = k - 1; j >= 1; --j) {
    v = scale(invert(sigma[j]), v);
    v = sub_a_lambda(m, v, lambdas[j]);
  }
  return v;
}

Reduced versal_rec(const std::vector<Scalar>& lambdas, const std::vector<TruncSeries>& S, int N) {
  int k = static_cast<int>(lambdas.size());
  if (k == 1) return {{TruncSeries::one(N)}, {invert(S[0])}};
  Reduced tail = versal_rec(std::vector<Scalar>(lambdas.begin() + 1, lambdas.end()),
                            std::vector<TruncSeries>(S.begin() + 1, S.end()), N);
  std::vector<TruncSeries> sigma{TruncSeries::one(N)};
  sigma.insert(sigma.end(), tail.sigma.begin(), tail.sigma.end());
  SVec phi{TruncSeries(N)};
  phi.insert(phi.end(), tail.phi.begin(), tail.phi.end());

  FrescoPresentation p;
  p.lambdas = lambdas;
  p.S = S;
  p.order = N;
  AbModule E = realize(p, N);
  SVec z = tail_operator(E, lambdas, sigma, phi);
  for (int i = 1; i < k; ++i)
    if (!z[i].is_zero()) throw std::logic_error("lifted generator does not map into the first Jordan-Hoelder term");
  const TruncSeries& t = z[0];

  AbModule E1 = make_module(SMatrix(1, 1, N));
  E1.A(0, 0) = TruncSeries::monomial(lambdas[0], 1, N);
  std::set<int> Y = Y_support(lambdas, 1);
  TruncSeries s(N), C(N), acc(N);
  for (int q = 0; q <= N; ++q) {
    if (q < k - 1) {
      s[q] = t[q] / t[0];
      continue;
    }
    int mexp = q - k + 1;
    TruncSeries L = tail_operator(E1, lambdas, sigma, {TruncSeries::monomial(1, mexp, N)})[0];
    if (Y.count(q)) {
      s[q] = (t[q] - acc[q]) / t[0];
      continue;
    }
    if (L[q] == 0) throw std::logic_error("non-resonant exponent " + std::to_string(q) + " is not absorbable");
    C[mexp] = (t[q] - acc[q]) / L[q];
    acc += scale(C[mexp], L);
  }
  sigma[0] = s;
  SVec psi = phi;
  psi[0] -= C;
  return {sigma, psi};
}

}  // namespace

VersalResult reduce_to_versal(const FrescoPresentation& p, int order) {
  validate(p);
  int k = p.k();
  int N = std::max(p.order, order);
  for (int j = 1; j <= k; ++j) N = std::max(N, *Y_support(p.lambdas, j).rbegin());
  std::vector<TruncSeries> S;
  for (const auto& s : p.S) S.push_back(s.extended(N));
  Reduced r = versal_rec(p.lambdas, S, N);
  VersalResult out;
  out.pres.lambdas = p.lambdas;
  out.pres.S = r.sigma;
  out.pres.order = N;
  out.generator = r.phi;
  out.order = N;
  return out;
}

}  // namespace fresco
