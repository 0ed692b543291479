#include "fresco/classify3.hpp"

#include <algorithm>
#include <sstream>

namespace fresco {

std::string case_tag(Rank3Case c) {
  switch (c) {
    case Rank3Case::C1: return "1";
    case Rank3Case::C2: return "2";
    case Rank3Case::C3: return "3";
    case Rank3Case::C4: return "4";
    case Rank3Case::C4p: return "4'";
    case Rank3Case::C5: return "5";
    case Rank3Case::C6: return "6";
    case Rank3Case::C6p: return "6'";
    case Rank3Case::C6pp: return "6''";
    case Rank3Case::C6ppp: return "6'''";
    case Rank3Case::C7: return "7";
    case Rank3Case::C8: return "8";
    case Rank3Case::C8p: return "8'";
    case Rank3Case::C8pp: return "8''";
  }
  return "?";
}

std::vector<int> case_support(Rank3Case c, int p1, int p2, bool beta_zero) {
  switch (c) {
    case Rank3Case::C2:
    case Rank3Case::C4p:
    case Rank3Case::C5: return {0, 1, p1};
    case Rank3Case::C4: return {0, p1};
    case Rank3Case::C6p: return {0, p2 + 1};
    case Rank3Case::C6ppp: return {0, 1, 2};
    case Rank3Case::C3:
      if (beta_zero) return {0, 1, p1 + p2};
      return {0, 1};
    case Rank3Case::C8p: return {0};
    default: return {0, 1};
  }
}

std::string case_template(Rank3Case c) {
  switch (c) {
    case Rank3Case::C1: return "(a - λ1.b).(1 + γ.b)^-1.(a - λ2.b).S2^-1.(a - λ3.b)";
    case Rank3Case::C2: return "(a - λ1.b).(1 + γ.b + α.b^p1)^-1.(a - λ2.b).(1 + β.b^p2)^-1.(a - λ3.b)";
    case Rank3Case::C3: return "(a - λ1.b).(1 + γ.b + δ.b^(p1+p2))^-1.(a - λ2.b).(1 + β.b^p2)^-1.(a - λ3.b)";
    case Rank3Case::C4: return "(a - λ1.b).(1 + α.b^p1)^-1.(a - λ2.b).(1 + β.b)^-1.(a - λ2.b)";
    case Rank3Case::C4p: return "(a - λ1.b).(1 + γ.b + α.b^p1)^-1.(a - λ2.b).(a - λ2.b)";
    case Rank3Case::C5: return "(a - λ1.b).(1 + γ.b + α.b^p1)^-1.(a - λ2.b).(a - (λ2-1).b)";
    case Rank3Case::C6: return "(a - λ1.b).(1 + α.b)^-1.(a - λ1.b).(1 + β.b^p2)^-1.(a - λ3.b)";
    case Rank3Case::C6p: return "(a - λ1.b).(1 + δ.b^(p2+1))^-1.(a - λ1.b).(1 + β.b^p2)^-1.(a - λ3.b)";
    case Rank3Case::C6pp: return "(a - λ1.b).(1 + α.b)^-1.(a - λ1.b).(1 + β.b)^-1.(a - λ3.b)";
    case Rank3Case::C6ppp: return "(a - λ1.b).(1 + α.b + δ.b^2)^-1.(a - λ1.b).(1 + α.b)^-1.(a - λ1.b)";
    case Rank3Case::C7: return "(a - λ1.b).(1 + γ.b)^-1.(a - λ1.b).(a - (λ1-1).b)";
    case Rank3Case::C8: return "(a - λ1.b).(1 + γ.b + δ.b^p2)^-1.(a - (λ1-1).b).(1 + β.b^p2)^-1.(a - λ3.b)";
    case Rank3Case::C8p: return "(a - λ1.b).(a - (λ1-1).b).(1 + β.b)^-1.(a - (λ1-1).b)";
    case Rank3Case::C8pp: return "(a - λ1.b).(1 + γ.b)^-1.(a - (λ1-1).b).(a - (λ1-2).b)";
  }
  return "";
}

Scalar Rank3NormalForm::param(const std::string& name) const {
  for (const auto& [n, v] : params)
    if (n == name) return v;
  throw std::out_of_range("normal form has no parameter " + name);
}

bool Rank3NormalForm::has_param(const std::string& name) const {
  return std::any_of(params.begin(), params.end(), [&](const auto& kv) { return kv.first == name; });
}

namespace {

int as_int(const Scalar& x) { return static_cast<int>(to_long(x)); }

bool positive_integer(const Scalar& x) { return is_integer(x) && x >= 1; }

Rank3Case select_case(const Scalar& p1, const Scalar& p2, const Scalar& alpha, const Scalar& beta) {
  if (!is_integer(p1)) return Rank3Case::C1;
  if (p1 >= 2) {
    if (p2 >= 2) return alpha != 0 ? Rank3Case::C2 : Rank3Case::C3;
    if (p2 == 1) return beta != 0 ? Rank3Case::C4 : Rank3Case::C4p;
    return Rank3Case::C5;
  }
  if (p1 == 1) {
    if (p2 >= 2) return alpha != 0 ? Rank3Case::C6 : Rank3Case::C6p;
    if (p2 == 1) return beta != alpha ? Rank3Case::C6pp : Rank3Case::C6ppp;
    return Rank3Case::C7;
  }
  if (p2 >= 2) return Rank3Case::C8;
  if (p2 == 1) return Rank3Case::C8p;
  return Rank3Case::C8pp;
}

// Unknowns X, Y, T and the sigma_z of Sigma_1 for the change of basis
// eps3 = e3 + X e2 + Y e1, eps2 = e2 + T e1, eps1 = e1.
struct CoefficientSystem {
  int N;
  std::vector<int> Z;
  int nx, nt, ny;
  int x(int i) const { return i; }
  int t(int i) const { return nx + i; }
  int y(int i) const { return nx + nt + i; }
  int sigma(int z) const {
    auto it = std::find(Z.begin(), Z.end(), z);
    return it == Z.end() ? -1 : nx + nt + ny + static_cast<int>(it - Z.begin());
  }
  int unknowns() const { return nx + nt + ny + static_cast<int>(Z.size()); }
};

TruncSeries solve_sigma(const std::vector<Scalar>& l, const TruncSeries& S1, const TruncSeries& S2, const std::vector<int>& Z,
                        int N) {
  CoefficientSystem cs{N, Z, N + 1, N + 1, N};
  int U = cs.unknowns();
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  std::vector<int> eq_n;
  auto row = [&]() { return std::vector<Scalar>(U + 0, Scalar(0)); };
  for (int n = 0; n <= N; ++n) {
    // (lambda2 - lambda3) b X + b^2 X' = 0
    if (n >= 1) {
      auto r = row();
      r[cs.x(n - 1)] = n - 1 + l[1] - l[2];
      rows.push_back(r), rhs.push_back(0), eq_n.push_back(n);
    }
    // (lambda1 - lambda3) b Y + b^2 Y' = S2 T - X S1
    {
      auto r = row();
      if (n >= 1) r[cs.y(n - 1)] += n - 1 + l[0] - l[2];
      for (int i = 0; i <= n; ++i) {
        r[cs.t(i)] -= S2[n - i];
        r[cs.x(i)] += S1[n - i];
      }
      rows.push_back(r), rhs.push_back(0), eq_n.push_back(n);
    }
    // (lambda1 - lambda2) b T + b^2 T' = Sigma1 - S1
    {
      auto r = row();
      if (n >= 1) r[cs.t(n - 1)] += n - 1 + l[0] - l[1];
      int s = cs.sigma(n);
      if (s >= 0) r[s] -= 1;
      rows.push_back(r), rhs.push_back(-S1[n]), eq_n.push_back(n);
    }
  }
  QMatrix M(static_cast<int>(rows.size()), U), R(static_cast<int>(rows.size()), 1);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < U; ++j) M(static_cast<int>(i), j) = rows[i][j];
    R(static_cast<int>(i), 0) = rhs[i];
  }
  QMatrix X;
  if (!solve(M, R, X)) {
    // first equation that cannot be met
    for (size_t m = 1; m <= rows.size(); ++m) {
      QMatrix Mm(static_cast<int>(m), U), Rm(static_cast<int>(m), 1);
      for (size_t i = 0; i < m; ++i) {
        for (int j = 0; j < U; ++j) Mm(static_cast<int>(i), j) = M(static_cast<int>(i), j);
        Rm(static_cast<int>(i), 0) = R(static_cast<int>(i), 0);
      }
      QMatrix Xm;
      if (!solve(Mm, Rm, Xm)) throw Obstruction(eq_n[m - 1], R(static_cast<int>(m - 1), 0), "rank-3 normal form equations");
    }
  }
  QMatrix K = nullspace(M);
  for (int z : Z)
    for (int c = 0; c < K.cols; ++c)
      if (K(cs.sigma(z), c) != 0) throw std::logic_error("normal form coefficient of b^" + std::to_string(z) + " is not determined");
  TruncSeries sigma(N);
  for (int z : Z) sigma[z] = X(cs.sigma(z), 0);
  return sigma;
}

}  // namespace

Rank3NormalForm normal_form_rank3(const FrescoPresentation& p) {
  validate(p);
  if (p.k() != 3) throw UnsupportedShape("rank-3 classification needs rank 3");
  const auto& l = p.lambdas;
  if (same_class(l[0], l[1]) && !same_class(l[1], l[2]))
    throw UnsupportedShape("a class mod Z with exactly two members must be {λ2, λ3}");
  Rank3NormalForm nf;
  nf.lambda1 = l[0];
  nf.p1 = p.p(1);
  nf.p2 = p.p(2);
  VersalResult v = reduce_to_versal(p);
  Scalar alpha = positive_integer(nf.p1) ? v.pres.S[0].coeff(as_int(nf.p1)) : Scalar(0);
  Scalar beta = positive_integer(nf.p2) ? v.pres.S[1].coeff(as_int(nf.p2)) : Scalar(0);
  nf.tag = select_case(nf.p1, nf.p2, alpha, beta);
  int ip1 = is_integer(nf.p1) ? as_int(nf.p1) : 0, ip2 = is_integer(nf.p2) ? as_int(nf.p2) : 0;
  auto Z = case_support(nf.tag, ip1, ip2, beta == 0);
  int N = std::max(ip1, 0) + std::max(ip2, 0) + *std::max_element(Z.begin(), Z.end()) + 6 +
          static_cast<int>(ceil_of(abs(l[2] - l[0])));
  TruncSeries S1 = v.pres.S[0].extended(N), S2 = v.pres.S[1].extended(N);
  TruncSeries sigma = solve_sigma(l, S1, S2, Z, N);

  auto put = [&](const std::string& name, const Scalar& x) { nf.params.push_back({name, x}); };
  auto s = [&](int e) { return sigma.coeff(e); };
  switch (nf.tag) {
    case Rank3Case::C1:
      put("γ", s(1));
      if (positive_integer(nf.p2)) put("β", beta);
      break;
    case Rank3Case::C2: put("γ", s(1)), put("α", s(ip1)), put("β", beta); break;
    case Rank3Case::C3: put("γ", s(1)), put("δ", s(ip1 + ip2)), put("β", beta); break;
    case Rank3Case::C4: put("α", s(ip1)), put("β", beta); break;
    case Rank3Case::C4p: put("γ", s(1)), put("α", s(ip1)); break;
    case Rank3Case::C5: put("γ", s(1)), put("α", s(ip1)); break;
    case Rank3Case::C6: put("α", s(1)), put("β", beta); break;
    case Rank3Case::C6p: put("δ", s(ip2 + 1)), put("β", beta); break;
    case Rank3Case::C6pp: put("α", s(1)), put("β", beta); break;
    case Rank3Case::C6ppp: put("α", s(1)), put("δ", s(2)); break;
    case Rank3Case::C7: put("γ", s(1)); break;
    case Rank3Case::C8: put("γ", s(1)), put("δ", Scalar(0)), put("β", beta); break;
    case Rank3Case::C8p: put("β", beta); break;
    case Rank3Case::C8pp: put("γ", s(1)); break;
  }
  nf.pres.lambdas = l;
  nf.pres.order = N;
  nf.pres.S = {sigma, S2, TruncSeries::one(N)};
  nf.check = is_isomorphic(nf.pres, p, N);
  return nf;
}

FrescoPresentation alternative_4prime(const Rank3NormalForm& nf) {
  if (nf.tag != Rank3Case::C4p) throw UnsupportedShape("alternative form exists only in case (4')");
  Scalar alpha = nf.param("α"), gamma = nf.param("γ");
  if (alpha == 0) throw UnsupportedShape("alternative form of case (4') needs α ≠ 0");
  int p1 = as_int(nf.p1);
  Scalar delta = alpha * gamma / (p1 - 1);
  FrescoPresentation r = nf.pres;
  TruncSeries s = TruncSeries::one(r.order);
  s[p1] = alpha;
  if (p1 + 1 <= r.order) s[p1 + 1] = delta;
  r.S[0] = s;
  return r;
}

std::string format_normal_form(const Rank3NormalForm& nf) {
  std::ostringstream os;
  os << "case (" << case_tag(nf.tag) << ")\n";
  os << "λ1 = " << to_string(nf.lambda1) << ", p1 = " << to_string(nf.p1) << ", p2 = " << to_string(nf.p2) << "\n";
  for (const auto& [n, v] : nf.params) os << n << " = " << to_string(v) << "\n";
  os << case_template(nf.tag) << "\n";
  return os.str();
}

Scalar gamma3(const FrescoPresentation& p) {
  if (p.k() != 3) throw UnsupportedShape("γ is defined for rank 3");
  return (p.p(2) - 1) * p.S[0].coeff(1) - (p.p(1) - 1) * p.S[1].coeff(1);
}

FrescoPresentation slice3(const FrescoPresentation& p, int h) {
  int k = p.k();
  if (h < 1 || h + 2 > k) throw IndexOutOfRange("slice index " + std::to_string(h) + " outside [1, k-2]");
  FrescoPresentation r;
  r.order = p.order;
  r.lambdas.assign(p.lambdas.begin() + h - 1, p.lambdas.begin() + h + 2);
  r.S = {p.S[h - 1], p.S[h], h + 2 == k ? p.S[k - 1] : TruncSeries::one(p.order)};
  return r;
}

Scalar gamma_h(const FrescoPresentation& p, int h) { return gamma3(slice3(p, h)); }

Scalar pi_ij(const FrescoPresentation& p, int i, int j) {
  int k = p.k();
  if (i < 1 || j < 1 || i > k - 2 || j > k - 2) throw IndexOutOfRange("π indices must lie in [1, k-2]");
  auto weight = [&](int h) -> Scalar {
    Scalar a = p.p(h), b = p.p(h + 1);
    return (a - 1) * (b - 1) * (a + b - 1);
  };
  return weight(j) * gamma_h(p, i) - weight(i) * gamma_h(p, j);
}

Scalar alpha2(const FrescoPresentation& p) {
  if (p.k() != 2) throw UnsupportedShape("α is defined for rank 2");
  Scalar p1 = p.p(1);
  if (!positive_integer(p1)) return 0;
  return reduce_to_versal(p).pres.S[0].coeff(as_int(p1));
}

}  // namespace fresco
