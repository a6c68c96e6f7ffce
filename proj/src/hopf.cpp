#include "homform/hopf.hpp"

#include <sstream>

#include "homform/errors.hpp"
#include "homform/preregularity.hpp"

namespace homform {

MultilinearForm solve_wtilde(const MultilinearForm& w) {
  const int d = w.dim();
  const int m = w.arity();
  if (m < 2) throw PreconditionError("right inverse needs arity at least 2");
  Matrix F = flatten(w, m - 1);  // d^(m-1) x d
  RrefResult r = rref(F.transpose());
  if (r.pivots.size() != static_cast<std::size_t>(d)) {
    throw PreconditionError("form is degenerate: no right inverse exists");
  }
  Matrix FP(d, d);
  for (int j = 0; j < d; ++j) FP.row_mut(j) = F.row(r.pivots[j]);
  Matrix M = inverse(FP);
  MultilinearForm wt(d, m);
  const Index tail = ipow(d, m - 1);
  for (int a = 0; a < d; ++a) {
    for (const auto& [j, v] : M.row(a).entries()) wt.set_code(a * tail + r.pivots[j], v);
  }
  if (!validate_wtilde(w, wt)) throw VerificationError("constructed right inverse fails its defining identity");
  return wt;
}

bool validate_wtilde(const MultilinearForm& w, const MultilinearForm& wtilde) {
  if (w.dim() != wtilde.dim() || w.arity() != wtilde.arity()) return false;
  const int m = w.arity();
  if (m < 2) return false;
  Matrix prod = flatten(wtilde, 1) * flatten(w, m - 1);
  return prod == Matrix::identity(w.dim());
}

void NCPolynomial::add(const std::vector<int>& word, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(word, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  NCPolynomial out;
  for (const auto& [a, x] : terms) {
    for (const auto& [b, y] : o.terms) {
      std::vector<int> w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add(w, x * y);
    }
  }
  return out;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  NCPolynomial out = *this;
  for (const auto& [w, c] : o.terms) out.add(w, c);
  return out;
}

NCPolynomial NCPolynomial::scaled(const Scalar& c) const {
  NCPolynomial out;
  for (const auto& [w, x] : terms) out.add(w, x * c);
  return out;
}

namespace {

Index word_code(const std::vector<int>& word, int d) {
  Index c = 0;
  for (int l : word) c = c * d * d + l;
  return c;
}

std::vector<int> code_word(Index code, int d, int len) {
  std::vector<int> w(len);
  const Index base = static_cast<Index>(d) * d;
  for (int i = len - 1; i >= 0; --i) {
    w[i] = static_cast<int>(code % base);
    code /= base;
  }
  return w;
}

NCPolynomial polynomial_from_vector(const SparseVector& v, int d, int m) {
  NCPolynomial p;
  for (const auto& [c, s] : v.entries()) {
    if (c == 0) {
      p.add({}, s);
    } else {
      p.add(code_word(c - 1, d, m), s);
    }
  }
  return p;
}

NCPolynomial letter(int d, int a, int b) {
  NCPolynomial p;
  p.add({a * d + b}, Scalar(1));
  return p;
}

NCPolynomial unit_poly(const Scalar& c) {
  NCPolynomial p;
  p.add({}, c);
  return p;
}

}  // namespace

SparseVector hopf_coefficients(const HopfPresentation& hp, const NCPolynomial& p) {
  std::vector<SparseVector::Entry> e;
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) {
      e.emplace_back(0, c);
    } else if (static_cast<int>(w.size()) == hp.arity) {
      e.emplace_back(1 + word_code(w, hp.dim), c);
    } else {
      throw PreconditionError("polynomial has a word length outside {0, m}");
    }
  }
  return SparseVector::from_entries(std::move(e));
}

HopfPresentation hopf_presentation(const MultilinearForm& w, const MultilinearForm& wtilde, Index guard) {
  if (!validate_wtilde(w, wtilde)) throw PreconditionError("right inverse fails Wt W = 1");
  const int d = w.dim();
  const int m = w.arity();
  const Index words = ipow(static_cast<Index>(d) * d, m);
  if (words > guard) {
    throw GuardError("Hopf presentation guard exceeded: " + std::to_string(words) + " words > " +
                     std::to_string(guard));
  }
  HopfPresentation hp;
  hp.dim = d;
  hp.arity = m;
  hp.w = w;
  hp.wtilde = wtilde;
  const Index families = ipow(d, m);
  hp.raw_relation_count = 2 * families;
  EchelonBuilder b(words + 1);
  // W_{a1..am} u^{a1}_{b1}...u^{am}_{bm} = W_{b1..bm} 1
  for (Index beta = 0; beta < families; ++beta) {
    MultiIndex bi = decode(beta, d, m);
    std::vector<SparseVector::Entry> e;
    for (const auto& [alpha, c] : w.entries()) {
      MultiIndex ai = decode(alpha, d, m);
      std::vector<int> word(m);
      for (int k = 0; k < m; ++k) word[k] = ai[k] * d + bi[k];
      e.emplace_back(1 + word_code(word, d), c);
    }
    e.emplace_back(0, -w.at_code(beta));
    b.insert(SparseVector::from_entries(std::move(e)));
  }
  // Wt^{b1..bm} u^{a1}_{b1}...u^{am}_{bm} = Wt^{a1..am} 1
  for (Index alpha = 0; alpha < families; ++alpha) {
    MultiIndex ai = decode(alpha, d, m);
    std::vector<SparseVector::Entry> e;
    for (const auto& [beta, c] : wtilde.entries()) {
      MultiIndex bi = decode(beta, d, m);
      std::vector<int> word(m);
      for (int k = 0; k < m; ++k) word[k] = ai[k] * d + bi[k];
      e.emplace_back(1 + word_code(word, d), c);
    }
    e.emplace_back(0, -wtilde.at_code(alpha));
    b.insert(SparseVector::from_entries(std::move(e)));
  }
  hp.relation_space = Subspace::from_builder(b);
  for (const auto& row : hp.relation_space.basis()) hp.relations.push_back(polynomial_from_vector(row, d, m));

  // S(u^mu_nu) = Wt^{mu l1..l(m-1)} u^{r1}_{l1}...u^{r(m-1)}_{l(m-1)} W_{r1..r(m-1) nu}
  const Index tail = ipow(d, m - 1);
  hp.antipode.assign(static_cast<std::size_t>(d) * d, NCPolynomial());
  for (const auto& [wc, wv] : wtilde.entries()) {
    Index mu = wc / tail;
    MultiIndex lam = decode(wc % tail, d, m - 1);
    for (const auto& [vc, vv] : w.entries()) {
      Index nu = vc % d;
      MultiIndex rho = decode(vc / d, d, m - 1);
      std::vector<int> word(m - 1);
      for (int k = 0; k < m - 1; ++k) word[k] = rho[k] * d + lam[k];
      hp.antipode[mu * d + nu].add(word, wv * vv);
    }
  }

  hp.counit_consistent = true;
  for (const auto& rel : hp.relations) {
    Scalar total;
    for (const auto& [word, c] : rel.terms) {
      bool diagonal = true;
      for (int l : word) diagonal = diagonal && (l / d == l % d);
      if (diagonal) total += c;
    }
    if (!total.is_zero()) hp.counit_consistent = false;
  }
  return hp;
}

bool verify_antipode_identity(const HopfPresentation& hp) {
  const int d = hp.dim;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      NCPolynomial left, right;
      for (int l = 0; l < d; ++l) {
        left = left + hp.antipode[mu * d + l] * letter(d, l, nu);
        right = right + letter(d, mu, l) * hp.antipode[l * d + nu];
      }
      if (mu == nu) {
        left = left + unit_poly(Scalar(-1));
        right = right + unit_poly(Scalar(-1));
      }
      if (!hp.relation_space.contains(hopf_coefficients(hp, left))) return false;
      if (!hp.relation_space.contains(hopf_coefficients(hp, right))) return false;
    }
  }
  return true;
}

bool verify_coproduct_consistency(const HopfPresentation& hp) {
  const int d = hp.dim;
  const int m = hp.arity;
  const Index families = ipow(d, m);
  const Subspace& H = hp.relation_space;
  for (const auto& rel : hp.relations) {
    // right factor code -> left factor vector
    std::map<Index, std::vector<SparseVector::Entry>> by_right;
    for (const auto& [word, c] : rel.terms) {
      if (word.empty()) {
        by_right[0].emplace_back(0, c);
        continue;
      }
      for (Index g = 0; g < families; ++g) {
        MultiIndex gi = decode(g, d, m);
        std::vector<int> lw(m), rw(m);
        for (int k = 0; k < m; ++k) {
          lw[k] = (word[k] / d) * d + gi[k];
          rw[k] = gi[k] * d + word[k] % d;
        }
        by_right[1 + word_code(rw, d)].emplace_back(1 + word_code(lw, d), c);
      }
    }
    // Apply the residual map on the left factor, then on the right factor.
    std::map<Index, std::vector<SparseVector::Entry>> by_left;
    for (auto& [rc, e] : by_right) {
      SparseVector res = H.reduce(SparseVector::from_entries(std::move(e)));
      for (const auto& [lc, v] : res.entries()) by_left[lc].emplace_back(rc, v);
    }
    for (auto& [lc, e] : by_left) {
      if (!H.reduce(SparseVector::from_entries(std::move(e))).empty()) return false;
    }
  }
  return true;
}

bool coaction_check(const MultilinearForm& w, int N, const HopfPresentation& hp) {
  const int d = w.dim();
  const int m = w.arity();
  if (hp.dim != d || hp.arity != m) throw PreconditionError("Hopf presentation does not match the form");
  if (N < 2 || N > m) throw PreconditionError("coaction check needs 2 <= N <= m");
  const Subspace R = Subspace::span(ipow(d, N), contractions(w, N));
  const Index xlen = ipow(d, N);
  const Index prefixes = ipow(d, m - N);
  std::map<Index, std::size_t> pivot_row;
  for (std::size_t i = 0; i < R.pivots().size(); ++i) pivot_row.emplace(R.pivots()[i], i);
  for (Index lam = 0; lam < prefixes; ++lam) {
    MultiIndex li = decode(lam, d, m - N);
    // Z = sum_nu c_nu (x) x^nu, c_nu = sum W_{a mu} u^a_lam u^mu_nu
    std::map<Index, std::vector<SparseVector::Entry>> coeff;
    for (const auto& [code, c] : w.entries()) {
      MultiIndex ai = decode(code, d, m);
      for (Index nu = 0; nu < xlen; ++nu) {
        MultiIndex ni = decode(nu, d, N);
        std::vector<int> word(m);
        for (int k = 0; k < m - N; ++k) word[k] = ai[k] * d + li[k];
        for (int k = 0; k < N; ++k) word[m - N + k] = ai[m - N + k] * d + ni[k];
        coeff[nu].emplace_back(1 + word_code(word, d), c);
      }
    }
    // Reduce the x-part modulo R: x^p = -sum_k row_p[k] x^k for pivots p.
    std::map<Index, SparseVector> reduced;
    for (auto& [nu, e] : coeff) {
      SparseVector cv = SparseVector::from_entries(std::move(e));
      auto it = pivot_row.find(nu);
      if (it == pivot_row.end()) {
        reduced[nu].axpy(Scalar(1), cv);
        continue;
      }
      const SparseVector& row = R.basis()[it->second];
      for (std::size_t i = 1; i < row.size(); ++i) {
        const auto& [k, v] = row.entries()[i];
        reduced[k].axpy(-v, cv);
      }
    }
    for (const auto& [k, cv] : reduced) {
      if (!hp.relation_space.contains(cv)) return false;
    }
  }
  return true;
}

bool contraction_identity_check(const MultilinearForm& w, const MultilinearForm& wtilde) {
  if (!validate_wtilde(w, wtilde)) throw PreconditionError("right inverse fails Wt W = 1");
  Matrix lhs = flatten(wtilde, 1) * flatten(w, 1).transpose();
  return lhs == inverse(q_matrix(w));
}

QRoots q_from_b(const MultilinearForm& b) {
  if (b.arity() != 2) throw PreconditionError("q is defined for bilinear forms");
  Matrix B = flatten(b, 1);
  auto Binv = try_inverse(B);
  if (!Binv) throw PreconditionError("bilinear form is degenerate");
  QRoots r;
  const Index d = b.dim();
  for (Index a = 0; a < d; ++a) {
    for (Index c = 0; c < d; ++c) r.c += Binv->at(a, c) * B.at(a, c);
  }
  if (!r.c.is_rational()) throw PreconditionError("B^{ab} B_{ab} is not rational");
  Rational c = r.c.a();
  Rational disc = c * c - 4;
  if (is_rational_square(disc)) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), disc.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), disc.get_den_mpz_t());
    Rational root(num, den);
    r.q1 = Scalar(Rational((-c + root) / 2));
    r.q2 = Scalar(Rational((-c - root) / 2));
  } else {
    FieldPtr f = make_quadratic_field(1, c);
    r.q1 = Scalar::generator(f);
    r.q2 = Scalar(-c, -1, f);
    r.in_extension = true;
  }
  return r;
}

YangBaxterReport yang_baxter_check(const MultilinearForm& b) {
  QRoots roots = q_from_b(b);
  Matrix B = flatten(b, 1);
  Matrix Binv = inverse(B);
  const Index d = b.dim();
  Matrix P(d * d, d * d);
  for (Index a = 0; a < d; ++a) {
    for (Index be = 0; be < d; ++be) {
      Scalar x = Binv.at(a, be);
      if (x.is_zero()) continue;
      std::vector<SparseVector::Entry> e;
      for (Index mu = 0; mu < d; ++mu) {
        for (Index nu = 0; nu < d; ++nu) e.emplace_back(mu * d + nu, x * B.at(mu, nu));
      }
      P.row_mut(a * d + be) = SparseVector::from_entries(std::move(e));
    }
  }
  YangBaxterReport rep;
  rep.q = roots.q1;
  const Matrix I2 = Matrix::identity(d * d);
  const Matrix I1 = Matrix::identity(d);
  auto braid = [&](const Matrix& R) {
    Matrix R1 = R.kron(I1);
    Matrix R2 = I1.kron(R);
    return R1 * R2 * R1 == R2 * R1 * R2;
  };
  const Scalar q = roots.q1;
  const Scalar qi = q.inverse();
  Matrix Rp = I2 + P.scaled(q);
  Matrix Rm = I2 + P.scaled(qi);
  rep.braid_plus = braid(Rp);
  rep.braid_minus = braid(Rm);
  rep.hecke_plus = ((Rp - I2) * (Rp + I2.scaled(q * q))).is_zero();
  rep.hecke_minus = ((Rm - I2) * (Rm + I2.scaled(qi * qi))).is_zero();
  return rep;
}

std::string to_string(const NCPolynomial& p, int d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (word.empty()) os << "*1";
    for (int l : word) os << "*u" << l / d << "_" << l % d;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace homform
