#include "lasserre/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lasserre {

namespace {

long find_y_index(const std::vector<Monomial>& y_index, const Monomial& m) {
  auto it = std::lower_bound(y_index.begin(), y_index.end(), m);
  if (it == y_index.end() || !(*it == m)) return -1;
  return it - y_index.begin();
}

AffineForm linearize(const Polynomial& p, const std::vector<Monomial>& y_index, int nx) {
  AffineForm a;
  a.constant = 0;
  for (const auto& [m, c] : p.terms()) {
    int deg = m.degree();
    if (deg == 0) {
      a.constant += c;
    } else if (deg == 1) {
      for (int j = 0; j < nx; ++j)
        if (m[j] == 1) {
          a.linear.emplace_back(j, c);
          break;
        }
    } else {
      long k = find_y_index(y_index, m);
      if (k < 0) throw std::logic_error("linearize: monomial outside the lifted index set");
      a.linear.emplace_back(nx + static_cast<int>(k), c);
    }
  }
  std::sort(a.linear.begin(), a.linear.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return a;
}

}  // namespace

double AffineForm::eval(std::span<const double> joint) const {
  double v = to_double(constant);
  for (const auto& [id, c] : linear) v += to_double(c) * joint[static_cast<size_t>(id)];
  return v;
}

Eigen::MatrixXd LmiBlock::eval(std::span<const double> joint) const {
  Eigen::MatrixXd m(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) m(r, c) = at(r, c).eval(joint);
  return m;
}

std::vector<double> BlockLMI::lift(std::span<const double> x) const {
  std::vector<double> joint(x.begin(), x.end());
  joint.reserve(static_cast<size_t>(num_joint_vars()));
  for (const auto& m : y_index) {
    double v = 1;
    for (int j = 0; j < nx; ++j)
      for (int e = 0; e < m[j]; ++e) v *= x[static_cast<size_t>(j)];
    joint.push_back(v);
  }
  return joint;
}

Relaxation build_relaxation(const PolySystem& system, int d) {
  system.validate();
  if (d < 0) throw std::invalid_argument("build_relaxation: negative degree");
  const int n = system.nvars();

  Relaxation rel;
  rel.spec.system = system;
  rel.spec.d = d;
  rel.lmi.nx = n;

  // y_alpha for 2 <= |alpha| <= d
  for (const auto& m : monomial_basis(n, Degree(d)))
    if (m.degree() >= 2) rel.spec.y_index.push_back(m);
  rel.lmi.y_index = rel.spec.y_index;

  const int m_cnt = system.size();
  for (int i = 0; i <= m_cnt; ++i) {
    const Polynomial g = (i == 0) ? Polynomial::constant(n, 1)
                                  : system.constraints[static_cast<size_t>(i - 1)];
    Degree twice_r = g.is_zero() ? Degree::neg_infinity() : Degree(d - g.degree().value());
    Degree rfl = twice_r.is_neg_infinity()
                     ? Degree::neg_infinity()
                     : Degree(static_cast<int>(floor_div(twice_r.value(), 2)));
    rel.spec.twice_r.push_back(twice_r);
    rel.spec.r_floor.push_back(rfl);
    auto basis = monomial_basis(n, rfl);
    rel.spec.ell.push_back(static_cast<long>(basis.size()));
    rel.spec.bases.push_back(basis);

    if (basis.empty()) {
      rel.lmi.omitted_blocks.push_back(i);
      continue;
    }
    LmiBlock blk;
    blk.constraint = i;
    blk.size = static_cast<int>(basis.size());
    blk.entries.resize(static_cast<size_t>(blk.size) * static_cast<size_t>(blk.size));
    for (int a = 0; a < blk.size; ++a)
      for (int b = a; b < blk.size; ++b) {
        Polynomial prod =
            g * Polynomial::monomial(n, basis[static_cast<size_t>(a)].times(basis[static_cast<size_t>(b)]), 1);
        AffineForm af = linearize(prod, rel.spec.y_index, n);
        blk.entries[static_cast<size_t>(a * blk.size + b)] = af;
        blk.entries[static_cast<size_t>(b * blk.size + a)] = std::move(af);
      }
    rel.lmi.blocks.push_back(std::move(blk));
  }
  return rel;
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible: return "feasible";
    case Feasibility::kInfeasible: return "infeasible";
    case Feasibility::kAmbiguous: return "numerically-ambiguous";
  }
  return "unknown";
}

PointMembership point_membership(const BlockLMI& lmi, std::span<const double> x,
                                 const SdpConfig& cfg) {
  if (static_cast<int>(x.size()) != lmi.nx)
    throw std::invalid_argument("point_membership: point dimension mismatch");
  const int ny = static_cast<int>(lmi.y_index.size());
  const int nvar = ny + 1;  // y plus the eigenvalue bound t

  std::vector<int> sizes;
  for (const auto& blk : lmi.blocks) sizes.push_back(blk.size);
  SdpProblem p = SdpProblem::zeros(sizes, nvar);
  // dual-form LMI: S = F0 + sum y_k Fk - t I, maximize t
  // standard form: C = F0, A_k = -F_k, A_t = I, b = e_t
  for (size_t bi = 0; bi < lmi.blocks.size(); ++bi) {
    const LmiBlock& blk = lmi.blocks[bi];
    for (int r = 0; r < blk.size; ++r)
      for (int c = r; c < blk.size; ++c) {
        const AffineForm& a = blk.at(r, c);
        double f0 = to_double(a.constant);
        for (const auto& [id, coef] : a.linear) {
          if (id < lmi.nx)
            f0 += to_double(coef) * x[static_cast<size_t>(id)];
          else
            p.add_entry(id - lmi.nx, static_cast<int>(bi), r, c, -to_double(coef));
        }
        if (f0 != 0) p.add_entry(-1, static_cast<int>(bi), r, c, f0);
      }
    for (int r = 0; r < blk.size; ++r) p.add_entry(ny, static_cast<int>(bi), r, r, 1.0);
  }
  p.rhs[static_cast<size_t>(ny)] = 1.0;

  PointMembership out;
  out.raw = solve(p, cfg);
  if (out.raw.status != SdpStatus::kOptimal) {
    out.verdict = Feasibility::kAmbiguous;
    return out;
  }
  out.t_star = out.raw.dual_objective;
  if (out.t_star >= -1e-7) {
    out.y_witness.assign(out.raw.y.data(), out.raw.y.data() + ny);
    // recompute the witness quality from the LMI itself
    std::vector<double> joint(x.begin(), x.end());
    joint.insert(joint.end(), out.y_witness.begin(), out.y_witness.end());
    double mn = 0;
    for (const auto& blk : lmi.blocks) {
      auto rep = psd_check(blk.eval(joint), 0.0);
      mn = std::min(mn, rep.min_eigenvalue);
    }
    out.witness_min_eig = mn;
    out.verdict = (mn >= -1e-7) ? Feasibility::kFeasible : Feasibility::kAmbiguous;
  } else {
    out.verdict = Feasibility::kInfeasible;
    out.obstruction = out.raw.X;  // trace-normalized separator: <F0,X> = t* < 0
  }
  return out;
}

namespace {

struct MembershipAssembly {
  SdpProblem problem;
  std::vector<int> live_blocks;              // constraint index per SDP block
  std::vector<std::vector<Monomial>> bases;  // per SDP block
  std::vector<size_t> kept_rows;             // SDP row -> original row position
  size_t total_rows = 0;
  Feasibility early = Feasibility::kAmbiguous;  // kInfeasible on a zero-row clash
  std::vector<double> early_functional;
};

// shared assembly for scalar (k = 1) and matricial (k > 1) membership
MembershipAssembly assemble_membership(const PolySystem& system,
                                       const std::vector<Polynomial>& target_entries, int k,
                                       int d) {
  const int n = system.nvars();
  const int m_cnt = system.size();
  MembershipAssembly out;

  std::vector<Degree> rfl;
  std::vector<std::vector<Monomial>> bases;
  for (int i = 0; i <= m_cnt; ++i) {
    const Polynomial g = (i == 0) ? Polynomial::constant(n, 1)
                                  : system.constraints[static_cast<size_t>(i - 1)];
    Degree r = g.is_zero() ? Degree::neg_infinity()
                           : Degree(static_cast<int>(floor_div(d - g.degree().value(), 2)));
    rfl.push_back(r);
    bases.push_back(monomial_basis(n, r));
  }

  std::vector<Monomial> beta = monomial_basis(n, Degree(d));
  // rows: (beta, r <= c); columns: Gram blocks of size k * ell_i
  struct Row {
    Monomial mono;
    int r, c;
  };
  std::vector<Row> rows;
  for (const auto& b : beta)
    for (int r = 0; r < k; ++r)
      for (int c = r; c < k; ++c) rows.push_back({b, r, c});

  std::vector<int> sizes;
  std::vector<int> live;
  for (int i = 0; i <= m_cnt; ++i)
    if (!bases[static_cast<size_t>(i)].empty()) {
      sizes.push_back(k * static_cast<int>(bases[static_cast<size_t>(i)].size()));
      live.push_back(i);
    }
  if (sizes.empty()) sizes.push_back(0);  // degenerate: no blocks at all

  SdpProblem p = SdpProblem::zeros(sizes, static_cast<int>(rows.size()));
  // min-trace objective regularizes and rules out unbounded rays
  for (size_t bi = 0; bi < sizes.size(); ++bi)
    for (int t = 0; t < sizes[bi]; ++t) p.add_entry(-1, static_cast<int>(bi), t, t, 1.0);

  // A entries: coefficient of x^beta in g_i m_a m_b lands at ((a,r),(b,c))
  for (size_t bi = 0; bi < live.size(); ++bi) {
    int i = live[bi];
    if (sizes[bi] == 0) continue;
    const Polynomial g = (i == 0) ? Polynomial::constant(n, 1)
                                  : system.constraints[static_cast<size_t>(i - 1)];
    const auto& basis = bases[static_cast<size_t>(i)];
    int ell = static_cast<int>(basis.size());
    for (int a = 0; a < ell; ++a)
      for (int b = a; b < ell; ++b) {
        Polynomial prod = g * Polynomial::monomial(
                                  n, basis[static_cast<size_t>(a)].times(basis[static_cast<size_t>(b)]), 1);
        for (const auto& [mono, coef] : prod.terms()) {
          double v = to_double(coef);
          // locate the row group of this beta
          auto it = std::lower_bound(beta.begin(), beta.end(), mono);
          if (it == beta.end() || !(*it == mono))
            throw std::logic_error("assemble_membership: degree overflow in localizing product");
          long bidx = it - beta.begin();
          for (int r = 0; r < k; ++r)
            for (int c = r; c < k; ++c) {
              long row_id = bidx * (k * (k + 1) / 2);
              // offset of (r, c) within the upper-triangle enumeration
              long off = 0;
              for (int rr = 0; rr < r; ++rr) off += k - rr;
              off += c - r;
              row_id += off;
              // the ordered pairs (a,b) and (b,a) contribute G_{(a,r),(b,c)}
              // and G_{(b,r),(a,c)}; put w/2 on mirrored positions so <A, G>
              // picks up exactly w G_uv for symmetric G
              auto add_sym = [&](int uu, int vv, double w) {
                if (uu == vv)
                  p.add_entry(static_cast<int>(row_id), static_cast<int>(bi), uu, vv, w);
                else
                  p.add_entry(static_cast<int>(row_id), static_cast<int>(bi), std::min(uu, vv),
                              std::max(uu, vv), w / 2);
              };
              add_sym(a * k + r, b * k + c, v);
              if (a != b) add_sym(b * k + r, a * k + c, v);
            }
        }
      }
  }

  // right-hand sides from the target
  for (size_t ridx = 0; ridx < rows.size(); ++ridx) {
    const Row& row = rows[ridx];
    const Polynomial& target = target_entries[static_cast<size_t>(row.r * k + row.c)];
    p.rhs[ridx] = to_double(target.coeff(row.mono));
  }

  // drop identically-zero rows (or flag an immediate inconsistency)
  out.total_rows = rows.size();
  std::vector<char> keep(rows.size(), 0);
  for (size_t j = 0; j < rows.size(); ++j) {
    bool zero = true;
    for (const auto& blk : p.constraints[j])
      if (blk.size() > 0 && blk.cwiseAbs().maxCoeff() != 0) {
        zero = false;
        break;
      }
    if (!zero) {
      keep[j] = 1;
    } else if (p.rhs[j] != 0) {
      out.early = Feasibility::kInfeasible;
      out.early_functional.assign(rows.size(), 0.0);
      out.early_functional[j] = 1.0 / p.rhs[j];
    }
  }
  out.live_blocks = live;
  for (int i : live) out.bases.push_back(bases[static_cast<size_t>(i)]);
  if (out.early == Feasibility::kInfeasible) {
    out.problem = std::move(p);
    return out;
  }
  SdpProblem q = SdpProblem::zeros(p.block_sizes, 0);
  q.objective = p.objective;
  for (size_t j = 0; j < rows.size(); ++j)
    if (keep[j]) {
      q.constraints.push_back(p.constraints[j]);
      q.rhs.push_back(p.rhs[j]);
      out.kept_rows.push_back(j);
    }
  out.problem = std::move(q);
  return out;
}

MembershipResult run_membership(const PolySystem& system,
                                const std::vector<Polynomial>& target_entries, int k, int d,
                                const SdpConfig& cfg) {
  MembershipResult out;
  out.degree = d;
  MembershipAssembly asm_ = assemble_membership(system, target_entries, k, d);
  if (asm_.early == Feasibility::kInfeasible) {
    out.verdict = Feasibility::kInfeasible;
    out.separating_functional = asm_.early_functional;
    out.separation_margin = 1.0;
    return out;
  }
  if (asm_.problem.num_constraints() == 0) {
    // target is zero: trivial certificate of zeros
    GramCertificate cert;
    cert.matrix_k = k;
    for (size_t bi = 0; bi < asm_.live_blocks.size(); ++bi) {
      cert.constraint.push_back(asm_.live_blocks[bi]);
      cert.basis.push_back(asm_.bases[bi]);
      cert.gram.push_back(Eigen::MatrixXd::Zero(asm_.problem.block_sizes[bi], asm_.problem.block_sizes[bi]));
    }
    out.verdict = Feasibility::kFeasible;
    out.certificate = std::move(cert);
    return out;
  }

  out.raw = solve(asm_.problem, cfg);
  switch (out.raw.status) {
    case SdpStatus::kOptimal: {
      GramCertificate cert;
      cert.matrix_k = k;
      for (size_t bi = 0; bi < asm_.live_blocks.size(); ++bi) {
        cert.constraint.push_back(asm_.live_blocks[bi]);
        cert.basis.push_back(asm_.bases[bi]);
        cert.gram.push_back(out.raw.X[bi]);
      }
      out.certificate = std::move(cert);
      out.verdict = Feasibility::kFeasible;
      break;
    }
    case SdpStatus::kPrimalInfeasible: {
      out.verdict = Feasibility::kInfeasible;
      // the Farkas y is a separating functional on the module's cone,
      // re-indexed over the full row set (dropped rows get weight zero)
      out.separating_functional.assign(asm_.total_rows, 0.0);
      for (size_t kept = 0; kept < asm_.kept_rows.size(); ++kept)
        out.separating_functional[asm_.kept_rows[kept]] = out.raw.y(static_cast<long>(kept));
      out.separation_margin = out.raw.certificate_margin;
      break;
    }
    default:
      out.verdict = Feasibility::kAmbiguous;
  }
  return out;
}

}  // namespace

MembershipResult module_membership(const PolySystem& system, const Polynomial& f, int d,
                                   const SdpConfig& cfg) {
  system.validate();
  if (f.nvars() != system.nvars())
    throw std::invalid_argument("module_membership: variable count mismatch");
  if (Degree(d) < f.degree())
    throw std::invalid_argument("module_membership: deg f exceeds the truncation degree");
  MembershipResult r = run_membership(system, {f}, 1, d, cfg);
  if (r.certificate) verify_certificate(system, f, *r.certificate);
  return r;
}

MembershipResult matrix_module_membership(const PolySystem& system, const PolyMatrix& P, int d,
                                          const SdpConfig& cfg) {
  system.validate();
  if (!P.is_symmetric())
    throw std::invalid_argument("matrix_module_membership: P must be symmetric");
  if (Degree(d) < P.degree())
    throw std::invalid_argument("matrix_module_membership: deg P exceeds the truncation degree");
  std::vector<Polynomial> entries;
  for (int r = 0; r < P.rows(); ++r)
    for (int c = 0; c < P.cols(); ++c) entries.push_back(P.at(r, c));
  MembershipResult res = run_membership(system, entries, P.rows(), d, cfg);
  if (res.certificate) verify_certificate(system, P, *res.certificate);
  return res;
}

MembershipResult module_membership_search(const PolySystem& system, const Polynomial& f, int d_min,
                                          int d_cap, const SdpConfig& cfg) {
  MembershipResult last;
  for (int d = d_min; d <= d_cap; d += 2) {
    last = module_membership(system, f, d, cfg);
    if (last.verdict == Feasibility::kFeasible) return last;
  }
  return last;
}

MembershipResult matrix_module_membership_search(const PolySystem& system, const PolyMatrix& P,
                                                 int d_min, int d_cap, const SdpConfig& cfg) {
  MembershipResult last;
  for (int d = d_min; d <= d_cap; d += 2) {
    last = matrix_module_membership(system, P, d, cfg);
    if (last.verdict == Feasibility::kFeasible) return last;
  }
  return last;
}

namespace {

Rational exact_from(double v) { return rational_from_double(v); }

void verify_impl(const PolySystem& system, const std::vector<Polynomial>& target, int k,
                 GramCertificate& cert) {
  const int n = system.nvars();
  std::vector<Polynomial> recon(static_cast<size_t>(k) * static_cast<size_t>(k), Polynomial(n));
  double mineig = 0;
  for (size_t bi = 0; bi < cert.gram.size(); ++bi) {
    int i = cert.constraint[bi];
    const Polynomial g = (i == 0) ? Polynomial::constant(n, 1)
                                  : system.constraints[static_cast<size_t>(i - 1)];
    const auto& basis = cert.basis[bi];
    int ell = static_cast<int>(basis.size());
    const Eigen::MatrixXd& G = cert.gram[bi];
    if (G.rows() > 0) {
      auto rep = psd_check(Eigen::MatrixXd(0.5 * (G + G.transpose())),
                           1e-8 * std::max(1.0, G.norm()));
      mineig = std::min(mineig, rep.min_eigenvalue);
    }
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        std::vector<Polynomial::Term> acc;
        for (int a = 0; a < ell; ++a)
          for (int b = 0; b < ell; ++b) {
            double gv = G(a * k + r, b * k + c);
            if (gv == 0) continue;
            acc.emplace_back(basis[static_cast<size_t>(a)].times(basis[static_cast<size_t>(b)]),
                             exact_from(gv));
          }
        Polynomial combo = Polynomial::from_terms(n, std::move(acc));
        recon[static_cast<size_t>(r * k + c)] = recon[static_cast<size_t>(r * k + c)] + g * combo;
      }
  }
  Rational worst(0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      Polynomial diff = recon[static_cast<size_t>(r * k + c)] - target[static_cast<size_t>(r * k + c)];
      for (const auto& [mo, co] : diff.terms()) worst = std::max(worst, Rational(abs(co)));
    }
  cert.residual_linf = to_double(worst);
  cert.min_gram_eig = mineig;
}

}  // namespace

void verify_certificate(const PolySystem& system, const Polynomial& f, GramCertificate& cert) {
  verify_impl(system, {f}, 1, cert);
}

void verify_certificate(const PolySystem& system, const PolyMatrix& P, GramCertificate& cert) {
  std::vector<Polynomial> entries;
  for (int r = 0; r < P.rows(); ++r)
    for (int c = 0; c < P.cols(); ++c) entries.push_back(P.at(r, c));
  verify_impl(system, entries, P.rows(), cert);
}

std::string certificate_report(const GramCertificate& cert) {
  std::ostringstream os;
  char buf[40];
  for (size_t bi = 0; bi < cert.gram.size(); ++bi) {
    os << "G[" << cert.constraint[bi] << "] size " << cert.gram[bi].rows() << " (basis";
    for (const auto& m : cert.basis[bi]) {
      os << " ";
      auto e = m.exponents();
      os << "(";
      for (size_t j = 0; j < e.size(); ++j) os << (j ? "," : "") << e[j];
      os << ")";
    }
    os << ")\n";
    for (int r = 0; r < cert.gram[bi].rows(); ++r) {
      for (int c = 0; c <= r; ++c) {
        std::snprintf(buf, sizeof(buf), "%.16e", cert.gram[bi](r, c));
        os << (c ? " " : "  ") << buf;
      }
      os << "\n";
    }
  }
  std::snprintf(buf, sizeof(buf), "%.16e", cert.residual_linf);
  os << "residual_linf " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.16e", cert.min_gram_eig);
  os << "min_gram_eig " << buf << "\n";
  return os.str();
}

namespace {

PolyMatrix path_integral_impl(const PolyMatrix& P, std::span<const Rational> u, bool double_int) {
  if (P.rows() != P.cols()) throw std::invalid_argument("path integral: square matrices only");
  const int n = P.nvars();
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("path integral: base point dimension mismatch");

  // images over (x_1..x_n, s): x_j -> u_j + s (x_j - u_j)
  std::vector<Polynomial> images;
  images.reserve(static_cast<size_t>(n));
  const int ns = n + 1;
  for (int j = 0; j < n; ++j) {
    Polynomial img = Polynomial::constant(ns, u[static_cast<size_t>(j)]);
    Polynomial s = Polynomial::variable(ns, n);
    img = img + s * (Polynomial::variable(ns, j) - Polynomial::constant(ns, u[static_cast<size_t>(j)]));
    images.push_back(img);
  }

  PolyMatrix out(P.rows(), P.cols(), n);
  for (int r = 0; r < P.rows(); ++r)
    for (int c = r; c < P.cols(); ++c) {
      Polynomial sub = P.at(r, c).substitute(images);
      std::vector<Polynomial::Term> acc;
      for (const auto& [mo, co] : sub.terms()) {
        int q = mo[n];
        Monomial m(n);
        for (int j = 0; j < n; ++j) m.set(j, mo[j]);
        Rational w = double_int ? Rational(co) / ((q + 1) * (q + 2)) : Rational(co) / (q + 1);
        acc.emplace_back(m, w);
      }
      out.set_sym(r, c, Polynomial::from_terms(n, std::move(acc)));
    }
  return out;
}

}  // namespace

PolyMatrix path_double_integral(const PolyMatrix& P, std::span<const Rational> u) {
  return path_integral_impl(P, u, true);
}

PolyMatrix path_single_integral(const PolyMatrix& P, std::span<const Rational> u) {
  return path_integral_impl(P, u, false);
}

LinearOptimum optimize_linear(const BlockLMI& lmi, std::span<const double> w,
                              const SdpConfig& cfg) {
  if (static_cast<int>(w.size()) != lmi.nx)
    throw std::invalid_argument("optimize_linear: direction dimension mismatch");
  double nrm = 0;
  for (double v : w) nrm += v * v;
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-9)
    throw std::invalid_argument("optimize_linear: direction must be unit norm");

  const int nvar = lmi.num_joint_vars();
  std::vector<int> sizes;
  for (const auto& blk : lmi.blocks) sizes.push_back(blk.size);
  SdpProblem p = SdpProblem::zeros(sizes, nvar);
  // S = F0 + sum z_j F_j with z = (x, y); maximize -w^T x
  for (size_t bi = 0; bi < lmi.blocks.size(); ++bi) {
    const LmiBlock& blk = lmi.blocks[bi];
    for (int r = 0; r < blk.size; ++r)
      for (int c = r; c < blk.size; ++c) {
        const AffineForm& a = blk.at(r, c);
        if (a.constant != 0)
          p.add_entry(-1, static_cast<int>(bi), r, c, to_double(a.constant));
        for (const auto& [id, coef] : a.linear)
          p.add_entry(id, static_cast<int>(bi), r, c, -to_double(coef));
      }
  }
  for (int j = 0; j < lmi.nx; ++j) p.rhs[static_cast<size_t>(j)] = -w[static_cast<size_t>(j)];

  LinearOptimum out;
  out.raw = solve(p, cfg);
  switch (out.raw.status) {
    case SdpStatus::kOptimal:
      out.status = LinearOptimum::Status::kOptimal;
      out.value = -out.raw.dual_objective;
      out.x.assign(out.raw.y.data(), out.raw.y.data() + lmi.nx);
      break;
    case SdpStatus::kPrimalInfeasible:
      out.status = LinearOptimum::Status::kUnbounded;
      break;
    case SdpStatus::kDualInfeasible:
      out.status = LinearOptimum::Status::kInfeasibleLmi;
      break;
    default:
      out.status = LinearOptimum::Status::kAmbiguous;
  }
  return out;
}

}  // namespace lasserre
