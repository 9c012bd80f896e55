/* lgr: batch front end over the core library. Every command is
 * deterministic: the same inputs, seed and truncation produce byte-identical
 * reports. Exit codes: 0 all residuals zero, 1 a residual failed, 2
 * malformed input or unusable parameters, 3 non-symmetric matrix where
 * symmetry is required (minors). */

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lgr/combinat.hpp"
#include "lgr/extalg.hpp"
#include "lgr/fock.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/hyperdet.hpp"
#include "lgr/json_io.hpp"
#include "lgr/random.hpp"
#include "lgr/rational.hpp"
#include "lgr/symfunc.hpp"
#include "lgr/sympoly.hpp"
#include "lgr/tau.hpp"

namespace {

using nlohmann::ordered_json;
using namespace lgr;

struct RunConfig {
  uint64_t seed = 1;
  int truncation = 0;  // 0 = not given on the command line
  int samples = 10;
  bool json = false;
  std::string out;
};

int env_truncation() {
  const char* env = std::getenv("LGR_TRUNCATION");
  if (!env) return 12;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return 12;
  return static_cast<int>(v);
}

int truncation_of(const RunConfig& cfg) {
  return cfg.truncation > 0 ? cfg.truncation : env_truncation();
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "seed for the sample stream");
  cmd->add_option("--truncation", cfg.truncation, "weight bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--samples", cfg.samples, "number of sampled points")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", cfg.json, "machine-readable report");
  cmd->add_option("--out", cfg.out, "write the report to this file");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::invalid_argument("cannot write file: " + cfg.out);
  f << text << "\n";
}

struct CheckReport {
  std::string command;
  long checked = 0;
  std::vector<Residual> failures;
};

void note(CheckReport& r, const std::string& id, const Rat& value) {
  ++r.checked;
  if (value != 0) r.failures.push_back({id, value});
}

/* Polynomial and Fock residuals enter the report through a nonzero witness
 * coefficient; zero/nonzero is all the verdict needs. */
void note(CheckReport& r, const std::string& id, const SymPoly& p) {
  ++r.checked;
  if (!p.is_zero()) r.failures.push_back({id, p.terms().begin()->second});
}

void note(CheckReport& r, const std::string& id, const FockVector& v) {
  ++r.checked;
  if (!v.is_zero()) r.failures.push_back({id, v.terms().begin()->second});
}

void note_ok(CheckReport& r, const std::string& id, bool ok) {
  ++r.checked;
  if (!ok) r.failures.push_back({id, Rat(1)});
}

int finish(const RunConfig& cfg, const CheckReport& r) {
  std::ostringstream os;
  if (cfg.json) {
    ordered_json j;
    j["command"] = r.command;
    j["pass"] = r.failures.empty();
    j["checked"] = r.checked;
    ordered_json arr = ordered_json::array();
    for (const auto& f : r.failures) {
      ordered_json item;
      item["relation"] = f.id;
      item["residual"] = rat_to_string(f.value);
      arr.push_back(item);
    }
    j["failures"] = arr;
    os << j.dump();
  } else {
    os << r.command << ": " << r.checked << " relations checked, "
       << r.failures.size() << " nonzero\n";
    for (const auto& f : r.failures)
      os << "  " << f.id << " = " << rat_to_string(f.value) << "\n";
    os << "RESULT: " << (r.failures.empty() ? "PASS" : "FAIL");
  }
  emit(cfg, os.str());
  return r.failures.empty() ? 0 : 1;
}

std::string ints(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(v);
  }
  return out;
}

/* Which inputs a command accepts; exactly one is set by the option group. */
struct SourceOpts {
  std::string affine, subspace, coords, ext, cube;
};

Subspace load_subspace(const SourceOpts& s) {
  if (!s.subspace.empty())
    return subspace_from_json(read_text_file(s.subspace));
  return graph_subspace(affine_from_json(read_text_file(s.affine)));
}

PluckerVector load_pi(const SourceOpts& s) {
  if (!s.coords.empty())
    return pluckervector_from_json(read_text_file(s.coords));
  return plucker(load_subspace(s));
}

std::vector<Rat> sample_point(Rng& rng, int m, int64_t num, int64_t den) {
  std::vector<Rat> t(m);
  for (int i = 0; i < m; ++i) t[i] = rng.rat(num, den);
  return t;
}

/* ---- commands ---- */

int run_minors(const RunConfig& cfg, const std::string& path) {
  const RatMatrix A = affine_from_json(read_text_file(path));
  if (!A.is_symmetric()) {
    std::cerr << "minors: matrix is not symmetric\n";
    return 3;
  }
  emit(cfg, lagrange_to_json(lagrange_map(from_affine(A))));
  return 0;
}

int run_check_plucker(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check plucker", 0, {}};
  const PluckerVector pi = load_pi(src);
  for (const auto& res : plucker_residuals(pi, PluckerMode::full))
    note(r, res.id, res.value);
  for (const auto& res : plucker_residuals(pi, PluckerMode::shortened))
    note(r, res.id, res.value);
  return finish(cfg, r);
}

int run_check_lagrangian(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check lagrangian", 0, {}};
  const PluckerVector pi = load_pi(src);
  for (const auto& res : plucker_residuals(pi, PluckerMode::full))
    note(r, res.id, res.value);
  for (const auto& res : lagrangian_linear_residuals(pi))
    note(r, res.id, res.value);
  return finish(cfg, r);
}

int run_check_hyperdet(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check hyperdet", 0, {}};
  if (!src.cube.empty()) {
    const MinorCube c = minorcube_from_json(read_text_file(src.cube));
    note(r, "cayley222", cayley222(c));
    return finish(cfg, r);
  }
  const RatMatrix A = affine_from_json(read_text_file(src.affine));
  const LagrangeCoefficients L = lagrange_map(from_affine(A));
  const int N = L.N;
  for (int k = 0; k + 3 <= N; ++k)
    for (const auto& J : subsets_of(N, k)) {
      std::vector<int> comp;
      for (int i = 1; i <= N; ++i)
        if (std::find(J.begin(), J.end(), i) == J.end()) comp.push_back(i);
      for (const auto& pick :
           subsets_of(static_cast<int>(comp.size()), 3)) {
        const std::array<int, 3> triple{comp[pick[0] - 1], comp[pick[1] - 1],
                                        comp[pick[2] - 1]};
        note(r,
             "core:J=" + ints(J) + ";T=" +
                 ints({triple[0], triple[1], triple[2]}),
             core_residual(L, J, triple));
      }
    }
  return finish(cfg, r);
}

int run_check_chain(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check chain", 0, {}};
  const ExtVector phi = !src.ext.empty()
                            ? extvector_from_json(read_text_file(src.ext))
                            : ext_from_subspace(load_subspace(src));
  const Gr36Coords g = gr36_coords(phi);
  for (const auto& res : g.consistency) note(r, res.id, res.value);
  for (const auto& res : identity_chain_residuals(g))
    note(r, res.id, res.value);
  return finish(cfg, r);
}

int run_check_fay(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check fay", 0, {}};
  const TauPoly tau = tau_from_plucker(load_pi(src));
  const int M = tau.poly.vars();
  Rng rng(cfg.seed);
  for (int k = 1; k <= 3; ++k)
    for (int s = 0; s < cfg.samples; ++s) {
      std::vector<Rat> t;
      for (int tries = 0;; ++tries) {
        t = sample_point(rng, M, 3, 3);
        if (tau.poly.eval(t) != 0) break;
        if (tries > 100)
          throw std::domain_error("fay: no admissible sample point found");
      }
      std::vector<Rat> x, y;
      for (int tries = 0;; ++tries) {
        x.clear();
        y.clear();
        for (int i = 0; i < k; ++i) x.push_back(rng.rat_nonzero(5, 5));
        for (int i = 0; i < k; ++i) y.push_back(rng.rat_nonzero(5, 5));
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
          for (int j = 0; j < k && ok; ++j) {
            if (x[i] == y[j]) ok = false;
            if (i < j && (x[i] == x[j] || y[i] == y[j])) ok = false;
          }
        if (ok) break;
        if (tries > 100)
          throw std::domain_error("fay: no admissible shift points found");
      }
      note(r, "fay:k=" + std::to_string(k) + ";sample=" + std::to_string(s),
           fay_residual(tau, t, x, y));
    }
  return finish(cfg, r);
}

int run_check_family(const RunConfig& cfg, const std::string& affine,
                     const std::string& xlist) {
  CheckReport r{"check family", 0, {}};
  const RatMatrix A = affine_from_json(read_text_file(affine));
  const TauPoly tau = tau_from_symmetric(A);
  const std::vector<Rat> xs = parse_rat_list(xlist);
  const int nx = static_cast<int>(xs.size());
  if (nx < 3) throw std::invalid_argument("family: need at least three x");
  const int M = tau.poly.vars();
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    /* One t' per sample; if some lattice translate of tau vanishes the
     * sigma cube is undefined, so resample t' rather than report. */
    for (int tries = 0;; ++tries) {
      std::vector<Rat> tprime(M, Rat(0));
      for (int i = 0; i < M; i += 2) tprime[i] = rng.rat(3, 5);
      std::vector<std::vector<int>> shifts;
      shifts.emplace_back(nx, 0);
      for (int extra = 0; extra < 2; ++extra) {
        std::vector<int> n(nx);
        for (int a = 0; a < nx; ++a)
          n[a] = static_cast<int>(rng.int_in(-2, 2));
        shifts.push_back(std::move(n));
      }
      try {
        TauLatticeEvaluator ev(tau, tprime, xs);
        std::vector<std::pair<std::string, Rat>> got;
        for (const auto& pick : subsets_of(nx, 3)) {
          const std::array<int, 3> triple{pick[0], pick[1], pick[2]};
          for (const auto& n : shifts) {
            ShiftSpec spec{xs, n};
            got.emplace_back("family:sample=" + std::to_string(s) +
                                 ";triple=" + ints(pick) + ";n=" + ints(n),
                             family_residual(ev, spec, triple));
          }
        }
        for (const auto& [id, value] : got) note(r, id, value);
        break;
      } catch (const std::domain_error&) {
        if (tries > 50)
          throw std::domain_error(
              "family: no admissible sample point found");
      }
    }
  }
  return finish(cfg, r);
}

int run_check_hirota(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check hirota", 0, {}};
  const TauPoly tau = tau_from_plucker(load_pi(src));
  const int M = tau.poly.vars();
  const int wd = std::max(tau.poly.weighted_degree(), 0);
  /* An explicit --truncation below 2*wd is a hard error inside
   * hirota_residual; the default grows with the tau at hand. */
  const int trunc =
      cfg.truncation > 0 ? cfg.truncation : std::max(env_truncation(), 2 * wd);
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const std::vector<Rat> t = sample_point(rng, M, 3, 3);
    const std::vector<Rat> dt = sample_point(rng, std::min(M, 4), 3, 3);
    note(r, "hirota:sample=" + std::to_string(s),
         hirota_residual(tau, t, dt, trunc));
  }
  return finish(cfg, r);
}

int run_check_ckp(const RunConfig& cfg, const SourceOpts& src) {
  CheckReport r{"check ckp", 0, {}};
  const PluckerVector pi = load_pi(src);
  const TauPoly tau = tau_from_plucker(pi);
  note(r, "tau-parity", ckp_residual(tau));
  {
    int j = 1;
    for (const auto& p : ckp_even_constraints(tau))
      note(r, "even-flow:" + std::to_string(2 * j++), p);
  }
  FockVector v;
  for (const auto& [lam, c] : pi.coords()) v.add_term({lam, 0}, c);
  const int bound = truncation_of(cfg);
  const auto nulls = ckp_null_residuals(v, bound);
  note(r, "omega", nulls[0]);
  note(r, "omega-dag", nulls[1]);
  for (size_t i = 2; i < nulls.size(); ++i)
    note(r, "current:" + std::to_string(2 * (i - 1)), nulls[i]);
  return finish(cfg, r);
}

int run_check_fock(const RunConfig& cfg) {
  CheckReport r{"check fock", 0, {}};
  const int bound = std::min(8, truncation_of(cfg));

  /* Current vs Murnaghan-Nakayama vs bosonization. */
  for (int w = 0; w <= bound; ++w)
    for (const auto& lam : partitions_of_weight(w))
      for (int rr = 1; rr <= bound; ++rr) {
        const FockVector state = FockVector::basis({lam, 0});
        const FockVector down = current(-rr, state);
        const FockVector up = current(rr, state);
        const std::string tag = ":r=" + std::to_string(rr) +
                                ";lambda=" + ints(lam);
        SchurCombo combo;
        for (const auto& [p, h] : border_strip_add(lam, rr))
          combo.add(p, Rat(h % 2 == 0 ? -1 : 1));
        SchurCombo from_current;
        for (const auto& [st, c] : down.terms()) from_current.add(st.lambda, c);
        note_ok(r, "mn-strips" + tag, combo == from_current);

        const int M = std::max(1, w + rr);
        note(r, "mn-mult" + tag,
             bosonize(down, M) - power_sum(rr, M) * schur(lam, M));
        const int Md = std::max(w, rr);
        note(r, "mn-deriv" + tag,
             bosonize(up, Md) - schur(lam, Md).derivative(rr));
      }

  /* Anticommutators on a fixed pocket of states. */
  const std::vector<FockState> pocket = {
      {{}, 0}, {{1}, 0}, {{2, 1}, 0}, {{3, 1}, -1}, {{2, 2}, 1}};
  const int ib = std::min(3, bound);
  for (int i = -ib; i <= ib; ++i)
    for (int j = -ib; j <= ib; ++j)
      for (const auto& st : pocket) {
        const FockVector v = FockVector::basis(st);
        const std::string tag = ":i=" + std::to_string(i) +
                                ";j=" + std::to_string(j);
        note(r, "acomm-psi" + tag + ";state=" + ints(st.lambda),
             psi(i, psi(j, v)) + psi(j, psi(i, v)));
        note(r, "acomm-dag" + tag + ";state=" + ints(st.lambda),
             psi_dag(i, psi_dag(j, v)) + psi_dag(j, psi_dag(i, v)));
        FockVector mixed = psi(i, psi_dag(j, v)) + psi_dag(j, psi(i, v));
        if (i == j) mixed = mixed - v;
        note(r, "acomm-mixed" + tag + ";state=" + ints(st.lambda), mixed);
      }

  /* Chevalley action on the highest-weight vectors. */
  for (int j = 0; j <= 2; ++j) {
    const FockVector hw = hw_vector(j);
    for (int m = 0; m <= 4; ++m)
      note(r, "hw-E:m=" + std::to_string(m) + ";j=" + std::to_string(j),
           chevalley(Chevalley::E, m, hw));
    for (int m = 0; m <= 3; ++m) {
      FockVector res = chevalley(Chevalley::H, m, hw);
      if (m == 2 * j) res = res - hw;
      note(r, "hw-H:m=" + std::to_string(m) + ";j=" + std::to_string(j), res);
    }
  }

  /* omega commutes with every Chevalley generator. */
  for (const auto& st : pocket)
    for (int j = 0; j <= 3; ++j)
      for (const Chevalley kind : {Chevalley::E, Chevalley::F, Chevalley::H}) {
        const FockVector v = FockVector::basis(st);
        const std::string tag =
            ":kind=" + std::string(kind == Chevalley::E   ? "E"
                                   : kind == Chevalley::F ? "F"
                                                          : "H") +
            ";j=" + std::to_string(j) + ";state=" + ints(st.lambda);
        note(r, "omega-comm" + tag,
             omega_hat(chevalley(kind, j, v)) -
                 chevalley(kind, j, omega_hat(v)));
        note(r, "omega-dag-comm" + tag,
             omega_hat_dag(chevalley(kind, j, v)) -
                 chevalley(kind, j, omega_hat_dag(v)));
      }
  return finish(cfg, r);
}

int run_decompose(const RunConfig& cfg, int N, int k_arg) {
  if (N < 1 || N > 5)
    throw std::invalid_argument("decompose: N must be between 1 and 5");
  if (k_arg > 2 * N)
    throw std::invalid_argument("decompose: k exceeds the top degree 2N");
  std::vector<int> ks;
  if (k_arg >= 0)
    ks.push_back(k_arg);
  else
    for (int k = 0; k <= 2 * N; ++k) ks.push_back(k);

  bool pass = true;
  ordered_json degrees = ordered_json::array();
  std::ostringstream os;
  os << "decompose N=" << N << "\n";
  for (int k : ks) {
    long total = 0;
    ordered_json spaces = ordered_json::array();
    std::ostringstream line;
    for (int j = std::max(0, k - N); 2 * j <= k; ++j) {
      const auto labels = basis_P_labels(N, k, j);
      if (labels.empty()) continue;
      const int d = k - 2 * j;
      Rat expect = binomial(2 * N, d);
      if (d >= 2) expect -= binomial(2 * N, d - 2);
      const bool formula_ok = Rat(static_cast<long>(labels.size())) == expect;
      bool ladders_ok = true;
      for (const auto& b : labels)
        if (!ladder_check(b)) ladders_ok = false;
      pass = pass && formula_ok && ladders_ok;
      total += static_cast<long>(labels.size());
      ordered_json sp;
      sp["j"] = j;
      sp["dim"] = labels.size();
      sp["formula_ok"] = formula_ok;
      sp["ladders_ok"] = ladders_ok;
      spaces.push_back(sp);
      line << " j=" << j << ":" << labels.size()
           << (formula_ok ? "" : " FORMULA") << (ladders_ok ? "" : " LADDER");
    }
    const Rat expect_total = binomial(2 * N, k);
    const bool total_ok = Rat(total) == expect_total;
    pass = pass && total_ok;
    ordered_json deg;
    deg["k"] = k;
    deg["spaces"] = spaces;
    deg["total"] = total;
    deg["expected"] = rat_to_string(expect_total);
    degrees.push_back(deg);
    os << "k=" << k << ":" << line.str() << " | total " << total << " of "
       << rat_to_string(expect_total) << (total_ok ? "" : " MISMATCH")
       << "\n";
  }
  if (cfg.json) {
    ordered_json j;
    j["command"] = "decompose";
    j["n"] = N;
    j["pass"] = pass;
    j["degrees"] = degrees;
    emit(cfg, j.dump());
  } else {
    os << "RESULT: " << (pass ? "PASS" : "FAIL");
    emit(cfg, os.str());
  }
  return pass ? 0 : 1;
}

int run_reduce36(const RunConfig& cfg, const SourceOpts& src) {
  const ExtVector phi = !src.ext.empty()
                            ? extvector_from_json(read_text_file(src.ext))
                            : ext_from_subspace(load_subspace(src));
  const int N = phi.half_dim();
  if (N < 3) throw std::invalid_argument("reduce36: need N >= 3");
  long conclusive = 0;
  bool pass = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream os;
  for (const auto& m : marked_indices(N)) {
    const Reduce36Result red = reduce36(phi, m);
    bool zero_residuals = true;
    if (red.conclusive) {
      ++conclusive;
      for (const auto& res : ext_plucker_residuals(red.phi))
        if (res.value != 0) zero_residuals = false;
      for (const auto& res : isotropy_residuals(red.phi))
        if (res.value != 0) zero_residuals = false;
      pass = pass && zero_residuals;
    }
    std::vector<int> stars;
    for (size_t i = 0; i < m.I.size(); ++i)
      if (m.starred[i]) stars.push_back(m.I[i]);
    ordered_json row;
    row["index"] = m.I;
    row["starred"] = stars;
    row["conclusive"] = red.conclusive;
    if (red.conclusive) row["residuals_zero"] = zero_residuals;
    rows.push_back(row);
    os << "I=" << ints(m.I) << " starred=" << ints(stars) << ": "
       << (red.conclusive
               ? (zero_residuals ? "zero residuals" : "NONZERO residuals")
               : "inconclusive")
       << "\n";
  }
  pass = pass && conclusive > 0;
  if (cfg.json) {
    ordered_json j;
    j["command"] = "reduce36";
    j["pass"] = pass;
    j["conclusive"] = conclusive;
    j["markings"] = rows;
    emit(cfg, j.dump());
  } else {
    os << "conclusive markings: " << conclusive << "\n";
    os << "RESULT: " << (pass ? "PASS" : "FAIL");
    emit(cfg, os.str());
  }
  return pass ? 0 : 1;
}

int run_schur(const RunConfig& cfg, const std::string& lambda_arg, int m) {
  const std::vector<int> lam = parse_int_list(lambda_arg);
  if (!is_valid_partition(lam))
    throw std::invalid_argument("schur: not a partition");
  const int M = m > 0 ? m : std::max(1, weight(lam));
  emit(cfg, sympoly_to_json(schur(lam, M)));
  return 0;
}

int run_mn(const RunConfig& cfg, int rr, const std::string& lambda_arg,
           bool dual) {
  if (rr <= 0) throw std::invalid_argument("mn: r must be positive");
  const std::vector<int> lam = parse_int_list(lambda_arg);
  if (!is_valid_partition(lam))
    throw std::invalid_argument("mn: not a partition");
  const auto strips =
      dual ? border_strip_remove(lam, rr) : border_strip_add(lam, rr);
  ordered_json terms = ordered_json::array();
  for (const auto& [p, h] : strips) {
    ordered_json t;
    t["lambda"] = p;
    t["height"] = h;
    t["sign"] = h % 2 == 0 ? -1 : 1;
    terms.push_back(t);
  }
  ordered_json j;
  j["r"] = rr;
  j["lambda"] = lam;
  j["dual"] = dual;
  j["terms"] = terms;
  emit(cfg, j.dump());
  return 0;
}

int run_tau_build(const RunConfig& cfg, const SourceOpts& src, int m) {
  TauPoly tau =
      !src.coords.empty()
          ? tau_from_plucker(
                pluckervector_from_json(read_text_file(src.coords)), m)
          : tau_from_symmetric(affine_from_json(read_text_file(src.affine)),
                               m);
  emit(cfg, taupoly_to_json(tau));
  return 0;
}

/* Adds the mutually exclusive input-file options a command supports. */
void add_sources(CLI::App* cmd, SourceOpts& src, bool affine, bool subspace,
                 bool coords, bool ext, bool cube) {
  auto* g = cmd->add_option_group("input");
  if (affine) g->add_option("--affine", src.affine, "affine matrix JSON");
  if (subspace) g->add_option("--subspace", src.subspace, "subspace JSON");
  if (coords) g->add_option("--coords", src.coords, "Plucker coordinate JSON");
  if (ext) g->add_option("--ext", src.ext, "exterior vector JSON");
  if (cube) g->add_option("--cube", src.cube, "minor cube JSON");
  g->require_option(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lgr: exact rational verification of Lagrangian Grassmannian "
      "identities"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.truncation = 0;
  SourceOpts src;
  std::string affine_path, xlist, lambda_arg;
  int N = 0, k_arg = -1, m_arg = -1, r_arg = 0;
  bool dual = false;
  std::function<int()> action;

  auto* minors = app.add_subcommand("minors", "all principal-minor "
                                              "coordinates of a symmetric "
                                              "matrix");
  minors->add_option("--affine", affine_path, "affine matrix JSON")
      ->required();
  add_common(minors, cfg);
  minors->callback(
      [&]() { action = [&]() { return run_minors(cfg, affine_path); }; });

  auto* check = app.add_subcommand("check", "residual verifications");
  check->require_subcommand(1);

  auto* c_plucker = check->add_subcommand("plucker", "quadratic relations");
  add_sources(c_plucker, src, true, true, true, false, false);
  add_common(c_plucker, cfg);
  c_plucker->callback(
      [&]() { action = [&]() { return run_check_plucker(cfg, src); }; });

  auto* c_lag = check->add_subcommand("lagrangian",
                                      "quadratic plus linear relations");
  add_sources(c_lag, src, true, true, true, false, false);
  add_common(c_lag, cfg);
  c_lag->callback(
      [&]() { action = [&]() { return run_check_lagrangian(cfg, src); }; });

  auto* c_hyp = check->add_subcommand("hyperdet",
                                      "hyperdeterminantal relations");
  add_sources(c_hyp, src, true, false, false, false, true);
  add_common(c_hyp, cfg);
  c_hyp->callback(
      [&]() { action = [&]() { return run_check_hyperdet(cfg, src); }; });

  auto* c_chain = check->add_subcommand("chain", "the sixteen-identity chain "
                                                 "on Gr(3,6)");
  add_sources(c_chain, src, true, true, false, true, false);
  add_common(c_chain, cfg);
  c_chain->callback(
      [&]() { action = [&]() { return run_check_chain(cfg, src); }; });

  auto* c_fay = check->add_subcommand("fay", "determinantal addition formula");
  add_sources(c_fay, src, true, true, true, false, false);
  add_common(c_fay, cfg);
  c_fay->callback(
      [&]() { action = [&]() { return run_check_fay(cfg, src); }; });

  auto* c_family = check->add_subcommand("family", "hyperdeterminantal "
                                                   "tau-function family");
  c_family->add_option("--affine", affine_path, "symmetric matrix JSON")
      ->required();
  c_family->add_option("--x", xlist, "comma-separated shift points")
      ->required();
  add_common(c_family, cfg);
  c_family->callback([&]() {
    action = [&]() { return run_check_family(cfg, affine_path, xlist); };
  });

  auto* c_hirota = check->add_subcommand("hirota", "bilinear residue at "
                                                   "sampled points");
  add_sources(c_hirota, src, true, true, true, false, false);
  add_common(c_hirota, cfg);
  c_hirota->callback(
      [&]() { action = [&]() { return run_check_hirota(cfg, src); }; });

  auto* c_ckp = check->add_subcommand("ckp", "CKP symmetry and null "
                                             "conditions");
  add_sources(c_ckp, src, true, false, true, false, false);
  add_common(c_ckp, cfg);
  c_ckp->callback(
      [&]() { action = [&]() { return run_check_ckp(cfg, src); }; });

  auto* c_fock = check->add_subcommand("fock", "fermionic operator algebra");
  add_common(c_fock, cfg);
  c_fock->callback(
      [&]() { action = [&]() { return run_check_fock(cfg); }; });

  auto* dec = app.add_subcommand("decompose", "irreducible decomposition "
                                              "with ladder verification");
  dec->add_option("N", N, "half-dimension")->required();
  dec->add_option("k", k_arg, "single degree (default: all)");
  add_common(dec, cfg);
  dec->callback(
      [&]() { action = [&]() { return run_decompose(cfg, N, k_arg); }; });

  auto* red = app.add_subcommand("reduce36", "all marked reductions to "
                                             "3-planes in C^6");
  add_sources(red, src, true, true, false, true, false);
  add_common(red, cfg);
  red->callback(
      [&]() { action = [&]() { return run_reduce36(cfg, src); }; });

  auto* sch = app.add_subcommand("schur", "Schur polynomial in the flow "
                                          "variables");
  sch->add_option("--lambda", lambda_arg, "partition, comma-separated")
      ->required();
  sch->add_option("--m", m_arg, "variable count");
  add_common(sch, cfg);
  sch->callback(
      [&]() { action = [&]() { return run_schur(cfg, lambda_arg, m_arg); }; });

  auto* mn = app.add_subcommand("mn", "border-strip expansion");
  mn->add_option("--r", r_arg, "strip size")->required();
  mn->add_option("--lambda", lambda_arg, "partition, comma-separated")
      ->required();
  mn->add_flag("--dual", dual, "remove strips instead of adding");
  add_common(mn, cfg);
  mn->callback([&]() {
    action = [&]() { return run_mn(cfg, r_arg, lambda_arg, dual); };
  });

  auto* tau = app.add_subcommand("tau", "tau-function utilities");
  tau->require_subcommand(1);
  auto* tb = tau->add_subcommand("build", "tau polynomial from Grassmannian "
                                          "data");
  add_sources(tb, src, true, false, true, false, false);
  tb->add_option("--m", m_arg, "variable count");
  add_common(tb, cfg);
  tb->callback(
      [&]() { action = [&]() { return run_tau_build(cfg, src, m_arg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
