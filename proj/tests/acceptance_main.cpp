// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is pinned in code; the algebraic checks are
// exact (zero tolerance) and the statevector checks use the stated 1e-8 /
// 1e-10 fidelity bounds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "pauliperiod/catalyst.hpp"
#include "pauliperiod/circuit.hpp"
#include "pauliperiod/exact.hpp"
#include "pauliperiod/families.hpp"
#include "pauliperiod/hierarchy.hpp"
#include "pauliperiod/perm_poly.hpp"
#include "pauliperiod/synthesis.hpp"

using namespace pauliperiod;

namespace {

int g_failures = 0;

void run(int id, const std::string& name, double budget_s,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  double secs = 0;
  try {
    auto t0 = std::chrono::steady_clock::now();
    ok = body(detail);
    secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
      ok = false;
      detail += " [exceeded " + std::to_string(budget_s) + " s budget]";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++g_failures;
  std::printf("%s: %2d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

Circuit single(unsigned width, Gate g) {
  Circuit c(width);
  c.add(std::move(g));
  return c;
}

Circuit random_affine_circuit(unsigned n, std::size_t len, std::mt19937_64& rng) {
  Circuit c(n);
  std::uniform_int_distribution<unsigned> qubit(0, n - 1);
  for (std::size_t i = 0; i < len; ++i) {
    if (rng() % 3 == 0) {
      c.add(Gate::x(qubit(rng)));
    } else {
      unsigned a = qubit(rng), b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add(Gate::cnot(a, b));
    }
  }
  return c;
}

}  // namespace

int main() {
  run(1, "SCH_n periodicity equals ceil(log2(2n)) for n = 3..16", 1.0, [](std::string& d) {
    for (unsigned n = 3; n <= 16; ++n) {
      auto m = pauli_periodicity(to_tableau(sch(n)));
      if (!m || *m != ceil_log2(2 * n)) {
        d = "n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  run(2, "SCH block-matrix regression: M_n matches sch(n), nilindex 2n, n = 2..64", 5.0,
      [](std::string& d) {
        for (unsigned n = 2; n <= 64; ++n) {
          AppendixReport r = appendix_check(n);
          if (!r.pass) {
            d = "n = " + std::to_string(n);
            return false;
          }
        }
        return true;
      });

  run(3, "controlled jump: oracle level = m+2 with strictness witness at m+1", 60.0,
      [](std::string& d) {
        struct Case {
          const char* name;
          Circuit c;
          std::size_t m;
        };
        std::vector<Case> cases;
        cases.push_back({"S", single(1, Gate::s(0)), 1});
        cases.push_back({"jordan(4)", jordan_cnot_string(4), 2});
        cases.push_back({"brickwork(4)", brickwork_cnot(4), 2});
        cases.push_back({"SCH_3", sch(3), 3});
        for (auto& cs : cases) {
          JumpReport r = verify_controlled_jump(cs.c, 6, {1'000'000, false});
          if (!r.pass || r.periodicity != cs.m || r.oracle_level != cs.m + 2 ||
              r.witness.empty()) {
            d = cs.name;
            return false;
          }
          d += std::string(cs.name) + " level " + std::to_string(r.oracle_level) + "; ";
        }
        return true;
      });

  run(4, "T and CS lie in C3 \\ C2", 1.0, [](std::string&) {
    HierarchyOracle oracle;
    ExactUnitary t = to_exact(single(1, Gate::t(0)));
    ExactUnitary cs = to_exact(single(2, Gate::cs(0, 1)));
    return oracle.is_in_level(t, 3) && !oracle.is_in_level(t, 2) && oracle.is_in_level(cs, 3) &&
           !oracle.is_in_level(cs, 2);
  });

  run(5, "periodicity ceiling over 10^4 seeded tableaus at n in {2,3,4,8}", 30.0,
      [](std::string& d) {
        for (unsigned n : {2u, 3u, 4u, 8u}) {
          SearchReport r = search_max_periodicity(n, 10'000, 20250809 + n);
          if (!r.pass) {
            d = "n = " + std::to_string(n) + " max " + std::to_string(r.max_observed);
            return false;
          }
          d += "n" + std::to_string(n) + " max " + std::to_string(r.max_observed) + "<=" +
               std::to_string(r.bound) + "; ";
        }
        return true;
      });

  run(6, "synthesis exactness: synth_jumped equals diag(I, U) with phase 1", 10.0,
      [](std::string& d) {
        std::vector<std::pair<const char*, Circuit>> cases;
        cases.emplace_back("X", single(1, Gate::x(0)));
        cases.emplace_back("S", single(1, Gate::s(0)));
        cases.emplace_back("H", single(1, Gate::h(0)));
        cases.emplace_back("CNOT", single(2, Gate::cnot(0, 1)));
        cases.emplace_back("brickwork(4)", brickwork_cnot(4));
        cases.emplace_back("sch(3)", sch(3));
        for (auto& [name, c] : cases) {
          auto [lowered, rep] = synth_jumped(c);
          if (!rep.verified || !rep.residual_global_phase.is_one()) {
            d = name;
            return false;
          }
          d += std::string(name) + " t=" + std::to_string(rep.t_count) + "; ";
        }
        return true;
      });

  run(7, "controlled-gate identities and W_m blocks on 50 random circuits", 0, [](std::string&) {
    std::mt19937_64 rng(7070);
    for (int trial = 0; trial < 50; ++trial) {
      unsigned n = 1 + trial % 3;
      ExactUnitary u = to_exact(random_clifford_circuit(n, 5 + n, rng));
      ExactUnitary v = to_exact(random_clifford_circuit(n, 5 + n, rng));
      ExactUnitary cu = controlled(u);
      if (controlled(u * v) != cu * controlled(v)) return false;
      ExactUnitary xi = pauli_to_exact(PauliString::single_x(n + 1, 0));
      ExactUnitary iu_dag = block_diag(u.dagger(), u.dagger());
      if (cu * xi != ((iu_dag * controlled(u * u)) * xi) * cu) return false;
      ExactUnitary iv = block_diag(v, v);
      ExactUnitary comm = ((u * v) * u.dagger()) * v.dagger();
      if (cu * iv != (controlled(comm) * iv) * cu) return false;
      // W_m stays diagonal in the control qubit with the ±2^(m-1) powers of
      // U as blocks (the inverse alternates sides with m).
      ExactUnitary w = ((xi * cu) * xi) * cu.dagger();
      std::size_t e = 1;
      for (int m = 1; m <= 3; ++m) {
        ExactUnitary upow = u.pow(e);
        ExactUnitary expected =
            (m % 2 == 1) ? block_diag(upow, upow.dagger()) : block_diag(upow.dagger(), upow);
        if (w != expected) return false;
        w = ((xi * w) * xi) * w.dagger();
        e *= 2;
      }
    }
    return true;
  });

  run(8, "quadratic ANF degrees of dressed jumped permutations, 50 dressings", 10.0,
      [](std::string&) {
        std::mt19937_64 rng(8080);
        for (int trial = 0; trial < 50; ++trial) {
          unsigned n = 2 + trial % 3;  // up to n = 4
          Circuit u = (trial % 2) ? jordan_cnot_string(n) : brickwork_cnot(n);
          Circuit p = random_affine_circuit(n + 1, 8, rng);
          Circuit q = random_affine_circuit(n + 1, 8, rng);
          QuadraticReport r = check_jumped_perm_quadratic(u, p, q);
          if (!r.pass) return false;
        }
        return true;
      });

  run(9, "catalyst protocol: S at k=1 and the pi/4 instance at k=2", 0, [](std::string& d) {
    Circuit s = single(1, Gate::s(0));
    CatalystResult cs = prepare_catalyst(s, 1, StateVector::plus_all(1));
    if (std::abs(cs.success_prob - 0.5) > 1e-10) {
      d = "S success prob " + std::to_string(cs.success_prob);
      return false;
    }
    KickbackReport ks = kickback(cs.state, s, 1);
    if (ks.full_fidelity < 1 - 1e-8) {
      d = "S kickback fidelity";
      return false;
    }
    Circuit inst = find_eigenphase_clifford(2, 2);
    CatalystResult c2 = prepare_catalyst(inst, 2, StateVector::plus_all(2));
    KickbackReport k2 = kickback(c2.state, inst, 2);
    if (k2.full_fidelity < 1 - 1e-8) {
      d = "pi/4 kickback fidelity " + std::to_string(k2.full_fidelity);
      return false;
    }
    if (k2.catalyst_fidelity < 1 - 1e-10) {
      d = "catalyst not preserved";
      return false;
    }
    d = "p(S)=" + std::to_string(cs.success_prob);
    return true;
  });

  run(10, "tensor periodicity max(m1, m2) on 100 random periodic pairs", 0, [](std::string&) {
    std::mt19937_64 rng(1010);
    auto periodic = [&](unsigned n) {
      std::vector<Circuit> seeds = {sch(n), jordan_cnot_string(n), brickwork_cnot(n)};
      Circuit base = seeds[rng() % seeds.size()];
      if (rng() % 4 == 0) {
        base = Circuit(n);
        base.add(rng() % 2 ? Gate::s(rng() % n) : Gate::x(rng() % n));
      }
      Circuit conj = random_clifford_circuit(n, 2 * n + 2, rng);
      Circuit out(n);
      for (const Gate& g : conj.gates) out.add(g);
      for (const Gate& g : base.gates) out.add(g);
      for (const Gate& g : inverse_circuit(conj).gates) out.add(g);
      return out;
    };
    for (int trial = 0; trial < 100; ++trial) {
      Circuit c1 = periodic(2 + trial % 3), c2 = periodic(2 + (trial / 2) % 3);
      if (!tensor_periodicity_check(c1, c2)) return false;
    }
    return true;
  });

  std::printf("RESULT: %d criteria failed\n", g_failures);
  return g_failures;
}
