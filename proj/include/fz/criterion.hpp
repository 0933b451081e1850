#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fz/rational.hpp"
#include "fz/reduction.hpp"

namespace fz {

/// Candidate coefficients (b0; a_1..a_{n-1}) for weights r, s with n = r + s.
struct ShuffleTuple {
  int r = 0, s = 0;
  RationalFunction b0;
  std::vector<RationalFunction> a;  // a[i-1] holds a_i

  int n() const noexcept { return r + s; }
  const FieldPtr& field() const noexcept { return b0.field(); }
  bool operator==(const ShuffleTuple& o) const { return r == o.r && s == o.s && b0 == o.b0 && a == o.a; }
};

/// The tuple with all denominators cleared by gamma_c, then theta -> t.
struct NormalizedTuple {
  UniPoly gamma_c;
  UniPoly beta0, gamma0;
  std::vector<UniPoly> alpha;  // alpha[i-1] holds alpha_i
};

enum class CaseTag { Coprime, Divisible };
enum class Verdict { SRCertified, SRAfterB0Correction, NotSR };

std::string to_string(CaseTag c);
std::string to_string(Verdict v);

struct TorsionReport {
  ShuffleTuple tuple;
  UniPoly annihilator;
  EPoint vc;
  EPoint rho_a_vc;
  bool is_torsion = false;
  CaseTag case_tag = CaseTag::Coprime;
  std::vector<int> filter_violations;
  Verdict verdict = Verdict::NotSR;
};

/// Throws std::invalid_argument unless r, s >= 1 and the arity is n - 1.
void validate(const ShuffleTuple& c);

NormalizedTuple normalize_tuple(const ShuffleTuple& c);

/// w with v_C = Delta(sigma w); returned with sigma_shift 1.
ModuleVector build_vc_element(const NormalizedTuple& nt, int r, int s, const ATContext& at);

/// Once-twisted bottom row of Phi_C, without the final 1.
ExtRow ext_row(const NormalizedTuple& nt, int r, int s, const ATContext& at);
/// Phi_C^{(1)}: Phi'^{(1)} bordered by ext_row and a corner 1.
BiMatrix phi_c_twisted(const NormalizedTuple& nt, int r, int s, const ATContext& at);

/// Shared context; built on demand when absent or too short.
TorsionReport decide_torsion(const ShuffleTuple& c, const ATContext* at = nullptr,
                             const ReductionBudget& budget = {});

/// rho_a(v_C) computed as Delta(a * w) in one reduction. Only practical for
/// small annihilators; used to cross-check the Horner route.
EPoint rho_direct(const UniPoly& a, const ModuleVector& w, const ATContext& at,
                  const ReductionBudget& budget = {});

/// 1-based indices i with a_i != 0 and (q-1) not dividing n - i.
std::vector<int> necessary_filter(const ShuffleTuple& c);

ShuffleTuple chen_tuple(int r, int s, const FieldPtr& f);
ShuffleTuple to_dr_tuple(const ShuffleTuple& c);

}  // namespace fz
