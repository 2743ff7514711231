#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace taucrit {

enum class LawId {
  ehm,             // m <= C(t+1, 2)
  gl,              // n + m <= C(t+2, 2)
  rvpe,            // r n + m <= C(t+r+1, 2), integer 0 <= r <= t
  hajnal,          // max degree <= 2t + 1 - n
  suranyi,         // d(v) <= |N(S)| - |S| + 1 for independent S containing v
  lemma23,         // (2t+1-n)-regular component => extremal family
  sandwich_lower,  // 2m / n <= lambda1
  sandwich_upper,  // lambda1 <= max degree
  nlam,            // n + lambda1 <= 2t + 1
  lam1,            // lambda1 <= t
  spect,           // n (r + lambda1 / 2) <= C(t+r+1, 2)
  half,            // n (r + lambda1 / 2) <= (2t + 2r + 1)^2 / 8, real r >= 0
  q1_nlam,         // n + q1 / 2 <= 2t + 1
  q1_lam1,         // q1 <= 2t
  q1_spect,        // n (r + q1 / 4) <= C(t+r+1, 2)
};

inline constexpr std::array kAllLaws = {
    LawId::ehm,     LawId::gl,   LawId::rvpe, LawId::hajnal, LawId::suranyi,
    LawId::lemma23, LawId::sandwich_lower, LawId::sandwich_upper, LawId::nlam,
    LawId::lam1,    LawId::spect, LawId::half, LawId::q1_nlam, LawId::q1_lam1, LawId::q1_spect,
};

inline std::string_view to_string(LawId id) {
  switch (id) {
    case LawId::ehm: return "EHM";
    case LawId::gl: return "GL";
    case LawId::rvpe: return "RVPE";
    case LawId::hajnal: return "HAJNAL";
    case LawId::suranyi: return "SURANYI";
    case LawId::lemma23: return "LEMMA23";
    case LawId::sandwich_lower: return "SANDWICH-LOWER";
    case LawId::sandwich_upper: return "SANDWICH-UPPER";
    case LawId::nlam: return "NLAM";
    case LawId::lam1: return "LAM1";
    case LawId::spect: return "SPECT";
    case LawId::half: return "HALF";
    case LawId::q1_nlam: return "Q1-NLAM";
    case LawId::q1_lam1: return "Q1-LAM1";
    case LawId::q1_spect: return "Q1-SPECT";
  }
  return "?";
}

inline std::optional<LawId> parse_law_id(std::string_view text) {
  for (LawId id : kAllLaws)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

/// Laws parameterized by an integer r with 0 <= r <= t.
inline bool takes_integer_r(LawId id) { return id == LawId::rvpe || id == LawId::spect || id == LawId::q1_spect; }

/// Laws whose inequality involves a spectral radius.
inline bool is_spectral(LawId id) {
  switch (id) {
    case LawId::sandwich_lower:
    case LawId::sandwich_upper:
    case LawId::nlam:
    case LawId::lam1:
    case LawId::spect:
    case LawId::half:
    case LawId::q1_nlam:
    case LawId::q1_lam1:
    case LawId::q1_spect:
      return true;
    default:
      return false;
  }
}

/// Laws with a stated list of extremal graphs.
inline bool has_equality_list(LawId id) {
  switch (id) {
    case LawId::ehm:
    case LawId::gl:
    case LawId::rvpe:
    case LawId::nlam:
    case LawId::lam1:
    case LawId::spect:
    case LawId::half:
    case LawId::q1_nlam:
    case LawId::q1_lam1:
    case LawId::q1_spect:
      return true;
    default:
      return false;
  }
}

}  // namespace taucrit
