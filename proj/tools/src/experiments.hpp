#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromsym/cotree.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym::cli {

/// Two non-isomorphic class members sharing a chromatic symmetric function.
struct CollisionCertificate {
  int n = 0;
  ConstructExpr a;
  ConstructExpr b;
  SymFunc csf{Basis::m_tilde};
  bool isomorphic = false;
};

/// Recomputes both expressions by the cotree and stable-partition routes and
/// compares the serializations with the stored function, byte for byte.
bool verify_certificate(const CollisionCertificate& cert);

nlohmann::json to_json(const CollisionCertificate& cert);

struct DistinguishLevel {
  int n = 0;
  std::size_t graphs = 0;
  std::vector<CollisionCertificate> collisions;
  /// Spot checks of the cotree route against stable partitions (with --check).
  std::size_t spot_checks = 0;
  std::size_t spot_check_failures = 0;
};

struct DistinguishOptions {
  bool spot_check = false;
  std::uint64_t seed = 0;
  std::size_t samples_per_level = 16;
};

/// Groups every class member with 1..n_max vertices by its CSF.
/// `on_level` runs after each n, so callers can stream output.
std::vector<DistinguishLevel> distinguish(GraphClass c, int n_max, const DistinguishOptions& options = {},
                                          const std::function<void(const DistinguishLevel&)>& on_level = {});

/// The 10-vertex pair (K2 ⊔ K1) + (K6 ⊔ K1) and (K4 ⊔ K2) + K4, canonicalized.
std::pair<ConstructExpr, ConstructExpr> counterexample_pair();

bool contains_pair(const std::vector<CollisionCertificate>& certs, const ConstructExpr& a,
                   const ConstructExpr& b);

/// K1, or a disjoint union of exactly two complete graphs.
bool is_k1_or_two_cliques(const SimpleGraph& g);

/// The structure lemma for connected, non-complete claw-free cographs.
bool coconnected_structure_holds(const SimpleGraph& g);

struct EPositiveFailure {
  ConstructExpr expr;
  std::string reason;
};

struct EPositiveLevel {
  int n = 0;
  std::size_t cographs = 0;
  std::size_t claw_free = 0;
  std::size_t e_positive = 0;
  std::size_t complement_triangle_free = 0;
  /// Disconnected members whose complement has a triangle (each component is fine).
  std::size_t disconnected_exceptions = 0;
  std::size_t structure_checked = 0;
  std::vector<EPositiveFailure> failures;
};

struct EPositiveReport {
  std::vector<EPositiveLevel> levels;
  bool claw_listed = false;
  /// First cograph (by n, then enumeration order) that is not e-positive.
  std::optional<ConstructExpr> contrast;
  std::optional<std::pair<Partition, Rational>> contrast_witness;

  bool pass() const;
};

inline constexpr int kEPositiveLimit = 9;

/// Throws GuardError when n_max exceeds kEPositiveLimit.
EPositiveReport check_epositive(int n_max,
                                const std::function<void(const EPositiveLevel&)>& on_level = {});

/// A named, checked assertion with supporting data.
struct Claim {
  std::string name;
  bool pass = false;
  nlohmann::json detail;
};

std::vector<Claim> stanley_claims();
std::vector<Claim> counterexample_claims();

}  // namespace chromsym::cli
