#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbasic/altchar.hpp"
#include "pbasic/intlinalg.hpp"
#include "pbasic/symchar.hpp"
#include "pbasic/wreath.hpp"

namespace pbasic {

// Shared owner of the (expensive, immutable) character tables; repeated
// verifications against the same group reuse one table.
class Context {
public:
  const SymTable& sym(int n);
  const AltTable& alt(int n);
  const WreathTable& wreath_semidirect(int p, int w);
  const WreathTable& wreath_cyclic(int p, int w);

private:
  std::map<int, std::unique_ptr<SymTable>> sym_;
  std::map<int, std::unique_ptr<AltTable>> alt_;
  std::map<std::pair<int, int>, std::unique_ptr<WreathTable>> semidirect_, cyclic_;
};

struct BasicSetClaim {
  enum class Kind { Sym, Alt, Wreath };
  Kind kind = Kind::Sym;
  int n = 0, p = 0, w = 0;
  std::vector<std::string> members;  // character labels

  std::string group_str() const;
  std::string class_union_str() const;  // "p-regular" or "pi_r-empty"
  nlohmann::ordered_json to_json() const;
};

// Character values over the distinguished class union, flattened to a
// rational matrix with one row per character.  Split alternating classes
// contribute a (sum, scaled difference) column pair and cyclotomic wreath
// values expand over the power basis; both transforms are invertible linear
// maps on the ambient space, so Z-span statements are unchanged.
struct ValueLattice {
  std::vector<std::string> row_labels;
  RatMat values;

  int index_of(const std::string& label) const;
};

ValueLattice sym_value_lattice(const SymTable& t, int p);
ValueLattice alt_value_lattice(const AltTable& t, int p);
ValueLattice wreath_value_lattice(const WreathTable& t);

// The p-quotient of lam as a character-label tuple for a wreath product
// whose base group has p classes (coordinate i = quotient component i).
PartitionTuple quotient_tuple(const Partition& lam, int p);

// The middle quotient coordinate r = (p+1)/2 is empty.
std::vector<Partition> lambda_empty(int n, int p);

BasicSetClaim construct_sym_basic(int n, int p);
BasicSetClaim construct_alt_basic(int n, int p);
BasicSetClaim construct_wreath_basic(int p, int w);

struct VerifyOutcome {
  bool ok = false;
  // For every in-scope character outside the candidate set: integral
  // coefficients over the members (certificate of spanning).
  std::vector<std::pair<std::string, std::vector<Integer>>> expansions;
  std::string witness;  // set when !ok
  nlohmann::ordered_json to_json() const;
};

// Checks that `members` indexes Z-independent rows whose span contains every
// in-scope row, i.e. a Z-basis of the restricted-character lattice.
VerifyOutcome verify_c_basic(const ValueLattice& lattice,
                             const std::vector<std::string>& members,
                             const std::vector<std::string>* scope_rows = nullptr);

// Convenience: build the right lattice for the claim and verify, optionally
// scoped to one block's characters.
VerifyOutcome verify_claim(Context& ctx, const BasicSetClaim& claim,
                           const BlockDescriptor* block = nullptr);

// Report of a generalized perfect-isometry verification between a p-block of
// S_n (characters truncated to p-regular classes) and the wreath model
// (characters truncated to the distinguished class union), through the
// quotient bijection.  `eta` is the propagated sign vector; `eta_candidate`
// the closed-form candidate p_sign(lam) * (-1)^{|alpha_lam^r|}, checked
// separately.
struct IsometryReport {
  int n = 0, p = 0, weight = 0;
  Partition core;
  bool osima_variant = false;  // cyclic base and untwisted bijection
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  RatMat gram_source, gram_target;
  std::vector<int> eta;
  std::vector<int> eta_candidate;
  bool candidate_ok = false;
  bool ok = false;
  std::string witness;
  nlohmann::ordered_json to_json() const;
};

// Block of S_n against (Z_p : Z_{p-1}) wr S_w over the pi_p-empty classes,
// bijection lam -> tilde(quotient(lam)).
IsometryReport verify_isometry(Context& ctx, const BlockDescriptor& block);
// Block of S_n against Z_p wr S_w over the pi_1-empty classes, bijection
// lam -> quotient(lam).
IsometryReport verify_osima_step(Context& ctx, const BlockDescriptor& block);

// Carry a basic-set claim through the bijection of a verified report
// (wreath-side members to block-side characters).
BasicSetClaim transport_basic_set(const IsometryReport& report,
                                  const BasicSetClaim& wreath_claim);

// Union of per-block claims into one claim on the same group.
BasicSetClaim assemble_blockwise(const std::vector<BasicSetClaim>& claims);

}  // namespace pbasic
