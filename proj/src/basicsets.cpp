#include "pbasic/basicsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pbasic {

using nlohmann::ordered_json;

const SymTable& Context::sym(int n) {
  auto& slot = sym_[n];
  if (!slot) slot = std::make_unique<SymTable>(sym_table(n));
  return *slot;
}

const AltTable& Context::alt(int n) {
  auto& slot = alt_[n];
  if (!slot) slot = std::make_unique<AltTable>(alt_table_from(sym(n)));
  return *slot;
}

const WreathTable& Context::wreath_semidirect(int p, int w) {
  auto& slot = semidirect_[{p, w}];
  if (!slot)
    slot = std::make_unique<WreathTable>(wreath_table(base_group_semidirect(p), w));
  return *slot;
}

const WreathTable& Context::wreath_cyclic(int p, int w) {
  auto& slot = cyclic_[{p, w}];
  if (!slot)
    slot = std::make_unique<WreathTable>(wreath_table(base_group_cyclic(p), w));
  return *slot;
}

std::string BasicSetClaim::group_str() const {
  switch (kind) {
    case Kind::Sym: return "S_" + std::to_string(n);
    case Kind::Alt: return "A_" + std::to_string(n);
    case Kind::Wreath:
      return "G(" + std::to_string(p) + "," + std::to_string(w) + ")";
  }
  throw std::logic_error("unreachable claim kind");
}

std::string BasicSetClaim::class_union_str() const {
  if (kind == Kind::Wreath) return "classes with empty p-cycle coordinate";
  return std::to_string(p) + "-regular classes";
}

ordered_json BasicSetClaim::to_json() const {
  ordered_json j;
  j["group"] = group_str();
  j["class_union"] = class_union_str();
  j["size"] = members.size();
  j["members"] = members;
  return j;
}

int ValueLattice::index_of(const std::string& label) const {
  for (size_t i = 0; i < row_labels.size(); ++i)
    if (row_labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("no character '" + label + "' in the value lattice");
}

ValueLattice sym_value_lattice(const SymTable& t, int p) {
  std::vector<int> cls = p_regular_class_indices(t, p);
  ValueLattice lat;
  lat.values = RatMat(static_cast<int>(t.labels.size()), static_cast<int>(cls.size()));
  for (size_t r = 0; r < t.labels.size(); ++r) {
    lat.row_labels.push_back(t.labels[r].str());
    for (size_t c = 0; c < cls.size(); ++c)
      lat.values.at(static_cast<int>(r), static_cast<int>(c)) =
          Rational(t.values[r][cls[c]]);
  }
  return lat;
}

ValueLattice alt_value_lattice(const AltTable& t, int p) {
  // Columns: one per unsplit p-regular class; a split pair of classes
  // contributes either its two (then rational) value columns verbatim, or the
  // coordinate pair (a, b) of the shared values a +- b*sqrt(d).  Either way
  // the new columns are an invertible linear recoding of the old ones, so
  // Z-linear relations among rows are exactly preserved.
  std::vector<int> cls = alt_p_regular_class_indices(t, p);
  int nrows = static_cast<int>(t.chars.size());

  std::vector<std::vector<Rational>> cols;
  for (size_t k = 0; k < cls.size(); ++k) {
    int c = cls[k];
    if (t.classes[c].half == 0) {
      std::vector<Rational> col(nrows);
      for (int r = 0; r < nrows; ++r) {
        const QuadValue& v = t.values[r][c];
        if (!v.is_rational())
          throw std::logic_error("irrational value on an unsplit class");
        col[r] = v.a();
      }
      cols.push_back(std::move(col));
      continue;
    }
    // First half of a split pair; the partner follows immediately.
    if (t.classes[c].half != +1 || k + 1 >= cls.size() || cls[k + 1] != c + 1 ||
        t.classes[c + 1].half != -1 ||
        !(t.classes[c + 1].cycle_type == t.classes[c].cycle_type))
      throw std::logic_error("split class pair not adjacent in the table");
    ++k;

    long d = 1;
    for (int r = 0; r < nrows && d == 1; ++r) d = t.values[r][c].d();
    std::vector<Rational> a_col(nrows), b_col(nrows);
    for (int r = 0; r < nrows; ++r) {
      const QuadValue& v = t.values[r][c];
      const QuadValue& partner = t.values[r][c + 1];
      if (d == 1) {
        // Radicand collapsed to a square: both columns are plain rationals.
        a_col[r] = v.a();
        b_col[r] = partner.a();
      } else {
        if (!v.is_rational() && v.d() != d)
          throw std::logic_error("mixed radicands inside one split pair");
        a_col[r] = v.a();
        b_col[r] = v.b();
        QuadValue expected = v.b() == 0 ? QuadValue(v.a())
                                        : QuadValue(v.a(), -v.b(), d);
        if (!(partner == expected))
          throw std::logic_error("split halves are not algebraic conjugates");
      }
    }
    cols.push_back(std::move(a_col));
    cols.push_back(std::move(b_col));
  }

  ValueLattice lat;
  for (const AltCharId& id : t.chars) lat.row_labels.push_back(id.str());
  lat.values = RatMat(nrows, static_cast<int>(cols.size()));
  for (int r = 0; r < nrows; ++r)
    for (size_t c = 0; c < cols.size(); ++c)
      lat.values.at(r, static_cast<int>(c)) = cols[c][r];
  return lat;
}

ValueLattice wreath_value_lattice(const WreathTable& t) {
  // Cyclotomic entries expand over the rational power basis of Q(zeta_m);
  // each class of the distinguished union contributes phi(m) columns.
  std::vector<int> cls = c_empty_class_indices(t);
  int deg = static_cast<int>(cyclotomic_polynomial(t.base.cyclo_order).size()) - 1;
  ValueLattice lat;
  int nrows = static_cast<int>(t.char_labels.size());
  lat.values = RatMat(nrows, static_cast<int>(cls.size()) * deg);
  for (int r = 0; r < nrows; ++r) {
    lat.row_labels.push_back(tuple_str(t.char_labels[r]));
    for (size_t k = 0; k < cls.size(); ++k) {
      const Cyclotomic& v = t.values[r][cls[k]];
      for (int j = 0; j < deg; ++j)
        lat.values.at(r, static_cast<int>(k) * deg + j) = v.coeffs()[j];
    }
  }
  return lat;
}

PartitionTuple quotient_tuple(const Partition& lam, int p) {
  PQuotient q = p_quotient(lam, p);
  PartitionTuple alpha;
  for (int i = 1; i <= p; ++i) alpha.push_back(q.comp(i));
  return alpha;
}

std::vector<Partition> lambda_empty(int n, int p) {
  int r = (p + 1) / 2;
  std::vector<Partition> out;
  for (const Partition& lam : all_partitions(n))
    if (p_quotient(lam, p).comp(r).empty()) out.push_back(lam);
  return out;
}

BasicSetClaim construct_sym_basic(int n, int p) {
  BasicSetClaim claim;
  claim.kind = BasicSetClaim::Kind::Sym;
  claim.n = n;
  claim.p = p;
  for (const Partition& lam : lambda_empty(n, p)) claim.members.push_back(lam.str());
  return claim;
}

BasicSetClaim construct_alt_basic(int n, int p) {
  // Restriction of the symmetric-group set: a conjugate pair inside it
  // contributes its single restricted character (the set is stable under
  // conjugation, so each pair is hit twice and recorded once); a
  // self-conjugate member contributes both split constituents.
  BasicSetClaim claim;
  claim.kind = BasicSetClaim::Kind::Alt;
  claim.n = n;
  claim.p = p;
  std::set<std::string> seen;
  for (const Partition& lam : lambda_empty(n, p)) {
    Partition conj = lam.conjugate();
    if (lam == conj) {
      claim.members.push_back(AltCharId{lam, +1}.str());
      claim.members.push_back(AltCharId{lam, -1}.str());
    } else {
      const Partition& rep = lam < conj ? conj : lam;
      if (seen.insert(rep.str()).second)
        claim.members.push_back(AltCharId{rep, 0}.str());
    }
  }
  return claim;
}

BasicSetClaim construct_wreath_basic(int p, int w) {
  BasicSetClaim claim;
  claim.kind = BasicSetClaim::Kind::Wreath;
  claim.p = p;
  claim.w = w;
  int r = (p + 1) / 2;
  for (const PartitionTuple& alpha : partition_tuples(p, w))
    if (alpha[r - 1].empty()) claim.members.push_back(tuple_str(alpha));
  return claim;
}

ordered_json VerifyOutcome::to_json() const {
  ordered_json j;
  j["verified"] = ok;
  if (!ok) j["witness"] = witness;
  ordered_json exp = ordered_json::array();
  for (const auto& [label, coeffs] : expansions) {
    ordered_json e;
    e["character"] = label;
    ordered_json cs = ordered_json::array();
    for (const Integer& c : coeffs) cs.push_back(to_string(c));
    e["coefficients"] = cs;
    exp.push_back(e);
  }
  j["expansions"] = exp;
  return j;
}

VerifyOutcome verify_c_basic(const ValueLattice& lattice,
                             const std::vector<std::string>& members,
                             const std::vector<std::string>* scope_rows) {
  VerifyOutcome out;
  std::vector<int> member_rows;
  for (const std::string& m : members) member_rows.push_back(lattice.index_of(m));

  RatMat basis(static_cast<int>(member_rows.size()), lattice.values.cols());
  for (size_t i = 0; i < member_rows.size(); ++i)
    for (int c = 0; c < lattice.values.cols(); ++c)
      basis.at(static_cast<int>(i), c) = lattice.values.at(member_rows[i], c);

  LatticeSolver solver(basis);
  if (solver.rank() < static_cast<int>(member_rows.size())) {
    out.ok = false;
    auto dep = solver.dependence();
    std::string text = "Z-dependence among candidates:";
    if (dep)
      for (size_t i = 0; i < dep->size(); ++i)
        if ((*dep)[i] != 0)
          text += " " + to_string((*dep)[i]) + "*[" + members[i] + "]";
    out.witness = text + " = 0 on the class union";
    return out;
  }

  std::vector<std::string> scope;
  if (scope_rows)
    scope = *scope_rows;
  else
    scope = lattice.row_labels;
  std::set<std::string> member_set(members.begin(), members.end());
  for (const std::string& label : scope) {
    if (member_set.count(label)) continue;
    int row = lattice.index_of(label);
    std::vector<Rational> b(lattice.values.cols());
    for (int c = 0; c < lattice.values.cols(); ++c) b[c] = lattice.values.at(row, c);
    auto coeffs = solver.solve(b);
    if (!coeffs) {
      out.ok = false;
      out.witness = "character " + label +
                    " has no integral expansion over the candidate set";
      return out;
    }
    out.expansions.emplace_back(label, std::move(*coeffs));
  }
  out.ok = true;
  return out;
}

VerifyOutcome verify_claim(Context& ctx, const BasicSetClaim& claim,
                           const BlockDescriptor* block) {
  ValueLattice lat;
  switch (claim.kind) {
    case BasicSetClaim::Kind::Sym:
      lat = sym_value_lattice(ctx.sym(claim.n), claim.p);
      break;
    case BasicSetClaim::Kind::Alt:
      lat = alt_value_lattice(ctx.alt(claim.n), claim.p);
      break;
    case BasicSetClaim::Kind::Wreath:
      lat = wreath_value_lattice(ctx.wreath_semidirect(claim.p, claim.w));
      break;
  }
  if (!block) return verify_c_basic(lat, claim.members);
  if (claim.kind != BasicSetClaim::Kind::Sym)
    throw std::invalid_argument("block scope only applies to symmetric-group claims");
  // Restrict both the candidate set and the rows to span to one block.
  std::set<std::string> block_set;
  std::vector<std::string> scope;
  for (const Partition& lam : block->members) {
    block_set.insert(lam.str());
    scope.push_back(lam.str());
  }
  std::vector<std::string> members;
  for (const std::string& m : claim.members)
    if (block_set.count(m)) members.push_back(m);
  return verify_c_basic(lat, members, &scope);
}

ordered_json IsometryReport::to_json() const {
  ordered_json j;
  j["variant"] = osima_variant ? "osima" : "isometry";
  j["n"] = n;
  j["p"] = p;
  j["weight"] = weight;
  j["core"] = core.str();
  j["verified"] = ok;
  if (!ok) j["witness"] = witness;
  ordered_json pairs = ordered_json::array();
  for (size_t i = 0; i < source_labels.size(); ++i) {
    ordered_json e;
    e["source"] = source_labels[i];
    e["target"] = target_labels[i];
    e["eta"] = i < eta.size() ? eta[i] : 0;
    e["eta_candidate"] = i < eta_candidate.size() ? eta_candidate[i] : 0;
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  j["candidate_ok"] = candidate_ok;
  auto gram_json = [](const RatMat& g) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < g.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < g.cols(); ++c) row.push_back(to_string(g.at(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  j["gram_source"] = gram_json(gram_source);
  j["gram_target"] = gram_json(gram_target);
  return j;
}

namespace {

// Gram matrices are equal up to conjugation by a +-1 diagonal iff a sign
// vector can be propagated along non-zero entries without contradiction.
// Returns true and fills eta on success; false with a witness otherwise.
bool propagate_signs(const RatMat& gs, const RatMat& gw, std::vector<int>& eta,
                     std::string& witness) {
  int k = gs.rows();
  eta.assign(k, 0);
  for (int root = 0; root < k; ++root) {
    if (eta[root] != 0) continue;
    eta[root] = +1;
    std::vector<int> queue{root};
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      for (int j = 0; j < k; ++j) {
        bool zs = gs.at(i, j) == 0, zw = gw.at(i, j) == 0;
        if (zs != zw) {
          witness = "zero/non-zero mismatch at entry (" + std::to_string(i) +
                    "," + std::to_string(j) + ")";
          return false;
        }
        if (zs) continue;
        int ratio;
        if (gs.at(i, j) == gw.at(i, j))
          ratio = +1;
        else if (gs.at(i, j) == -gw.at(i, j))
          ratio = -1;
        else {
          witness = "entry ratio not +-1 at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
          return false;
        }
        int want = eta[i] * ratio;
        if (eta[j] == 0) {
          eta[j] = want;
          queue.push_back(j);
        } else if (eta[j] != want) {
          witness = "inconsistent sign propagation at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")";
          return false;
        }
      }
    }
  }
  return true;
}

bool gram_equal_under(const RatMat& gs, const RatMat& gw,
                      const std::vector<int>& eta) {
  for (int i = 0; i < gs.rows(); ++i)
    for (int j = 0; j < gs.cols(); ++j)
      if (gs.at(i, j) != Rational(eta[i] * eta[j]) * gw.at(i, j)) return false;
  return true;
}

IsometryReport isometry_report(Context& ctx, const BlockDescriptor& block,
                               bool osima) {
  if (block.weight < 1)
    throw std::invalid_argument("isometry verification needs block weight >= 1");
  IsometryReport rep;
  rep.n = block.n;
  rep.p = block.p;
  rep.weight = block.weight;
  rep.core = block.core;
  rep.osima_variant = osima;

  const SymTable& s = ctx.sym(block.n);
  const WreathTable& t = osima ? ctx.wreath_cyclic(block.p, block.weight)
                               : ctx.wreath_semidirect(block.p, block.weight);
  std::vector<int> reg = p_regular_class_indices(s, block.p);
  std::vector<int> cempty = c_empty_class_indices(t);

  int k = static_cast<int>(block.members.size());
  std::vector<int> srows(k), trows(k);
  int r = (block.p + 1) / 2;
  for (int i = 0; i < k; ++i) {
    const Partition& lam = block.members[i];
    rep.source_labels.push_back(lam.str());
    srows[i] = s.index_of(lam);
    PartitionTuple alpha = quotient_tuple(lam, block.p);
    if (!osima) alpha = tilde(alpha);
    rep.target_labels.push_back(tuple_str(alpha));
    trows[i] = t.index_of_char(alpha);
    int sign = p_sign(lam, block.p);
    if (!osima && p_quotient(lam, block.p).comp(r).size() % 2 != 0) sign = -sign;
    rep.eta_candidate.push_back(sign);
  }

  rep.gram_source = RatMat(k, k);
  rep.gram_target = RatMat(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Rational v = inner_product(s, srows[i], srows[j], reg);
      rep.gram_source.at(i, j) = v;
      rep.gram_source.at(j, i) = v;
      Cyclotomic wv = wreath_inner_product(t, trows[i], trows[j], cempty);
      if (!wv.is_rational()) {
        rep.ok = false;
        rep.witness = "irrational inner product at (" + rep.target_labels[i] +
                      ", " + rep.target_labels[j] + ")";
        return rep;
      }
      rep.gram_target.at(i, j) = wv.rational_part();
      rep.gram_target.at(j, i) = wv.rational_part();
    }

  rep.ok = propagate_signs(rep.gram_source, rep.gram_target, rep.eta, rep.witness);
  if (rep.ok && !gram_equal_under(rep.gram_source, rep.gram_target, rep.eta)) {
    rep.ok = false;
    rep.witness = "propagated signs do not reconcile the Gram matrices";
  }
  rep.candidate_ok =
      gram_equal_under(rep.gram_source, rep.gram_target, rep.eta_candidate);
  return rep;
}

}  // namespace

IsometryReport verify_isometry(Context& ctx, const BlockDescriptor& block) {
  return isometry_report(ctx, block, false);
}

IsometryReport verify_osima_step(Context& ctx, const BlockDescriptor& block) {
  return isometry_report(ctx, block, true);
}

BasicSetClaim transport_basic_set(const IsometryReport& report,
                                  const BasicSetClaim& wreath_claim) {
  if (!report.ok)
    throw std::invalid_argument("cannot transport across an unverified isometry");
  BasicSetClaim image;
  image.kind = BasicSetClaim::Kind::Sym;
  image.n = report.n;
  image.p = report.p;
  std::set<std::string> wanted(wreath_claim.members.begin(),
                               wreath_claim.members.end());
  for (size_t i = 0; i < report.target_labels.size(); ++i)
    if (wanted.count(report.target_labels[i]))
      image.members.push_back(report.source_labels[i]);
  if (image.members.size() != wreath_claim.members.size())
    throw std::invalid_argument("claim members missing from the bijection");
  return image;
}

BasicSetClaim assemble_blockwise(const std::vector<BasicSetClaim>& claims) {
  if (claims.empty()) throw std::invalid_argument("no claims to assemble");
  BasicSetClaim out = claims.front();
  std::set<std::string> seen(out.members.begin(), out.members.end());
  for (size_t i = 1; i < claims.size(); ++i) {
    const BasicSetClaim& c = claims[i];
    if (c.kind != out.kind || c.n != out.n || c.p != out.p || c.w != out.w)
      throw std::invalid_argument("claims to assemble live on different groups");
    for (const std::string& m : c.members) {
      if (!seen.insert(m).second)
        throw std::invalid_argument("overlapping blocks: " + m);
      out.members.push_back(m);
    }
  }
  if (out.kind == BasicSetClaim::Kind::Sym) {
    std::sort(out.members.begin(), out.members.end(),
              [](const std::string& a, const std::string& b) {
                return Partition::parse(b) < Partition::parse(a);
              });
  }
  return out;
}

}  // namespace pbasic
