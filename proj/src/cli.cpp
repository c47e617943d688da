#include "pbasic/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbasic/basicsets.hpp"
#include "pbasic/decomp.hpp"

namespace pbasic {
namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  int n = -1, p = -1, w = -1;
  std::string core, in, aux, out, format = "text";
  bool verify = false, force = false;
  std::string arg;     // positional partition
  std::string flavor;  // sym | alt | wreath
};

int with_output(const Options& o, const std::function<int(std::ostream&)>& fn) {
  if (o.out.empty()) return fn(std::cout);
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "error: cannot write '" << o.out << "'\n";
    return kUsage;
  }
  return fn(f);
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Guard rails: exact character-table work grows quickly with n and w.
bool check_ranges(const Options& o, bool needs_p) {
  if (needs_p && !is_odd_prime(o.p)) {
    std::cerr << "error: --p must be an odd prime\n";
    return false;
  }
  if (o.n > 14 && !o.force) {
    std::cerr << "error: n > 14 needs --force\n";
    return false;
  }
  if (o.w > 5 && !o.force) {
    std::cerr << "error: w > 5 needs --force\n";
    return false;
  }
  return true;
}

int no_csv(const Options& o) {
  if (o.format != "csv") return -1;
  std::cerr << "error: csv output is not defined for this command\n";
  return kUsage;
}

int print_simple(const Options& o, const std::string& key, const std::string& value) {
  if (int rc = no_csv(o); rc >= 0) return rc;
  return with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j;
      j[key] = value;
      out << j.dump(2) << '\n';
    } else {
      out << value << '\n';
    }
    return kOk;
  });
}

// ---- verb handlers ---------------------------------------------------------

int run_core(const Options& o) {
  Partition lam = Partition::parse(o.arg);
  return print_simple(o, "core", p_core(lam, o.p).str());
}

int run_quotient(const Options& o) {
  Partition lam = Partition::parse(o.arg);
  return print_simple(o, "quotient", p_quotient(lam, o.p).str());
}

int run_bar(const Options& o) {
  Partition lam = Partition::parse(o.arg);
  return print_simple(o, "bar", bar(lam).str());
}

struct TableView {
  std::string group;
  Integer order;
  std::vector<std::string> char_labels, class_labels;
  std::vector<Integer> centralizers;
  std::vector<std::vector<std::string>> values;  // printed entries
};

TableView view_of(const SymTable& t) {
  TableView v;
  v.group = "S_" + std::to_string(t.n);
  v.order = t.group_order;
  for (const Partition& lam : t.labels) v.char_labels.push_back(lam.str());
  for (const SymClass& c : t.classes) {
    v.class_labels.push_back(c.cycle_type.str());
    v.centralizers.push_back(c.centralizer);
  }
  for (const auto& row : t.values) {
    std::vector<std::string> pr;
    for (const Integer& x : row) pr.push_back(to_string(x));
    v.values.push_back(pr);
  }
  return v;
}

TableView view_of(const AltTable& t) {
  TableView v;
  v.group = "A_" + std::to_string(t.n);
  v.order = t.group_order;
  for (const AltCharId& id : t.chars) v.char_labels.push_back(id.str());
  for (const AltClass& c : t.classes) {
    v.class_labels.push_back(c.str());
    v.centralizers.push_back(c.centralizer);
  }
  for (const auto& row : t.values) {
    std::vector<std::string> pr;
    for (const QuadValue& x : row) pr.push_back(x.str());
    v.values.push_back(pr);
  }
  return v;
}

TableView view_of(const WreathTable& t, int p) {
  TableView v;
  v.group = "G(" + std::to_string(p) + "," + std::to_string(t.w) + ")";
  v.order = t.group_order;
  for (const PartitionTuple& a : t.char_labels) v.char_labels.push_back(tuple_str(a));
  for (const WreathClass& c : t.classes) {
    v.class_labels.push_back(tuple_str(c.tuple));
    v.centralizers.push_back(c.centralizer);
  }
  for (const auto& row : t.values) {
    std::vector<std::string> pr;
    for (const Cyclotomic& x : row) pr.push_back(x.str());
    v.values.push_back(pr);
  }
  return v;
}

int print_table(const Options& o, const TableView& v) {
  return with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j;
      j["group"] = v.group;
      j["order"] = to_string(v.order);
      ordered_json classes = ordered_json::array();
      for (size_t c = 0; c < v.class_labels.size(); ++c) {
        ordered_json e;
        e["label"] = v.class_labels[c];
        e["centralizer"] = to_string(v.centralizers[c]);
        classes.push_back(e);
      }
      j["classes"] = classes;
      ordered_json chars = ordered_json::array();
      for (size_t r = 0; r < v.char_labels.size(); ++r) {
        ordered_json e;
        e["label"] = v.char_labels[r];
        e["values"] = v.values[r];
        chars.push_back(e);
      }
      j["characters"] = chars;
      out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
      for (const std::string& c : v.class_labels) out << ",\"" << c << '"';
      out << '\n';
      for (size_t r = 0; r < v.char_labels.size(); ++r) {
        out << '"' << v.char_labels[r] << '"';
        for (const std::string& x : v.values[r]) out << ",\"" << x << '"';
        out << '\n';
      }
    } else {
      out << "group " << v.group << " order " << to_string(v.order) << '\n';
      out << "classes";
      for (const std::string& c : v.class_labels) out << ' ' << c;
      out << "\ncentralizers";
      for (const Integer& z : v.centralizers) out << ' ' << to_string(z);
      out << '\n';
      for (size_t r = 0; r < v.char_labels.size(); ++r) {
        out << v.char_labels[r] << ':';
        for (const std::string& x : v.values[r]) out << ' ' << x;
        out << '\n';
      }
    }
    return kOk;
  });
}

int run_chartable(const Options& o, Context& ctx) {
  if (o.flavor == "sym") return print_table(o, view_of(ctx.sym(o.n)));
  if (o.flavor == "alt") return print_table(o, view_of(ctx.alt(o.n)));
  return print_table(o, view_of(ctx.wreath_semidirect(o.p, o.w), o.p));
}

int run_blocks(const Options& o) {
  if (int rc = no_csv(o); rc >= 0) return rc;
  std::vector<BlockDescriptor> blocks = p_blocks(o.n, o.p);
  return with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const BlockDescriptor& b : blocks) {
        ordered_json e;
        e["core"] = b.core.str();
        e["weight"] = b.weight;
        ordered_json ms = ordered_json::array();
        for (const Partition& m : b.members) ms.push_back(m.str());
        e["members"] = ms;
        arr.push_back(e);
      }
      out << arr.dump(2) << '\n';
    } else {
      for (const BlockDescriptor& b : blocks) {
        out << "core " << b.core.str() << " weight " << b.weight << " members";
        for (const Partition& m : b.members) out << ' ' << m.str();
        out << '\n';
      }
    }
    return kOk;
  });
}

int run_basicset(const Options& o, Context& ctx) {
  if (int rc = no_csv(o); rc >= 0) return rc;
  BasicSetClaim claim;
  if (o.flavor == "sym")
    claim = construct_sym_basic(o.n, o.p);
  else if (o.flavor == "alt")
    claim = construct_alt_basic(o.n, o.p);
  else
    claim = construct_wreath_basic(o.p, o.w);

  VerifyOutcome outcome;
  if (o.verify) outcome = verify_claim(ctx, claim);

  int rc = with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j = claim.to_json();
      if (o.verify) j["verification"] = outcome.to_json();
      out << j.dump(2) << '\n';
    } else {
      out << "group " << claim.group_str() << " class union "
          << claim.class_union_str() << " size " << claim.members.size() << '\n';
      for (const std::string& m : claim.members) out << m << '\n';
      if (o.verify) {
        out << "verified " << (outcome.ok ? "true" : "false") << '\n';
        if (!outcome.ok) out << "witness: " << outcome.witness << '\n';
      }
    }
    return kOk;
  });
  if (rc != kOk) return rc;
  return (!o.verify || outcome.ok) ? kOk : kFailed;
}

int run_isometry(const Options& o, Context& ctx, bool osima) {
  if (int rc = no_csv(o); rc >= 0) return rc;
  std::vector<BlockDescriptor> blocks = p_blocks(o.n, o.p);
  std::vector<IsometryReport> reports;
  for (const BlockDescriptor& b : blocks) {
    if (!o.core.empty() && !(b.core == Partition::parse(o.core))) continue;
    if (b.weight < 1) {
      if (!o.core.empty()) {
        std::cerr << "error: block with core " << o.core << " has weight 0\n";
        return kUsage;
      }
      continue;
    }
    reports.push_back(osima ? verify_osima_step(ctx, b) : verify_isometry(ctx, b));
  }
  if (reports.empty()) {
    std::cerr << "error: no block of weight >= 1 matches\n";
    return kUsage;
  }
  bool all_ok = true;
  int rc = with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const IsometryReport& r : reports) arr.push_back(r.to_json());
      out << arr.dump(2) << '\n';
    } else {
      for (const IsometryReport& r : reports) {
        out << "block core " << r.core.str() << " weight " << r.weight
            << " verified " << (r.ok ? "true" : "false") << " candidate_ok "
            << (r.candidate_ok ? "true" : "false") << '\n';
        if (!r.ok) out << "witness: " << r.witness << '\n';
      }
    }
    return kOk;
  });
  for (const IsometryReport& r : reports) all_ok = all_ok && r.ok;
  if (rc != kOk) return rc;
  return all_ok ? kOk : kFailed;
}

int print_matrix(const Options& o, const LabeledIntMatrix& m) {
  return with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j;
      j["rows"] = m.row_labels;
      j["cols"] = m.col_labels;
      ordered_json entries = ordered_json::array();
      for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        entries.push_back(row);
      }
      j["entries"] = entries;
      out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
      out << matrix_csv(m);
    } else {
      write_matrix(out, m);
    }
    return kOk;
  });
}

int run_expansion(const Options& o, Context& ctx) {
  BasicSetClaim claim = construct_sym_basic(o.n, o.p);
  VerifyOutcome outcome = verify_claim(ctx, claim);
  if (!outcome.ok) {
    std::cout << "verified false\nwitness: " << outcome.witness << '\n';
    return kFailed;
  }
  return print_matrix(o, expansion_matrix(ctx, claim));
}

int run_transfer(const Options& o) {
  LabeledIntMatrix db = read_matrix_file(o.in);
  LabeledIntMatrix dprime = read_matrix_file(o.aux);
  return print_matrix(o, transfer_to_alternating(db, dprime));
}

int run_relations(const Options& o) {
  LabeledIntMatrix sym = read_matrix_file(o.in);
  LabeledIntMatrix alt = read_matrix_file(o.aux);
  Pairing rows = row_pairing_from_partition_labels(sym.row_labels);
  Pairing cols = eps_column_action(sym, rows);
  RelationsReport report = relations_check(sym, alt, cols);
  if (int rc = no_csv(o); rc >= 0) return rc;
  int rc = with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j;
      j["ok"] = report.ok();
      j["violations"] = report.violations;
      out << j.dump(2) << '\n';
    } else if (report.ok()) {
      out << "relations hold\n";
    } else {
      for (const std::string& v : report.violations) out << v << '\n';
    }
    return kOk;
  });
  if (rc != kOk) return rc;
  return report.ok() ? kOk : kFailed;
}

int run_wedge(const Options& o) {
  LabeledIntMatrix m = read_matrix_file(o.in);
  WedgeCertificate cert = wedge_shape(m);
  if (int rc = no_csv(o); rc >= 0) return rc;
  int rc = with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j;
      j["wedge"] = cert.found;
      if (cert.found) {
        ordered_json rows = ordered_json::array(), cols = ordered_json::array();
        for (int r : cert.row_order) rows.push_back(m.row_labels[r]);
        for (int c : cert.col_order) cols.push_back(m.col_labels[c]);
        j["row_order"] = rows;
        j["col_order"] = cols;
      } else {
        ordered_json rows = ordered_json::array(), cols = ordered_json::array();
        for (int r : cert.stuck_rows) rows.push_back(m.row_labels[r]);
        for (int c : cert.stuck_cols) cols.push_back(m.col_labels[c]);
        j["stuck_rows"] = rows;
        j["stuck_cols"] = cols;
      }
      out << j.dump(2) << '\n';
    } else if (cert.found) {
      out << "wedge shape\nrow order:";
      for (int r : cert.row_order) out << ' ' << m.row_labels[r];
      out << "\ncolumn order:";
      for (int c : cert.col_order) out << ' ' << m.col_labels[c];
      out << '\n';
    } else {
      out << "no wedge shape\nstuck rows:";
      for (int r : cert.stuck_rows) out << ' ' << m.row_labels[r];
      out << "\nstuck columns:";
      for (int c : cert.stuck_cols) out << ' ' << m.col_labels[c];
      out << '\n';
    }
    return kOk;
  });
  if (rc != kOk) return rc;
  return cert.found ? kOk : kFailed;
}

int run_epsaction(const Options& o) {
  LabeledIntMatrix db = read_matrix_file(o.in);
  for (int r = 0; r < db.rows(); ++r)
    for (int c = 0; c < db.cols(); ++c)
      if (db.at(r, c) < 0)
        throw std::invalid_argument("decomposition data must be non-negative");
  if (!is_unimodular(db.entries))
    throw std::invalid_argument("matrix over a basic set must be unimodular");
  Pairing rows = row_pairing_from_partition_labels(db.row_labels);
  Pairing cols = eps_column_action(db, rows);
  if (int rc = no_csv(o); rc >= 0) return rc;
  return with_output(o, [&](std::ostream& out) {
    if (o.format == "json") {
      ordered_json j;
      j["trace_rows"] = rows.trace();
      j["trace_cols"] = cols.trace();
      ordered_json fixed = ordered_json::array();
      for (int c : cols.fixed()) fixed.push_back(db.col_labels[c]);
      j["fixed_cols"] = fixed;
      ordered_json prs = ordered_json::array();
      for (auto [a, b] : cols.pairs())
        prs.push_back({db.col_labels[a], db.col_labels[b]});
      j["paired_cols"] = prs;
      out << j.dump(2) << '\n';
    } else {
      out << "trace rows " << rows.trace() << " trace cols " << cols.trace() << '\n';
      out << "fixed:";
      for (int c : cols.fixed()) out << ' ' << db.col_labels[c];
      out << '\n';
      for (auto [a, b] : cols.pairs())
        out << "pair: " << db.col_labels[a] << ' ' << db.col_labels[b] << '\n';
    }
    return kOk;
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact workbench for basic sets of symmetric, alternating, and "
               "wreath-product groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", o.out, "write the report to a file");
    cmd->add_flag("--force", o.force, "lift the n/w range guards");
  };

  CLI::App* core = app.add_subcommand("core", "p-core of a partition");
  core->add_option("partition", o.arg)->required();
  core->add_option("--p", o.p)->required();
  add_common(core);

  CLI::App* quotient = app.add_subcommand("quotient", "p-quotient of a partition");
  quotient->add_option("partition", o.arg)->required();
  quotient->add_option("--p", o.p)->required();
  add_common(quotient);

  CLI::App* barcmd = app.add_subcommand(
      "bar", "diagonal-hook partition of a self-conjugate partition");
  barcmd->add_option("partition", o.arg)->required();
  add_common(barcmd);

  CLI::App* chartable = app.add_subcommand("chartable", "exact character table");
  chartable->add_option("which", o.flavor)->required()
      ->check(CLI::IsMember({"sym", "alt", "wreath"}));
  chartable->add_option("--n", o.n);
  chartable->add_option("--p", o.p);
  chartable->add_option("--w", o.w);
  add_common(chartable);

  CLI::App* blocks = app.add_subcommand("blocks", "p-blocks by core and weight");
  blocks->add_option("--n", o.n)->required();
  blocks->add_option("--p", o.p)->required();
  add_common(blocks);

  CLI::App* basicset = app.add_subcommand("basicset", "construct a basic set");
  basicset->add_option("which", o.flavor)->required()
      ->check(CLI::IsMember({"sym", "alt", "wreath"}));
  basicset->add_option("--n", o.n);
  basicset->add_option("--p", o.p)->required();
  basicset->add_option("--w", o.w);
  basicset->add_flag("--verify", o.verify, "verify the independence/span claim");
  add_common(basicset);

  CLI::App* isometry = app.add_subcommand(
      "isometry", "verify the block isometry against the wreath model");
  isometry->add_option("--n", o.n)->required();
  isometry->add_option("--p", o.p)->required();
  isometry->add_option("--core", o.core, "restrict to the block with this core");
  add_common(isometry);

  CLI::App* osima = app.add_subcommand(
      "osima", "verify the untwisted block isometry against the cyclic model");
  osima->add_option("--n", o.n)->required();
  osima->add_option("--p", o.p)->required();
  osima->add_option("--core", o.core, "restrict to the block with this core");
  add_common(osima);

  CLI::App* expansion = app.add_subcommand(
      "expansion", "integral expansion of all characters over the basic set");
  expansion->add_option("--n", o.n)->required();
  expansion->add_option("--p", o.p)->required();
  add_common(expansion);

  CLI::App* transfer = app.add_subcommand(
      "transfer", "restricted decomposition matrix of A_n from S_n data");
  transfer->add_option("--in", o.in, "restricted S_n decomposition matrix")->required();
  transfer->add_option("--aux", o.aux, "split-row/split-column data")->required();
  add_common(transfer);

  CLI::App* relations = app.add_subcommand(
      "relations", "check the transfer identities between two matrices");
  relations->add_option("--in", o.in, "S_n matrix")->required();
  relations->add_option("--aux", o.aux, "A_n matrix")->required();
  add_common(relations);

  CLI::App* wedge = app.add_subcommand(
      "wedge", "order rows/columns into a unit lower-triangular block");
  wedge->add_option("--in", o.in)->required();
  add_common(wedge);

  CLI::App* epsaction = app.add_subcommand(
      "epsaction", "column involution induced by conjugating rows");
  epsaction->add_option("--in", o.in)->required();
  add_common(epsaction);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    Context ctx;
    if (core->parsed() || quotient->parsed()) {
      if (!check_ranges(o, true)) return kUsage;
      return core->parsed() ? run_core(o) : run_quotient(o);
    }
    if (barcmd->parsed()) return run_bar(o);
    if (chartable->parsed()) {
      if (o.flavor == "wreath") {
        if (o.p < 0 || o.w < 1) {
          std::cerr << "error: chartable wreath needs --p and --w\n";
          return kUsage;
        }
        if (!check_ranges(o, true)) return kUsage;
      } else {
        if (o.n < 1) {
          std::cerr << "error: chartable " << o.flavor << " needs --n\n";
          return kUsage;
        }
        if (!check_ranges(o, false)) return kUsage;
      }
      return run_chartable(o, ctx);
    }
    if (blocks->parsed()) {
      if (!check_ranges(o, true)) return kUsage;
      return run_blocks(o);
    }
    if (basicset->parsed()) {
      if (o.flavor == "wreath" ? o.w < 1 : o.n < 1) {
        std::cerr << "error: basicset " << o.flavor << " needs "
                  << (o.flavor == "wreath" ? "--w" : "--n") << '\n';
        return kUsage;
      }
      if (!check_ranges(o, true)) return kUsage;
      return run_basicset(o, ctx);
    }
    if (isometry->parsed() || osima->parsed()) {
      if (!check_ranges(o, true)) return kUsage;
      return run_isometry(o, ctx, osima->parsed());
    }
    if (expansion->parsed()) {
      if (!check_ranges(o, true)) return kUsage;
      return run_expansion(o, ctx);
    }
    if (transfer->parsed()) return run_transfer(o);
    if (relations->parsed()) return run_relations(o);
    if (wedge->parsed()) return run_wedge(o);
    if (epsaction->parsed()) return run_epsaction(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pbasic
