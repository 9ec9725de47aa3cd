// Command-line front end: root system listings, subsystem enumeration,
// useful/good checks, Specht module construction, series quotients, and the
// built-in D4 verification run.
//
// Exit codes: 0 success, 2 usage error, 3 unsupported input,
// 4 verification mismatch, 5 order guard tripped.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specht/specht.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;
constexpr int kMismatch = 4;
constexpr int kGuard = 5;

std::vector<std::string> split_items(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  // a bare "0" denotes the empty system, matching the table notation
  if (out.size() == 1 && (out[0] == "0" || out[0] == "empty")) out.clear();
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

long long parse_prime_field(const std::string& field) {
  if (field.size() < 2 || field[0] != 'p')
    throw std::invalid_argument("field must be q or p<prime>");
  for (std::size_t i = 1; i < field.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(field[i])))
      throw std::invalid_argument("field must be q or p<prime>");
  return std::stoll(field.substr(1));  // primality checked by PrimeField
}

struct Ctx {
  std::string label;
  specht::RootSystem rs;
  specht::WeylGroup W;
  bool records = false;
  std::size_t guard = specht::kDefaultOrderGuard;
};

// Fills a caller-owned context so the group's pointer to the root system
// stays valid. Listing roots does not need the group enumerated.
void init_ctx(Ctx& c, const std::string& label, bool records,
              std::size_t guard, bool need_group) {
  c.label = label;
  c.records = records;
  c.guard = guard;
  c.rs = specht::build_root_system(label);
  if (need_group) c.W = specht::enumerate_group(c.rs, guard);
}

// Class representatives for character rows: the built-in table order for D4,
// enumeration order otherwise.
std::vector<specht::ElemId> character_reps(const Ctx& c) {
  if (c.label == "D4") {
    specht::CharacterTable t = specht::d4_table();
    return specht::class_rep_elems(c.W, t);
  }
  return specht::conjugacy_classes(c.W).reps;
}

std::string character_str(const std::vector<specht::Rational>& chi) {
  std::string out;
  for (const auto& v : chi) {
    if (!out.empty()) out += " ";
    out += v.str();
  }
  return out;
}

ordered_json character_json(const std::vector<specht::Rational>& chi) {
  ordered_json a = ordered_json::array();
  for (const auto& v : chi) a.push_back(v.str());
  return a;
}

// ---------------------------------------------------------------- roots ---

int cmd_roots(const Ctx& c) {
  const specht::RootSystem& rs = c.rs;
  std::vector<std::size_t> simple_idx;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    std::vector<long long> unit(rs.rank, 0);
    unit[i] = 1;
    simple_idx.push_back(rs.index_of(unit));
  }
  specht::Diagram d = specht::diagram_of(rs, simple_idx);

  std::vector<std::string> simple_names;
  for (std::size_t i : simple_idx) simple_names.push_back(rs.notation(i));
  std::vector<std::string> pos, neg;
  for (std::size_t r = 0; r < rs.roots.size(); ++r)
    (rs.is_positive(r) ? pos : neg).push_back(rs.notation(r));

  std::vector<std::string> edges;
  ordered_json jedges = ordered_json::array();
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < d.nodes.size(); ++j)
      if (d.bond[i][j] > 0) {
        const char* tie = d.bond[i][j] == 1 ? "-" : d.bond[i][j] == 2 ? "=" : "#";
        edges.push_back(std::to_string(i + 1) + tie + std::to_string(j + 1));
        jedges.push_back({i + 1, j + 1, d.bond[i][j]});
      }
  std::vector<std::string> norms;
  for (const auto& n : d.norm) norms.push_back(n.str());

  if (c.records) {
    ordered_json head;
    head["kind"] = "system";
    head["label"] = c.label;
    head["rank"] = rs.rank;
    head["ambient_dim"] = rs.dim;
    head["n_roots"] = rs.roots.size();
    head["n_positive"] = rs.n_pos;
    head["simple"] = simple_names;
    head["edges"] = jedges;
    head["norms"] = norms;
    std::cout << head.dump() << "\n";
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
      ordered_json rec;
      rec["kind"] = "root";
      rec["notation"] = rs.notation(r);
      rec["positive"] = rs.is_positive(r);
      std::cout << rec.dump() << "\n";
    }
  } else {
    std::cout << c.label << ": rank " << rs.rank << ", " << rs.roots.size()
              << " roots (" << rs.n_pos << " positive)\n";
    std::cout << "simple:   " << join(simple_names, " ") << "\n";
    std::cout << "diagram:  " << (edges.empty() ? "(no edges)" : join(edges, " "))
              << "   norms " << join(norms, " ") << "\n";
    std::cout << "positive: " << join(pos, " ") << "\n";
    std::cout << "negative: " << join(neg, " ") << "\n";
  }
  return kOk;
}

// ----------------------------------------------------------- subsystems ---

int cmd_subsystems(const Ctx& c, bool extended) {
  if (!extended) {
    auto classes = specht::enumerate_subsystems(c.rs, c.W, 3);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::vector<std::string> items;
      for (std::size_t r : classes[i].J) items.push_back(c.rs.notation(r));
      std::size_t ord =
          specht::subgroup_of_roots(c.W, classes[i].J, c.guard).order();
      if (c.records) {
        ordered_json rec;
        rec["kind"] = "subsystem";
        rec["index"] = i + 1;
        rec["type"] = classes[i].type;
        rec["items"] = items;
        rec["order"] = ord;
        std::cout << rec.dump() << "\n";
      } else {
        std::cout << "(" << i + 1 << ") " << classes[i].type << " {"
                  << join(items, ",") << "} order " << ord << "\n";
      }
    }
    return kOk;
  }
  auto entries = specht::enumerate_extended_subsystems(c.rs, c.W, c.guard);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (c.records) {
      ordered_json rec;
      rec["kind"] = "extended";
      rec["index"] = i + 1;
      rec["entry"] = e.kind;
      rec["type"] = e.type;
      rec["items"] = e.items;
      rec["order"] = e.group.order();
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << "(" << i + 1 << ") [" << e.kind << "] " << e.type << " {"
                << join(e.items, ",") << "} order " << e.group.order() << "\n";
    }
  }
  return kOk;
}

// ------------------------------------------------- pair parsing and runs ---

enum class Mode { kSubsystem, kCoset };

struct PairData {
  Mode mode = Mode::kSubsystem;
  std::vector<std::size_t> J, Jp;  // subsystem mode
  specht::Subgroup hj, hp;
  specht::TabloidSpace T;
  std::vector<specht::ElemId> span;
};

// Item strings that fail to parse are usage errors, not unsupported systems.
std::vector<std::size_t> parse_plain_items(const specht::RootSystem& rs,
                                           const std::vector<std::string>& items) {
  std::vector<std::size_t> out;
  for (const auto& s : items) {
    if (s.find('(') != std::string::npos)
      throw std::invalid_argument(
          "fractional item '" + s + "' requires --mode=coset");
    try {
      out.push_back(rs.from_notation(s));
    } catch (const specht::UnsupportedError& ex) {
      throw std::invalid_argument(ex.what());
    }
  }
  return out;
}

// Builds the shared machinery for one (J, J') pair: subgroups, the tabloid
// space on W(J)-cosets, and the spanning representatives for W(J').
PairData build_pair(const Ctx& c, Mode mode, const std::string& j_str,
                    const std::string& jp_str) {
  PairData p;
  p.mode = mode;
  auto j_items = split_items(j_str);
  auto jp_items = split_items(jp_str);
  if (mode == Mode::kSubsystem) {
    p.J = parse_plain_items(c.rs, j_items);
    p.Jp = parse_plain_items(c.rs, jp_items);
    p.hj = specht::subgroup_of_roots(c.W, p.J, c.guard);
    p.hp = specht::subgroup_of_roots(c.W, p.Jp, c.guard);
    p.span = specht::spanning_reps_subsystem(c.W, p.Jp);
  } else {
    try {
      specht::SWDatum dj = specht::parse_sw_datum(c.rs, c.W, j_items, c.guard);
      specht::SWDatum dp = specht::parse_sw_datum(c.rs, c.W, jp_items, c.guard);
      p.hj = dj.group;
      p.hp = dp.group;
    } catch (const specht::UnsupportedError& ex) {
      throw std::invalid_argument(ex.what());
    }
    p.span = specht::spanning_reps_coset(c.W, p.hp);
  }
  p.T = specht::tabloid_space(c.W, p.hj);
  return p;
}

specht::UsefulReport run_useful(const Ctx& c, const PairData& p) {
  if (p.mode == Mode::kSubsystem)
    return specht::check_useful_subsystem(c.rs, c.W, p.J, p.Jp, c.guard);
  return specht::check_useful_coset(c.W, p.hj, p.hp);
}

void emit_useful_fields(const Ctx& c, const PairData& p,
                        const specht::UsefulReport& u, ordered_json& rec,
                        std::ostream& text) {
  rec["useful"] = u.useful();
  rec["intersection_trivial"] = u.intersection_trivial;
  if (u.checked_perp)
    rec["perp_intersection_trivial"] = u.perp_intersection_trivial;
  else
    rec["perp_intersection_trivial"] = nullptr;
  if (u.witness) {
    specht::ElemId w = *u.witness;
    rec["witness"] = specht::WeylGroup::word_str(c.W.lexmin_word(w));
    rec["witness_order"] = c.W.element_order(w);
    rec["witness_sign"] = c.W.sign(w);
  } else {
    rec["witness"] = nullptr;
    rec["witness_order"] = nullptr;
    rec["witness_sign"] = nullptr;
  }
  text << "useful: " << (u.useful() ? "yes" : "no")
       << " (intersection trivial: " << (u.intersection_trivial ? "yes" : "no");
  if (u.checked_perp)
    text << ", perp intersection trivial: "
         << (u.perp_intersection_trivial ? "yes" : "no");
  text << ")\n";
  if (u.witness) {
    specht::ElemId w = *u.witness;
    text << "witness: " << specht::WeylGroup::word_str(c.W.lexmin_word(w))
         << " (order " << c.W.element_order(w) << ", sign "
         << static_cast<int>(c.W.sign(w)) << ")\n";
  }
}

template <class F>
std::string render_modvec(const F& f, const specht::ModVec<F>& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [t, coeff] : e) {
    std::string cs = f.str(coeff);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != "1") out += mag + "*";
    out += "t" + std::to_string(t);
  }
  return out;
}

struct ModuleOutcome {
  bool e_zero = true;
  std::string e_str;
  specht::GoodReport good;
  specht::RadicalReport rad;  // dim, radical, quotient over the active field
};

template <class F>
ModuleOutcome run_module_over(const F& f, const Ctx& c, const PairData& p) {
  ModuleOutcome out;
  auto e = specht::polytabloid(f, p.T, p.hp, p.T.of_elem(c.W.identity()));
  out.e_zero = e.empty();
  out.e_str = render_modvec(f, e);
  if (p.mode == Mode::kSubsystem)
    out.good = specht::check_good_subsystem(f, c.rs, c.W, p.T, p.J, p.Jp, e);
  else
    out.good = specht::check_good_coset(f, p.T, p.hp, e);
  auto S = specht::build_specht_module(f, p.T, p.hp, p.span);
  out.rad = specht::radical_and_quotient(f, S);
  return out;
}

ModuleOutcome run_module(const Ctx& c, const PairData& p,
                         const specht::FieldDesc& fd) {
  if (fd.rational) return run_module_over(specht::Rationals{}, c, p);
  return run_module_over(specht::PrimeField(fd.p), c, p);
}

// Character rows are rational regardless of the module field.
std::vector<specht::Rational> run_character(const Ctx& c, const PairData& p,
                                            const std::vector<specht::ElemId>& reps) {
  specht::Rationals q;
  auto S = specht::build_specht_module(q, p.T, p.hp, p.span);
  return specht::character_values(q, S, reps);
}

std::string identify_if_d4(const Ctx& c, const std::vector<specht::Rational>& chi) {
  if (c.label != "D4") return "-";
  specht::CharacterTable t = specht::d4_table();
  t.sizes = specht::class_sizes(c.W, specht::class_rep_elems(c.W, t));
  return specht::identify(t, c.W.order(), chi).str();
}

const char* mode_name(Mode m) {
  return m == Mode::kSubsystem ? "subsystem" : "coset";
}

// ------------------------------------------------------------- specht ----

int cmd_specht(const Ctx& c, Mode mode, const std::string& j_str,
               const std::string& jp_str, const specht::FieldDesc& fd) {
  PairData p = build_pair(c, mode, j_str, jp_str);
  specht::UsefulReport u = run_useful(c, p);
  ModuleOutcome m = run_module(c, p, fd);
  auto reps = character_reps(c);
  auto chi = run_character(c, p, reps);
  std::string label = identify_if_d4(c, chi);

  ordered_json rec;
  std::ostringstream text;
  rec["kind"] = "specht";
  rec["label"] = c.label;
  rec["mode"] = mode_name(mode);
  rec["field"] = fd.name();
  rec["j"] = j_str;
  rec["jp"] = jp_str;
  rec["tabloids"] = p.T.size();
  text << "label: " << c.label << "  mode: " << mode_name(mode)
       << "  field: " << fd.name() << "\n"
       << "J:  {" << j_str << "}\n"
       << "J': {" << jp_str << "}\n"
       << "tabloids: " << p.T.size() << "\n";
  emit_useful_fields(c, p, u, rec, text);
  rec["e"] = m.e_str;
  rec["e_zero"] = m.e_zero;
  rec["good"] = m.good.good;
  rec["dimension"] = m.rad.dim;
  rec["radical_dim"] = m.rad.radical_dim;
  rec["quotient_dim"] = m.rad.quotient_dim;
  rec["character"] = character_json(chi);
  rec["identified"] = label;
  text << "e: " << m.e_str << "\n"
       << "good: " << (m.good.good ? "yes" : "no") << "\n"
       << "dimension: " << m.rad.dim << "  radical: " << m.rad.radical_dim
       << "  quotient: " << m.rad.quotient_dim << "\n"
       << "character: " << character_str(chi) << "\n"
       << "identified: " << label << "\n";

  std::cout << (c.records ? rec.dump() + "\n" : text.str());
  return u.useful() ? kOk : kMismatch;
}

// --------------------------------------------------------- useful-check ---

int cmd_useful_check(const Ctx& c, Mode mode, const std::string& j_str,
                     const std::string& jp_str) {
  PairData p = build_pair(c, mode, j_str, jp_str);
  specht::UsefulReport u = run_useful(c, p);
  ordered_json rec;
  std::ostringstream text;
  rec["kind"] = "useful";
  rec["label"] = c.label;
  rec["mode"] = mode_name(mode);
  rec["j"] = j_str;
  rec["jp"] = jp_str;
  text << "label: " << c.label << "  mode: " << mode_name(mode) << "\n"
       << "J:  {" << j_str << "}\n"
       << "J': {" << jp_str << "}\n";
  emit_useful_fields(c, p, u, rec, text);
  std::cout << (c.records ? rec.dump() + "\n" : text.str());
  return u.useful() ? kOk : kMismatch;
}

// ----------------------------------------------------------- good-check ---

int cmd_good_check(const Ctx& c, Mode mode, const std::string& j_str,
                   std::optional<std::string> jp_str,
                   const specht::FieldDesc& fd) {
  bool searched = false;
  if (!jp_str) {
    if (mode != Mode::kSubsystem)
      throw std::invalid_argument("partner search runs in subsystem mode only");
    auto J = parse_plain_items(c.rs, split_items(j_str));
    auto found = specht::find_good_partner(c.rs, c.W, J, c.guard);
    if (!found) {
      if (c.records) {
        ordered_json rec;
        rec["kind"] = "good";
        rec["label"] = c.label;
        rec["j"] = j_str;
        rec["jp"] = nullptr;
        rec["good"] = false;
        std::cout << rec.dump() << "\n";
      } else {
        std::cout << "no good partner found for {" << j_str << "}\n";
      }
      return kMismatch;
    }
    std::vector<std::string> items;
    for (std::size_t r : *found) items.push_back(c.rs.notation(r));
    jp_str = join(items, ",");
    searched = true;
  }

  PairData p = build_pair(c, mode, j_str, *jp_str);
  specht::UsefulReport u = run_useful(c, p);
  ModuleOutcome m = run_module(c, p, fd);

  ordered_json rec;
  std::ostringstream text;
  rec["kind"] = "good";
  rec["label"] = c.label;
  rec["mode"] = mode_name(mode);
  rec["field"] = fd.name();
  rec["j"] = j_str;
  rec["jp"] = *jp_str;
  rec["searched"] = searched;
  text << "label: " << c.label << "  mode: " << mode_name(mode)
       << "  field: " << fd.name() << "\n"
       << "J:  {" << j_str << "}\n"
       << "J': {" << *jp_str << "}" << (searched ? "  (found by search)" : "")
       << "\n";
  emit_useful_fields(c, p, u, rec, text);
  rec["e"] = m.e_str;
  rec["e_zero"] = m.e_zero;
  rec["good"] = m.good.good;
  if (m.good.failing_tabloid)
    rec["failing_tabloid"] = *m.good.failing_tabloid;
  else
    rec["failing_tabloid"] = nullptr;
  text << "e: " << m.e_str << "\n"
       << "good: " << (m.good.good ? "yes" : "no");
  if (m.good.failing_tabloid) text << " (fails at t" << *m.good.failing_tabloid << ")";
  text << "\n";
  std::cout << (c.records ? rec.dump() + "\n" : text.str());
  return (u.useful() && m.good.good) ? kOk : kMismatch;
}

// --------------------------------------------------------------- series ---

int cmd_series(const Ctx& c, Mode mode, const std::string& j_str,
               const std::string& jp1_str, const std::string& jp2_str) {
  PairData p1 = build_pair(c, mode, j_str, jp1_str);
  PairData p2 = build_pair(c, mode, j_str, jp2_str);
  specht::UsefulReport u1 = run_useful(c, p1);
  specht::UsefulReport u2 = run_useful(c, p2);
  auto reps = character_reps(c);
  auto quotient = specht::specht_series_quotient(p1.T, p1.hp, p1.span, p2.hp,
                                                 p2.span, reps);
  specht::Rationals q;
  auto s1 = specht::build_specht_module(q, p1.T, p1.hp, p1.span);
  auto s2 = specht::build_specht_module(q, p2.T, p2.hp, p2.span);
  std::string label = identify_if_d4(c, quotient);

  if (c.records) {
    ordered_json rec;
    rec["kind"] = "series";
    rec["label"] = c.label;
    rec["mode"] = mode_name(mode);
    rec["j"] = j_str;
    rec["jp1"] = jp1_str;
    rec["jp2"] = jp2_str;
    rec["useful1"] = u1.useful();
    rec["useful2"] = u2.useful();
    rec["dim1"] = s1.dim;
    rec["dim2"] = s2.dim;
    rec["quotient_character"] = character_json(quotient);
    rec["identified"] = label;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "label: " << c.label << "  mode: " << mode_name(mode) << "\n"
              << "J:   {" << j_str << "}\n"
              << "J1': {" << jp1_str << "}  useful: " << (u1.useful() ? "yes" : "no")
              << "  dim " << s1.dim << "\n"
              << "J2': {" << jp2_str << "}  useful: " << (u2.useful() ? "yes" : "no")
              << "  dim " << s2.dim << "\n"
              << "quotient character: " << character_str(quotient) << "\n"
              << "identified: " << label << "\n";
  }
  return (u1.useful() && u2.useful()) ? kOk : kMismatch;
}

// ------------------------------------------------------------ verify-d4 ---

struct RefCheck {
  const char* psi;
  const char* j;
  const char* psip;
  const char* jp;       // series: smaller dual datum
  const char* jp2;      // series only: larger dual datum
  const char* expected;
  char mode;            // 's' pair, 'c' coset pair, 'x' series, 'y' coset series
};

// The built-in D4 reference rows: eleven subsystem pairs, the G2-type
// fractional pair, and the two series quotients that complete the character
// table.
const RefCheck kD4Checks[] = {
    {"A3", "1000,0100,0010", "2A1", "1101,0111", "", "chi4", 's'},
    {"A3'", "1000,0100,0001", "2A1'", "1110,0111", "", "chi9", 's'},
    {"A3''", "0100,0010,0001", "2A1''", "1110,1101", "", "chi5", 's'},
    {"4A1", "1000,1211,0010,0001", "3A1", "1100,0110,0101", "", "chi3", 's'},
    {"3A1", "1000,0010,0001", "A2", "1111,0100", "", "chi13", 's'},
    {"A2", "1000,0100", "3A1", "1110,1101,0111", "", "chi13", 's'},
    {"2A1", "1000,0010", "A3", "0001,1100,0110", "", "chi7", 's'},
    {"2A1'", "1000,0001", "A3'", "0010,0101,1100", "", "chi6", 's'},
    {"2A1''", "0010,0001", "A3''", "1000,0101,0110", "", "chi8", 's'},
    {"D4", "1000,0100,0010,0001", "0", "", "", "chi1", 's'},
    {"0", "", "D4", "1000,0100,0010,0001", "", "chi2", 's'},
    {"G2", "0100,1/3(1000+0010+0001)", "A2", "0001,0110", "", "chi12", 'c'},
    {"A3", "1000,0100,0010", "A1 | 2A1", "1101", "1101,0111", "chi11", 'x'},
    {"A1", "1000", "A3 | B3", "0100,0001,0010",
     "0100,0001,1/2(1000+1211)", "chi10", 'y'},
};

struct CheckResult {
  std::string computed;
  std::size_t dim = 0;
  bool pass = false;
  std::string error;
};

CheckResult run_check(const Ctx& c, const specht::CharacterTable& t,
                      const std::vector<specht::ElemId>& reps,
                      const RefCheck& rc) {
  CheckResult out;
  try {
    std::vector<specht::Rational> chi;
    if (rc.mode == 's' || rc.mode == 'c') {
      Mode m = rc.mode == 's' ? Mode::kSubsystem : Mode::kCoset;
      PairData p = build_pair(c, m, rc.j, rc.jp);
      specht::Rationals q;
      auto S = specht::build_specht_module(q, p.T, p.hp, p.span);
      out.dim = S.dim;
      chi = specht::character_values(q, S, reps);
    } else {
      Mode m = rc.mode == 'x' ? Mode::kSubsystem : Mode::kCoset;
      PairData p1 = build_pair(c, m, rc.j, rc.jp);
      PairData p2 = build_pair(c, m, rc.j, rc.jp2);
      chi = specht::specht_series_quotient(p1.T, p1.hp, p1.span, p2.hp,
                                           p2.span, reps);
      out.dim = chi[0].num().convert_to<std::size_t>();
    }
    out.computed = specht::identify(t, c.W.order(), chi).str();
    // exact integer comparison of the computed row against the named row
    std::size_t row = t.rows.size();
    for (std::size_t i = 0; i < t.names.size(); ++i)
      if (t.names[i] == rc.expected) row = i;
    bool equal = row < t.rows.size();
    for (std::size_t k = 0; equal && k < chi.size(); ++k)
      equal = chi[k] == specht::Rational(t.rows[row][k]);
    out.pass = equal;
  } catch (const std::exception& ex) {
    out.computed = "error";
    out.error = ex.what();
    out.pass = false;
  }
  return out;
}

int cmd_verify_d4(const Ctx& c, std::size_t jobs, bool corrupt) {
  specht::CharacterTable t = specht::d4_table();
  if (corrupt) t.rows[3][4] += 1;  // fault injection for the self-check path
  auto reps = specht::class_rep_elems(c.W, t);
  t.sizes = specht::class_sizes(c.W, reps);
  try {
    specht::table_self_check(t, c.W.order());
  } catch (const std::exception& ex) {
    if (c.records) {
      ordered_json rec;
      rec["kind"] = "self-check";
      rec["pass"] = false;
      rec["error"] = ex.what();
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << "table self-check: FAIL (" << ex.what() << ")\n";
    }
    return kMismatch;
  }
  if (c.records) {
    ordered_json rec;
    rec["kind"] = "self-check";
    rec["pass"] = true;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "table self-check: ok\n";
  }

  constexpr std::size_t n = sizeof(kD4Checks) / sizeof(kD4Checks[0]);
  std::vector<CheckResult> results(n);
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      results[i] = run_check(c, t, reps, kD4Checks[i]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < std::min(jobs, n); ++k)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::size_t passed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const RefCheck& rc = kD4Checks[i];
    const CheckResult& r = results[i];
    if (r.pass) ++passed;
    if (c.records) {
      ordered_json rec;
      rec["kind"] = "check";
      rec["index"] = i + 1;
      rec["psi"] = rc.psi;
      rec["j"] = rc.j;
      rec["psi_prime"] = rc.psip;
      rec["jp"] = rc.jp;
      rec["jp2"] = *rc.jp2 ? ordered_json(rc.jp2) : ordered_json(nullptr);
      rec["mode"] = rc.mode == 's'   ? "subsystem"
                    : rc.mode == 'c' ? "coset"
                    : rc.mode == 'x' ? "series"
                                     : "coset-series";
      rec["dimension"] = r.dim;
      rec["expected"] = rc.expected;
      rec["computed"] = r.computed;
      rec["pass"] = r.pass;
      if (!r.error.empty()) rec["error"] = r.error;
      std::cout << rec.dump() << "\n";
    } else {
      std::ostringstream line;
      line << "check " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << rc.psi
           << " {" << rc.j << "}";
      if (rc.mode == 's' || rc.mode == 'c')
        line << " | " << rc.psip << " {" << rc.jp << "}";
      else
        line << " | " << rc.psip << " {" << rc.jp << "} then {" << rc.jp2 << "}";
      line << " | expected " << rc.expected << " | computed " << r.computed
           << " | " << (r.pass ? "PASS" : "FAIL");
      if (!r.error.empty()) line << " (" << r.error << ")";
      std::cout << line.str() << "\n";
    }
  }
  if (c.records) {
    ordered_json rec;
    rec["kind"] = "summary";
    rec["total"] = n;
    rec["passed"] = passed;
    rec["failed"] = n - passed;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "passed " << passed << " of " << n << "\n";
  }
  return passed == n ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht modules for Weyl groups from root-system data"};
  app.require_subcommand(1);

  std::string label, j_str, jp_str, jp1_str, jp2_str, field_str = "q",
                     mode_str = "subsystem", format_str = "text";
  std::size_t jobs = 1, guard = specht::kDefaultOrderGuard;
  bool extended = false, corrupt = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "records"}));
  };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--order-guard", guard, "bail out beyond this group order");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_str, "pair interpretation")
        ->check(CLI::IsMember({"subsystem", "coset"}));
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", field_str, "q for rationals, p<prime> for mod p");
  };

  CLI::App* roots = app.add_subcommand("roots", "list a root system");
  roots->add_option("label", label, "Cartan label, e.g. D4")->required();
  add_format(roots);
  add_guard(roots);

  CLI::App* subs = app.add_subcommand("subsystems", "enumerate subsystem classes");
  subs->add_option("label", label)->required();
  subs->add_flag("--extended", extended, "include foldings and duals");
  add_format(subs);
  add_guard(subs);

  CLI::App* useful = app.add_subcommand("useful-check", "trivial-intersection test");
  useful->add_option("label", label)->required();
  useful->add_option("--j", j_str, "comma-separated items")->required();
  useful->add_option("--jp", jp_str, "comma-separated items")->required();
  add_mode(useful);
  add_format(useful);
  add_guard(useful);

  CLI::App* good = app.add_subcommand("good-check", "tabloid-coverage test");
  good->add_option("label", label)->required();
  good->add_option("--j", j_str)->required();
  good->add_option("--jp", jp_str);
  add_mode(good);
  add_field(good);
  add_format(good);
  add_guard(good);

  CLI::App* specht_cmd = app.add_subcommand("specht", "full pair pipeline");
  specht_cmd->add_option("label", label)->required();
  specht_cmd->add_option("--j", j_str)->required();
  specht_cmd->add_option("--jp", jp_str)->required();
  add_mode(specht_cmd);
  add_field(specht_cmd);
  add_format(specht_cmd);
  add_guard(specht_cmd);

  CLI::App* series = app.add_subcommand("series", "quotient of nested modules");
  series->add_option("label", label)->required();
  series->add_option("--j", j_str)->required();
  series->add_option("--jp1", jp1_str, "smaller dual datum")->required();
  series->add_option("--jp2", jp2_str, "larger dual datum")->required();
  add_mode(series);
  add_format(series);
  add_guard(series);

  CLI::App* verify = app.add_subcommand("verify-d4", "check the built-in D4 rows");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--selftest-corrupt", corrupt)->group("");
  add_format(verify);
  add_guard(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Mode mode = mode_str == "coset" ? Mode::kCoset : Mode::kSubsystem;
    specht::FieldDesc fd = field_str == "q"
                               ? specht::FieldDesc::rationals()
                               : specht::FieldDesc::prime(parse_prime_field(field_str));
    if (!fd.rational) specht::PrimeField check_prime(fd.p);
    bool records = format_str == "records";

    Ctx c;
    if (roots->parsed()) {
      init_ctx(c, label, records, guard, false);
      return cmd_roots(c);
    }
    init_ctx(c, verify->parsed() ? "D4" : label, records, guard, true);
    if (subs->parsed()) return cmd_subsystems(c, extended);
    if (useful->parsed()) return cmd_useful_check(c, mode, j_str, jp_str);
    if (good->parsed())
      return cmd_good_check(c, mode, j_str,
                            good->count("--jp") > 0
                                ? std::optional<std::string>(jp_str)
                                : std::nullopt,
                            fd);
    if (specht_cmd->parsed()) return cmd_specht(c, mode, j_str, jp_str, fd);
    if (series->parsed()) return cmd_series(c, mode, j_str, jp1_str, jp2_str);
    if (verify->parsed()) return cmd_verify_d4(c, jobs, corrupt);
    return kUsage;
  } catch (const specht::UnsupportedError& ex) {
    std::cerr << "unsupported: " << ex.what() << "\n";
    return kUnsupported;
  } catch (const specht::OrderGuardError& ex) {
    std::cerr << "order guard: " << ex.what() << "\n";
    return kGuard;
  } catch (const std::domain_error& ex) {
    std::cerr << "usage: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& ex) {
    std::cerr << "verification: " << ex.what() << "\n";
    return kMismatch;
  }
}
