#include "bnskein/cli.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bnskein/acceptance.hpp"
#include "bnskein/bitclass.hpp"
#include "bnskein/errors.hpp"
#include "bnskein/evaluators.hpp"
#include "bnskein/mbn.hpp"
#include "bnskein/ring.hpp"
#include "bnskein/sbn.hpp"
#include "bnskein/seifert.hpp"

namespace bnskein {
namespace cli {

namespace {

const char* kUsage = R"(usage: bnskein <subcommand> [args]

Subcommands
  eval-s3 "(g,d),(g,d),..."
      Evaluate a closed surface given as (genus, dots) components.
  normalize-s1s2 k=K [dots=i,j,...] [extras=(g,d),...]
      Canonical form of K essential spheres with dotted positions.
  normalize-t3 dir=p,q,r k=K [dots=...] [extras=...]
      Canonical form of K parallel essential tori in direction (p,q,r).
  mbn-solve
      Print the families of admissible normalization constants.
  mbn-eval b=B comps=(chi,d,bits;...)
      Evaluate a marked surface with H_2 coefficients of width B.
  sbn-normalize g=G l=L stacks='class:weight:dots/...' regions='i,j/...'
      Normalize a dotted state on the genus-G surface with L marked points.
  sbn-dim g=G n=N [--exclude-zero-class]
      Dimension of the weight-N graded piece.
  seifert-report g=G [fibers='(p,q);(p,q)'] [horiz='name:degree:genus,...']
      Decomposition report for the named fibered space.
  horiz-normalize f=NAME k=K [dots=i,j,...] [genus=G] [degree=D]
      Canonical form of K copies of a horizontal class.
  state-echo FILE
      Parse a state file and print its canonical form.
  selftest
      Run every property suite; exit 0 when all pass.

Flags
  --format=machine   one term per line, canonical order (where it applies)
  --help             this text

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
)";

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& text) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return text.substr(a, b - a);
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string s = strip(text);
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": expected an integer, got '" + text + "'");
  }
  if (used != s.size() || s.empty())
    throw ParseError(what + ": expected an integer, got '" + text + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (strip(text).empty()) return out;
  for (const std::string& part : split(text, ','))
    out.push_back(parse_int(part, what));
  return out;
}

// "(a,b),(c,d)" or "(a,b);(c,d)", optionally wrapped in [ ], empty ok.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text,
                                             const std::string& what) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
    s = strip(s.substr(1, s.size() - 2));
  std::vector<std::pair<int, int>> out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ',' || s[i] == ';' || std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw ParseError(what + ": expected '(' at '" + s.substr(i) + "'");
    size_t close = s.find(')', i);
    if (close == std::string::npos) throw ParseError(what + ": unterminated '('");
    std::vector<std::string> nums = split(s.substr(i + 1, close - i - 1), ',');
    if (nums.size() != 2) throw ParseError(what + ": expected a pair (a,b)");
    out.emplace_back(parse_int(nums[0], what), parse_int(nums[1], what));
    i = close + 1;
  }
  return out;
}

// Parsed key=value and --flag arguments, consumed by the handlers so
// that anything left over is reported as a usage error.
struct Args {
  std::map<std::string, std::string> kv;
  std::map<std::string, bool> flags;
  std::vector<std::string> positional;

  bool has(const std::string& key) const { return kv.count(key) > 0; }

  std::string take(const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::string value = it->second;
    kv.erase(it);
    return value;
  }

  std::string require(const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing required argument " + key + "=...");
    std::string value = it->second;
    kv.erase(it);
    return value;
  }

  bool take_flag(const std::string& name) {
    auto it = flags.find(name);
    if (it == flags.end()) return false;
    flags.erase(it);
    return true;
  }

  void finish() const {
    if (!kv.empty()) throw ParseError("unknown argument " + kv.begin()->first + "=...");
    if (!flags.empty()) throw ParseError("unknown flag --" + flags.begin()->first);
    if (!positional.empty()) throw ParseError("unexpected argument '" + positional.front() + "'");
  }
};

Args parse_args(const std::vector<std::string>& argv, size_t from) {
  Args a;
  for (size_t i = from; i < argv.size(); ++i) {
    const std::string& arg = argv[i];
    if (arg.rfind("--", 0) == 0) {
      std::string body = arg.substr(2);
      size_t eq = body.find('=');
      if (eq == std::string::npos)
        a.flags[body] = true;
      else
        a.kv[body.substr(0, eq)] = body.substr(eq + 1);
    } else {
      size_t eq = arg.find('=');
      if (eq == std::string::npos)
        a.positional.push_back(arg);
      else
        a.kv[arg.substr(0, eq)] = arg.substr(eq + 1);
    }
  }
  return a;
}

bool machine_format(Args& a) { return a.take("format", "human") == "machine"; }

void print_basis(const evals::CanonicalBasisElem& elem, bool machine, std::ostream& out) {
  if (machine)
    out << evals::basis_to_state(elem).to_string() << "\n";
  else
    out << elem.to_string() << "\n";
}

int cmd_eval_s3(Args& a, std::ostream& out) {
  bool machine = machine_format(a);
  if (a.positional.size() != 1)
    throw ParseError("eval-s3 takes one argument: \"(g,d),(g,d),...\"");
  evals::S3Surface surf{parse_pairs(a.positional[0], "components")};
  a.positional.clear();
  a.finish();
  ring::Rational v = evals::eval_s3(surf);
  evals::CanonicalBasisElem elem;
  if (!(v == ring::Rational(0))) {
    elem.kind = evals::CanonicalBasisElem::Kind::Empty;
    elem.coeff = v;
  }
  print_basis(elem, machine, out);
  return 0;
}

int cmd_normalize_s1s2(Args& a, std::ostream& out) {
  bool machine = machine_format(a);
  evals::S1xS2State st;
  st.spheres = parse_int(a.require("k"), "k");
  st.dots = parse_int_list(a.take("dots", ""), "dots");
  st.extras = parse_pairs(a.take("extras", ""), "extras");
  a.finish();
  print_basis(evals::normalize_s1xs2(st), machine, out);
  return 0;
}

int cmd_normalize_t3(Args& a, std::ostream& out) {
  bool machine = machine_format(a);
  evals::T3State st;
  std::vector<int> dir = parse_int_list(a.require("dir"), "dir");
  if (dir.size() != 3) throw ParseError("dir: expected three integers p,q,r");
  st.direction = {dir[0], dir[1], dir[2]};
  st.count = parse_int(a.require("k"), "k");
  st.dots = parse_int_list(a.take("dots", ""), "dots");
  st.extras = parse_pairs(a.take("extras", ""), "extras");
  a.finish();
  print_basis(evals::normalize_t3(st), machine, out);
  return 0;
}

int cmd_mbn_solve(Args& a, std::ostream& out) {
  a.take("format", "human");
  a.finish();
  for (const mbn::NormalizationFamily& fam : mbn::enumerate_normalization_families()) {
    mbn::NormalizationConstants c = fam.sample(ring::Rational(1));
    out << fam.name << "  (sample x=" << c.x.to_string() << ", y=" << c.y.to_string()
        << ", z=" << c.z.to_string() << ")\n";
  }
  return 0;
}

int cmd_mbn_eval(Args& a, std::ostream& out) {
  a.take("format", "human");
  int width = parse_int(a.require("b"), "b");
  std::string comps = strip(a.require("comps"));
  if (comps.size() >= 2 && comps.front() == '(' && comps.back() == ')')
    comps = comps.substr(1, comps.size() - 2);
  mbn::MbnSurface surf;
  surf.width = width;
  if (!strip(comps).empty()) {
    for (const std::string& part : split(comps, ';')) {
      std::vector<std::string> fields = split(part, ',');
      if (fields.size() != 3)
        throw ParseError("comps: expected chi,dots,bits; got '" + part + "'");
      std::string bits = strip(fields[2]);
      if (static_cast<int>(bits.size()) != width)
        throw ParseError("comps: class '" + bits + "' does not have width " +
                         std::to_string(width));
      surf.components.push_back({parse_int(fields[0], "comps"),
                                 parse_int(fields[1], "comps"), BitClass::parse(bits), true});
    }
  }
  a.finish();
  out << mbn::mbn_evaluate(surf).to_string() << "\n";
  return 0;
}

int cmd_sbn_normalize(Args& a, std::ostream& out) {
  a.take("format", "human");
  sbn::SurfaceSpec spec;
  spec.genus = parse_int(a.require("g"), "g");
  spec.singular_points = parse_int(a.take("l", "0"), "l");
  sbn::validate_spec(spec);
  auto stacks = sbn::parse_stacks(a.require("stacks"), spec.h1_width());
  auto regions = sbn::parse_regions(a.take("regions", ""));
  a.finish();
  out << sbn::dotted_normalize(spec, stacks, regions).to_string() << "\n";
  return 0;
}

int cmd_sbn_dim(Args& a, std::ostream& out) {
  a.take("format", "human");
  sbn::SurfaceSpec spec;
  spec.genus = parse_int(a.require("g"), "g");
  spec.singular_points = parse_int(a.take("l", "0"), "l");
  int n = parse_int(a.require("n"), "n");
  bool exclude = a.take_flag("exclude-zero-class");
  a.finish();
  out << sbn::graded_dimension(spec, n, exclude) << "\n";
  return 0;
}

int cmd_seifert_report(Args& a, std::ostream& out) {
  a.take("format", "human");
  seifert::SeifertData data;
  data.base_genus = parse_int(a.require("g"), "g");
  data.singular_fibers = parse_pairs(a.take("fibers", ""), "fibers");
  std::vector<seifert::HorizontalClass> classes;
  std::string horiz = strip(a.take("horiz", ""));
  if (!horiz.empty()) {
    for (const std::string& part : split(horiz, ',')) {
      std::vector<std::string> fields = split(part, ':');
      if (fields.size() != 3)
        throw ParseError("horiz: expected name:degree:genus, got '" + part + "'");
      classes.push_back({strip(fields[0]), parse_int(fields[1], "horiz"),
                         parse_int(fields[2], "horiz")});
    }
  }
  a.finish();
  out << seifert::bn_decompose(data, classes).to_string();
  return 0;
}

int cmd_horiz_normalize(Args& a, std::ostream& out) {
  a.take("format", "human");
  seifert::HorizontalState st;
  st.cls.token = a.require("f");
  st.cls.genus = parse_int(a.take("genus", "0"), "genus");
  st.cls.degree = parse_int(a.take("degree", "1"), "degree");
  st.copies = parse_int(a.require("k"), "k");
  st.dots = parse_int_list(a.take("dots", ""), "dots");
  a.finish();
  seifert::validate_class(st.cls);
  out << seifert::normalize_horizontal(st).to_string() << "\n";
  return 0;
}

int cmd_state_echo(Args& a, std::ostream& out) {
  a.take("format", "human");
  if (a.positional.size() != 1) throw ParseError("state-echo takes one argument: FILE");
  std::string path = a.positional[0];
  a.positional.clear();
  a.finish();
  out << parse_state_file(path).to_string() << "\n";
  return 0;
}

int cmd_selftest(Args& a, std::ostream& out) {
  a.take("format", "human");
  a.finish();
  bool all = true;
  for (const accept::CriterionResult& r : accept::run_core()) {
    out << "criterion " << r.index << "/10 " << (r.passed ? "PASS" : "FAIL") << " "
        << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  out << (all ? "selftest: all criteria passed\n" : "selftest: FAILURES above\n");
  return all ? 0 : 1;
}

}  // namespace

core::State parse_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  core::State sum;
  std::string line;
  int lineno = 0;
  bool saw_any = false;
  bool saw_zero = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string probe = line;
    size_t hash = probe.find('#');
    if (hash != std::string::npos && probe.find('[') == std::string::npos)
      probe = probe.substr(0, hash);
    probe = strip(probe);
    if (probe.empty()) continue;
    saw_any = true;
    if (probe == "0") {
      saw_zero = true;
      continue;
    }
    try {
      sum = sum + core::State::parse(probe);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!saw_any) throw ParseError("'" + path + "': no state found");
  if (saw_zero && !sum.is_zero())
    throw ParseError("'" + path + "': '0' line mixed with nonzero terms");
  return sum;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      out << kUsage;
      return args.empty() ? 2 : 0;
    }
    const std::string& cmd = args[0];
    Args a = parse_args(args, 1);
    if (a.take_flag("help")) {
      out << kUsage;
      return 0;
    }
    if (cmd == "eval-s3") return cmd_eval_s3(a, out);
    if (cmd == "normalize-s1s2") return cmd_normalize_s1s2(a, out);
    if (cmd == "normalize-t3") return cmd_normalize_t3(a, out);
    if (cmd == "mbn-solve") return cmd_mbn_solve(a, out);
    if (cmd == "mbn-eval") return cmd_mbn_eval(a, out);
    if (cmd == "sbn-normalize") return cmd_sbn_normalize(a, out);
    if (cmd == "sbn-dim") return cmd_sbn_dim(a, out);
    if (cmd == "seifert-report") return cmd_seifert_report(a, out);
    if (cmd == "horiz-normalize") return cmd_horiz_normalize(a, out);
    if (cmd == "state-echo") return cmd_state_echo(a, out);
    if (cmd == "selftest") return cmd_selftest(a, out);
    throw ParseError("unknown subcommand '" + cmd + "'");
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cli
}  // namespace bnskein
