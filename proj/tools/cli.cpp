#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <regex>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "greenforge/clebsch_gordan.hpp"
#include "greenforge/green_ring.hpp"
#include "greenforge/oracle.hpp"
#include "greenforge/sweep.hpp"

namespace greenforge::cli {

namespace {

using nlohmann::json;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ContextOptions {
  std::optional<int> cyclic;
  bool infinite = false;
  std::string q = "1";

  void attach(CLI::App* cmd) {
    auto* c = cmd->add_option("--cyclic", cyclic, "cyclic quiver of order N");
    auto* i = cmd->add_flag("--infinite", infinite, "infinite linear quiver");
    c->excludes(i);
    cmd->add_option("--q", q, "1, a fraction, or zeta:N:k")->capture_default_str();
  }

  QuiverContext build() const {
    if (cyclic.has_value() == infinite) throw ConfigError("give exactly one of --cyclic N or --infinite");
    try {
      const QSpec spec = QSpec::parse(q);
      return infinite ? QuiverContext::infinite(spec) : QuiverContext::cyclic(*cyclic, spec);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
};

// "i,l" or "(i,l)".
Indecomposable parse_operand(const std::string& text) {
  static const std::regex re(R"(\s*\(?\s*(-?\d+)\s*,\s*(\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ConfigError("operand must look like i,l: '" + text + "'");
  try {
    return {std::stoll(m[1]), std::stoll(m[2])};
  } catch (const std::out_of_range&) {
    throw ConfigError("operand out of range: '" + text + "'");
  }
}

// "i,l" shorthand for a basis class, or GreenElement JSON.
GreenElement parse_element(const std::string& text) {
  if (text.find('{') == std::string::npos) return GreenElement::basis(parse_operand(text));
  try {
    return GreenElement::from_json(json::parse(text));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad element: ") + e.what());
  }
}

json operand_json(const Indecomposable& v) { return {{"vertex", v.vertex}, {"length", v.length}}; }

void check_format(const std::string& format) {
  if (format != "json" && format != "text") throw ConfigError("--format must be json or text");
}

long long default_max_len(const QuiverContext& ctx) {
  const auto d = ctx.q().order();
  return d && *d > 1 ? std::min<long long>(3LL * *d + 2, 12) : 12;
}

int cmd_decompose(const ContextOptions& opts, const std::vector<std::string>& operands, bool oracle,
                  const std::string& format, std::ostream& out) {
  check_format(format);
  const QuiverContext ctx = opts.build();
  if (operands.size() != 2) throw ConfigError("decompose takes two operands");
  const Indecomposable a = parse_operand(operands[0]), b = parse_operand(operands[1]);
  Decomposition closed;
  try {
    closed = decompose_closed(a, b, ctx);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!oracle) {
    if (format == "json") {
      out << closed.to_json().dump() << '\n';
    } else {
      out << closed.str() << '\n';
    }
    return kOk;
  }
  const Decomposition found = decompose_rep(tensor_rep(a, b, ctx));
  const bool match = found == closed;
  if (format == "json") {
    json j = found.to_json();
    j["verdict"] = match ? "match" : "mismatch";
    if (!match) j["closed"] = closed.to_json()["summands"];
    out << j.dump() << '\n';
  } else {
    out << "oracle: " << found.str() << '\n';
    out << "closed: " << closed.str() << '\n';
    out << (match ? "match" : "mismatch") << '\n';
  }
  return match ? kOk : kMismatch;
}

int cmd_mul(const ContextOptions& opts, const std::vector<std::string>& operands, const std::string& format,
            std::ostream& out) {
  check_format(format);
  const QuiverContext ctx = opts.build();
  if (operands.empty()) throw ConfigError("mul takes at least one operand");
  GreenElement acc = green_unit();
  for (const auto& text : operands) acc = gr_mul(acc, parse_element(text), ctx);
  out << (format == "json" ? acc.to_json().dump() : acc.str()) << '\n';
  return kOk;
}

int cmd_table(const ContextOptions& opts, std::optional<long long> max_len, long long window, std::ostream& out) {
  const QuiverContext ctx = opts.build();
  const long long len = max_len.value_or(default_max_len(ctx));
  if (len < 0 || window < 0) throw ConfigError("bounds must be nonnegative");
  const auto pairs = sweep_pairs(ctx, len, window);
  constexpr std::size_t kChunk = 4096;
  std::vector<std::string> rows;
  for (std::size_t start = 0; start < pairs.size(); start += kChunk) {
    const std::size_t count = std::min(kChunk, pairs.size() - start);
    rows.assign(count, {});
    parallel_for(count, thread_hint(), [&](std::size_t k) {
      const auto& [a, b] = pairs[start + k];
      json row = decompose_closed(a, b, ctx).to_json();
      row["left"] = operand_json(a);
      row["right"] = operand_json(b);
      rows[k] = row.dump();
    });
    for (const auto& r : rows) out << r << '\n';
  }
  return kOk;
}

int cmd_verify(const ContextOptions& opts, std::optional<long long> max_len, long long window, int battery,
               std::ostream& out) {
  const QuiverContext ctx = opts.build();
  const long long len = max_len.value_or(default_max_len(ctx));
  if (len < 0 || window < 0 || battery < 0) throw ConfigError("bounds must be nonnegative");

  out << ctx.str() << '\n';
  const SweepReport sweep = verify_sweep(ctx, sweep_pairs(ctx, len, window), thread_hint());
  out << sweep.summary() << '\n';
  if (sweep.first_mismatch) {
    const auto& c = *sweep.first_mismatch;
    out << "first mismatch: " << to_string(c.operands.first) << " (x) " << to_string(c.operands.second)
        << ": closed " << c.closed.str() << ", oracle " << c.oracle.str();
    if (!c.error.empty()) out << ", error " << c.error;
    out << '\n';
  }

  bool ok = true;
  for (const auto& r : check_presentation(ctx)) {
    out << (r.holds ? "pass" : "FAIL") << "  path algebra: " << r.relation << '\n';
    ok = ok && r.holds;
  }
  for (const auto& c : verify_presentation(ctx, battery).checks) {
    out << (c.holds ? "pass" : "FAIL") << "  green ring: " << c.name;
    if (!c.holds && !c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
    ok = ok && c.holds;
  }
  if (!sweep.ok()) return kMismatch;
  return ok ? kOk : kFailed;
}

int cmd_convert(const ContextOptions& opts, const std::string& direction, const std::string& input,
                const std::string& format, std::ostream& out) {
  check_format(format);
  const QuiverContext ctx = opts.build();
  if (direction == "to-poly") {
    out << to_poly(parse_element(input), ctx).str() << '\n';
    return kOk;
  }
  PresentedPoly p;
  try {
    p = PresentedPoly::parse(input, ring_tag_for(ctx), x_modulus_for(ctx));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad polynomial for ") + to_string(ring_tag_for(ctx)) + ": " + e.what());
  }
  const GreenElement g = from_poly(p, ctx);
  out << (format == "json" ? g.to_json().dump() : g.str()) << '\n';
  return kOk;
}

// CLI11 would read "-1,2" as a flag.
std::vector<std::string> protect_negative_operands(std::vector<std::string> args) {
  static const std::regex neg(R"(-\d+,\d+)");
  for (auto& a : args) {
    if (std::regex_match(a, neg)) a = "(" + a + ")";
  }
  return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clebsch-Gordan decompositions and Green rings of minimal Hopf quivers", "greenforge"};
  app.require_subcommand(1);

  ContextOptions opts;
  std::vector<std::string> operands;
  std::string format = "text";
  bool oracle = false;
  std::optional<long long> max_len;
  long long window = 3;
  int battery = 200;
  std::string direction, input;

  auto* decompose = app.add_subcommand("decompose", "decompose V(i,l) (x) V(j,m)");
  opts.attach(decompose);
  decompose->add_option("operands", operands, "two operands i,l")->required()->expected(2);
  decompose->add_flag("--oracle", oracle, "compare with the rank oracle");
  decompose->add_option("--format", format, "json or text")->capture_default_str();

  auto* mul = app.add_subcommand("mul", "product of Green ring elements (i,l or JSON)");
  opts.attach(mul);
  mul->add_option("operands", operands, "factors")->required();
  mul->add_option("--format", format, "json or text")->capture_default_str();

  auto* table = app.add_subcommand("table", "JSON lines of every decomposition within bounds");
  opts.attach(table);
  table->add_option("--max-len", max_len, "largest length l, m");
  table->add_option("--window", window, "vertex window for the infinite quiver")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "closed forms against the oracle, plus presentation checks");
  opts.attach(verify);
  verify->add_option("--max-len", max_len, "largest length l, m");
  verify->add_option("--window", window, "vertex window for the infinite quiver")->capture_default_str();
  verify->add_option("--battery", battery, "random inputs for the ring checks")->capture_default_str();

  auto* convert = app.add_subcommand("convert", "between Green ring elements and polynomials");
  opts.attach(convert);
  convert->add_option("direction", direction, "to-poly or from-poly")
      ->required()
      ->check(CLI::IsMember({"to-poly", "from-poly"}));
  convert->add_option("input", input, "element (i,l or JSON) or polynomial")->required();
  convert->add_option("--format", format, "json or text")->capture_default_str();

  std::vector<std::string> args = protect_negative_operands(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  try {
    if (*decompose) return cmd_decompose(opts, operands, oracle, format, out);
    if (*mul) return cmd_mul(opts, operands, format, out);
    if (*table) return cmd_table(opts, max_len, window, out);
    if (*verify) return cmd_verify(opts, max_len, window, battery, out);
    return cmd_convert(opts, direction, input, format, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const RingTagMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace greenforge::cli
