#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "streamcode/baseline.hpp"
#include "streamcode/gap.hpp"
#include "streamcode/oracle.hpp"
#include "streamcode/transcript_io.hpp"
#include "streamcode/vgms.hpp"

namespace streamcode::cli {

namespace {

using nlohmann::json;

/// Bad flags, bad config files, unreadable inputs: exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::pair<std::string, std::string>> kOptions = {
    {"codec", "vgms | diagonal | lemma{1,2,3}_seq{1,2}; sweep accepts a comma list"},
    {"tau", "worst-case delay"},
    {"b", "burst length"},
    {"tau-l", "lossless delay (vgms: 0, others: tau - b)"},
    {"w", "channel window (default tau + 1)"},
    {"m", "maximum message size"},
    {"sizes", "message sizes, e.g. 3,2,1,2,1"},
    {"sizes-file", "file of comma or whitespace separated sizes"},
    {"random-sizes", "seed for uniform random sizes in [0, m]"},
    {"pattern", "erased slots, e.g. 2,3"},
    {"enumerate", "single | full"},
    {"field-degree", "GF(2^q) degree (default 16)"},
    {"out", "output file (default stdout)"},
    {"config", "JSON file of option values; flags take precedence"},
    {"t", "last slot for random sequences"},
    {"seeds", "number of seeds to run"},
    {"seed", "first message seed"},
    {"d", "offline scheme scale"},
    {"lemma", "conv1 | conv2 | conv3"},
};

using Raw = std::map<std::string, std::string>;

std::string json_to_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + json_to_text(e);
    return s;
  }
  return v.dump();
}

Raw load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  Raw raw;
  for (const auto& [key, value] : j.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    const bool known = std::any_of(kOptions.begin(), kOptions.end(), [&](const auto& o) { return o.first == name; });
    if (!known || name == "config") throw ConfigError("unknown config key '" + key + "'");
    raw[name] = json_to_text(value);
  }
  return raw;
}

/// Effective option values: flags > config file > defaults.
class Settings {
 public:
  explicit Settings(Raw values) : v_(std::move(values)) {}

  Settings with_default(const std::string& k, const std::string& value) const {
    Raw copy = v_;
    if (!has(k)) copy[k] = value;
    return Settings(std::move(copy));
  }

  bool has(const std::string& k) const { return v_.contains(k) && !v_.at(k).empty(); }
  std::string str(const std::string& k, const std::string& def = "") const { return has(k) ? v_.at(k) : def; }

  long integer(const std::string& k) const {
    if (!has(k)) throw ConfigError("--" + k + " is required");
    const std::string& s = v_.at(k);
    try {
      std::size_t pos = 0;
      const long x = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return x;
    } catch (const std::exception&) {
      throw ConfigError("--" + k + ": not an integer: '" + s + "'");
    }
  }
  long integer(const std::string& k, long def) const { return has(k) ? integer(k) : def; }
  std::optional<long> maybe(const std::string& k) const {
    return has(k) ? std::optional<long>(integer(k)) : std::nullopt;
  }

 private:
  Raw v_;
};

bool is_offline(const std::string& codec) {
  try {
    parse_offline_scheme(codec);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<int> read_sizes_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open sizes file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  for (char& c : text) {
    if (c == '\n' || c == '\r' || c == '\t' || c == ' ') c = ',';
  }
  std::string joined;
  for (char c : text) {
    if (c == ',' && (joined.empty() || joined.back() == ',')) continue;
    joined += c;
  }
  if (!joined.empty() && joined.back() == ',') joined.pop_back();
  return parse_int_list(joined);
}

/// One codec instance and the sequence it runs on.
struct Run {
  std::unique_ptr<StreamCodec> codec;
  MessageSizeSequence sizes;
  CodeParams params;
  std::uint64_t message_seed = 0;
  json source;  // how the sizes were obtained, for the embedded config
};

Run make_run(const Settings& s, const std::string& codec, int index, const GaloisField& field, bool random_by_default) {
  Run run;
  run.message_seed = static_cast<std::uint64_t>(s.integer("seed", 0) + index);
  const int tau = static_cast<int>(s.integer("tau"));
  const int b = static_cast<int>(s.integer("b"));

  if (is_offline(codec)) {
    if (s.has("sizes") || s.has("sizes-file") || s.has("random-sizes")) {
      throw ConfigError(codec + " runs only on its own size sequence; drop --sizes");
    }
    OfflineScheme sch{parse_offline_scheme(codec), tau, b, static_cast<int>(s.integer("tau-l", tau - b)),
                      static_cast<int>(s.integer("d", 2))};
    auto c = std::make_unique<OfflineSchemeCodec>(sch, field);
    run.sizes = c->sequence();
    run.params = c->params();
    run.source = {{"scheme", codec}, {"d", sch.d}};
    run.codec = std::move(c);
    return run;
  }

  CodeParams p;
  p.tau = tau;
  p.b = b;
  if (codec == "vgms") {
    p.tau_l = static_cast<int>(s.integer("tau-l", 0));
    if (p.tau_l != 0) throw ConfigError("vgms has lossless delay 0; --tau-l must be 0");
  } else if (codec == "diagonal") {
    p.tau_l = static_cast<int>(s.integer("tau-l", tau - b));
  } else {
    throw ConfigError("unknown codec '" + codec + "'");
  }
  p.w = static_cast<int>(s.integer("w", tau + 1));

  std::vector<int> raw;
  const auto t = s.maybe("t");
  if (s.has("sizes")) {
    raw = parse_int_list(s.str("sizes"));
    run.source = {{"sizes", raw}};
  } else if (s.has("sizes-file")) {
    raw = read_sizes_file(s.str("sizes-file"));
    run.source = {{"sizes", raw}};
  } else if (s.has("random-sizes") || random_by_default) {
    const auto seed = static_cast<std::uint64_t>(s.integer("random-sizes", s.integer("seed", 0)) + index);
    const long live = t ? *t + 1 - tau : 8;
    if (live < 0) throw ConfigError("--t must be at least tau - 1");
    raw = random_sizes(static_cast<int>(live), static_cast<int>(s.integer("m", 4)), seed);
    run.source = {{"random_sizes_seed", seed}};
  } else {
    throw ConfigError("give one of --sizes, --sizes-file, --random-sizes");
  }
  const int max_raw = raw.empty() ? 1 : std::max(1, *std::max_element(raw.begin(), raw.end()));
  p.m = static_cast<int>(s.integer("m", max_raw));
  p.t = p.tau;
  run.sizes = terminate_sequence(raw, p);
  if (t && *t > run.sizes.last_slot()) {
    auto padded = run.sizes.sizes();
    padded.resize(static_cast<std::size_t>(*t + 1), 0);
    run.sizes = MessageSizeSequence(std::move(padded));
  } else if (t && *t < run.sizes.last_slot()) {
    throw ConfigError("--t " + std::to_string(*t) + " is shorter than the terminated sequence");
  }
  p = with_horizon(p, run.sizes);
  require_valid(p);
  run.params = p;
  if (codec == "vgms") {
    run.codec = std::make_unique<VgmsCodec>(p, field, run.message_seed);
  } else {
    run.codec = std::make_unique<DiagonalCodec>(p, field);
  }
  return run;
}

GaloisField make_field(const Settings& s) {
  const long deg = s.integer("field-degree", 16);
  if (deg < 2 || deg > 16) throw ConfigError("--field-degree must lie in [2, 16]");
  return GaloisField(FieldSpec::with_degree(static_cast<int>(deg)));
}

EnumerationMode parse_mode(const std::string& text) {
  if (text == "single") return EnumerationMode::kSingleBurst;
  if (text == "full") return EnumerationMode::kFull;
  throw ConfigError("--enumerate must be single or full");
}

std::string params_text(const CodeParams& p) {
  std::ostringstream os;
  os << "tau=" << p.tau << ";b=" << p.b << ";tau_l=" << p.tau_l << ";w=" << p.w << ";m=" << p.m << ";t=" << p.t;
  return os.str();
}

json base_config(const std::string& sub, const Settings& s, const Run& run) {
  return json{{"subcommand", sub},
              {"codec", run.codec->name()},
              {"params", to_json(run.params)},
              {"field_degree", run.codec->field().degree()},
              {"seed", run.message_seed},
              {"source", run.source},
              {"pattern", s.str("pattern")}};
}

/// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const Settings& s, std::ostream& fallback) : stream_(&fallback) {
    const auto path = s.str("out");
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ConfigError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_encode(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto field = make_field(s);
  const auto run = make_run(s, s.str("codec", "vgms"), 0, field, false);
  const auto msgs = random_messages(run.sizes, field, run.message_seed);
  const auto tr = encode_transcript(*run.codec, msgs);
  Sink sink(s, out);
  write_jsonl(sink.get(), tr, std::optional<json>(std::in_place, base_config("encode", s, run)));
  err << run.codec->name() << " rate " << to_fraction_string(rate(tr)) << '\n';
  return kExitOk;
}

int cmd_simulate(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto field = make_field(s);
  const auto run = make_run(s, s.str("codec", "vgms"), 0, field, false);
  const LossPattern pattern(parse_int_list(s.str("pattern")));
  if (!is_admissible(pattern, run.params)) {
    throw ConfigError("pattern is not admissible for C(b=" + std::to_string(run.params.b) +
                      ", w=" + std::to_string(run.params.w) + ") up to slot " + std::to_string(run.params.t));
  }
  const auto msgs = random_messages(run.sizes, field, run.message_seed);
  StreamTranscript tr;
  try {
    tr = run_stream(*run.codec, msgs, pattern);
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << '\n';
    return kExitAssertion;
  }
  Sink sink(s, out);
  write_jsonl(sink.get(), tr, std::optional<json>(std::in_place, base_config("simulate", s, run)));

  auto v = check_delays(tr, run.params, DelayConstraint::kWorstCase);
  if (!v && pattern.empty()) v = check_delays(tr, run.params, DelayConstraint::kLossless);
  if (v) {
    err << "delay violation: S[" << v->slot << "] deadline " << v->deadline << ", decoded "
        << (v->decode_time ? std::to_string(*v->decode_time) : std::string("never")) << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto field = make_field(s);
  const std::string codec = s.str("codec", "vgms");
  const long seeds = s.integer("seeds", 1);
  if (seeds < 1) throw ConfigError("--seeds must be >= 1");
  const auto mode = parse_mode(s.str("enumerate", "full"));

  json report;
  long patterns = 0;
  std::optional<json> failure;
  CodeParams last;
  // Default horizon for random streams: 12 slots, tau of them the zero tail.
  const Settings local = is_offline(codec) ? s : s.with_default("t", "11");
  for (int i = 0; i < seeds && !failure; ++i) {
    const auto run = make_run(local, codec, i, field, true);
    last = run.params;
    const auto msgs = random_messages(run.sizes, field, run.message_seed);
    const auto r = exhaustive_decode_check(*run.codec, msgs, run.params, mode);
    patterns += r.patterns_checked;
    if (!r.ok()) {
      failure = json{{"seed", run.message_seed}, {"check", "decoding"}, {"counterexample", to_json(*r.counterexample)}};
      break;
    }
    if (run.params.tau_l == 0) {
      const auto tr = encode_transcript(*run.codec, msgs);
      const auto mm = codec == "vgms" ? MinimalityMode::kEqual : MinimalityMode::kDominate;
      if (const auto g = check_minimality(tr, lower_bound_profile(run.sizes, run.params), mm)) {
        failure = json{{"seed", run.message_seed}, {"check", "minimality"}, {"slot", g->slot},
                       {"cumulative", g->cumulative}, {"bound", g->bound}};
      } else if (const auto k = send_k_violation(tr)) {
        failure = json{{"seed", run.message_seed}, {"check", "send_k"}, {"slot", *k}};
      } else if (codec == "vgms") {
        if (const auto pt = parity_tightness_violation(run.sizes, run.params.tau, run.params.b)) {
          failure = json{{"seed", run.message_seed}, {"check", "parity_tightness"}, {"slot", *pt}};
        }
      }
    }
  }
  report = json{{"config",
                 {{"subcommand", "verify"},
                  {"codec", codec},
                  {"field_degree", field.degree()},
                  {"seed", s.integer("seed", 0)},
                  {"seeds", seeds},
                  {"enumerate", mode == EnumerationMode::kFull ? "full" : "single"}}},
                {"codec", codec},
                {"params", to_json(last)},
                {"seeds", seeds},
                {"patterns_checked", patterns},
                {"status", failure ? "fail" : "ok"}};
  if (failure) report["failure"] = *failure;
  Sink sink(s, out);
  sink.get() << report.dump(2) << '\n';
  if (failure) {
    err << "verify failed: " << failure->dump() << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_gap(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto field = make_field(s);
  const auto lemma = parse_gap_lemma(s.str("lemma"));
  const int tau = static_cast<int>(s.integer("tau"));
  const int b = static_cast<int>(s.integer("b"));
  if (lemma == GapLemma::kConv3 && !s.has("tau-l")) throw ConfigError("conv3 needs --tau-l < tau - b");
  const int tau_l = static_cast<int>(s.integer("tau-l", tau - b));
  const int d = static_cast<int>(s.integer("d", lemma == GapLemma::kConv1 && b > 0 ? tau_l / b + 1 : 2));
  const auto seed = static_cast<std::uint64_t>(s.integer("seed", 0));
  const auto r = run_gap(lemma, tau, b, tau_l, d, field, seed);

  const json cfg{{"subcommand", "gap"}, {"lemma", to_string(lemma)}, {"tau", tau},   {"b", b},
                 {"tau_l", tau_l},      {"d", d},                    {"seed", seed}, {"field_degree", field.degree()}};
  Sink sink(s, out);
  sink.get() << "# config " << cfg.dump() << '\n' << gap_csv_header() << '\n' << gap_csv_row(r) << '\n';
  if (!r.ok()) {
    err << "gap check failed: " << r.detail << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_sweep(const Settings& s, std::ostream& out, std::ostream&) {
  const auto field = make_field(s);
  const long seeds = s.integer("seeds", 1);
  if (seeds < 1) throw ConfigError("--seeds must be >= 1");
  std::vector<std::string> codecs;
  std::stringstream list(s.str("codec", "vgms"));
  for (std::string c; std::getline(list, c, ',');) {
    if (!c.empty()) codecs.push_back(c);
  }
  std::vector<RateRow> rows;
  for (const auto& codec : codecs) {
    for (int i = 0; i < seeds; ++i) {
      const auto run = make_run(s, codec, i, field, true);
      const auto tr = encode_transcript(*run.codec, random_messages(run.sizes, field, run.message_seed));
      rows.push_back(RateRow{run.codec->name(), params_text(run.params), run.message_seed, tr.message_symbols(),
                             tr.channel_symbols()});
      if (is_offline(codec)) break;  // fixed sequence; further seeds repeat it
    }
  }
  const json cfg{{"subcommand", "sweep"},        {"codec", s.str("codec", "vgms")},
                 {"seed", s.integer("seed", 0)}, {"seeds", seeds},
                 {"field_degree", field.degree()}};
  Sink sink(s, out);
  emit_rate_table(sink.get(), rows, cfg);
  return kExitOk;
}

}  // namespace

void emit_rate_table(std::ostream& out, const std::vector<RateRow>& rows, const nlohmann::json& config) {
  if (rows.empty()) throw std::invalid_argument("rate table needs at least one result");
  out << "# config " << config.dump() << '\n';
  out << "codec,params,seed,symbols_in,symbols_out,rate,rate_reduced,rate_decimal\n";
  for (const auto& r : rows) {
    if (r.symbols_out == 0) throw std::invalid_argument("rate undefined: no channel symbols for " + r.codec);
    const Rational q(r.symbols_in, r.symbols_out);
    char dec[32];
    std::snprintf(dec, sizeof dec, "%.6f", to_double(q));
    out << r.codec << ',' << r.params << ',' << r.seed << ',' << r.symbols_in << ',' << r.symbols_out << ','
        << r.symbols_in << '/' << r.symbols_out << ',' << to_fraction_string(q) << ',' << dec << '\n';
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming codes over burst-erasure channels"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"encode", "encode one stream and write its JSONL transcript"},
      {"simulate", "encode, erase --pattern, decode, write the transcript"},
      {"verify", "exhaustive decoding and minimality checks over --seeds streams"},
      {"gap", "run one separation lemma and print its CSV row"},
      {"sweep", "rate table over --seeds streams"},
  };
  std::map<std::string, Raw> raw;
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;
  for (const auto& [name, desc] : subs) {
    auto* sub = app.add_subcommand(name, desc);
    for (const auto& [opt, help] : kOptions) opts[name][opt] = sub->add_option("--" + opt, raw[name][opt], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    Raw merged;
    const auto& given = raw[sub];
    if (opts[sub]["config"]->count() > 0) merged = load_config(given.at("config"));
    for (const auto& [opt, option] : opts[sub]) {
      if (option->count() > 0) merged[opt] = given.at(opt);
    }
    const Settings s(merged);
    if (sub == "encode") return cmd_encode(s, out, err);
    if (sub == "simulate") return cmd_simulate(s, out, err);
    if (sub == "verify") return cmd_verify(s, out, err);
    if (sub == "gap") return cmd_gap(s, out, err);
    return cmd_sweep(s, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
}

}  // namespace streamcode::cli
