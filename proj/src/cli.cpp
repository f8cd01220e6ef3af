/// @file
/// @brief Subcommand implementations behind the `tma` executable.

#include "tma/cli.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tma/bottleneck.h"
#include "tma/errors.h"
#include "tma/fixtures.h"
#include "tma/fragment_json.h"
#include "tma/harmonic_complexes.h"
#include "tma/io.h"
#include "tma/midi.h"
#include "tma/parallel.h"
#include "tma/render.h"

namespace tma {

namespace fs = std::filesystem;

namespace {

/// Ends a subcommand with an exit code and message.
struct CliFailure {
  int code;
  std::string message;
};

struct LoadedFragment {
  MusicFragment fragment;
  std::string stem;
  std::string label;
};

std::string stem_of(const fs::path& path) {
  std::string stem = path.filename().string();
  for (const char* suffix : {".fragment.json", ".json", ".midi", ".mid"}) {
    const std::string s(suffix);
    if (stem.size() > s.size() && stem.compare(stem.size() - s.size(), s.size(), s) == 0) {
      stem.resize(stem.size() - s.size());
      break;
    }
  }
  return stem;
}

bool is_midi(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".mid" || ext == ".midi";
}

LoadedFragment load_fragment(const std::string& input, std::ostream& err) {
  LoadedFragment loaded;
  if (input == "luna") {
    loaded.fragment = luna_fragment();
    loaded.stem = loaded.fragment.source_label;
    loaded.label = loaded.fragment.source_label;
    return loaded;
  }
  const fs::path path(input);
  loaded.stem = stem_of(path);
  try {
    if (is_midi(path)) {
      const auto bytes = read_binary_file(path);
      MidiParseResult parsed = parse_midi(bytes, loaded.stem);
      for (const std::string& w : parsed.warnings) err << input << ": warning: " << w << "\n";
      loaded.fragment = std::move(parsed.fragment);
    } else {
      loaded.fragment = parse_fragment_json(read_text_file(path));
    }
  } catch (const IoError& e) {
    throw CliFailure{kExitUsage, e.what()};
  } catch (const MidiError& e) {
    throw CliFailure{kExitIngest, input + ": " + e.what()};
  } catch (const SchemaViolation& e) {
    throw CliFailure{kExitSchema, input + ": invalid fragment: " + e.what()};
  } catch (const Error& e) {
    throw CliFailure{kExitSchema, input + ": invalid fragment: " + e.what()};
  }
  if (loaded.fragment.source_label.empty()) loaded.fragment.source_label = loaded.stem;
  loaded.label = loaded.fragment.source_label;
  return loaded;
}

void parse_formats(const std::string& text, AnalysisConfig& config) {
  config.json = config.csv = config.svg = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "json") {
      config.json = true;
    } else if (item == "csv") {
      config.csv = true;
    } else if (item == "svg") {
      config.svg = true;
    } else {
      throw CliFailure{kExitUsage, "unknown format '" + item + "'"};
    }
  }
}

struct RawOptions {
  std::vector<std::string> mappings;
  int max_dim = 3;
  std::string max_scale = "inf";
  std::string field = "z2";
  std::string linkage = "single";
  std::string out = ".";
  std::string formats = "json,csv,svg";
};

void add_analysis_options(CLI::App& cmd, RawOptions& raw, bool with_linkage) {
  cmd.add_option("--mapping", raw.mappings, "Mapping I..VI (repeatable; default all)");
  cmd.add_option("--max-dim", raw.max_dim, "Highest homology dimension, 0..11")->capture_default_str();
  cmd.add_option("--max-scale", raw.max_scale, "Largest Rips diameter, or inf")->capture_default_str();
  cmd.add_option("--field", raw.field, "Coefficients zP, P prime")->capture_default_str();
  if (with_linkage) cmd.add_option("--linkage", raw.linkage, "single|complete|average")->capture_default_str();
  cmd.add_option("--out", raw.out, "Output directory")->capture_default_str();
  cmd.add_option("--format", raw.formats, "Comma list of json,csv,svg")->capture_default_str();
}

AnalysisConfig make_config(const RawOptions& raw) {
  AnalysisConfig config;
  if (!raw.mappings.empty()) {
    config.mappings.clear();
    for (const std::string& m : raw.mappings) {
      const auto id = parse_mapping(m);
      if (!id) throw CliFailure{kExitOutOfRange, "unknown mapping '" + m + "'"};
      if (std::find(config.mappings.begin(), config.mappings.end(), *id) == config.mappings.end()) {
        config.mappings.push_back(*id);
      }
    }
  }
  if (raw.max_dim < 0 || raw.max_dim > 11) throw CliFailure{kExitOutOfRange, "--max-dim must be in 0..11"};
  config.max_dim = raw.max_dim;
  if (raw.max_scale == "inf") {
    config.max_scale = kUnbounded;
  } else {
    try {
      std::size_t used = 0;
      config.max_scale = std::stod(raw.max_scale, &used);
      if (used != raw.max_scale.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CliFailure{kExitOutOfRange, "--max-scale must be a number or inf"};
    }
    if (!(config.max_scale >= 0.0)) throw CliFailure{kExitOutOfRange, "--max-scale must be nonnegative"};
  }
  try {
    config.field = parse_field(raw.field);
  } catch (const Error& e) {
    throw CliFailure{kExitOutOfRange, std::string("--field: ") + e.what()};
  }
  const auto linkage = parse_linkage(raw.linkage);
  if (!linkage) throw CliFailure{kExitOutOfRange, "unknown linkage '" + raw.linkage + "'"};
  config.linkage = *linkage;
  config.out_dir = raw.out;
  parse_formats(raw.formats, config);
  return config;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CliFailure{kExitUsage, "cannot create " + dir.string() + ": " + ec.message()};
}

/// Writes `name` (a bare file name) inside the output directory.
void emit(const AnalysisConfig& config, const std::string& name, std::string_view content) {
  if (fs::path(name).has_parent_path()) throw CliFailure{kExitUsage, "refusing to write outside --out: " + name};
  write_file_atomic(config.out_dir / name, content);
}

std::vector<LoadedFragment> load_all(const std::vector<std::string>& inputs, std::ostream& err) {
  std::vector<LoadedFragment> fragments;
  for (const std::string& input : inputs) fragments.push_back(load_fragment(input, err));
  return fragments;
}

/// Makes labels unique by suffixing repeats with "~2", "~3", ...
void dedupe(std::vector<std::string>& names) {
  std::map<std::string, int> seen;
  for (std::string& n : names) {
    const int k = ++seen[n];
    if (k > 1) n += "~" + std::to_string(k);
  }
}

int cmd_ingest(const std::vector<std::string>& inputs, const std::string& out, std::ostream& os, std::ostream& err) {
  AnalysisConfig config;
  config.out_dir = out;
  ensure_dir(config.out_dir);
  int status = kExitOk;
  for (const std::string& input : inputs) {
    try {
      const LoadedFragment loaded = load_fragment(input, err);
      const std::string name = loaded.stem + ".fragment.json";
      emit(config, name, serialize_fragment_json(loaded.fragment));
      os << "ok\t" << input << "\t" << name << "\t" << loaded.fragment.size() << " events\n";
    } catch (const CliFailure& f) {
      os << "failed\t" << input << "\n";
      err << f.message << "\n";
      if (status == kExitOk || f.code == kExitIngest) status = f.code;
    }
  }
  return status;
}

int cmd_analyze(const std::vector<std::string>& inputs, const AnalysisConfig& config, std::ostream& os,
                std::ostream& err) {
  std::vector<LoadedFragment> fragments = load_all(inputs, err);
  std::vector<std::string> stems;
  for (const auto& f : fragments) stems.push_back(f.stem);
  dedupe(stems);
  ensure_dir(config.out_dir);
  for (const auto& f : fragments) {
    if (f.fragment.empty()) err << f.stem << ": warning: fragment has no events; diagrams are empty\n";
  }

  const std::size_t items = fragments.size() * config.mappings.size();
  std::vector<std::string> summaries(items);
  std::mutex err_mutex;
  parallel_for(items, [&](std::size_t k) {
    const std::size_t fi = k / config.mappings.size();
    const MappingId mapping = config.mappings[k % config.mappings.size()];
    const PointCloud cloud = map_fragment(mapping, fragments[fi].fragment);
    const DiagramDocument doc = analyze_cloud(cloud, config);
    const std::string base = stems[fi] + "." + std::string(to_string(mapping));
    if (config.csv) emit(config, base + ".points.csv", point_cloud_csv(cloud));
    if (config.json) emit(config, base + ".diagram.json", diagram_json(doc));
    if (config.svg) {
      emit(config, base + ".barcode.svg", barcode_svg(doc));
      emit(config, base + ".diagram.svg", persistence_diagram_svg(doc));
    }
    std::ostringstream line;
    line << base << ":";
    for (const auto& d : doc.diagrams) line << " H" << d.dimension << "=" << d.points.size();
    line << " (zero-length pairs " << doc.zero_persistence_pairs << ")\n";
    summaries[k] = line.str();
  });
  for (const std::string& s : summaries) os << s;
  return kExitOk;
}

int cmd_compare(const std::vector<std::string>& inputs, const AnalysisConfig& config, std::ostream& os,
                std::ostream& err) {
  if (inputs.size() < 2) throw CliFailure{kExitTooFewFragments, "compare needs at least two fragments"};
  std::vector<LoadedFragment> fragments = load_all(inputs, err);
  std::vector<std::string> labels;
  for (const auto& f : fragments) labels.push_back(f.label);
  dedupe(labels);
  ensure_dir(config.out_dir);

  const std::size_t nm = config.mappings.size();
  const std::size_t nf = fragments.size();
  std::vector<DiagramDocument> docs(nf * nm);
  parallel_for(docs.size(), [&](std::size_t k) {
    const PointCloud cloud = map_fragment(config.mappings[k % nm], fragments[k / nm].fragment);
    docs[k] = analyze_cloud(cloud, config);
  });

  for (std::size_t mi = 0; mi < nm; ++mi) {
    const std::string mapping(to_string(config.mappings[mi]));
    for (int dim = 0; dim <= config.max_dim; ++dim) {
      std::vector<PersistenceDiagram> diagrams;
      std::vector<std::string> missing;
      for (std::size_t fi = 0; fi < nf; ++fi) {
        const PersistenceDiagram& d = docs[fi * nm + mi].diagrams[static_cast<std::size_t>(dim)];
        if (d.points.empty()) missing.push_back(labels[fi]);
        diagrams.push_back(d);
      }
      const std::string base = "compare." + mapping + ".H" + std::to_string(dim);
      if (!missing.empty()) {
        err << "notice: skipping mapping " << mapping << " H" << dim << ": no diagram for";
        for (const auto& m : missing) err << " " << m;
        err << "\n";
        continue;
      }
      LabeledMatrix matrix{mapping, dim, labels, pairwise_bottleneck(diagrams)};
      const Dendrogram tree = agglomerate(matrix.values, config.linkage, labels);
      const Extremes extremes = nearest_and_farthest(tree, matrix.values);
      if (config.csv) emit(config, base + ".matrix.csv", matrix_csv(matrix));
      if (config.json) {
        emit(config, base + ".matrix.json", matrix_json(matrix));
        emit(config, base + ".dendrogram.json", dendrogram_json(tree, extremes));
      }
      if (config.svg) emit(config, base + ".dendrogram.svg", dendrogram_svg(tree, mapping + " H" + std::to_string(dim)));
      os << base << ": ";
      if (extremes.equidistant) {
        os << "all samples equidistant (" << format_double(matrix.values[0][1]) << ")\n";
      } else {
        os << "closest " << labels[extremes.closest->first] << " < " << labels[extremes.closest->second]
           << ", farthest > " << labels[*extremes.farthest] << "\n";
      }
    }
  }
  return kExitOk;
}

struct ComplexOptions {
  std::string kind = "cumulative";
  std::optional<std::size_t> radius;
  std::optional<std::size_t> center;
  std::string field = "z2";
  std::string out = ".";
  std::string formats = "csv,svg";
};

int cmd_complexes(const std::string& input, const ComplexOptions& opts, std::ostream& os, std::ostream& err) {
  AnalysisConfig config;
  config.out_dir = opts.out;
  parse_formats(opts.formats, config);
  PrimeField field;
  try {
    field = parse_field(opts.field);
  } catch (const Error& e) {
    throw CliFailure{kExitOutOfRange, std::string("--field: ") + e.what()};
  }
  const LoadedFragment loaded = load_fragment(input, err);
  const std::vector<Chord> chords = loaded.fragment.chords();
  if (chords.empty()) throw CliFailure{kExitOutOfRange, input + ": fragment has no events"};

  ComplexSequence seq;
  std::string suffix;
  try {
    if (opts.kind == "cumulative") {
      seq = cumulative_sequence(chords, field);
    } else if (opts.kind == "pitch-interval") {
      seq = cumulative_pitch_interval_sequence(chords, field);
    } else if (opts.kind == "radius") {
      if (!opts.radius) throw CliFailure{kExitOutOfRange, "--kind radius needs --radius"};
      seq = radius_complexes(chords, *opts.radius, field);
      suffix = ".r" + std::to_string(*opts.radius);
    } else if (opts.kind == "radius-filtration") {
      if (!opts.center) throw CliFailure{kExitOutOfRange, "--kind radius-filtration needs --center"};
      seq = radius_filtration(chords, *opts.center, field);
      suffix = ".c" + std::to_string(*opts.center);
    } else {
      throw CliFailure{kExitOutOfRange, "unknown kind '" + opts.kind + "'"};
    }
  } catch (const RadiusTooLarge& e) {
    throw CliFailure{kExitOutOfRange, e.what()};
  } catch (const IndexOutOfRange& e) {
    throw CliFailure{kExitOutOfRange, e.what()};
  } catch (const EmptyChord& e) {
    throw CliFailure{kExitSchema, input + ": " + e.what()};
  }
  ensure_dir(config.out_dir);
  const std::string base = loaded.stem + "." + opts.kind + suffix;
  if (config.csv) emit(config, base + ".betti.csv", betti_table_csv(seq));
  if (config.svg) emit(config, base + ".betti.svg", betti_trace_svg(seq, loaded.label + " " + opts.kind + suffix));
  os << base << ": " << seq.betti_table.size() << " rows\n";
  return kExitOk;
}

int cmd_render(const std::vector<std::string>& inputs, const std::string& out, std::ostream& os) {
  AnalysisConfig config;
  config.out_dir = out;
  ensure_dir(config.out_dir);
  for (const std::string& input : inputs) {
    const fs::path path(input);
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const std::exception& e) {
      throw CliFailure{kExitUsage, input + ": " + e.what()};
    }
    std::string stem = stem_of(path);
    try {
      if (text.find("\"merges\"") != std::string::npos) {
        const Dendrogram d = parse_dendrogram_json(text);
        emit(config, stem + ".svg", dendrogram_svg(d, stem));
        os << input << " -> " << stem << ".svg\n";
      } else {
        const DiagramDocument doc = parse_diagram_json(text);
        const std::string suffix = ".diagram";
        if (stem.size() > suffix.size() && stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
          stem.resize(stem.size() - suffix.size());
        }
        emit(config, stem + ".barcode.svg", barcode_svg(doc));
        emit(config, stem + ".diagram.svg", persistence_diagram_svg(doc));
        os << input << " -> " << stem << ".barcode.svg, " << stem << ".diagram.svg\n";
      }
    } catch (const SchemaViolation& e) {
      throw CliFailure{kExitSchema, input + ": " + e.what()};
    }
  }
  return kExitOk;
}

int cmd_fixtures(std::ostream& os) {
  bool all = true;
  for (const FixtureCheck& c : fixture_checks()) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
    all = all && c.passed;
  }
  return all ? kExitOk : kExitUsage;
}

bool same(const Point& p, const std::vector<double>& expected) { return p == expected; }

}  // namespace

DiagramDocument analyze_cloud(const PointCloud& cloud, const AnalysisConfig& config) {
  const FilteredComplex fc = build_vr(cloud, config.max_dim, config.max_scale);
  PersistenceOptions options;
  options.max_dim = config.max_dim;
  options.field = config.field;
  const PersistenceResult result = persistence(fc, options);
  DiagramDocument doc;
  doc.mapping = std::string(to_string(cloud.mapping));
  doc.label = cloud.source_label;
  doc.field = config.field.name();
  doc.max_dim = config.max_dim;
  doc.zero_persistence_pairs = result.zero_persistence_pairs;
  doc.diagrams = result.diagrams;
  return doc;
}

std::vector<FixtureCheck> fixture_checks() {
  std::vector<FixtureCheck> checks;
  const MusicFragment luna = luna_fragment();
  const std::vector<Chord> chords = luna.chords();
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("fixture has 28 events", luna.size() == 28, std::to_string(luna.size()));
  check("mapping I, event 0",
        same(map_event(MappingId::kI, luna.events[0]), {17, 21, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0.5, 0}));
  check("mapping I, event 1",
        same(map_event(MappingId::kI, luna.events[1]), {16, 20, 21, 23, 0, 0, 0, 0, 0, 0, 0, 0, 0.5, 0.5}));
  check("mapping I, event 2",
        same(map_event(MappingId::kI, luna.events[2]), {22, 23, 15, 17, 18, 0, 0, 0, 0, 0, 0, 0, 0.25, 1}));
  check("mapping II, event 0", same(map_event(MappingId::kII, luna.events[0]), {0, 0, 1, 1, 1, 0, 0.5, 0}));
  const std::vector<std::vector<double>> interval_vectors = {
      {0, 0, 1, 1, 1, 0}, {1, 1, 1, 1, 2, 0}, {2, 1, 1, 2, 3, 1}, {1, 0, 1, 2, 2, 0}, {5, 4, 6, 5, 5, 3},
      {2, 1, 2, 2, 2, 1}, {1, 0, 1, 2, 2, 0}, {2, 0, 2, 4, 2, 0}, {2, 1, 3, 2, 1, 1}, {1, 1, 1, 1, 1, 1},
      {1, 2, 3, 1, 2, 1}, {2, 1, 1, 2, 3, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1},
      {2, 2, 1, 3, 1, 1}, {2, 1, 1, 2, 3, 1}, {1, 0, 1, 2, 2, 0}, {5, 3, 3, 4, 4, 2}, {2, 3, 3, 3, 3, 1},
      {1, 2, 2, 2, 3, 0}, {2, 3, 3, 2, 4, 1}, {3, 2, 2, 3, 3, 2}, {2, 2, 2, 1, 2, 1}, {2, 1, 2, 2, 2, 1},
      {2, 1, 1, 2, 3, 1}, {2, 2, 1, 3, 1, 1}, {2, 1, 3, 2, 1, 1}};
  std::size_t mismatched = 0;
  for (std::size_t i = 0; i < luna.size() && i < interval_vectors.size(); ++i) {
    if (!same(map_event(MappingId::kIII, luna.events[i]), interval_vectors[i])) ++mismatched;
  }
  check("mapping III, 28 interval vectors", mismatched == 0, std::to_string(mismatched) + " mismatched");
  check("mapping V, event 0", same(map_event(MappingId::kV, luna.events[0]), {17, 21, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  check("mapping VI, event 0", same(map_event(MappingId::kVI, luna.events[0]), {0, 0, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0}));

  const SimplicialComplex k00 = cumulative_complex(chords, 0, 0);
  const SimplicialComplex k01 = cumulative_complex(chords, 0, 1);
  const SimplicialComplex k02 = cumulative_complex(chords, 0, 2);
  check("K(0,0) has 7 simplices", k00.size() == 7, std::to_string(k00.size()));
  check("K(0,1) has 21 simplices", k01.size() == 21, std::to_string(k01.size()));
  check("K(0,2) has 50 simplices", k02.size() == 50, std::to_string(k02.size()));
  check("K(0,2) splits 9+19+15+6+1", k02.counts_by_dimension() == std::vector<std::size_t>{9, 19, 15, 6, 1});
  check("b1(K(0,2)) = 1", betti_row(k02)[1] == 1);
  check("b0(K(0,1)) = 1", betti_row(k01)[0] == 1);
  check("cumulative trace has 28 rows", cumulative_sequence(chords).betti_table.size() == 28);
  check("radius-4 trace has 21 rows", radius_complexes(chords, 4).betti_table.size() == 21);
  return checks;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological analysis of musical fragments", "tma"};
  app.set_version_flag("--version", std::string(kVersion));
  bool fixtures = false;
  app.add_flag("--paper-fixtures", fixtures, "Run the built-in Luna-fragment regression suite");

  std::vector<std::string> inputs;
  std::string out_dir = ".";

  CLI::App* ingest = app.add_subcommand("ingest", "Convert MIDI or JSON scores to fragment JSON");
  ingest->add_option("inputs", inputs, "Score files")->required();
  ingest->add_option("--out", out_dir, "Output directory")->capture_default_str();

  RawOptions analyze_raw;
  CLI::App* analyze = app.add_subcommand("analyze", "Point clouds, persistence diagrams and barcodes");
  analyze->add_option("fragments", inputs, "Fragment JSON or MIDI files, or 'luna'")->required();
  add_analysis_options(*analyze, analyze_raw, false);

  RawOptions compare_raw;
  CLI::App* compare = app.add_subcommand("compare", "Bottleneck distance matrices and dendrograms");
  compare->add_option("fragments", inputs, "Fragment JSON or MIDI files, or 'luna'");
  add_analysis_options(*compare, compare_raw, true);

  ComplexOptions complex_opts;
  std::string complex_input;
  CLI::App* complexes = app.add_subcommand("complexes", "Betti traces of chord complex sequences");
  complexes->add_option("fragment", complex_input, "Fragment JSON or MIDI file, or 'luna'")->required();
  complexes->add_option("--kind", complex_opts.kind, "cumulative|radius|radius-filtration|pitch-interval")
      ->capture_default_str();
  complexes->add_option("--radius", complex_opts.radius, "Window radius for --kind radius");
  complexes->add_option("--center", complex_opts.center, "Center event for --kind radius-filtration");
  complexes->add_option("--field", complex_opts.field, "Coefficients zP")->capture_default_str();
  complexes->add_option("--out", complex_opts.out, "Output directory")->capture_default_str();
  complexes->add_option("--format", complex_opts.formats, "Comma list of csv,svg")->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "SVGs from diagram or dendrogram JSON");
  render->add_option("inputs", inputs, "JSON files")->required();
  render->add_option("--out", out_dir, "Output directory")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (fixtures) return cmd_fixtures(out);
    if (ingest->parsed()) return cmd_ingest(inputs, out_dir, out, err);
    if (analyze->parsed()) return cmd_analyze(inputs, make_config(analyze_raw), out, err);
    if (compare->parsed()) return cmd_compare(inputs, make_config(compare_raw), out, err);
    if (complexes->parsed()) return cmd_complexes(complex_input, complex_opts, out, err);
    if (render->parsed()) return cmd_render(inputs, out_dir, out);
    out << app.help();
    return kExitUsage;
  } catch (const CliFailure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace tma
