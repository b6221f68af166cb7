#include "qcorr/report.hpp"

#include <sstream>

#include <json.hpp>

#include "qcorr/format.hpp"
#include "qcorr/version.hpp"

namespace qcorr {

namespace {

using nlohmann::ordered_json;

std::string direction_full(const Direction& d) {
  return "(" + format_full(d.x()) + ", " + format_full(d.y()) + ", " +
         format_full(d.z()) + ")";
}

ordered_json direction_json(const Direction& d) {
  return ordered_json::array({d.x(), d.y(), d.z()});
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

void append_degeneracy_text(std::ostringstream& os, const DegeneracyReport& d) {
  os << "degeneracy.q_optimum = " << format_full(d.q_optimum) << "\n";
  os << "degeneracy.tolerance = " << format_full(d.tolerance) << "\n";
  os << "degeneracy.scan_lattice_size = " << d.scan_lattice_size << "\n";
  os << "degeneracy.count = " << d.degenerate_directions.size() << "\n";
  os << "degeneracy.c_min = " << format_full(d.c_min) << "\n";
  os << "degeneracy.c_max = " << format_full(d.c_max) << "\n";
  os << "degeneracy.c_spread = " << format_full(d.c_spread) << "\n";
  os << "degeneracy.is_ambiguous = " << yes_no(d.is_ambiguous) << "\n";
  os << "degeneracy.c_min_direction = " << direction_full(d.c_min_direction) << "\n";
  os << "degeneracy.c_max_direction = " << direction_full(d.c_max_direction) << "\n";
  for (std::size_t i = 0; i < d.sampled_pairs.size(); ++i) {
    os << "degeneracy.sample." << i
       << ".direction = " << direction_full(d.sampled_pairs[i].first) << "\n";
    os << "degeneracy.sample." << i
       << ".c = " << format_full(d.sampled_pairs[i].second) << "\n";
  }
}

ordered_json degeneracy_json(const DegeneracyReport& d) {
  ordered_json j;
  j["q_optimum"] = d.q_optimum;
  j["tolerance"] = d.tolerance;
  j["scan_lattice_size"] = d.scan_lattice_size;
  j["count"] = d.degenerate_directions.size();
  j["c_min"] = d.c_min;
  j["c_max"] = d.c_max;
  j["c_spread"] = d.c_spread;
  j["is_ambiguous"] = d.is_ambiguous;
  j["c_min_direction"] = direction_json(d.c_min_direction);
  j["c_max_direction"] = direction_json(d.c_max_direction);
  ordered_json samples = ordered_json::array();
  for (const auto& [dir, c] : d.sampled_pairs) {
    ordered_json s;
    s["direction"] = direction_json(dir);
    s["c"] = c;
    samples.push_back(s);
  }
  j["sampled_pairs"] = samples;
  return j;
}

void append_witness_text(std::ostringstream& os, const AmbiguityWitness& w) {
  os << "ambiguity.is_ambiguous = " << yes_no(w.is_ambiguous) << "\n";
  os << "ambiguity.c_spread = " << format_full(w.c_spread) << "\n";
  os << "ambiguity.low_direction = " << direction_full(w.low) << "\n";
  os << "ambiguity.high_direction = " << direction_full(w.high) << "\n";
  os << "ambiguity.summary = " << w.summary << "\n";
}

ordered_json witness_json(const AmbiguityWitness& w) {
  ordered_json j;
  j["is_ambiguous"] = w.is_ambiguous;
  j["c_spread"] = w.c_spread;
  j["low_direction"] = direction_json(w.low);
  j["high_direction"] = direction_json(w.high);
  j["summary"] = w.summary;
  return j;
}

}  // namespace

AnalysisReport analyze_state(const StateFile& input, const OptimizerSettings& settings,
                             double scan_tolerance) {
  AnalysisReport report;
  report.input = input;
  report.settings = settings;
  report.scan_tolerance = scan_tolerance;

  const TwoQubitState state = to_state(input);
  report.tag = state.tag();
  report.eigenvalues = state.eigenvalues();
  report.triples = evaluate_all_frameworks(state, settings);
  report.degeneracy = scan_degenerate_directions(state, settings, scan_tolerance);
  report.witness = summarize(report.degeneracy);
  // the input vector, when given, is authoritative; reconstructing it from
  // the matrix costs an ulp of rounding
  report.bell = input.bell_diagonal ? input.bell_diagonal
                                    : bell_diagonal_vector(state.matrix());
  if (report.bell) {
    report.closed_form = closed_form_bell(*report.bell);
  }
  return report;
}

std::string render_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "report.version = " << kVersionTag << "\n";

  const CorrelationTriple& independent = report.triples.back();
  os << "summary.tag = " << state_tag_name(report.tag) << "\n";
  os << "summary.quantum = " << format_human(independent.q) << "\n";
  os << "summary.classical = " << format_human(independent.c) << "\n";
  os << "summary.total = " << format_human(independent.t) << "\n";
  os << "summary.ambiguous = " << yes_no(report.witness.is_ambiguous) << "\n";

  os << "input.label = " << report.input.label << "\n";
  os << "input.kind = " << (report.input.bell_diagonal ? "bell_diagonal" : "matrix")
     << "\n";
  if (report.input.bell_diagonal) {
    os << "input.bell_vector.x = " << format_full(report.input.bell_diagonal->x) << "\n";
    os << "input.bell_vector.y = " << format_full(report.input.bell_diagonal->y) << "\n";
    os << "input.bell_vector.z = " << format_full(report.input.bell_diagonal->z) << "\n";
  } else if (report.input.matrix) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const Complex& e = (*report.input.matrix)(i, j);
        os << "input.matrix." << i << "." << j << " = (" << format_full(e.real())
           << ", " << format_full(e.imag()) << ")\n";
      }
    }
  }
  os << "input.tag = " << state_tag_name(report.tag) << "\n";
  for (std::size_t i = 0; i < 4; ++i) {
    os << "input.eigenvalue." << i << " = " << format_full(report.eigenvalues[i])
       << "\n";
  }
  if (report.bell) {
    os << "detected.bell_vector.x = " << format_full(report.bell->x) << "\n";
    os << "detected.bell_vector.y = " << format_full(report.bell->y) << "\n";
    os << "detected.bell_vector.z = " << format_full(report.bell->z) << "\n";
  }

  os << "settings.grid_points = " << report.settings.grid_points << "\n";
  os << "settings.refine_tol = " << format_full(report.settings.refine_tol) << "\n";
  os << "settings.refine_max_iters = " << report.settings.refine_max_iters << "\n";
  os << "settings.seed = " << report.settings.seed << "\n";
  os << "settings.scan_tolerance = " << format_full(report.scan_tolerance) << "\n";

  for (const CorrelationTriple& t : report.triples) {
    const std::string key = std::string("framework.") + framework_name(t.framework);
    os << key << ".available = " << yes_no(t.available) << "\n";
    if (t.available) {
      os << key << ".q = " << format_full(t.q) << "\n";
      os << key << ".c = " << format_full(t.c) << "\n";
      os << key << ".t = " << format_full(t.t) << "\n";
      if (t.q_direction) {
        os << key << ".q_direction = " << direction_full(*t.q_direction) << "\n";
      }
      if (t.c_direction) {
        os << key << ".c_direction = " << direction_full(*t.c_direction) << "\n";
      }
      os << key << ".approximate = " << yes_no(t.approximate) << "\n";
    }
    os << key << ".note = " << t.note << "\n";
  }

  if (report.closed_form) {
    const ClosedFormReference& ref = *report.closed_form;
    os << "closed_form.q = " << format_full(ref.q) << "\n";
    os << "closed_form.c = " << format_full(ref.c) << "\n";
    os << "closed_form.c_prime = " << format_full(ref.c_prime) << "\n";
    os << "closed_form.a_n = " << format_full(ref.a_n) << "\n";
    os << "closed_form.b_n = " << format_full(ref.b_n) << "\n";
  }

  append_degeneracy_text(os, report.degeneracy);
  append_witness_text(os, report.witness);
  return os.str();
}

std::string render_json(const AnalysisReport& report) {
  ordered_json j;
  j["version"] = kVersionTag;

  ordered_json input;
  input["label"] = report.input.label;
  input["kind"] = report.input.bell_diagonal ? "bell_diagonal" : "matrix";
  if (report.input.bell_diagonal) {
    input["bell_diagonal"] = ordered_json::array({report.input.bell_diagonal->x,
                                                  report.input.bell_diagonal->y,
                                                  report.input.bell_diagonal->z});
  } else if (report.input.matrix) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < 4; ++k) {
        const Complex& e = (*report.input.matrix)(i, k);
        row.push_back(ordered_json::array({e.real(), e.imag()}));
      }
      rows.push_back(row);
    }
    input["matrix"] = rows;
  }
  input["tag"] = state_tag_name(report.tag);
  input["eigenvalues"] = report.eigenvalues;
  j["input"] = input;

  if (report.bell) {
    j["detected_bell_vector"] =
        ordered_json::array({report.bell->x, report.bell->y, report.bell->z});
  } else {
    j["detected_bell_vector"] = nullptr;
  }

  ordered_json settings;
  settings["grid_points"] = report.settings.grid_points;
  settings["refine_tol"] = report.settings.refine_tol;
  settings["refine_max_iters"] = report.settings.refine_max_iters;
  settings["seed"] = report.settings.seed;
  settings["scan_tolerance"] = report.scan_tolerance;
  j["settings"] = settings;

  ordered_json frameworks = ordered_json::array();
  for (const CorrelationTriple& t : report.triples) {
    ordered_json f;
    f["framework"] = framework_name(t.framework);
    f["available"] = t.available;
    if (t.available) {
      f["q"] = t.q;
      f["c"] = t.c;
      f["t"] = t.t;
      f["q_direction"] = t.q_direction ? direction_json(*t.q_direction) : nullptr;
      f["c_direction"] = t.c_direction ? direction_json(*t.c_direction) : nullptr;
      f["approximate"] = t.approximate;
    }
    f["note"] = t.note;
    frameworks.push_back(f);
  }
  j["frameworks"] = frameworks;

  if (report.closed_form) {
    ordered_json ref;
    ref["q"] = report.closed_form->q;
    ref["c"] = report.closed_form->c;
    ref["c_prime"] = report.closed_form->c_prime;
    ref["a_n"] = report.closed_form->a_n;
    ref["b_n"] = report.closed_form->b_n;
    j["closed_form"] = ref;
  } else {
    j["closed_form"] = nullptr;
  }

  j["degeneracy"] = degeneracy_json(report.degeneracy);
  j["ambiguity"] = witness_json(report.witness);
  return j.dump(2) + "\n";
}

std::string render_degeneracy_text(const DegeneracyReport& report) {
  std::ostringstream os;
  os << "report.version = " << kVersionTag << "\n";
  append_degeneracy_text(os, report);
  append_witness_text(os, summarize(report));
  return os.str();
}

std::string render_degeneracy_json(const DegeneracyReport& report) {
  ordered_json j;
  j["version"] = kVersionTag;
  j["degeneracy"] = degeneracy_json(report);
  j["ambiguity"] = witness_json(summarize(report));
  return j.dump(2) + "\n";
}

}  // namespace qcorr
