// opucrange: front end over the library.  Subcommands map one-to-one onto
// library operations; outputs are deterministic JSON/CSV/SVG artifacts.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "emit.hpp"
#include "opuc/errors.hpp"
#include "opuc/geometry.hpp"
#include "opuc/ggt.hpp"
#include "opuc/numrange.hpp"
#include "opuc/popuc.hpp"
#include "opuc/schur.hpp"
#include "opuc/szego.hpp"
#include "opuc/wendroff.hpp"
#include "parse.hpp"
#include "schema_data.hpp"
#include "svg.hpp"

namespace opuc::cli {

namespace {

struct JobSpec {
  std::string command;
  std::string alphas, lambda = "1", first, second, points, eigs, foci, zs, matrix, start = "1";
  int num_lambda = 64;
  int oracle_angles = 0;
  int steps = 3;
  int ngon = 0;
  double semimajor = 0.0;
  double tol = -1.0;
  std::string out = "-";
  std::string format = "json";
  std::string data_out;
};

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + path);
  f << content;
}

VerblunskyWord word_from(const JobSpec& job) {
  if (job.alphas.empty()) throw ValidationError("--alphas is required");
  return VerblunskyWord::interior(parse_complex_list(job.alphas));
}

cx unimodular_from(const std::string& s) {
  cx lam = parse_complex(s);
  double mod = std::abs(lam);
  if (std::abs(mod - 1.0) > 1e-12) throw ValidationError("parameter must be unimodular: " + s);
  return lam / mod;
}

CMat matrix_from(const JobSpec& job) {
  if (job.matrix.empty()) throw ValidationError("--matrix is required");
  std::string text = job.matrix;
  if (!text.empty() && text[0] == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw ValidationError("cannot open matrix file: " + text.substr(1));
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!parsed.contains("matrix")) throw ValidationError("matrix JSON must contain a 'matrix' field");
  const auto& rows = parsed["matrix"];
  int n = static_cast<int>(rows.size());
  CMat a(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ValidationError("matrix must be square");
    for (int j = 0; j < n; ++j) {
      const auto& e = rows[i][j];
      if (!e.is_array() || e.size() != 2) throw ValidationError("matrix entries must be [re, im] pairs");
      a(i, j) = cx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return a;
}

void emit_word(Json& j, const VerblunskyWord& word) {
  j.open().key("alphas").cx_list(word.alphas());
  if (word.terminal()) j.comma().key("lambda").cxnum(*word.terminal());
  j.close();
}

void emit_frame_body(Json& j, const PonceletFrame& f) {
  j.open();
  j.key("lambda").cxnum(f.lambda).comma();
  j.key("zeros").cx_list(f.zeros).comma();
  j.key("weights").num_list(f.weights).comma();
  j.key("christoffel").num_list(f.christoffel);
  j.close();
}

void emit_curve_body(Json& j, const BoundaryCurve& c) {
  j.open().key("samples").cx_list(c.samples).comma().key("provenance").open_list();
  for (size_t i = 0; i < c.provenance.size(); ++i) {
    if (i) j.comma();
    const Provenance& p = c.provenance[i];
    j.open();
    bool first_field = true;
    if (p.lambda) {
      j.key("lambda").cxnum(*p.lambda);
      first_field = false;
    }
    if (p.edge >= 0) {
      if (!first_field) j.comma();
      j.key("edge").integer(p.edge);
      first_field = false;
    }
    if (p.support_angle) {
      if (!first_field) j.comma();
      j.key("angle").num(*p.support_angle);
    }
    j.close();
  }
  j.close_list().close();
}

std::vector<double> gorkin_weights(const VerblunskyWord& word, const PonceletFrame& f) {
  std::vector<double> out(f.zeros.size());
  std::vector<cx> zs;
  if (word.interior_size() > 0) zs = roots(szego_forward(word).top().coeffs());
  for (size_t j = 0; j < f.zeros.size(); ++j) {
    double acc = 1.0;
    for (cx z : zs) acc += (1.0 - std::norm(z)) / std::norm(f.zeros[j] - z);
    out[j] = 1.0 / acc;
  }
  return out;
}

// ---- command bodies ------------------------------------------------------

int run_opuc(const JobSpec& job) {
  std::vector<cx> alphas = parse_complex_list(job.alphas);
  VerblunskyWord word = job.lambda.empty()
                            ? VerblunskyWord::interior(alphas)
                            : VerblunskyWord::with_terminal(alphas, unimodular_from(job.lambda));
  OpucSequence seq = szego_forward(word);
  if (job.format == "json") {
    Json j;
    j.open().key("kind").str("opuc").comma().key("word");
    emit_word(j, word);
    j.comma().key("phis").open_list();
    for (size_t k = 0; k < seq.phis.size(); ++k) {
      if (k) j.comma();
      j.cx_list(seq.phis[k].coeffs());
    }
    j.close_list().comma().key("stars").open_list();
    for (size_t k = 0; k < seq.stars.size(); ++k) {
      if (k) j.comma();
      j.cx_list(seq.stars[k]);
    }
    j.close_list().comma().key("norms").num_list(seq.norms);
    if (seq.popuc) j.comma().key("popuc").cx_list(seq.popuc->coeffs());
    j.close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    Csv csv("degree,coeff_index,re,im");
    for (size_t k = 0; k < seq.phis.size(); ++k)
      for (size_t c = 0; c < seq.phis[k].coeffs().size(); ++c)
        csv.row({std::to_string(k), std::to_string(c),
                 fmt_num(seq.phis[k].at(static_cast<int>(c)).real()),
                 fmt_num(seq.phis[k].at(static_cast<int>(c)).imag())});
    write_output(job.out, csv.take());
    return 0;
  }
  throw ValidationError("opuc supports json or csv output");
}

int run_frame(const JobSpec& job, bool with_gorkin) {
  VerblunskyWord word = word_from(job);
  PonceletFrame f = popuc_zeros(word, unimodular_from(job.lambda));
  if (job.format == "json") {
    Json j;
    j.open().key("kind").str(with_gorkin ? "weights" : "frame").comma().key("frame");
    emit_frame_body(j, f);
    if (with_gorkin) j.comma().key("gorkin").num_list(gorkin_weights(word, f));
    j.close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    std::vector<double> gk;
    if (with_gorkin) gk = gorkin_weights(word, f);
    Csv csv(with_gorkin ? "index,zero_re,zero_im,weight,christoffel,gorkin"
                        : "index,zero_re,zero_im,weight,christoffel");
    for (int j = 0; j < f.size(); ++j) {
      std::vector<std::string> row{std::to_string(j), fmt_num(f.zeros[static_cast<size_t>(j)].real()),
                                   fmt_num(f.zeros[static_cast<size_t>(j)].imag()),
                                   fmt_num(f.weights[static_cast<size_t>(j)]),
                                   fmt_num(f.christoffel[static_cast<size_t>(j)])};
      if (with_gorkin) row.push_back(fmt_num(gk[static_cast<size_t>(j)]));
      csv.row(row);
    }
    write_output(job.out, csv.take());
    return 0;
  }
  throw ValidationError("frame output supports json or csv");
}

int run_mfunction(const JobSpec& job) {
  VerblunskyWord word = word_from(job);
  cx lambda = unimodular_from(job.lambda);
  if (job.zs.empty()) throw ValidationError("--z is required");
  std::vector<cx> zs = parse_complex_list(job.zs);
  PonceletFrame f = popuc_zeros(word, lambda);
  OpucSequence seq = szego_forward(VerblunskyWord::with_terminal(word.alphas(), lambda));
  GGTMatrix gu = ggt_build(VerblunskyWord::with_terminal(word.alphas(), lambda));
  int n = gu.n;

  struct Row {
    cx z, pf, rat, res;
  };
  std::vector<Row> rows;
  for (cx z : zs) {
    Row r;
    r.z = z;
    r.pf = m_function(word, f, z);
    r.rat = seq.top()(z) / (*seq.popuc)(z);
    CMat zm = CMat::identity(n);
    for (cx& c : zm.a) c *= z;
    zm = matsub(zm, gu.entries);
    std::vector<cx> e(static_cast<size_t>(n), cx(0.0));
    e.back() = cx(1.0);
    r.res = lu_solve(lu_factor(zm), e).back();
    rows.push_back(r);
  }

  if (job.format == "json") {
    Json j;
    j.open().key("kind").str("mfunction").comma().key("lambda").cxnum(lambda).comma();
    j.key("points").open_list();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) j.comma();
      j.open();
      j.key("z").cxnum(rows[i].z).comma();
      j.key("partial_fraction").cxnum(rows[i].pf).comma();
      j.key("rational").cxnum(rows[i].rat).comma();
      j.key("resolvent").cxnum(rows[i].res);
      j.close();
    }
    j.close_list().close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    Csv csv("z_re,z_im,pf_re,pf_im,rational_re,rational_im,resolvent_re,resolvent_im");
    for (const Row& r : rows)
      csv.row({fmt_num(r.z.real()), fmt_num(r.z.imag()), fmt_num(r.pf.real()), fmt_num(r.pf.imag()),
               fmt_num(r.rat.real()), fmt_num(r.rat.imag()), fmt_num(r.res.real()), fmt_num(r.res.imag())});
    write_output(job.out, csv.take());
    return 0;
  }
  throw ValidationError("mfunction supports json or csv output");
}

int run_numrange(const JobSpec& job) {
  VerblunskyWord word = word_from(job);
  BoundaryCurve curve = boundary_sweep(word, job.num_lambda);
  std::optional<BoundaryCurve> oracle;
  if (job.oracle_angles > 0) {
    std::vector<double> angles(static_cast<size_t>(job.oracle_angles));
    for (int k = 0; k < job.oracle_angles; ++k) angles[static_cast<size_t>(k)] = kTwoPi * k / job.oracle_angles;
    oracle = support_oracle(ggt_build(word).entries, angles);
  }
  if (job.format == "json") {
    Json j;
    j.open().key("kind").str("curve").comma().key("curve");
    emit_curve_body(j, curve);
    if (oracle) {
      j.comma().key("oracle");
      emit_curve_body(j, *oracle);
    }
    j.close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    Csv csv("index,re,im");
    for (size_t i = 0; i < curve.samples.size(); ++i)
      csv.row({std::to_string(i), fmt_num(curve.samples[i].real()), fmt_num(curve.samples[i].imag())});
    write_output(job.out, csv.take());
    return 0;
  }
  if (job.format == "svg") {
    SvgCanvas svg;
    svg.unit_circle();
    svg.polyline(curve.samples, "#000000", 2.0, true);
    if (oracle) svg.polyline(oracle->samples, "#cc3311", 1.0, true);
    write_output(job.out, svg.take());
    return 0;
  }
  throw ValidationError("numrange supports json, csv or svg output");
}

int run_polygons(const JobSpec& job) {
  VerblunskyWord word = word_from(job);
  std::vector<PonceletFrame> frames;
  for (int k = 0; k < job.num_lambda; ++k)
    frames.push_back(popuc_zeros(word, unit(kTwoPi * k / job.num_lambda)));
  if (job.format == "json") {
    Json j;
    j.open().key("kind").str("polygons").comma().key("polygons").open_list();
    for (size_t i = 0; i < frames.size(); ++i) {
      if (i) j.comma();
      j.open().key("lambda").cxnum(frames[i].lambda).comma().key("vertices").cx_list(frames[i].zeros).close();
    }
    j.close_list().close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    Csv csv("lambda_index,lambda_re,lambda_im,vertex,re,im");
    for (size_t i = 0; i < frames.size(); ++i)
      for (size_t v = 0; v < frames[i].zeros.size(); ++v)
        csv.row({std::to_string(i), fmt_num(frames[i].lambda.real()), fmt_num(frames[i].lambda.imag()),
                 std::to_string(v), fmt_num(frames[i].zeros[v].real()), fmt_num(frames[i].zeros[v].imag())});
    write_output(job.out, csv.take());
    return 0;
  }
  if (job.format == "svg") {
    SvgCanvas svg;
    svg.unit_circle();
    for (const PonceletFrame& f : frames) svg.polyline(f.zeros, "#4477aa", 1.0, true, 0.8);
    BoundaryCurve curve = boundary_sweep(word, std::max(128, job.num_lambda));
    svg.polyline(curve.samples, "#000000", 2.0, true);
    write_output(job.out, svg.take());
    return 0;
  }
  throw ValidationError("polygons supports json, csv or svg output");
}

int run_chords(const JobSpec& job) {
  VerblunskyWord word = word_from(job);
  std::vector<Chord> chords = kippenhahn_chords(word, job.num_lambda);
  if (job.format == "json") {
    Json j;
    j.open().key("kind").str("chords").comma().key("chords").open_list();
    for (size_t i = 0; i < chords.size(); ++i) {
      if (i) j.comma();
      j.open();
      j.key("lambda").cxnum(chords[i].lambda).comma();
      j.key("i").integer(chords[i].i).comma();
      j.key("j").integer(chords[i].j).comma();
      j.key("from").cxnum(chords[i].from).comma();
      j.key("to").cxnum(chords[i].to);
      j.close();
    }
    j.close_list().close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    Csv csv("lambda_re,lambda_im,i,j,from_re,from_im,to_re,to_im");
    for (const Chord& c : chords)
      csv.row({fmt_num(c.lambda.real()), fmt_num(c.lambda.imag()), std::to_string(c.i), std::to_string(c.j),
               fmt_num(c.from.real()), fmt_num(c.from.imag()), fmt_num(c.to.real()), fmt_num(c.to.imag())});
    write_output(job.out, csv.take());
    return 0;
  }
  if (job.format == "svg") {
    SvgCanvas svg;
    svg.unit_circle();
    for (const Chord& c : chords) svg.segment(c.from, c.to, "#4477aa", 0.6, 0.6);
    BoundaryCurve curve = boundary_sweep(word, std::max(128, job.num_lambda));
    svg.polyline(curve.samples, "#000000", 2.0, true);
    write_output(job.out, svg.take());
    return 0;
  }
  throw ValidationError("chords supports json, csv or svg output");
}

int run_wendroff2(const JobSpec& job) {
  if (job.first.empty() || job.second.empty()) throw ValidationError("--first and --second are required");
  CircularConfiguration cfg(parse_complex_list(job.first), parse_complex_list(job.second));
  TwoPopucResult r = reconstruct_from_two_popuc(cfg);
  if (job.format != "json") throw ValidationError("wendroff2 supports json output");
  Json j;
  j.open().key("kind").str("wendroff2").comma();
  j.key("alphas").cx_list(r.word.alphas()).comma();
  j.key("lambda").cxnum(r.lambda).comma();
  j.key("mu").cxnum(r.mu).close();
  write_output(job.out, j.take());
  return 0;
}

int run_wendroff_second_kind(const JobSpec& job) {
  if (job.first.empty() || job.second.empty()) throw ValidationError("--first and --second are required");
  CircularConfiguration cfg(parse_complex_list(job.first), parse_complex_list(job.second));
  SecondKindResult r = reconstruct_second_kind(cfg);
  if (job.format != "json") throw ValidationError("wendroff-second-kind supports json output");
  Json j;
  j.open().key("kind").str("wendroff-second-kind").comma();
  j.key("alphas").cx_list(r.word.alphas()).comma();
  j.key("lambda").cxnum(r.lambda).close();
  write_output(job.out, j.take());
  return 0;
}

int run_contraction_invert(const JobSpec& job) {
  CMat a = matrix_from(job);
  double tol = job.tol > 0.0 ? job.tol : 1e-8;
  VerblunskyWord word = contraction_to_verblunsky(a, tol);
  if (job.format != "json") throw ValidationError("contraction-invert supports json output");
  Json j;
  j.open().key("kind").str("contraction-invert").comma().key("alphas").cx_list(word.alphas()).close();
  write_output(job.out, j.take());
  return 0;
}

int run_critical(const JobSpec& job) {
  if (job.points.empty()) throw ValidationError("--points is required");
  CriticalReport rep = critical_feasibility(parse_complex_list(job.points));
  if (job.format != "json") throw ValidationError("critical supports json output");
  Json j;
  j.open().key("kind").str("critical").comma();
  j.key("feasible").boolean(rep.feasible).comma();
  j.key("lambda").cxnum(rep.lambda).comma();
  j.key("residuals").cx_list(rep.residuals).comma();
  j.key("max_residual").num(rep.max_residual).comma();
  j.key("sym").cx_list(rep.sym);
  if (rep.witness) j.comma().key("witness").cx_list(rep.witness->coeffs());
  j.close();
  write_output(job.out, j.take());
  return 0;
}

int run_billiard(const JobSpec& job) {
  cx w0 = unimodular_from(job.start);
  ClosureReport rep;
  std::optional<Ellipse> body;
  if (!job.alphas.empty()) {
    VerblunskyWord word = word_from(job);
    BoundaryCurve sweep = boundary_sweep(word, std::max(64, job.num_lambda));
    rep = billiard_closure(sweep, w0, job.steps);
  } else {
    if (job.foci.empty()) throw ValidationError("--foci or --alphas is required");
    std::vector<cx> foci = parse_complex_list(job.foci);
    if (foci.size() != 2) throw ValidationError("--foci needs exactly two points");
    if (job.ngon >= 3) {
      body = closure_eccentricity(foci[0], foci[1], job.ngon);
      rep = billiard_closure(*body, w0, job.ngon);
    } else {
      if (!(job.semimajor > 0.0)) throw ValidationError("--semimajor or --ngon is required with --foci");
      body = Ellipse(foci[0], foci[1], job.semimajor);
      rep = billiard_closure(*body, w0, job.steps);
    }
  }
  if (job.format == "json") {
    Json j;
    j.open().key("kind").str("billiard").comma();
    j.key("argsum").num(rep.argsum).comma();
    j.key("defect").num(rep.defect).comma();
    j.key("vertices").cx_list(rep.vertices);
    if (body) {
      j.comma().key("foci").cx_list({body->focus1, body->focus2});
      j.comma().key("semimajor").num(body->semimajor);
    }
    j.close();
    write_output(job.out, j.take());
    return 0;
  }
  if (job.format == "csv") {
    Csv csv("index,re,im");
    for (size_t i = 0; i < rep.vertices.size(); ++i)
      csv.row({std::to_string(i), fmt_num(rep.vertices[i].real()), fmt_num(rep.vertices[i].imag())});
    write_output(job.out, csv.take());
    return 0;
  }
  throw ValidationError("billiard supports json or csv output");
}

int run_figure(const JobSpec& job) {
  if (job.eigs.empty()) throw ValidationError("--eigs is required");
  std::vector<cx> eigs = parse_complex_list(job.eigs);
  for (cx e : eigs) {
    if (std::abs(e) >= 1.0) throw ValidationError("eigenvalues must lie strictly inside the disk");
  }
  VerblunskyWord word = verblunsky_from_phi(MonicPoly(from_roots(eigs)));
  int sweep_density = std::max(128, job.num_lambda);
  BoundaryCurve curve = boundary_sweep(word, sweep_density);
  std::vector<PonceletFrame> frames;
  for (int k = 0; k < job.num_lambda; ++k)
    frames.push_back(popuc_zeros(word, unit(kTwoPi * k / job.num_lambda)));
  std::vector<Chord> chords = kippenhahn_chords(word, job.num_lambda);

  std::string prefix = (job.out == "-") ? "figure" : job.out;
  {
    SvgCanvas svg;
    svg.unit_circle();
    for (const PonceletFrame& f : frames) svg.polyline(f.zeros, "#4477aa", 1.0, true, 0.8);
    svg.polyline(curve.samples, "#000000", 2.0, true);
    for (cx e : eigs) svg.dot(e, "#cc3311", 5.0);
    write_output(prefix + "_polygons.svg", svg.take());
  }
  {
    SvgCanvas svg;
    svg.unit_circle();
    for (const Chord& c : chords) svg.segment(c.from, c.to, "#4477aa", 0.6, 0.55);
    svg.polyline(curve.samples, "#000000", 2.0, true);
    for (cx e : eigs) svg.dot(e, "#cc3311", 5.0);
    write_output(prefix + "_chords.svg", svg.take());
  }
  if (!job.data_out.empty()) {
    Json j;
    j.open().key("kind").str("figure").comma().key("word");
    emit_word(j, word);
    j.comma().key("curve");
    emit_curve_body(j, curve);
    j.comma().key("polygons").open_list();
    for (size_t i = 0; i < frames.size(); ++i) {
      if (i) j.comma();
      j.open().key("lambda").cxnum(frames[i].lambda).comma().key("vertices").cx_list(frames[i].zeros).close();
    }
    j.close_list().comma().key("chords").open_list();
    for (size_t i = 0; i < chords.size(); ++i) {
      if (i) j.comma();
      j.open();
      j.key("lambda").cxnum(chords[i].lambda).comma();
      j.key("i").integer(chords[i].i).comma();
      j.key("j").integer(chords[i].j).comma();
      j.key("from").cxnum(chords[i].from).comma();
      j.key("to").cxnum(chords[i].to);
      j.close();
    }
    j.close_list().close();
    write_output(job.data_out, j.take());
  }
  return 0;
}

int run(const JobSpec& job) {
  if (job.command == "opuc") return run_opuc(job);
  if (job.command == "popuc-zeros") return run_frame(job, false);
  if (job.command == "weights") return run_frame(job, true);
  if (job.command == "mfunction") return run_mfunction(job);
  if (job.command == "numrange") return run_numrange(job);
  if (job.command == "polygons") return run_polygons(job);
  if (job.command == "chords") return run_chords(job);
  if (job.command == "wendroff2") return run_wendroff2(job);
  if (job.command == "wendroff-second-kind") return run_wendroff_second_kind(job);
  if (job.command == "contraction-invert") return run_contraction_invert(job);
  if (job.command == "critical") return run_critical(job);
  if (job.command == "billiard") return run_billiard(job);
  if (job.command == "figure") return run_figure(job);
  if (job.command == "schema") {
    write_output(job.out, kSchemaJson);
    return 0;
  }
  throw ValidationError("unknown command: " + job.command);
}

void emit_error(const char* name, const std::string& message) {
  Json j;
  j.open().key("error").str(name).comma().key("message").str(message).close();
  std::string text = j.take();
  std::fwrite(text.data(), 1, text.size(), stderr);
}

}  // namespace
}  // namespace opuc::cli

int main(int argc, char** argv) {
  using namespace opuc::cli;
  CLI::App app{"OPUC / paraorthogonal toolbox: zeros, weights, numerical ranges, inverse problems"};
  app.require_subcommand(1);

  JobSpec job;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", job.out, "output path ('-' for stdout)");
    sub->add_option("--format", job.format, "json | csv | svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--tol", job.tol, "tolerance override where applicable");
  };

  auto* c_opuc = app.add_subcommand("opuc", "Szego recursion: orthogonal polynomials of a word");
  c_opuc->add_option("--alphas", job.alphas, "comma separated interior coefficients")->required();
  c_opuc->add_option("--lambda", job.lambda, "optional terminal parameter")->default_val("");
  add_common(c_opuc);

  auto* c_pz = app.add_subcommand("popuc-zeros", "paraorthogonal zeros and masses for one lambda");
  c_pz->add_option("--alphas", job.alphas)->required();
  c_pz->add_option("--lambda", job.lambda, "unimodular parameter");
  add_common(c_pz);

  auto* c_wt = app.add_subcommand("weights", "zeros plus all weight formulas");
  c_wt->add_option("--alphas", job.alphas)->required();
  c_wt->add_option("--lambda", job.lambda, "unimodular parameter");
  add_common(c_wt);

  auto* c_mf = app.add_subcommand("mfunction", "M-function by partial fractions, rational form and resolvent");
  c_mf->add_option("--alphas", job.alphas)->required();
  c_mf->add_option("--lambda", job.lambda);
  c_mf->add_option("--z", job.zs, "comma separated evaluation points")->required();
  add_common(c_mf);

  auto* c_nr = app.add_subcommand("numrange", "numerical range boundary by the tangent sweep");
  c_nr->add_option("--alphas", job.alphas)->required();
  c_nr->add_option("--lambdas", job.num_lambda, "number of lambda samples");
  c_nr->add_option("--oracle-angles", job.oracle_angles, "include the support oracle at this many angles");
  add_common(c_nr);

  auto* c_pg = app.add_subcommand("polygons", "Poncelet polygons N(U_lambda) over sampled lambda");
  c_pg->add_option("--alphas", job.alphas)->required();
  c_pg->add_option("--lambdas", job.num_lambda);
  add_common(c_pg);

  auto* c_ch = app.add_subcommand("chords", "complete-graph chords of the dilation eigenvalues");
  c_ch->add_option("--alphas", job.alphas)->required();
  c_ch->add_option("--lambdas", job.num_lambda);
  add_common(c_ch);

  auto* c_w2 = app.add_subcommand("wendroff2", "recover the word from two interlacing zero sets");
  c_w2->add_option("--first", job.first)->required();
  c_w2->add_option("--second", job.second)->required();
  add_common(c_w2);

  auto* c_wsk = app.add_subcommand("wendroff-second-kind", "recover the word from first/second kind zeros");
  c_wsk->add_option("--first", job.first, "first kind zeros")->required();
  c_wsk->add_option("--second", job.second, "second kind zeros")->required();
  add_common(c_wsk);

  auto* c_ci = app.add_subcommand("contraction-invert", "Verblunsky word of a defect-one contraction");
  c_ci->add_option("--matrix", job.matrix, "inline JSON or @file with {\"matrix\": [[[re,im],...],...]}")
      ->required();
  add_common(c_ci);

  auto* c_cr = app.add_subcommand("critical", "feasibility of prescribed critical points");
  c_cr->add_option("--points", job.points)->required();
  add_common(c_cr);

  auto* c_bl = app.add_subcommand("billiard", "tangent-chord billiard and Poncelet closure");
  c_bl->add_option("--foci", job.foci, "two foci of the ellipse body");
  c_bl->add_option("--semimajor", job.semimajor, "ellipse semimajor axis");
  c_bl->add_option("--alphas", job.alphas, "use the swept numerical range of this word as the body");
  c_bl->add_option("--start", job.start, "unimodular start point");
  c_bl->add_option("--steps", job.steps, "number of tangent-chord steps");
  c_bl->add_option("--ngon", job.ngon, "solve for the closing ellipse with this many sides");
  c_bl->add_option("--lambdas", job.num_lambda);
  add_common(c_bl);

  auto* c_fig = app.add_subcommand("figure", "SVG figures: outer polygons and complete-graph chords");
  c_fig->add_option("--eigs", job.eigs, "eigenvalues of the operator, e.g. '0.8e34i,0.57e4i,0.7i'")->required();
  c_fig->add_option("--lambdas", job.num_lambda);
  c_fig->add_option("--data", job.data_out, "also write the underlying data as JSON");
  add_common(c_fig);

  auto* c_schema = app.add_subcommand("schema", "print the JSON schema for all artifacts");
  c_schema->add_option("--out", job.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error("ParseError", e.what());
    return 2;
  }

  job.command = app.get_subcommands().front()->get_name();
  try {
    return run(job);
  } catch (const opuc::InputError& e) {
    emit_error(e.name(), e.what());
    return 2;
  } catch (const opuc::SolverFailure& e) {
    emit_error(e.name(), e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error("InternalError", e.what());
    return 3;
  }
}
