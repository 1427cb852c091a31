#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "grpmat/pipeline.hpp"
#include "grpmat/sullivan.hpp"

namespace grpmat::cli {

namespace {

using Json = nlohmann::ordered_json;

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ScaleLimit:
    case ErrorCode::OrderTooLarge:
    case ErrorCode::SizeLimit:
    case ErrorCode::UnsupportedOrder: return kScaleLimit;
    case ErrorCode::UnknownName: return kUsage;
    case ErrorCode::DiagonalTermInStrictMode:
    case ErrorCode::NotClosed:
    case ErrorCode::NotBijective:
    case ErrorCode::MixedContext: return kVerificationFailed;
    default: return kInputFormat;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedFile, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::MalformedFile, "cannot write " + path);
  file << text;
}

// A catalog name, or @path to a group file.
Group load_group(const std::string& source) {
  if (!source.empty() && source.front() == '@') return parse_group(read_file(source.substr(1)));
  return catalog(source);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& os, const RatMatrix& m, const std::string& indent) {
  for (int r = 0; r < m.rows(); ++r) {
    os << indent;
    for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    os << "\n";
  }
}

void print_table(std::ostream& os, const Table& t, const std::string& indent) {
  for (const auto& row : t) {
    os << indent;
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "\n";
  }
}

BuildMode parse_mode(const std::string& s) {
  if (s == "strict") return BuildMode::Strict;
  if (s == "extended") return BuildMode::Extended;
  return BuildMode::Auto;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string group, mode = "auto", out;
  bool canonical = false;
};

int do_build(const BuildArgs& a, std::ostream& out) {
  const Group g = load_group(a.group);
  const BMatrix b = a.canonical ? canonical_B(g).matrix : build_B(g, parse_mode(a.mode));
  write_output(a.out, serialize_B(b), out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string b, report = "text";
  bool emit_x = false;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  const BMatrix b = parse_B(read_file(a.b));
  const auto context = make_context(b);
  const auto solutions = structured_solutions(context);
  const int n = b.n();

  std::optional<SolutionGroup> group;
  std::string group_error;
  try {
    group = solution_group(context);
  } catch (const Error& e) {
    group_error = e.what();
  }

  // The group on 1..n read off from the translations: g_a g_b = sigma_a(b),
  // where sigma_a is the solution labelled a.
  std::optional<PsiReport> psi;
  if (group && group->order() == n) {
    Table induced(n, std::vector<int>(n));
    for (int e = 0; e < n; ++e) {
      const int label = group->labeling[e];
      for (int x = 1; x <= n; ++x) induced[label - 1][x - 1] = group->elements[e].sigma()(x);
    }
    const auto check = validate(induced);
    if (check.ok()) {
      try {
        psi = psi_check(*group, *check.group);
      } catch (const Error&) {
      }
    }
  }

  const LinearCrossCheck linear = cross_check_linear(context);
  const bool ok = group.has_value() && linear.all_contained();

  if (a.report == "json") {
    Json j;
    j["schema"] = 1;
    j["n"] = n;
    j["mode"] = std::string(to_string(b.mode()));
    j["count"] = solutions.size();
    Json list = Json::array();
    for (const auto& s : solutions) {
      Json e;
      e["sigma"] = s.sigma().cycle_string();
      e["images"] = s.sigma().images();
      e["y"] = matrix_json(s.y());
      if (a.emit_x) e["x"] = matrix_json(s.x());
      list.push_back(std::move(e));
    }
    j["solutions"] = std::move(list);
    if (group) {
      j["group_table"] = group->table;
      j["labeling"] = group->labeling;
    } else {
      j["group_table"] = nullptr;
      j["labeling"] = nullptr;
      j["group_error"] = group_error;
    }
    j["psi"] = psi ? Json(psi->verdict()) : Json(nullptr);
    j["linear"] = {{"dimension", linear.space_dimension},
                   {"unknowns", linear.unknowns},
                   {"all_contained", linear.all_contained()}};
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << n << "\n";
    out << "mode: " << to_string(b.mode()) << "\n";
    out << "solutions: " << solutions.size() << "\n";
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      out << "sigma " << i + 1 << ": " << solutions[i].sigma().cycle_string() << "\n";
      out << "  y:\n";
      print_matrix(out, solutions[i].y(), "    ");
      if (a.emit_x) {
        out << "  x:\n";
        print_matrix(out, solutions[i].x(), "    ");
      }
    }
    if (group) {
      out << "group table:\n";
      print_table(out, group->table, "  ");
      out << "labeling:";
      for (int l : group->labeling) out << ' ' << l;
      out << "\n";
    } else {
      out << "solution group: " << group_error << "\n";
    }
    out << "psi: " << (psi ? psi->verdict() : "n/a") << "\n";
    out << "linear space dimension: " << linear.space_dimension << " (unknowns " << linear.unknowns << ")\n";
    out << "linear containment: " << yes_no(linear.all_contained()) << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string group, report = "text";
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Group g = load_group(a.group);
  const VerifyReport r = verify(g);

  if (a.report == "json") {
    Json j;
    j["schema"] = 1;
    j["group"] = a.group;
    j["order"] = r.order;
    j["mode"] = std::string(to_string(r.mode));
    j["solutions"] = r.solutions;
    Json sigmas = Json::array();
    for (const auto& s : r.sigmas) sigmas.push_back(s.cycle_string());
    j["sigmas"] = std::move(sigmas);
    j["matches_cayley"] = r.matches_cayley;
    j["group_valid"] = r.group_valid;
    j["isomorphic"] = r.isomorphic;
    j["psi"] = r.psi ? Json(r.psi->verdict()) : Json(nullptr);
    j["ok"] = r.ok();
    if (!r.ok()) j["failure"] = r.failure;
    Json dz = Json::array();
    for (int k = 1; k <= g.order(); ++k) dz.push_back(sullivan::d_z(k, g).to_string());
    j["dz"] = std::move(dz);
    out << j.dump(2) << "\n";
  } else {
    out << "group: " << a.group << "\n";
    out << "order: " << r.order << "\n";
    out << "mode: " << to_string(r.mode) << "\n";
    out << "sigmas:";
    for (const auto& s : r.sigmas) out << ' ' << s.cycle_string();
    out << "\n";
    out << "left translations: " << yes_no(r.matches_cayley) << "\n";
    out << "solution group valid: " << yes_no(r.group_valid) << "\n";
    out << "psi: " << (r.psi ? r.psi->verdict() : "n/a") << "\n";
    for (int k = 1; k <= g.order(); ++k) out << "d z" << k << " = " << sullivan::d_z(k, g).to_string() << "\n";
    out << "solutions: " << r.solutions << ", isomorphic: " << yes_no(r.isomorphic) << "\n";
    if (!r.ok()) out << "failure: " << r.failure << "\n";
  }
  return r.ok() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct IsoArgs {
  std::string g1, g2, report = "text";
};

int do_iso(const IsoArgs& a, std::ostream& out) {
  const Group g = load_group(a.g1);
  const Group h = load_group(a.g2);
  const IsoReport r = iso_compare(g, h);
  if (a.report == "json") {
    Json j;
    j["schema"] = 1;
    j["g1"] = a.g1;
    j["g2"] = a.g2;
    j["isomorphic"] = r.isomorphic();
    j["canonical_equal"] = r.canonical_equal;
    j["agree"] = r.agree();
    j["witness"] = r.witness ? Json(r.witness->images()) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "isomorphic: " << yes_no(r.isomorphic()) << "; canonical matrices "
        << (r.canonical_equal ? "equal" : "differ") << "\n";
    if (r.witness) out << "witness: " << r.witness->cycle_string() << "\n";
    out << "agreement: " << yes_no(r.agree()) << "\n";
  }
  return r.agree() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct CensusArgs {
  int order = 0;
  std::string report = "text";
};

int do_census(const CensusArgs& a, std::ostream& out) {
  const Census c = census(a.order);
  auto index_of = [&](const BMatrix& m) {
    return static_cast<int>(std::find(c.matrices.begin(), c.matrices.end(), m) - c.matrices.begin()) + 1;
  };
  if (a.report == "json") {
    Json j;
    j["schema"] = 1;
    j["order"] = c.order;
    j["count"] = c.count;
    j["groups"] = c.group_count;
    Json entries = Json::array();
    for (const auto& e : c.entries) {
      entries.push_back({{"name", e.name},
                         {"matrix", index_of(e.form.matrix)},
                         {"ordering", e.form.ordering.images()},
                         {"diagonal_free_ordering_exists", e.form.diagonal_free_ordering_exists}});
    }
    j["entries"] = std::move(entries);
    Json mats = Json::array();
    for (const auto& m : c.matrices) mats.push_back(serialize_B(m));
    j["matrices"] = std::move(mats);
    out << j.dump(2) << "\n";
  } else {
    out << "count: " << c.count << "\n";
    out << "groups: " << c.group_count << "\n";
    for (const auto& e : c.entries) out << e.name << ": matrix " << index_of(e.form.matrix) << "\n";
    for (std::size_t i = 0; i < c.matrices.size(); ++i) {
      out << "matrix " << i + 1 << ":\n" << serialize_B(c.matrices[i]);
    }
  }
  return c.matches_group_count() ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct CohomologyArgs {
  std::string group, report = "text";
};

int do_cohomology(const CohomologyArgs& a, std::ostream& out) {
  const Group g = load_group(a.group);
  const int n = g.order();
  const auto slice = sullivan::cohomology_slice_120(g);
  const auto cert = sullivan::sigma_independence(g);
  const BMatrix b = build_B(g, BuildMode::Auto);
  const RatMatrix bm = sullivan::b_matrix(g);
  const bool consistent = sullivan::restrict_rows(bm, sullivan::sigma_layout(n), b.layout()) == b.to_rat();
  const bool ok = slice.sigma_are_cocycles && cert.independent && consistent;

  if (a.report == "json") {
    Json j;
    j["schema"] = 1;
    j["group"] = a.group;
    j["n"] = n;
    j["monomials"] = {{"119", slice.basis_119.size()}, {"120", slice.basis_120.size()}, {"121", slice.basis_121.size()}};
    j["coboundaries"] = slice.coboundary_basis.size();
    j["cocycles"] = slice.cocycle_basis.size();
    j["dimension"] = slice.dimension();
    j["sigma_are_cocycles"] = slice.sigma_are_cocycles;
    j["sigma_independent"] = cert.independent;
    j["sigma_size"] = cert.sigma_size;
    j["b_matrix_consistent"] = consistent;
    j["b_matrix"] = matrix_json(bm);
    Json dz = Json::array();
    for (int k = 1; k <= n; ++k) dz.push_back(sullivan::d_z(k, g).to_string());
    j["dz"] = std::move(dz);
    out << j.dump(2) << "\n";
  } else {
    out << "group: " << a.group << "\n";
    out << "monomials: 119=" << slice.basis_119.size() << " 120=" << slice.basis_120.size()
        << " 121=" << slice.basis_121.size() << "\n";
    out << "coboundaries: " << slice.coboundary_basis.size() << "\n";
    out << "cocycles: " << slice.cocycle_basis.size() << "\n";
    out << "dimension: " << slice.dimension() << "\n";
    out << "sigma cocycles: " << yes_no(slice.sigma_are_cocycles) << "\n";
    out << "sigma independent: " << yes_no(cert.independent) << " (" << cert.sigma_size << " classes, rank "
        << cert.combined_rank - cert.coboundary_rank << ")\n";
    for (int k = 1; k <= n; ++k) out << "d z" << k << " = " << sullivan::d_z(k, g).to_string() << "\n";
    out << "b matrix:\n";
    const auto layout = sullivan::sigma_layout(n);
    for (int r = 0; r < bm.rows(); ++r) {
      out << "  " << layout[r].to_string() << ":";
      for (int c = 0; c < bm.cols(); ++c) out << ' ' << bm(r, c).get_str();
      out << "\n";
    }
    out << "b matrix matches encoder: " << yes_no(consistent) << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group encoding matrices and the solutions of XB = BY", "grpmat"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats{"text", "json"};

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Write the B-matrix file of a group");
  build_cmd->add_option("--group", build.group, "Catalog name or @path to a group file")->required();
  auto* mode_opt = build_cmd->add_option("--mode", build.mode)->check(CLI::IsMember({"strict", "extended", "auto"}));
  build_cmd->add_flag("--canonical", build.canonical, "Least matrix over identity-fixing orderings")->excludes(mode_opt);
  build_cmd->add_option("--out", build.out, "Output file, - for stdout")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve XB = BY for a B-matrix file");
  solve_cmd->add_option("--b", solve.b, "B-matrix file")->required();
  solve_cmd->add_option("--report", solve.report)->check(CLI::IsMember(formats));
  solve_cmd->add_flag("--emit-x", solve.emit_x, "Include the X matrices");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Encode, solve and compare the solution group with the input");
  verify_cmd->add_option("--group", ver.group)->required();
  verify_cmd->add_option("--report", ver.report)->check(CLI::IsMember(formats));

  IsoArgs iso;
  auto* iso_cmd = app.add_subcommand("iso", "Compare two groups by canonical matrix and by brute force");
  iso_cmd->add_option("--g1", iso.g1)->required();
  iso_cmd->add_option("--g2", iso.g2)->required();
  iso_cmd->add_option("--report", iso.report)->check(CLI::IsMember(formats));

  CensusArgs cen;
  auto* census_cmd = app.add_subcommand("census", "Distinct canonical matrices of a given order");
  census_cmd->add_option("--order", cen.order)->required();
  census_cmd->add_option("--report", cen.report)->check(CLI::IsMember(formats));

  CohomologyArgs coh;
  auto* coh_cmd = app.add_subcommand("cohomology", "Degree-120 cohomology report");
  coh_cmd->add_option("--group", coh.group)->required();
  coh_cmd->add_option("--report", coh.report)->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build_cmd) return do_build(build, out);
    if (*solve_cmd) return do_solve(solve, out);
    if (*verify_cmd) return do_verify(ver, out);
    if (*iso_cmd) return do_iso(iso, out);
    if (*census_cmd) return do_census(cen, out);
    if (*coh_cmd) return do_cohomology(coh, out);
  } catch (const Error& e) {
    err << "grpmat: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace grpmat::cli
