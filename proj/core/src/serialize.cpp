#include "qgeo/serialize.hpp"

#include <charconv>
#include <ostream>

#include "qgeo/error.hpp"

namespace qgeo {

namespace {

const json& require(const json& j, const char* key, const char* who) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::Validation, std::string(who) + ": missing key \"" + key + "\"");
  }
  return j.at(key);
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* who) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(ErrorKind::Validation, std::string(who) + ": unknown key \"" + key + "\"");
  }
}

template <class T>
T get_as(const json& j, const char* key, const char* who) {
  try {
    return require(j, key, who).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::Validation, std::string(who) + ": key \"" + key + "\" has the wrong type");
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ii.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const json& j) {
  reject_unknown(j, {"dim", "re", "im"}, "matrix");
  const auto n = get_as<long>(j, "dim", "matrix");
  if (n < 1) fail(ErrorKind::Validation, "matrix: dim must be positive");
  const auto re = get_as<std::vector<std::vector<double>>>(j, "re", "matrix");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = get_as<std::vector<std::vector<double>>>(j, "im", "matrix");
  auto check = [n](const std::vector<std::vector<double>>& rows) {
    if (static_cast<long>(rows.size()) != n) fail(ErrorKind::Shape, "matrix: wrong row count");
    for (const auto& r : rows) {
      if (static_cast<long>(r.size()) != n) fail(ErrorKind::Shape, "matrix: wrong column count");
    }
  };
  check(re);
  if (!im.empty()) check(im);
  Matrix m(n, n);
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k < n; ++k) {
      m(i, k) = cplx(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                     im.empty() ? 0.0 : im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    }
  }
  return m;
}

json loop_to_json(const MixedLoop& loop) {
  json states = json::array();
  for (const auto& s : loop.samples) states.push_back(matrix_to_json(s.mat()));
  return {{"closed", loop.closed}, {"params", loop.params}, {"states", std::move(states)}};
}

MixedLoop mixed_loop_from_json(const json& j) {
  reject_unknown(j, {"closed", "params", "states"}, "loop");
  MixedLoop loop;
  loop.closed = get_as<bool>(j, "closed", "loop");
  if (j.contains("params")) loop.params = get_as<std::vector<double>>(j, "params", "loop");
  for (const auto& s : require(j, "states", "loop")) {
    loop.samples.emplace_back(matrix_from_json(s));
  }
  return loop;
}

json loop_to_json(const PureLoop& loop) {
  json states = json::array();
  for (const auto& s : loop.samples) states.push_back(matrix_to_json(s.rep() * s.rep().adjoint()));
  return {{"closed", loop.closed}, {"params", loop.params}, {"states", std::move(states)}};
}

PureLoop pure_loop_from_json(const json& j) {
  reject_unknown(j, {"closed", "params", "states"}, "loop");
  PureLoop loop;
  loop.closed = get_as<bool>(j, "closed", "loop");
  if (j.contains("params")) loop.params = get_as<std::vector<double>>(j, "params", "loop");
  for (const auto& s : require(j, "states", "loop")) {
    const Matrix p = matrix_from_json(s);
    if (max_abs(p * p - p) > 1e-8) fail(ErrorKind::Validation, "loop: state is not a projector");
    Eigen::Index best = 0;
    p.colwise().norm().maxCoeff(&best);
    loop.samples.push_back(PureState::normalized(p.col(best)));
  }
  return loop;
}

json grid_to_json(const TorusGrid& grid) { return {{"dims", grid.dims()}}; }

TorusGrid grid_from_json(const json& j) {
  reject_unknown(j, {"dims"}, "grid");
  return TorusGrid(get_as<std::vector<int>>(j, "dims", "grid"));
}

namespace {

std::string kind_name(FiberKind k) {
  switch (k) {
    case FiberKind::Projector: return "projector";
    case FiberKind::Density: return "density";
    case FiberKind::Hermitian: return "hermitian";
  }
  return "density";
}

FiberKind kind_from(const std::string& s) {
  if (s == "projector") return FiberKind::Projector;
  if (s == "density") return FiberKind::Density;
  if (s == "hermitian") return FiberKind::Hermitian;
  fail(ErrorKind::Validation, "field: unknown kind \"" + s + "\"");
}

}  // namespace

json field_to_json(const FiberField& field) {
  json values = json::array();
  for (const auto& v : field.values) values.push_back(matrix_to_json(v));
  return {{"grid", grid_to_json(field.grid)}, {"kind", kind_name(field.kind)},
          {"values", std::move(values)}};
}

FiberField field_from_json(const json& j) {
  reject_unknown(j, {"grid", "kind", "values"}, "field");
  FiberField field{grid_from_json(require(j, "grid", "field")), FiberKind::Density, {}};
  if (j.contains("kind")) field.kind = kind_from(get_as<std::string>(j, "kind", "field"));
  for (const auto& v : require(j, "values", "field")) field.values.push_back(matrix_from_json(v));
  field.validate();
  return field;
}

BlochModel model_from_json(const json& j) {
  const auto type = get_as<std::string>(j, "type", "model");
  if (type == "qwz") {
    reject_unknown(j, {"type", "m"}, "model");
    return qwz_model(get_as<double>(j, "m", "model"));
  }
  if (type == "two_band_d") {
    reject_unknown(j, {"type", "d"}, "model");
    const auto& d = require(j, "d", "model");
    if (!d.is_array() || d.size() != 3) {
      fail(ErrorKind::Validation, "model: \"d\" must hold three component lists");
    }
    std::array<std::vector<Harmonic>, 3> comps;
    for (std::size_t a = 0; a < 3; ++a) {
      for (const auto& term : d[a]) {
        if (!term.is_array() || term.size() != 4) {
          fail(ErrorKind::Validation, "model: harmonic term must be [n1, n2, cos, sin]");
        }
        comps[a].push_back({{term[0].get<int>(), term[1].get<int>()},
                            term[2].get<double>(), term[3].get<double>()});
      }
    }
    return two_band_model(comps);
  }
  fail(ErrorKind::Validation, "model: unknown type \"" + type + "\"");
}

RingLattice ring_from_json(const json& j) {
  reject_unknown(j, {"L", "N", "intra", "inter", "a"}, "ring");
  RingLattice lat;
  lat.cells = get_as<int>(j, "L", "ring");
  lat.orbitals = get_as<int>(j, "N", "ring");
  lat.intra = matrix_from_json(require(j, "intra", "ring"));
  lat.inter = matrix_from_json(require(j, "inter", "ring"));
  if (j.contains("a")) lat.period = get_as<double>(j, "a", "ring");
  lat.validate();
  return lat;
}

json ring_to_json(const RingLattice& lattice) {
  return {{"L", lattice.cells}, {"N", lattice.orbitals}, {"intra", matrix_to_json(lattice.intra)},
          {"inter", matrix_to_json(lattice.inter)}, {"a", lattice.period}};
}

std::string format_number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string CsvWriter::quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << quote(fields[i]);
  }
  out_ << '\n';
}

void write_invariant_csv(std::ostream& out, const std::vector<InvariantRow>& rows) {
  CsvWriter csv(out);
  csv.row({"family_id", "mesh", "invariant_name", "raw_value", "rounded", "residual"});
  for (const auto& r : rows) {
    csv.row({r.family_id, r.mesh, r.invariant_name, format_number(r.raw_value),
             std::to_string(r.rounded), format_number(r.residual)});
  }
}

}  // namespace qgeo
