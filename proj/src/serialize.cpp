#include "mbraid/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace mbraid {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex parse_complex(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw std::invalid_argument("matrix entry must be [re, im]");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

Json state_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_pair(z));
  return out;
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_pair(m(i, j)));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw std::invalid_argument("matrix JSON needs rows, cols and entries");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw std::invalid_argument("rows and cols must be integers");
  }
  const auto rows = j["rows"].get<long>();
  const auto cols = j["cols"].get<long>();
  if (rows < 1 || cols < 1) throw std::invalid_argument("rows and cols must be positive");
  const Json& e = j["entries"];
  if (!e.is_array()) throw std::invalid_argument("entries must be an array");

  CMatrix m(rows, cols);
  const bool nested = !e.empty() && e[0].is_array() && !e[0].empty() && e[0][0].is_array();
  if (nested) {
    if (static_cast<long>(e.size()) != rows) throw std::invalid_argument("entries: wrong row count");
    for (long r = 0; r < rows; ++r) {
      if (!e[r].is_array() || static_cast<long>(e[r].size()) != cols) {
        throw std::invalid_argument("entries: wrong column count in row " + std::to_string(r));
      }
      for (long c = 0; c < cols; ++c) m(r, c) = parse_complex(e[r][c]);
    }
  } else {
    if (static_cast<long>(e.size()) != rows * cols) {
      throw std::invalid_argument("entries: expected " + std::to_string(rows * cols) +
                                  " values, found " + std::to_string(e.size()));
    }
    for (long r = 0; r < rows; ++r) {
      for (long c = 0; c < cols; ++c) m(r, c) = parse_complex(e[r * cols + c]);
    }
  }
  return m;
}

Json to_json(const VerificationReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj = {{"relation", w.relation}, {"residual", w.residual}};
    if (!w.state.empty()) wj["state"] = state_json(w.state);
    witnesses.push_back(std::move(wj));
  }
  Json out = {{"check", r.check},
              {"family", r.family},
              {"params", r.params},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"pass", r.pass},
              {"witnesses", std::move(witnesses)}};
  if (!r.metrics.empty()) out["metrics"] = r.metrics;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

Json to_json(const UnitaryRep& rep) {
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(matrix_to_json(g));
  Json out = {{"family", rep.family},
              {"strands", rep.strands},
              {"dim", rep.dim},
              {"circular", rep.circular},
              {"generators", std::move(gens)}};
  if (rep.clifford_forms) {
    Json forms = Json::array();
    for (const auto& f : *rep.clifford_forms) forms.push_back(f.to_string());
    out["clifford_forms"] = std::move(forms);
  }
  return out;
}

Json to_json(const GapRecord& g) {
  return {{"theta1_dot", g.theta_dot_1},
          {"theta2_dot", g.theta_dot_2},
          {"gap", g.gap},
          {"N", g.N},
          {"boundary", to_string(g.boundary)}};
}

std::string gap_records_csv(const std::vector<GapRecord>& records) {
  std::ostringstream os;
  os << "theta1_dot,theta2_dot,gap,N,boundary\n";
  os << std::setprecision(17);
  for (const auto& g : records) {
    os << g.theta_dot_1 << ',' << g.theta_dot_2 << ',' << g.gap << ',' << g.N << ','
       << to_string(g.boundary) << '\n';
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mbraid
