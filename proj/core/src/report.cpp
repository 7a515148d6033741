#include "cuweno/report.hpp"

#include <cstdio>
#include <iomanip>

namespace cuweno {

std::string sci(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void put_row(std::ostream& os, const std::vector<double>& row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) os << ',';
    os << sci(row[k], 10);
  }
  os << '\n';
}

}  // namespace

void write_snapshot_csv(const Snapshot& s, std::ostream& os) {
  const Grid& g = s.grid;
  switch (s.equations) {
    case EquationKind::advection: os << "x,u\n"; break;
    case EquationKind::euler1d: os << "x,rho,rho_u,E,u,p\n"; break;
    case EquationKind::euler2d: os << "x,y,rho,rho_u,rho_v,E,u,v,p\n"; break;
  }
  std::vector<double> row;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (s.mask && s.mask->solid(g, i, j)) continue;
      row.clear();
      row.push_back(g.xc(i));
      if (g.dim == 2) row.push_back(g.yc(j));
      for (std::size_t v = 0; v < s.nvar(); ++v) row.push_back(s.at(i, j, v));
      if (s.equations == EquationKind::euler1d) {
        const auto w = Euler1D{}.to_primitive({s.at(i, j, 0), s.at(i, j, 1), s.at(i, j, 2)});
        row.push_back(w.u);
        row.push_back(w.p);
      } else if (s.equations == EquationKind::euler2d) {
        const auto w = Euler2D{}.to_primitive(
            {s.at(i, j, 0), s.at(i, j, 1), s.at(i, j, 2), s.at(i, j, 3)});
        row.push_back(w.u);
        row.push_back(w.v);
        row.push_back(w.p);
      }
      put_row(os, row);
    }
}

void write_error_table(const ErrorReport& r, std::ostream& os) {
  os << "# " << r.problem << "  " << r.scheme << '\n';
  os << std::setw(6) << "N";
  for (const char* name : {"L1", "L2", "Linf"})
    os << std::setw(12) << name << std::setw(9) << "order";
  os << '\n';
  for (std::size_t k = 0; k < r.errors.size(); ++k) {
    os << std::setw(6) << r.resolutions[k];
    for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
      os << std::setw(12) << sci(r.errors[k].get(n), 2);
      const auto ord = r.order(k, n);
      os << std::setw(9) << (ord ? fixed(*ord, 4) : std::string("--"));
    }
    os << '\n';
  }
}

void write_error_csv(const ErrorReport& r, std::ostream& os) {
  os << "n,l1,l1_order,l2,l2_order,linf,linf_order\n";
  for (std::size_t k = 0; k < r.errors.size(); ++k) {
    os << r.resolutions[k];
    for (Norm n : {Norm::l1, Norm::l2, Norm::linf}) {
      os << ',' << sci(r.errors[k].get(n), 10) << ',';
      if (const auto ord = r.order(k, n)) os << fixed(*ord, 6);
    }
    os << '\n';
  }
}

void write_comparison_table(const SchemeErrors& e, std::ostream& os) {
  os << std::setw(6) << "Error";
  for (const auto& [name, norms] : e) os << std::setw(12) << name;
  os << '\n';
  const std::pair<Norm, const char*> rows[] = {
      {Norm::l1, "L1"}, {Norm::l2, "L2"}, {Norm::linf, "Linf"}};
  for (const auto& [norm, label] : rows) {
    os << std::setw(6) << label;
    for (const auto& [name, norms] : e) os << std::setw(12) << sci(norms.get(norm), 3);
    os << '\n';
  }
}

void write_comparison_csv(const SchemeErrors& e, std::ostream& os) {
  os << "norm";
  for (const auto& [name, norms] : e) os << ',' << name;
  os << '\n';
  const std::pair<Norm, const char*> rows[] = {
      {Norm::l1, "l1"}, {Norm::l2, "l2"}, {Norm::linf, "linf"}};
  for (const auto& [norm, label] : rows) {
    os << label;
    for (const auto& [name, norms] : e) os << ',' << sci(norms.get(norm), 10);
    os << '\n';
  }
}

}  // namespace cuweno
