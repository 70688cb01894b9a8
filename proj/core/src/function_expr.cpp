#include "phin/function_expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "phin/error.hpp"
#include "phin/hilbert.hpp"
#include "phin/kernel.hpp"
#include "phin/subspace.hpp"
#include "phin/transform.hpp"

namespace phin {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void add_mirrored(std::vector<double>& out, double p, double lo, double hi) {
  if (p >= lo && p <= hi) out.push_back(p);
  if (p != 0.0 && -p >= lo && -p <= hi) out.push_back(-p);
}

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace

struct FunctionExpr::Node {
  virtual ~Node() = default;
  virtual std::complex<double> eval(double t) const = 0;
  virtual Parity parity() const = 0;
  virtual TailClass tail() const = 0;
  virtual double radius(double tol) const = 0;
  virtual void breaks(double lo, double hi, std::vector<double>& out) const = 0;
  virtual std::string describe() const = 0;
};

namespace {

using Node = FunctionExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

struct NGaussian final : Node {
  int n;
  explicit NGaussian(int n_) : n(n_) { Order check(n_); }
  std::complex<double> eval(double t) const override { return std::exp(-std::pow(t * t, n) / (2.0 * n)); }
  Parity parity() const override { return Parity::even; }
  TailClass tail() const override { return TailClass::rapid; }
  double radius(double tol) const override {
    const double l = std::log(1.0 / std::min(tol, 0.5));
    return std::pow(2.0 * n * l, 1.0 / (2.0 * n));
  }
  void breaks(double, double, std::vector<double>&) const override {}
  std::string describe() const override { return "ngauss:" + std::to_string(n); }
};

struct HaarEven final : Node {
  HaarIndex idx;
  explicit HaarEven(HaarIndex i) : idx(i) {}
  std::complex<double> eval(double t) const override { return atom_even_eval(idx, t); }
  Parity parity() const override { return Parity::even; }
  TailClass tail() const override { return TailClass::compact; }
  double radius(double) const override { return idx.outer(); }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    add_mirrored(out, idx.outer(), lo, hi);
    if (idx.k > 0) add_mirrored(out, idx.inner(), lo, hi);
  }
  std::string describe() const override {
    return "haar+:" + std::to_string(idx.j) + ":" + std::to_string(idx.k);
  }
};

struct HaarOdd final : Node {
  HaarIndex idx;
  explicit HaarOdd(HaarIndex i) : idx(i) {}
  std::complex<double> eval(double t) const override { return odd_atom_eval(idx.j, idx.k, t); }
  Parity parity() const override { return Parity::odd; }
  TailClass tail() const override { return TailClass::algebraic; }
  double radius(double) const override { return kInf; }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    add_mirrored(out, idx.outer(), lo, hi);
    if (idx.k > 0) add_mirrored(out, idx.inner(), lo, hi);
  }
  std::string describe() const override {
    return "haar-:" + std::to_string(idx.j) + ":" + std::to_string(idx.k);
  }
};

struct Eigen final : Node {
  EigenSpec spec;
  explicit Eigen(EigenSpec s) : spec(s) {
    eigenfunction_eval(spec, 0.0);  // validates m
  }
  std::complex<double> eval(double t) const override { return eigenfunction_eval(spec, t); }
  Parity parity() const override { return Parity::even; }
  TailClass tail() const override { return TailClass::rapid; }
  double radius(double tol) const override {
    // Walk outward past the last point where |f| exceeds tol.
    const int n = spec.n.value();
    double r = NGaussian(n).radius(tol);
    while (std::fabs(eigenfunction_eval(spec, r)) > tol || std::fabs(eigenfunction_eval(spec, 1.1 * r)) > tol)
      r *= 1.1;
    return r;
  }
  void breaks(double, double, std::vector<double>&) const override {}
  std::string describe() const override {
    return "eigen:" + std::to_string(spec.n.value()) + ":" + std::to_string(spec.m);
  }
};

struct Dilate final : Node {
  double alpha;
  NodePtr f;
  double inv_root;
  Dilate(double a, NodePtr g) : alpha(a), f(std::move(g)), inv_root(1.0 / std::sqrt(a)) {}
  std::complex<double> eval(double t) const override { return f->eval(t / alpha) * inv_root; }
  Parity parity() const override { return f->parity(); }
  TailClass tail() const override { return f->tail(); }
  double radius(double tol) const override { return alpha * f->radius(tol / inv_root); }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    std::vector<double> inner;
    f->breaks(lo / alpha, hi / alpha, inner);
    for (double p : inner) out.push_back(p * alpha);
  }
  std::string describe() const override { return "dilate:" + format_number(alpha) + ":(" + f->describe() + ")"; }
};

struct Shift final : Node {
  double s;
  NodePtr f;
  Shift(double s_, NodePtr g) : s(s_), f(std::move(g)) {}
  std::complex<double> eval(double t) const override { return f->eval(t - s); }
  Parity parity() const override { return s == 0.0 ? f->parity() : Parity::none; }
  TailClass tail() const override { return f->tail(); }
  double radius(double tol) const override { return std::fabs(s) + f->radius(tol); }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    std::vector<double> inner;
    f->breaks(lo - s, hi - s, inner);
    for (double p : inner) out.push_back(p + s);
  }
  std::string describe() const override { return "shift:" + format_number(s) + ":(" + f->describe() + ")"; }
};

Parity combine_product(Parity a, Parity b) {
  if (a == Parity::none || b == Parity::none) return Parity::none;
  return a == b ? Parity::even : Parity::odd;
}

TailClass faster(TailClass a, TailClass b) {
  if (a == TailClass::compact || b == TailClass::compact) return TailClass::compact;
  if (a == TailClass::rapid || b == TailClass::rapid) return TailClass::rapid;
  return TailClass::algebraic;
}

struct Product final : Node {
  NodePtr f;
  NodePtr g;
  Product(NodePtr a, NodePtr b) : f(std::move(a)), g(std::move(b)) {}
  std::complex<double> eval(double t) const override {
    const std::complex<double> a = f->eval(t);
    if (a == 0.0) return 0.0;
    return a * g->eval(t);
  }
  Parity parity() const override { return combine_product(f->parity(), g->parity()); }
  TailClass tail() const override { return faster(f->tail(), g->tail()); }
  double radius(double tol) const override {
    // Factors are assumed bounded by O(1) far out; the margin absorbs that.
    return std::min(f->radius(tol * 1e-2), g->radius(tol * 1e-2));
  }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    f->breaks(lo, hi, out);
    g->breaks(lo, hi, out);
  }
  std::string describe() const override { return "product:(" + f->describe() + ")*(" + g->describe() + ")"; }
};

struct Sum final : Node {
  std::vector<std::pair<std::complex<double>, NodePtr>> terms;
  explicit Sum(std::vector<std::pair<std::complex<double>, NodePtr>> t) : terms(std::move(t)) {}
  std::complex<double> eval(double t) const override {
    std::complex<double> acc;
    for (const auto& [w, f] : terms)
      if (w != 0.0) acc += w * f->eval(t);
    return acc;
  }
  Parity parity() const override {
    std::optional<Parity> p;
    for (const auto& [w, f] : terms) {
      if (w == 0.0) continue;
      if (!p) p = f->parity();
      else if (*p != f->parity()) return Parity::none;
    }
    return p.value_or(Parity::even);
  }
  TailClass tail() const override {
    TailClass worst = TailClass::compact;
    for (const auto& [w, f] : terms) {
      if (w == 0.0) continue;
      const TailClass c = f->tail();
      if (c == TailClass::algebraic) return c;
      if (c == TailClass::rapid) worst = c;
    }
    return worst;
  }
  double radius(double tol) const override {
    double r = 0.0;
    const double share = tol / static_cast<double>(std::max<std::size_t>(terms.size(), 1));
    for (const auto& [w, f] : terms)
      if (w != 0.0) r = std::max(r, f->radius(share / std::abs(w)));
    return r;
  }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    for (const auto& [w, f] : terms)
      if (w != 0.0) f->breaks(lo, hi, out);
  }
  std::string describe() const override {
    std::string s = "sum:";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) s += "+";
      const auto w = terms[i].first;
      s += (w.imag() == 0.0 ? format_number(w.real()) : "(" + format_number(w.real()) + "," + format_number(w.imag()) + ")");
      s += "*(" + terms[i].second->describe() + ")";
    }
    return s;
  }
};

struct Samples final : Node {
  SampledGrid grid;
  explicit Samples(SampledGrid g) : grid(std::move(g)) {
    if (grid.size() < 2) throw ShapeError("samples: need at least two points");
    if (!(grid.spacing > 0.0)) throw ShapeError("samples: spacing must be positive");
  }
  std::complex<double> eval(double t) const override { return grid.interpolate(t); }
  Parity parity() const override { return Parity::none; }
  TailClass tail() const override { return TailClass::compact; }
  double radius(double) const override { return std::max(std::fabs(grid.origin), std::fabs(grid.last())); }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    for (double p : {grid.origin, grid.last()})
      if (p >= lo && p <= hi) out.push_back(p);
  }
  std::string describe() const override { return "samples:<" + std::to_string(grid.size()) + " points>"; }
};

struct Coeffs final : Node {
  HaarCoeffs c;
  explicit Coeffs(HaarCoeffs cc) : c(std::move(cc)) {}
  std::complex<double> eval(double t) const override { return reconstruct_eval(c, t); }
  Parity parity() const override {
    if (c.odd_only()) return Parity::odd;
    if (c.even_only()) return Parity::even;
    return Parity::none;
  }
  TailClass tail() const override { return c.even_only() ? TailClass::compact : TailClass::algebraic; }
  double radius(double) const override {
    return c.even_only() ? std::ldexp(static_cast<double>(c.size()), -c.j()) : kInf;
  }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    for (std::size_t p = 0; p <= c.size(); ++p) {
      const double x = std::ldexp(static_cast<double>(p), -c.j());
      add_mirrored(out, x, lo, hi);
    }
  }
  std::string describe() const override {
    return "coeffs:j=" + std::to_string(c.j()) + ",kmax=" + std::to_string(c.kmax());
  }
};

struct Custom final : Node {
  std::function<std::complex<double>(double)> fn;
  Parity par;
  TailClass cls;
  double rad;
  std::vector<double> pts;
  std::string name;
  Custom(std::function<std::complex<double>(double)> f, Parity p, TailClass c, double r, std::vector<double> b,
         std::string nm)
      : fn(std::move(f)), par(p), cls(c), rad(r), pts(std::move(b)), name(std::move(nm)) {}
  std::complex<double> eval(double t) const override { return fn(t); }
  Parity parity() const override { return par; }
  TailClass tail() const override { return cls; }
  double radius(double) const override { return cls == TailClass::algebraic ? kInf : rad; }
  void breaks(double lo, double hi, std::vector<double>& out) const override {
    for (double p : pts)
      if (p >= lo && p <= hi) out.push_back(p);
  }
  std::string describe() const override { return name; }
};

}  // namespace

std::complex<double> FunctionExpr::operator()(double t) const { return node_->eval(t); }
Parity FunctionExpr::parity() const noexcept { return node_->parity(); }
TailClass FunctionExpr::tail() const noexcept { return node_->tail(); }

double FunctionExpr::decay_radius(double tol) const {
  if (!(tol > 0.0)) throw DomainError("decay_radius: tolerance must be positive");
  return node_->radius(tol);
}

std::vector<double> FunctionExpr::breakpoints(double lo, double hi) const {
  std::vector<double> out;
  node_->breaks(lo, hi, out);
  sort_unique(out);
  return out;
}

std::string FunctionExpr::describe() const { return node_->describe(); }

FunctionExpr FunctionExpr::n_gaussian(int n) { return FunctionExpr(std::make_shared<NGaussian>(n)); }
FunctionExpr FunctionExpr::haar_even(HaarIndex idx) { return FunctionExpr(std::make_shared<HaarEven>(idx)); }
FunctionExpr FunctionExpr::haar_odd(HaarIndex idx) { return FunctionExpr(std::make_shared<HaarOdd>(idx)); }
FunctionExpr FunctionExpr::eigen(int n, int m) {
  return FunctionExpr(std::make_shared<Eigen>(EigenSpec(Order(n), m)));
}

FunctionExpr FunctionExpr::dilate(double alpha, FunctionExpr f) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("dilate: alpha must be positive and finite");
  return FunctionExpr(std::make_shared<Dilate>(alpha, std::move(f.node_)));
}

FunctionExpr FunctionExpr::shift(double s, FunctionExpr f) {
  if (!std::isfinite(s)) throw DomainError("shift: non-finite offset");
  return FunctionExpr(std::make_shared<Shift>(s, std::move(f.node_)));
}

FunctionExpr FunctionExpr::product(FunctionExpr f, FunctionExpr g) {
  return FunctionExpr(std::make_shared<Product>(std::move(f.node_), std::move(g.node_)));
}

FunctionExpr FunctionExpr::sum(std::vector<std::pair<std::complex<double>, FunctionExpr>> terms) {
  if (terms.empty()) throw DomainError("sum: needs at least one term");
  std::vector<std::pair<std::complex<double>, NodePtr>> nodes;
  nodes.reserve(terms.size());
  for (auto& [w, f] : terms) nodes.emplace_back(w, std::move(f.node_));
  return FunctionExpr(std::make_shared<Sum>(std::move(nodes)));
}

FunctionExpr FunctionExpr::scaled(std::complex<double> weight, FunctionExpr f) {
  return sum({{weight, std::move(f)}});
}

FunctionExpr FunctionExpr::samples(SampledGrid grid) { return FunctionExpr(std::make_shared<Samples>(std::move(grid))); }

FunctionExpr FunctionExpr::haar_coeffs(HaarCoeffs c) { return FunctionExpr(std::make_shared<Coeffs>(std::move(c))); }

FunctionExpr FunctionExpr::custom(std::function<std::complex<double>(double)> fn, Parity parity, TailClass tail,
                                  double radius, std::vector<double> breakpoints, std::string name) {
  return FunctionExpr(std::make_shared<Custom>(std::move(fn), parity, tail, radius, std::move(breakpoints),
                                               std::move(name)));
}

}  // namespace phin
