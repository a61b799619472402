#include "g2flag/reference.hpp"

namespace g2flag {

namespace {

KVec kv(std::initializer_list<std::pair<int, QF13>> entries) {
  KVec v = KVec::Zero();
  for (const auto& [i, c] : entries) v(i) = c;
  return v;
}

// Index aliases for the two bases.
constexpr int X1 = 0, X2 = 1, X3 = 2, Y1 = 3, Y2 = 4, Y3 = 5;
constexpr int W1 = 0, W2 = 1, W3 = 2, Z1 = 3, Z2 = 4, Z3 = 5;

const QF13 kAlpha = QF13::sqrt13() - QF13(2);
const QF13 kBeta = QF13::sqrt13() + QF13(2);

}  // namespace

std::vector<BracketRelation> reference_brackets_xy() {
  const QF13 ft = qf(4, 3);
  return {
      {X1, X2, kv({{X3, 1}})},
      {X1, X3, kv({{X2, -1}})},
      {X1, Y1, kv({{Y2, 1}})},
      {X1, Y2, kv({{Y1, -1}})},
      {X2, X3, kv({{X1, 1}})},
      {X2, Y1, kv({{Y3, 1}})},
      {X2, Y3, kv({{Y1, -1}})},
      {X3, Y2, kv({{Y3, 1}})},
      {X3, Y3, kv({{Y2, -1}})},
      {Y1, Y2, kv({{X1, 1}, {Y3, ft}})},
      {Y1, Y3, kv({{X2, 1}, {Y2, -ft}})},
      {Y2, Y3, kv({{X3, 1}, {Y1, ft}})},
  };
}

std::vector<BracketRelation> reference_brackets_wz() {
  const QF13 h = qf(1, 2);
  return {
      {W1, W2, kv({{W3, h}})},
      {W1, W3, kv({{W2, -h}})},
      {W1, Z1, kv({{Z2, h}})},
      {W1, Z2, kv({{Z1, -h}})},
      {W2, W3, kv({{W1, h}})},
      {W2, Z1, kv({{Z3, h}})},
      {W2, Z3, kv({{Z1, -h}})},
      {W3, Z2, kv({{Z3, h}})},
      {W3, Z3, kv({{Z2, -h}})},
      {Z1, Z2, kv({{W1, h}})},
      {Z1, Z3, kv({{W2, h}})},
      {Z2, Z3, kv({{W3, h}})},
  };
}

KMat reference_killing_xy() {
  KMat g = KMat::Zero();
  for (int i = 0; i < 3; ++i) {
    g(i, i) = QF13(4);
    g(i + 3, i + 3) = qf(68, 9);
  }
  const QF13 c = qf(8, 3);
  g(X1, Y3) = g(Y3, X1) = c;
  g(X2, Y2) = g(Y2, X2) = -c;
  g(X3, Y1) = g(Y1, X3) = c;
  return g;
}

KMat reference_wz_in_xy() {
  KMat m = KMat::Zero();
  const QF13 s13 = QF13::sqrt13();
  const QF13 half = qf(1, 2);
  const QF13 a = qf(3, 2) / s13;  // 3/(2*sqrt13)
  const QF13 b = QF13(1) / s13;   // 1/sqrt13
  for (int i = 0; i < 3; ++i) m(i, i) = half;  // W_i = X_i / 2
  m(Y1, Z1) = a;
  m(X3, Z1) = -b;
  m(Y2, Z2) = a;
  m(X2, Z2) = b;
  m(Y3, Z3) = a;
  m(X1, Z3) = -b;
  return m;
}

std::array<PolyQ, 3> reference_xyz_system() {
  PolyQ x = PolyQ::var(0), y = PolyQ::var(1), z = PolyQ::var(2);
  const QF13 half = qf(1, 2), quarter = qf(1, 4);
  PolyQ px = x * (x * x * (-half) + x * kAlpha.inverse() - y * y * quarter);
  PolyQ py = y * (x * x * (-quarter) + y * kBeta.inverse() - y * y * half);
  PolyQ pz = (z * (-quarter)) * (x * x + y * y);
  return {px, py, pz};
}

std::array<PolyQ, 3> reference_chart_system(ChartId id) {
  const QF13 ia = kAlpha.inverse(), ib = kBeta.inverse();
  const QF13 half = qf(1, 2), quarter = qf(1, 4);
  PolyQ a = PolyQ::var(0), b = PolyQ::var(1), c = PolyQ::var(2);
  PolyQ one(QF13(1));
  switch (id) {
    case ChartId::Kappa1: {
      // variables (x1, r1, z1)
      PolyQ f1 = a * ((b * quarter) * (one - a * a) - PolyQ(ib) + a * ia);
      PolyQ f2 = -(b * (((one * QF13(2) + a * a) * quarter) * b - PolyQ(ib)));
      PolyQ f3 = -((b * c) * quarter) * (one + a * a);
      return {f1, f2, f3};
    }
    case ChartId::U1: {
      PolyQ f1 = a * ((one - a * a) * quarter - c * ia + (a * c) * ib);
      PolyQ f2 = b * (one * quarter - c * ia);
      PolyQ f3 = (c * quarter) * (one * QF13(2) + a * a - c * (QF13(4) * ia));
      return {f1, f2, f3};
    }
    case ChartId::U2: {
      PolyQ f1 = a * ((one - a * a) * quarter - c * ib + (a * c) * ia);
      PolyQ f2 = b * (one * quarter - c * ib);
      PolyQ f3 = (c * quarter) * (one * QF13(2) + a * a - c * (QF13(4) * ib));
      return {f1, f2, f3};
    }
    case ChartId::U3: {
      PolyQ f1 = (a * a) * (a * (-quarter) + c * ia);
      PolyQ f2 = -((b * b) * (b * quarter - c * ib));
      PolyQ f3 = (c * quarter) * (a * a + b * b);
      return {f1, f2, f3};
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<DarbouxPair> reference_darboux_pairs() {
  const QF13 ia = kAlpha.inverse(), ib = kBeta.inverse();
  const QF13 half = qf(1, 2), quarter = qf(1, 4), tq = qf(3, 4);
  PolyQ x = PolyQ::var(0), y = PolyQ::var(1), z = PolyQ::var(2);
  PolyQ x2 = x * x, y2 = y * y;
  std::vector<DarbouxPair> out;
  out.push_back({z * z, x2 * (-half) + y2 * (-half)});
  out.push_back({x * x, x2 * QF13(-1) + y2 * (-half) + x * (QF13(2) * ia)});
  out.push_back({y * y, x2 * (-half) + y2 * QF13(-1) + y * (QF13(2) * ib)});
  out.push_back({x * y, x2 * (-tq) + y2 * (-tq) + x * ia + y * ib});
  out.push_back({x * z, x2 * (-tq) + y2 * (-half) + x * ia});
  out.push_back({y * z, x2 * (-half) + y2 * (-tq) + y * ib});
  out.push_back({x, x2 * (-half) + y2 * (-quarter) + x * ia});
  out.push_back({y, x2 * (-quarter) + y2 * (-half) + y * ib});
  out.push_back({z, (x2 + y2) * (-quarter)});
  return out;
}

}  // namespace g2flag
