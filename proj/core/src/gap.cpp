#include "compgap/gap.h"

#include <cmath>

#include "compgap/error.h"

namespace compgap {

std::string_view to_string(GapKind kind) {
  switch (kind) {
    case GapKind::Simple: return "SG";
    case GapKind::Absolute: return "AG";
    case GapKind::Squared: return "SQG";
  }
  return "SG";
}

std::string_view to_string(QsSide side) {
  switch (side) {
    case QsSide::OverQualified: return "over";
    case QsSide::UnderQualified: return "under";
    case QsSide::Equilibrium: return "equilibrium";
  }
  return "equilibrium";
}

GapMatrix gap_scores(const ScoreMatrix& weighted_acd, const ScoreMatrix& weighted_rcd, GapKind kind) {
  if (weighted_rcd.rows() != 1) {
    throw Error(ErrorCode::ColumnMismatch, "required scores must form a single row");
  }
  if (weighted_acd.competences() != weighted_rcd.competences()) {
    throw Error(ErrorCode::ColumnMismatch, "acquired and required scores cover different competences");
  }
  const auto req = weighted_rcd.row(0);
  std::vector<double> values(weighted_acd.values().size());
  for (std::size_t r = 0; r < weighted_acd.rows(); ++r) {
    for (std::size_t c = 0; c < weighted_acd.cols(); ++c) {
      const double d = weighted_acd.at(r, c) - req[c];
      double g = d;
      if (kind == GapKind::Absolute) g = std::abs(d);
      if (kind == GapKind::Squared) g = d * d;
      values[r * weighted_acd.cols() + c] = g;
    }
  }
  return {kind, ScoreMatrix(weighted_acd.candidates(), weighted_acd.competences(), std::move(values))};
}

OverUnder soq_suq(std::span<const double> simple_gaps) {
  OverUnder out;
  for (double g : simple_gaps) {
    if (g >= 0.0) {
      out.soq += g;
    } else {
      out.suq += g;
    }
  }
  return out;
}

OverUnder soq_suq(const GapMatrix& gaps, std::size_t row) {
  if (gaps.kind != GapKind::Simple) {
    throw Error(ErrorCode::KindMismatch, "SOQ/SUQ need simple gaps, got " + std::string(to_string(gaps.kind)));
  }
  return soq_suq(gaps.gaps.row(row));
}

MeanGaps msg_mag(double soq, double suq, int n) {
  if (n < 1) throw Error(ErrorCode::NonpositiveN, "number of competences must be positive");
  return {(soq + suq) / n, (soq + std::abs(suq)) / n};
}

std::vector<QualificationPoint> qualification_points(const GapMatrix& gaps) {
  std::vector<QualificationPoint> points;
  points.reserve(gaps.gaps.rows());
  const int n = static_cast<int>(gaps.gaps.cols());
  for (std::size_t r = 0; r < gaps.gaps.rows(); ++r) {
    const auto ou = soq_suq(gaps, r);
    const auto mg = msg_mag(ou.soq, ou.suq, n);
    points.push_back({gaps.gaps.candidates()[r], ou.soq, ou.suq, mg.msg, mg.mag});
  }
  return points;
}

QsGeometry qs_geometry(const QualificationPoint& point) {
  if (point.soq < 0.0 || point.suq > 0.0) {
    throw Error(ErrorCode::SignViolation, "qualification point needs SOQ >= 0 and SUQ <= 0");
  }
  QsGeometry g;
  g.segment = point.soq + point.suq;
  g.manhattan = point.soq + std::abs(point.suq);
  if (g.segment > 0.0) {
    g.side = QsSide::OverQualified;
  } else if (g.segment < 0.0) {
    g.side = QsSide::UnderQualified;
  }
  return g;
}

}  // namespace compgap
