#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compgap/score_matrix.h"

namespace compgap {

// Simple (A - R), absolute |A - R| and squared (A - R)^2 gap functions.
enum class GapKind { Simple, Absolute, Squared };

std::string_view to_string(GapKind kind);

struct GapMatrix {
  GapKind kind = GapKind::Simple;
  ScoreMatrix gaps;
};

// Differences each weighted ACD row against the single weighted RCD row.
// Errors: ColumnMismatch.
GapMatrix gap_scores(const ScoreMatrix& weighted_acd, const ScoreMatrix& weighted_rcd, GapKind kind);

struct OverUnder {
  double soq = 0.0;  // sum of gaps >= 0
  double suq = 0.0;  // sum of gaps < 0, stored signed
};

// Zero gaps count toward SOQ.
OverUnder soq_suq(std::span<const double> simple_gaps);
// Errors: KindMismatch when `gaps` is not a simple-gap matrix.
OverUnder soq_suq(const GapMatrix& gaps, std::size_t row);

struct MeanGaps {
  double msg = 0.0;
  double mag = 0.0;
};

// Errors: NonpositiveN.
MeanGaps msg_mag(double soq, double suq, int n);

struct QualificationPoint {
  std::string candidate;
  double soq = 0.0;
  double suq = 0.0;
  double msg = 0.0;
  double mag = 0.0;
};

// One point per row of a simple-gap matrix. Errors: KindMismatch.
std::vector<QualificationPoint> qualification_points(const GapMatrix& gaps);

enum class QsSide { OverQualified, UnderQualified, Equilibrium };

std::string_view to_string(QsSide side);

struct QsGeometry {
  // Length of the horizontal plus vertical segment to the diagonal, signed: SOQ + SUQ.
  double segment = 0.0;
  // Manhattan distance to the origin: SOQ + |SUQ|.
  double manhattan = 0.0;
  QsSide side = QsSide::Equilibrium;
};

// Errors: SignViolation when SOQ < 0 or SUQ > 0.
QsGeometry qs_geometry(const QualificationPoint& point);

}  // namespace compgap
