use thiserror::Error;

use crate::geometry::Point2D;

/// Threshold on the determinant of the scaled normal matrix below which the
/// anchor geometry is treated as rank deficient.
pub const COLLINEARITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("multilateration needs at least 3 anchors, got {0}")]
    Arity(usize),
    #[error("{anchors} anchors but {distances} distances")]
    LengthMismatch { anchors: usize, distances: usize },
    #[error("distance {0} is negative or not finite")]
    InvalidDistance(f64),
    #[error("anchors are collinear (scaled determinant {determinant:e})")]
    CollinearAnchors { determinant: f64 },
}

/// Least-squares position from distances to three or more anchors.
///
/// The last anchor is the reference: subtracting its circle equation from
/// every other one leaves a linear system in the offset `(u, v)` from the
/// reference,
///
/// ```text
/// Δx_i·u + Δy_i·v = (Δx_i² + Δy_i² + d_ref² − d_i²) / 2
/// ```
///
/// Each row is divided by `scale_length` (the field diagonal in practice) so
/// the normal-matrix determinant is dimensionless and comparable against
/// [`COLLINEARITY_TOLERANCE`]. The 2×2 normal equations are solved directly.
pub fn multilaterate(
    anchors: &[Point2D],
    distances: &[f64],
    scale_length: f64,
) -> Result<Point2D, SolverError> {
    if anchors.len() != distances.len() {
        return Err(SolverError::LengthMismatch {
            anchors: anchors.len(),
            distances: distances.len(),
        });
    }
    if anchors.len() < 3 {
        return Err(SolverError::Arity(anchors.len()));
    }
    if let Some(&d) = distances.iter().find(|d| !(d.is_finite() && **d >= 0.0)) {
        return Err(SolverError::InvalidDistance(d));
    }

    let (reference, others) = anchors.split_last().expect("len >= 3");
    let d_ref = distances[distances.len() - 1];

    let (mut saa, mut sab, mut sbb, mut sac, mut sbc) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (anchor, d) in others.iter().zip(distances) {
        let dx = anchor.x() - reference.x();
        let dy = anchor.y() - reference.y();
        let a = dx / scale_length;
        let b = dy / scale_length;
        let c = (dx * dx + dy * dy + d_ref * d_ref - d * d) / (2.0 * scale_length);
        saa += a * a;
        sab += a * b;
        sbb += b * b;
        sac += a * c;
        sbc += b * c;
    }

    let determinant = saa * sbb - sab * sab;
    if determinant < COLLINEARITY_TOLERANCE {
        return Err(SolverError::CollinearAnchors { determinant });
    }
    let u = (sac * sbb - sbc * sab) / determinant;
    let v = (saa * sbc - sab * sac) / determinant;
    Point2D::try_new(reference.x() + u, reference.y() + v)
        .map_err(|_| SolverError::CollinearAnchors { determinant })
}
