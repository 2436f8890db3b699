use nalgebra::DMatrix;
use serde::Serialize;

use crate::dynamics::{Point, ScalarField};
use crate::error::{Error, Result};

pub const RANK_THRESHOLD: f64 = 1e-6;
pub const PRIMARY_POINT: Point = [1.0, 2.0, 3.0, 5.0, 7.0, 11.0];
pub const FALLBACK_POINT: Point = [2.0, 3.0, 5.0, 7.0, 11.0, 13.0];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointRank {
    pub point: Point,
    pub rank: usize,
    /// Descending.
    pub singular_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub integrals: Vec<String>,
    pub rank: usize,
    pub threshold: f64,
    pub points: Vec<PointRank>,
}

impl RankReport {
    /// Smallest singular value counted in the rank at the deciding point.
    pub fn smallest_retained(&self) -> Option<f64> {
        let best = self.points.iter().find(|p| p.rank == self.rank)?;
        best.singular_values.get(self.rank.checked_sub(1)?).copied()
    }
}

/// Rank of the Jacobian of `integrals` at `point`.
pub fn jacobian_rank(integrals: &[&dyn ScalarField], point: &Point) -> Result<PointRank> {
    let mut rows = Vec::with_capacity(integrals.len());
    for f in integrals {
        let g = f
            .gradient(point)
            .ok_or_else(|| Error::Domain(format!("{} is undefined near {point:?}", f.name())))?;
        rows.push(g);
    }
    let jac = DMatrix::from_fn(rows.len(), 6, |i, j| rows[i][j]);
    let mut singular_values: Vec<f64> = jac.svd(false, false).singular_values.iter().copied().collect();
    singular_values.sort_by(|a, b| b.total_cmp(a));
    let rank = singular_values.iter().filter(|s| **s > RANK_THRESHOLD).count();
    Ok(PointRank {
        point: *point,
        rank,
        singular_values,
    })
}

/// Rank at the primary point, retried at the fallback point when the
/// integrals look dependent there.
pub fn independence_rank(integrals: &[&dyn ScalarField]) -> Result<RankReport> {
    let mut points = vec![jacobian_rank(integrals, &PRIMARY_POINT)?];
    if points[0].rank < integrals.len() {
        points.push(jacobian_rank(integrals, &FALLBACK_POINT)?);
    }
    Ok(RankReport {
        integrals: integrals.iter().map(|f| f.name()).collect(),
        rank: points.iter().map(|p| p.rank).max().unwrap_or(0),
        threshold: RANK_THRESHOLD,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{default_invariants, PolynomialInvariant, WeightedPowerInvariant};
    use crate::vectorfields::ModelType;

    #[test]
    fn dependent_linear_integrals() {
        let fs: Vec<PolynomialInvariant> = ["x4 - x5", "x4 - x6", "x5 - x6"]
            .iter()
            .map(|s| PolynomialInvariant::parse(s).unwrap())
            .collect();
        let refs: Vec<&dyn ScalarField> = fs.iter().map(|f| f as &dyn ScalarField).collect();
        let report = independence_rank(&refs).unwrap();
        assert_eq!(report.rank, 2);
        assert_eq!(report.points.len(), 2);
    }

    #[test]
    fn bianchi_ii_pair() {
        let fs = default_invariants(ModelType::II, 0.5);
        let refs: Vec<&dyn ScalarField> = fs.iter().map(|f| f.as_ref()).collect();
        let report = independence_rank(&refs).unwrap();
        assert_eq!(report.rank, 2);
        assert_eq!(report.points.len(), 1);
    }

    #[test]
    fn domain_error() {
        let h = WeightedPowerInvariant {
            model: ModelType::IX,
            k: 0.5,
        };
        let mut p = PRIMARY_POINT;
        p[0] = 0.0;
        assert!(matches!(jacobian_rank(&[&h], &p), Err(Error::Domain(_))));
    }
}
