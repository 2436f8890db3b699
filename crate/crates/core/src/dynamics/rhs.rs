use crate::vectorfields::ModelType;

pub type Point = [f64; 6];

/// The quadratic form `F` in floating point.
pub fn quadratic_form(n: [f64; 3], x: &Point) -> f64 {
    let (a, b, c) = (n[0] * x[0], n[1] * x[1], n[2] * x[2]);
    a * a + b * b + c * c - 2.0 * (a * b + a * c + b * c) + x[3] * x[3] + x[4] * x[4] + x[5] * x[5]
        - 2.0 * (x[3] * x[4] + x[4] * x[5] + x[3] * x[5])
}

pub fn structure_f64(model: ModelType) -> [f64; 3] {
    model.structure_constants().map(|n| n as f64)
}

/// Right-hand side of the Bianchi system.
pub fn rhs(model: ModelType, k: f64, x: &Point) -> Point {
    let n = structure_f64(model);
    let (a, b, c) = (n[0] * x[0], n[1] * x[1], n[2] * x[2]);
    let matter = (k - 1.0) / 4.0 * quadratic_form(n, x);
    [
        x[0] * (-x[3] + x[4] + x[5]),
        x[1] * (x[3] - x[4] + x[5]),
        x[2] * (x[3] + x[4] - x[5]),
        a * (a - b - c) + matter,
        b * (-a + b - c) + matter,
        c * (-a - b + c) + matter,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ix_at_ones() {
        let d = rhs(ModelType::IX, 0.5, &[1.0; 6]);
        assert_eq!(d[3], -0.25);
    }

    #[test]
    fn bianchi_i_at_rest() {
        let d = rhs(ModelType::I, 0.3, &[1.0, 2.0, 3.0, 0.0, 0.0, 0.0]);
        assert_eq!(&d[3..], &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn bianchi_ii_difference() {
        let d = rhs(ModelType::II, 0.0, &[1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(d[3] - d[4], 1.0);
    }
}
