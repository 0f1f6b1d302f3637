/// Outcome of comparing two independent evaluations of the same quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerificationReport {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// Relative comparison against `lhs`, falling back to absolute error when
    /// |lhs| < 1e−300.
    pub fn compare(lhs: f64, rhs: f64, tol: f64) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if lhs.abs() < 1e-300 { abs_err } else { abs_err / lhs.abs() };
        let pass = rel_err <= tol;
        VerificationReport { lhs, rhs, abs_err, rel_err, tol, pass }
    }
}
