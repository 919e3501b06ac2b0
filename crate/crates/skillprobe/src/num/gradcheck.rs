use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Relative-error denominator floor; avoids blow-ups near zero gradients.
const DENOM_FLOOR: f64 = 1e-8;

/// Compares an analytic gradient against entrywise central differences of
/// `f` and returns the maximum relative error, with the denominator floored
/// at `max(|analytic|, |numeric|, 1e-8)`.
pub fn finite_diff_check<T, F>(
    mut f: F,
    at: &Matrix<T>,
    analytic_grad: &Matrix<T>,
    h: f64,
) -> Result<f64>
where
    T: Scalar,
    F: FnMut(&Matrix<T>) -> T,
{
    if h <= 0.0 {
        return Err(Error::Contract("finite_diff_check: h must be positive".into()));
    }
    if at.shape() != analytic_grad.shape() {
        return Err(Error::Shape {
            op: "finite_diff_check",
            left: at.shape(),
            right: analytic_grad.shape(),
        });
    }
    let step = T::from_f64(h);
    let mut point = at.clone();
    let mut max_rel = 0.0f64;
    for idx in 0..at.data().len() {
        let orig = point.data()[idx];
        point.data_mut()[idx] = orig + step;
        let plus = f(&point).as_f64();
        point.data_mut()[idx] = orig - step;
        let minus = f(&point).as_f64();
        point.data_mut()[idx] = orig;
        if !plus.is_finite() || !minus.is_finite() {
            return Err(Error::Numerical(
                "finite_diff_check: objective non-finite at perturbed point".into(),
            ));
        }
        let numeric = (plus - minus) / (2.0 * h);
        let analytic = analytic_grad.data()[idx].as_f64();
        let denom = analytic.abs().max(numeric.abs()).max(DENOM_FLOOR);
        max_rel = max_rel.max((analytic - numeric).abs() / denom);
    }
    Ok(max_rel)
}

/// Directional variant: compares `<analytic, u>` against the central
/// difference of `f` along direction `u`.
pub fn finite_diff_check_directional<T, F>(
    mut f: F,
    at: &Matrix<T>,
    analytic_grad: &Matrix<T>,
    direction: &Matrix<T>,
    h: f64,
) -> Result<f64>
where
    T: Scalar,
    F: FnMut(&Matrix<T>) -> T,
{
    if at.shape() != direction.shape() || at.shape() != analytic_grad.shape() {
        return Err(Error::Shape {
            op: "finite_diff_check_directional",
            left: at.shape(),
            right: direction.shape(),
        });
    }
    let step = T::from_f64(h);
    let mut plus_pt = at.clone();
    plus_pt.axpy(step, direction)?;
    let mut minus_pt = at.clone();
    minus_pt.axpy(-step, direction)?;
    let plus = f(&plus_pt).as_f64();
    let minus = f(&minus_pt).as_f64();
    if !plus.is_finite() || !minus.is_finite() {
        return Err(Error::Numerical(
            "finite_diff_check_directional: objective non-finite at perturbed point".into(),
        ));
    }
    let numeric = (plus - minus) / (2.0 * h);
    let analytic: f64 = analytic_grad
        .data()
        .iter()
        .zip(direction.data())
        .map(|(&g, &u)| g.as_f64() * u.as_f64())
        .sum();
    let denom = analytic.abs().max(numeric.abs()).max(DENOM_FLOOR);
    Ok((analytic - numeric).abs() / denom)
}
