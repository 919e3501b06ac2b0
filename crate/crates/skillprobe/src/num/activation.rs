use serde::{Deserialize, Serialize};

use super::{Matrix, Scalar};

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// Exact (erf-based) GELU: `x * Phi(x)`.
pub fn gelu<T: Scalar>(x: T) -> T {
    let v = x.as_f64();
    T::from_f64(v * 0.5 * (1.0 + libm::erf(v / SQRT_2)))
}

/// Derivative of [`gelu`]: `Phi(x) + x * phi(x)`.
pub fn gelu_grad<T: Scalar>(x: T) -> T {
    let v = x.as_f64();
    let cdf = 0.5 * (1.0 + libm::erf(v / SQRT_2));
    let pdf = INV_SQRT_2PI * (-0.5 * v * v).exp();
    T::from_f64(cdf + v * pdf)
}

pub fn relu<T: Scalar>(x: T) -> T {
    if x > T::zero() {
        x
    } else {
        T::zero()
    }
}

pub fn relu_grad<T: Scalar>(x: T) -> T {
    if x > T::zero() {
        T::one()
    } else {
        T::zero()
    }
}

/// Elementwise nonlinearity used by the FFN inner layer (and adapters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Activation {
    #[default]
    Gelu,
    Relu,
}

impl Activation {
    pub fn apply<T: Scalar>(&self, x: T) -> T {
        match self {
            Activation::Gelu => gelu(x),
            Activation::Relu => relu(x),
        }
    }

    pub fn grad<T: Scalar>(&self, x: T) -> T {
        match self {
            Activation::Gelu => gelu_grad(x),
            Activation::Relu => relu_grad(x),
        }
    }

    pub fn apply_matrix<T: Scalar>(&self, m: &Matrix<T>) -> Matrix<T> {
        m.map(|v| self.apply(v))
    }

    pub fn grad_matrix<T: Scalar>(&self, m: &Matrix<T>) -> Matrix<T> {
        m.map(|v| self.grad(v))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Activation::Gelu => "gelu",
            Activation::Relu => "relu",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "gelu" => Some(Activation::Gelu),
            "relu" => Some(Activation::Relu),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gelu_zero_is_zero() {
        assert_eq!(gelu(0.0f64), 0.0);
    }

    #[test]
    fn gelu_asymptotes_to_identity() {
        assert!((gelu(10.0f64) - 10.0).abs() < 1e-6);
    }

    #[test]
    fn gelu_grad_matches_central_difference() {
        let mut rng = crate::num::SeededRng::new(21, 0);
        let h = 1e-6;
        for _ in 0..17 {
            let x = rng.uniform() * 8.0 - 4.0;
            let numeric = (gelu(x + h) - gelu(x - h)) / (2.0 * h);
            assert!(
                (gelu_grad(x) - numeric).abs() < 1e-6,
                "x={x}: analytic {} vs numeric {numeric}",
                gelu_grad(x)
            );
        }
    }

    #[test]
    fn gelu_monotone_nondecreasing_on_grid() {
        let mut prev = gelu(-10.0f64);
        let mut x = -10.0;
        while x <= 10.0 {
            let y = gelu(x);
            assert!(y >= prev - 1e-15, "gelu decreased near x={x}");
            prev = y;
            x += 0.01;
        }
    }
}
