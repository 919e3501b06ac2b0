use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Adam hyperparameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdamConfig {
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub epsilon: f64,
}

impl Default for AdamConfig {
    fn default() -> Self {
        AdamConfig {
            learning_rate: 0.001,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
        }
    }
}

impl AdamConfig {
    pub fn with_learning_rate(lr: f64) -> Self {
        AdamConfig {
            learning_rate: lr,
            ..Default::default()
        }
    }
}

/// Bias-corrected Adam over an ordered list of parameter tensors.
/// Accumulator shapes are fixed at construction and must match the
/// parameter list passed to every [`Adam::step`].
#[derive(Debug, Clone)]
pub struct Adam<T> {
    cfg: AdamConfig,
    first_moment: Vec<Matrix<T>>,
    second_moment: Vec<Matrix<T>>,
    step: u64,
}

impl<T: Scalar> Adam<T> {
    pub fn new(cfg: AdamConfig, shapes: &[(usize, usize)]) -> Self {
        Adam {
            cfg,
            first_moment: shapes.iter().map(|&(r, c)| Matrix::zeros(r, c)).collect(),
            second_moment: shapes.iter().map(|&(r, c)| Matrix::zeros(r, c)).collect(),
            step: 0,
        }
    }

    pub fn for_params(cfg: AdamConfig, params: &[&Matrix<T>]) -> Self {
        let shapes: Vec<_> = params.iter().map(|p| p.shape()).collect();
        Self::new(cfg, &shapes)
    }

    pub fn config(&self) -> &AdamConfig {
        &self.cfg
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    /// Applies one update. `params[i]` pairs with `grads[i]`.
    pub fn step(&mut self, params: &mut [&mut Matrix<T>], grads: &[&Matrix<T>]) -> Result<()> {
        if params.len() != self.first_moment.len() || grads.len() != params.len() {
            return Err(Error::Contract(format!(
                "adam: expected {} tensors, got {} params / {} grads",
                self.first_moment.len(),
                params.len(),
                grads.len()
            )));
        }
        self.step += 1;
        let t = self.step as i32;
        let bc1 = 1.0 - self.cfg.beta1.powi(t);
        let bc2 = 1.0 - self.cfg.beta2.powi(t);
        let lr = T::from_f64(self.cfg.learning_rate);
        let b1 = T::from_f64(self.cfg.beta1);
        let b2 = T::from_f64(self.cfg.beta2);
        let one_m_b1 = T::from_f64(1.0 - self.cfg.beta1);
        let one_m_b2 = T::from_f64(1.0 - self.cfg.beta2);
        let inv_bc1 = T::from_f64(1.0 / bc1);
        let inv_bc2 = T::from_f64(1.0 / bc2);
        let eps = T::from_f64(self.cfg.epsilon);

        for (i, (param, grad)) in params.iter_mut().zip(grads).enumerate() {
            if param.shape() != self.first_moment[i].shape() || grad.shape() != param.shape() {
                return Err(Error::Shape {
                    op: "adam_step",
                    left: param.shape(),
                    right: grad.shape(),
                });
            }
            let m = self.first_moment[i].data_mut();
            let v = self.second_moment[i].data_mut();
            let p = param.data_mut();
            let g = grad.data();
            for j in 0..p.len() {
                m[j] = b1 * m[j] + one_m_b1 * g[j];
                v[j] = b2 * v[j] + one_m_b2 * g[j] * g[j];
                let m_hat = m[j] * inv_bc1;
                let v_hat = v[j] * inv_bc2;
                p[j] = p[j] - lr * m_hat / (v_hat.sqrt() + eps);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Mat = Matrix<f64>;

    #[test]
    fn zero_gradient_leaves_params_unchanged() {
        let mut p = Mat::from_rows(&[vec![1.0, -2.0], vec![0.5, 3.0]]).unwrap();
        let before = p.clone();
        let g = Mat::zeros(2, 2);
        let mut adam = Adam::for_params(AdamConfig::default(), &[&p]);
        for _ in 0..5 {
            adam.step(&mut [&mut p], &[&g]).unwrap();
        }
        assert_eq!(p, before);
    }

    #[test]
    fn first_step_moves_by_learning_rate() {
        let mut p = Mat::filled(1, 1, 1.0);
        let g = Mat::filled(1, 1, 1.0);
        let mut adam = Adam::for_params(AdamConfig::default(), &[&p]);
        adam.step(&mut [&mut p], &[&g]).unwrap();
        // Bias-corrected first step is -lr * g/|g| up to epsilon.
        assert!((p.get(0, 0) - (1.0 - 0.001)).abs() < 1e-6);
        assert_eq!(adam.step_count(), 1);
    }

    #[test]
    fn trace_matches_hand_coded_recurrence_on_quadratic() {
        // f(w) = w^2, grad = 2w, starting from w = 1.
        let cfg = AdamConfig::default();
        let mut p = Mat::filled(1, 1, 1.0);
        let mut adam = Adam::for_params(cfg, &[&p]);

        let mut w_ref = 1.0f64;
        let (mut m, mut v) = (0.0f64, 0.0f64);
        for t in 1..=10 {
            let g = Mat::filled(1, 1, 2.0 * p.get(0, 0));
            adam.step(&mut [&mut p], &[&g]).unwrap();

            let g_ref = 2.0 * w_ref;
            m = cfg.beta1 * m + (1.0 - cfg.beta1) * g_ref;
            v = cfg.beta2 * v + (1.0 - cfg.beta2) * g_ref * g_ref;
            let m_hat = m / (1.0 - cfg.beta1.powi(t));
            let v_hat = v / (1.0 - cfg.beta2.powi(t));
            w_ref -= cfg.learning_rate * m_hat / (v_hat.sqrt() + cfg.epsilon);

            assert!(
                (p.get(0, 0) - w_ref).abs() < 1e-10,
                "step {t}: {} vs {w_ref}",
                p.get(0, 0)
            );
        }
    }

    #[test]
    fn zero_learning_rate_is_identity() {
        let mut rng = crate::num::SeededRng::new(3, 0);
        let mut p: Mat = rng.normal_matrix(3, 4, 0.0, 1.0);
        let g: Mat = rng.normal_matrix(3, 4, 0.0, 1.0);
        let before = p.clone();
        let mut adam = Adam::for_params(AdamConfig::with_learning_rate(0.0), &[&p]);
        adam.step(&mut [&mut p], &[&g]).unwrap();
        assert_eq!(p, before);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let mut p = Mat::zeros(2, 2);
        let g = Mat::zeros(2, 3);
        let mut adam = Adam::for_params(AdamConfig::default(), &[&p]);
        assert!(adam.step(&mut [&mut p], &[&g]).is_err());
    }
}
