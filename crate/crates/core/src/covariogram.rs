//! Parametric covariogram models and covariance-matrix assembly.
//!
//! The covariogram of a second-order stationary isotropic process gives
//! `Cov[Y[x], Y[x']] = C(‖x−x'‖)`; the semivariogram is
//! `G(h) = C(0) − C(h)`. The Gaussian family implemented here is
//! `C(h) = θ₁ exp(−‖h‖²/θ₂²)` with deviation (sill) `θ₁ > 0` and scale
//! `θ₂ > 0`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::domain::{dist, Grid, Locations};
use crate::error::{Error, Result};

/// Covariogram families. Only the Gaussian family ships; the enum leaves
/// room for others.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CovariogramFamily {
    Gaussian,
}

/// A parametric isotropic covariogram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovariogramModel {
    pub family: CovariogramFamily,
    /// Deviation (sill) parameter θ₁.
    pub deviation: f64,
    /// Scale parameter θ₂.
    pub scale: f64,
}

/// Relative diagonal jitter applied by default when assembling covariance
/// matrices. The Gaussian covariogram is severely ill-conditioned on fine
/// grids; the jitter keeps factorizations viable without visibly
/// perturbing the model.
pub const DEFAULT_JITTER_REL: f64 = 1e-10;

impl CovariogramModel {
    /// Gaussian covariogram with deviation θ₁ and scale θ₂.
    pub fn gaussian(deviation: f64, scale: f64) -> Result<Self> {
        if !(deviation > 0.0 && deviation.is_finite()) {
            return Err(Error::invalid("covariogram deviation must be positive"));
        }
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::invalid("covariogram scale must be positive"));
        }
        Ok(CovariogramModel {
            family: CovariogramFamily::Gaussian,
            deviation,
            scale,
        })
    }

    /// `C(h)` evaluated at a lag vector; depends on `h` only through `‖h‖`.
    pub fn cov(&self, h: &[f64]) -> f64 {
        self.cov_at_dist(h.iter().map(|c| c * c).sum::<f64>().sqrt())
    }

    /// `C(h)` at a scalar distance.
    pub fn cov_at_dist(&self, r: f64) -> f64 {
        match self.family {
            CovariogramFamily::Gaussian => {
                let u = r / self.scale;
                self.deviation * (-u * u).exp()
            }
        }
    }

    /// `G(h) = C(0) − C(h)`.
    pub fn semivariogram(&self, h: &[f64]) -> f64 {
        self.semivariogram_at_dist(h.iter().map(|c| c * c).sum::<f64>().sqrt())
    }

    /// `G` at a scalar distance.
    pub fn semivariogram_at_dist(&self, r: f64) -> f64 {
        self.cov_at_dist(0.0) - self.cov_at_dist(r)
    }

    /// Default absolute jitter for this model.
    pub fn default_jitter(&self) -> f64 {
        DEFAULT_JITTER_REL * self.deviation
    }
}

/// Covariance matrix `M_ij = C(‖x_i − x_j‖) + jitter·1{i=j}` over a
/// location set.
pub fn cov_matrix(model: &CovariogramModel, locations: &Locations, jitter: f64) -> Result<DMatrix<f64>> {
    let n = locations.len();
    if n == 0 {
        return Err(Error::invalid("covariance matrix needs at least one location"));
    }
    if jitter < 0.0 {
        return Err(Error::invalid("jitter must be nonnegative"));
    }
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = model.cov_at_dist(0.0) + jitter;
        for j in 0..i {
            let c = model.cov_at_dist(locations.dist(i, j));
            m[(i, j)] = c;
            m[(j, i)] = c;
        }
    }
    Ok(m)
}

/// Cross-covariance matrix `M_ij = C(‖a_i − b_j‖)` between two location sets.
pub fn cross_cov_matrix(model: &CovariogramModel, a: &Locations, b: &Locations) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(a.len(), b.len());
    for i in 0..a.len() {
        for j in 0..b.len() {
            m[(i, j)] = model.cov_at_dist(dist(a.point(i), b.point(j)));
        }
    }
    m
}

/// Matching tolerance for exact-lag pair enumeration.
const LAG_MATCH_TOL: f64 = 1e-9;

/// The ν-averaged theoretical semivariogram at an exact grid lag: the mean
/// of `½Var[Y[x₂]−Y[x₁]]` over ordered grid pairs with `x₂−x₁ = lag`.
/// For a stationary model every such pair contributes `G(lag)`, so the
/// average collapses to the semivariogram; the pair enumeration is kept so
/// the identity is computed, not assumed.
pub fn averaged_semivariogram(model: &CovariogramModel, grid: &Grid, lag: &[f64]) -> Result<f64> {
    let pts = grid.points();
    let d = pts.dim();
    if lag.len() != d {
        return Err(Error::invalid("lag dimension does not match grid"));
    }
    let n = pts.len();
    let mut total = 0.0;
    let mut count = 0usize;
    for i in 0..n {
        for j in 0..n {
            let pi = pts.point(i);
            let pj = pts.point(j);
            let matches = (0..d).all(|k| ((pj[k] - pi[k]) - lag[k]).abs() <= LAG_MATCH_TOL);
            if matches {
                // ½ Var[Y[x₂] − Y[x₁]] = C(0) − C(x₂ − x₁)
                let mut l2 = 0.0;
                for k in 0..d {
                    let dk = pj[k] - pi[k];
                    l2 += dk * dk;
                }
                total += model.cov_at_dist(0.0) - model.cov_at_dist(l2.sqrt());
                count += 1;
            }
        }
    }
    if count == 0 {
        return Err(Error::EmptyLag(lag.to_vec()));
    }
    Ok(total / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{make_grid, Domain};
    use approx::assert_relative_eq;
    use rand::Rng;

    #[test]
    fn gaussian_cov_hand_values() {
        let m = CovariogramModel::gaussian(1.0, 1.0).unwrap();
        assert_relative_eq!(m.cov(&[0.0]), 1.0);
        assert_relative_eq!(m.cov(&[1.0]), (-1.0f64).exp(), epsilon = 1e-12);

        let m = CovariogramModel::gaussian(5.0, 0.1).unwrap();
        assert_relative_eq!(m.cov_at_dist(0.1), 5.0 * (-1.0f64).exp(), epsilon = 1e-12);
    }

    #[test]
    fn semivariogram_complements_covariogram() {
        let m = CovariogramModel::gaussian(1.0, 1.0).unwrap();
        assert_eq!(m.semivariogram(&[0.0, 0.0]), 0.0);
        assert_relative_eq!(m.semivariogram(&[1.0]), 1.0 - (-1.0f64).exp(), epsilon = 1e-12);
        // sill reached in the large-lag limit
        assert_relative_eq!(m.semivariogram(&[50.0]), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn isotropy_under_random_rotations() {
        let m = CovariogramModel::gaussian(2.0, 0.7).unwrap();
        let mut rng = crate::rng::stream(11, "test/rotations", 0);
        for _ in 0..50 {
            let h = [rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5];
            let angle = rng.random::<f64>() * std::f64::consts::TAU;
            let (s, c) = angle.sin_cos();
            let rh = [c * h[0] - s * h[1], s * h[0] + c * h[1]];
            assert_relative_eq!(m.cov(&h), m.cov(&rh), epsilon = 1e-12);
        }
    }

    #[test]
    fn cov_matrix_single_location() {
        let m = CovariogramModel::gaussian(3.0, 0.5).unwrap();
        let locs = Locations::new(2, vec![0.3, 0.4]).unwrap();
        let mat = cov_matrix(&m, &locs, 1e-9).unwrap();
        assert_eq!(mat.nrows(), 1);
        assert_relative_eq!(mat[(0, 0)], 3.0 + 1e-9);
    }

    #[test]
    fn cov_matrix_pair_matches_closed_form() {
        let m = CovariogramModel::gaussian(1.0, 0.4).unwrap();
        let locs = Locations::new(1, vec![0.2, 0.5]).unwrap();
        let mat = cov_matrix(&m, &locs, 0.0).unwrap();
        let c0 = m.cov_at_dist(0.0);
        let ch = m.cov_at_dist(0.3);
        assert_relative_eq!(mat[(0, 0)], c0);
        assert_relative_eq!(mat[(0, 1)], ch);
        assert_relative_eq!(mat[(1, 0)], ch);

        // 2x2 inverse closed form: (C(0)²−C(h)²)⁻¹ [[C0, −Ch], [−Ch, C0]]
        let inv = mat.clone().try_inverse().unwrap();
        let det = c0 * c0 - ch * ch;
        assert_relative_eq!(inv[(0, 0)], c0 / det, epsilon = 1e-10);
        assert_relative_eq!(inv[(0, 1)], -ch / det, epsilon = 1e-10);
    }

    #[test]
    fn cov_matrix_rejects_empty() {
        let m = CovariogramModel::gaussian(1.0, 1.0).unwrap();
        let locs = Locations::new(1, vec![]).unwrap();
        assert!(cov_matrix(&m, &locs, 0.0).is_err());
    }

    #[test]
    fn averaged_semivariogram_collapses_to_model() {
        let m = CovariogramModel::gaussian(1.3, 0.3).unwrap();
        let grid = make_grid(Domain::unit_cube(2).unwrap(), 6).unwrap();
        let lag = [1.0 / 6.0, 2.0 / 6.0];
        let avg = averaged_semivariogram(&m, &grid, &lag).unwrap();
        assert_relative_eq!(avg, m.semivariogram(&lag), epsilon = 1e-10);
    }

    #[test]
    fn averaged_semivariogram_zero_lag_is_zero() {
        let m = CovariogramModel::gaussian(1.0, 0.2).unwrap();
        let grid = make_grid(Domain::unit_cube(1).unwrap(), 4).unwrap();
        assert_eq!(averaged_semivariogram(&m, &grid, &[0.0]).unwrap(), 0.0);
    }

    #[test]
    fn averaged_semivariogram_enumerates_1d_pairs() {
        // m=4 grid on [0,1]: lag 0.25 is realized by 3 ordered pairs
        let m = CovariogramModel::gaussian(2.0, 0.5).unwrap();
        let grid = make_grid(Domain::unit_cube(1).unwrap(), 4).unwrap();
        let avg = averaged_semivariogram(&m, &grid, &[0.25]).unwrap();
        assert_relative_eq!(avg, m.semivariogram(&[0.25]), epsilon = 1e-12);
    }

    #[test]
    fn averaged_semivariogram_unrealizable_lag_errors() {
        let m = CovariogramModel::gaussian(1.0, 0.5).unwrap();
        let grid = make_grid(Domain::unit_cube(1).unwrap(), 4).unwrap();
        assert!(matches!(
            averaged_semivariogram(&m, &grid, &[0.1]),
            Err(Error::EmptyLag(_))
        ));
    }
}
