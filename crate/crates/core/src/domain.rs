//! Study region, grid discretization and quadrature.
//!
//! The study region is the unit cube `U = [0,1]^d` carrying the uniform
//! probability measure `ν`. All simulation and integration happens on a
//! regular lattice of cell centers, so integrals of the form
//! `(z.ν)(U) = ∫ z(x) dν(x)` reduce to a uniformly weighted sum.

use std::sync::Arc;

use crate::error::{Error, Result};

/// The unit cube `[0,1]^d` with the uniform probability measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    dim: usize,
}

impl Domain {
    /// A `dim`-dimensional unit cube. `dim` must be at least 1.
    pub fn unit_cube(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("domain dimension must be >= 1"));
        }
        Ok(Domain { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// A finite set of `d`-dimensional locations, stored flat in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Locations {
    dim: usize,
    coords: Vec<f64>,
}

impl Locations {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("location dimension must be >= 1"));
        }
        if coords.len() % dim != 0 {
            return Err(Error::invalid("coordinate buffer length not a multiple of dim"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("locations must be finite"));
        }
        Ok(Locations { dim, coords })
    }

    /// Build from a list of points, all of the same dimension.
    pub fn from_points(points: &[&[f64]]) -> Result<Self> {
        let dim = points.first().map(|p| p.len()).unwrap_or(0);
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in points {
            if p.len() != dim {
                return Err(Error::invalid("points have mixed dimensions"));
            }
            coords.extend_from_slice(p);
        }
        Locations::new(dim.max(1), coords)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    /// Euclidean distance between points `i` and `j`.
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        dist(self.point(i), self.point(j))
    }

    /// Locations at the given indices (repetition allowed).
    pub fn select(&self, indices: &[usize]) -> Result<Locations> {
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            if i >= self.len() {
                return Err(Error::invalid(format!("location index {i} out of range")));
            }
            coords.extend_from_slice(self.point(i));
        }
        Locations::new(self.dim, coords)
    }
}

/// Euclidean distance between two points.
pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Regular lattice of `m^d` cell centers with uniform quadrature weights.
///
/// Points are ordered row-major with the last axis varying fastest; point
/// `i` of a `d=2`, resolution-`m` grid is
/// `((i/m + 0.5)/m, (i%m + 0.5)/m)`. Weights are all `1/m^d` and sum to 1,
/// making the grid a quadrature rule for the uniform measure `ν`.
#[derive(Debug, Clone)]
pub struct Grid {
    domain: Domain,
    resolution: usize,
    points: Arc<Locations>,
}

impl Grid {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Points per axis.
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn points(&self) -> &Arc<Locations> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Quadrature weight of every cell, `1/m^d`.
    pub fn weight(&self) -> f64 {
        1.0 / self.len() as f64
    }

    /// Grid spacing along any axis, `1/m`.
    pub fn spacing(&self) -> f64 {
        1.0 / self.resolution as f64
    }

    /// Index of the grid point nearest to `x`.
    pub fn nearest_index(&self, x: &[f64]) -> Result<usize> {
        let d = self.domain.dim();
        if x.len() != d {
            return Err(Error::invalid("point dimension does not match grid"));
        }
        let m = self.resolution;
        let mut idx = 0usize;
        for &c in x {
            let cell = ((c * m as f64 - 0.5).round().max(0.0) as usize).min(m - 1);
            idx = idx * m + cell;
        }
        Ok(idx)
    }
}

/// Discretize the domain into `resolution^d` cell centers.
pub fn make_grid(domain: Domain, resolution: usize) -> Result<Grid> {
    if resolution < 2 {
        return Err(Error::invalid("grid resolution must be >= 2"));
    }
    let d = domain.dim();
    let n = resolution.pow(d as u32);
    let m = resolution as f64;
    let mut coords = Vec::with_capacity(n * d);
    let mut cell = vec![0usize; d];
    for _ in 0..n {
        for &c in cell.iter() {
            coords.push((c as f64 + 0.5) / m);
        }
        // row-major increment, last axis fastest
        for axis in (0..d).rev() {
            cell[axis] += 1;
            if cell[axis] < resolution {
                break;
            }
            cell[axis] = 0;
        }
    }
    Ok(Grid {
        domain,
        resolution,
        points: Arc::new(Locations::new(d, coords)?),
    })
}

/// Quadrature of a field over the grid: `Σ_i weight · field_i ≈ (f.ν)(U)`.
pub fn integrate(grid: &Grid, values: &[f64]) -> Result<f64> {
    if values.len() != grid.len() {
        return Err(Error::invalid(format!(
            "field has {} values but grid has {} points",
            values.len(),
            grid.len()
        )));
    }
    Ok(grid.weight() * crate::util::sum(values.iter().copied()))
}
