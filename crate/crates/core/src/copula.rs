//! Gaussian-copula patient profiles and their expansion into complete
//! information: every patient's outcome at every dose for every endpoint.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Serialize, Serializer};

use crate::distributions::{bernoulli_quantile, standard_gamma_quantile, Marginal};
use crate::error::{Error, Result};
use crate::special::{ln_gamma_unchecked, std_normal_cdf, std_normal_quantile_unchecked};

/// Latent uniforms are kept inside `(UNIFORM_CLAMP, 1 − UNIFORM_CLAMP)`.
pub const UNIFORM_CLAMP: f64 = 1e-15;

/// Pivots within this distance of zero are treated as exact zeros.
pub const PIVOT_TOLERANCE: f64 = 1e-10;

const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Correlation of the latent normal vector, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl CorrelationMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1.0;
        }
        Self { dim, entries }
    }

    /// The 2×2 matrix `[[1, rho], [rho, 1]]`.
    pub fn bivariate(rho: f64) -> Result<Self> {
        Self::from_rows(&[vec![1.0, rho], vec![rho, 1.0]])
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidCorrelation("matrix is empty".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidCorrelation(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        let matrix = Self { dim, entries };
        matrix.validate()?;
        Ok(matrix)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j);
                if !v.is_finite() || !(-1.0..=1.0).contains(&v) {
                    return Err(Error::InvalidCorrelation(format!(
                        "entry ({i}, {j}) = {v} is outside [-1, 1]"
                    )));
                }
                if (v - self.get(j, i)).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::InvalidCorrelation(format!("not symmetric at ({i}, {j})")));
                }
            }
            if self.get(i, i) != 1.0 {
                return Err(Error::InvalidCorrelation(format!(
                    "diagonal entry {i} is {}, expected 1",
                    self.get(i, i)
                )));
            }
        }
        factorize(n, &self.entries).map(|_| ())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dim).map(<[f64]>::to_vec).collect()
    }
}

impl Serialize for CorrelationMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

/// Lower-triangular `L` with `L Lᵀ` equal to the factored matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CholeskyFactor {
    dim: usize,
    lower: Vec<f64>,
}

impl CholeskyFactor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.lower[i * self.dim + j]
    }

    /// `out = L · z`.
    pub fn apply(&self, z: &[f64], out: &mut [f64]) {
        let n = self.dim;
        for (i, slot) in out.iter_mut().enumerate().take(n) {
            let row = &self.lower[i * n..i * n + i + 1];
            *slot = row.iter().zip(z).map(|(l, v)| l * v).sum();
        }
    }

    /// `L Lᵀ`, row-major.
    pub fn product(&self) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n).map(|k| self.get(i, k) * self.get(j, k)).sum();
            }
        }
        out
    }
}

pub fn cholesky(matrix: &CorrelationMatrix) -> Result<CholeskyFactor> {
    let lower = factorize(matrix.dim, &matrix.entries)?;
    Ok(CholeskyFactor {
        dim: matrix.dim,
        lower,
    })
}

/// Cholesky–Banachiewicz that tolerates semi-definite input: a pivot in
/// `[-PIVOT_TOLERANCE, PIVOT_TOLERANCE]` zeroes its column.
fn factorize(n: usize, a: &[f64]) -> Result<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let dot: f64 = (0..j).map(|k| l[i * n + k] * l[j * n + k]).sum();
            if i == j {
                let pivot = a[i * n + i] - dot;
                if pivot < -PIVOT_TOLERANCE {
                    return Err(Error::NotPositiveSemiDefinite {
                        pivot: i,
                        value: pivot,
                    });
                }
                l[i * n + i] = if pivot <= PIVOT_TOLERANCE {
                    0.0
                } else {
                    pivot.sqrt()
                };
            } else {
                let diag = l[j * n + j];
                let residual = a[i * n + j] - dot;
                l[i * n + j] = if diag == 0.0 {
                    if residual.abs() > PIVOT_TOLERANCE {
                        return Err(Error::NotPositiveSemiDefinite { pivot: j, value: 0.0 });
                    }
                    0.0
                } else {
                    residual / diag
                };
            }
        }
    }
    Ok(l)
}

/// One patient's latent uniforms, one per endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct PatientProfile {
    u: Vec<f64>,
}

impl PatientProfile {
    pub fn new(u: Vec<f64>) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::Empty("patient profile"));
        }
        if let Some(&bad) = u.iter().find(|v| !(**v > 0.0 && **v < 1.0)) {
            return Err(Error::Domain {
                what: "profile components must lie in (0, 1)",
                value: bad,
            });
        }
        Ok(Self { u })
    }

    /// Maps a latent normal vector through the standard normal CDF.
    pub fn from_latent(latent: &[f64]) -> Self {
        Self {
            u: latent.iter().map(|&x| clamp_uniform(std_normal_cdf(x))).collect(),
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.u
    }

    pub fn endpoints(&self) -> usize {
        self.u.len()
    }
}

#[inline]
fn clamp_uniform(u: f64) -> f64 {
    u.clamp(UNIFORM_CLAMP, 1.0 - UNIFORM_CLAMP)
}

/// Draws one profile: `z = L · ε` with `ε` iid standard normal, then `u = Φ(z)`.
pub fn draw_profile<R: Rng + ?Sized>(factor: &CholeskyFactor, rng: &mut R) -> PatientProfile {
    let k = factor.dim();
    let mut normals = vec![0.0; k];
    let mut u = vec![0.0; k];
    draw_uniforms(factor, rng, &mut normals, &mut u);
    PatientProfile { u }
}

/// Allocation-free core of [`draw_profile`]; `out` receives the uniforms.
pub(crate) fn draw_uniforms<R: Rng + ?Sized>(
    factor: &CholeskyFactor,
    rng: &mut R,
    scratch: &mut [f64],
    out: &mut [f64],
) {
    for z in scratch.iter_mut() {
        *z = rng.sample(StandardNormal);
    }
    factor.apply(scratch, out);
    for v in out.iter_mut() {
        *v = clamp_uniform(std_normal_cdf(*v));
    }
}

/// Marginal distributions indexed by (dose, endpoint).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarginalGrid {
    doses: usize,
    endpoints: usize,
    cells: Vec<Marginal>,
}

impl MarginalGrid {
    /// `rows[j][k]` is the marginal of endpoint `k` at dose `j`.
    pub fn from_rows(rows: Vec<Vec<Marginal>>) -> Result<Self> {
        let doses = rows.len();
        if doses == 0 {
            return Err(Error::Empty("marginal grid"));
        }
        let endpoints = rows[0].len();
        if endpoints == 0 {
            return Err(Error::Empty("marginal grid endpoints"));
        }
        let mut cells = Vec::with_capacity(doses * endpoints);
        for row in rows {
            if row.len() != endpoints {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: endpoints,
                });
            }
            for m in &row {
                m.validate()?;
            }
            cells.extend(row);
        }
        Ok(Self {
            doses,
            endpoints,
            cells,
        })
    }

    pub fn doses(&self) -> usize {
        self.doses
    }

    pub fn endpoints(&self) -> usize {
        self.endpoints
    }

    pub fn get(&self, dose: usize, endpoint: usize) -> &Marginal {
        &self.cells[dose * self.endpoints + endpoint]
    }
}

/// Outcomes of `n` patients at `m` doses for `K` endpoints. Each
/// (dose, endpoint) column is stored contiguously.
#[derive(Debug, Clone, PartialEq)]
pub struct CompleteInformation {
    patients: usize,
    doses: usize,
    endpoints: usize,
    y: Vec<f64>,
}

impl CompleteInformation {
    pub(crate) fn zeroed(patients: usize, doses: usize, endpoints: usize) -> Self {
        Self {
            patients,
            doses,
            endpoints,
            y: vec![0.0; patients * doses * endpoints],
        }
    }

    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        &mut self.y
    }

    pub fn patients(&self) -> usize {
        self.patients
    }

    pub fn doses(&self) -> usize {
        self.doses
    }

    pub fn endpoints(&self) -> usize {
        self.endpoints
    }

    pub fn get(&self, patient: usize, dose: usize, endpoint: usize) -> f64 {
        self.outcomes(dose, endpoint)[patient]
    }

    /// Outcomes of every patient for one (dose, endpoint) pair.
    pub fn outcomes(&self, dose: usize, endpoint: usize) -> &[f64] {
        let start = (dose * self.endpoints + endpoint) * self.patients;
        &self.y[start..start + self.patients]
    }
}

/// `y[i][j][k] = F_{jk}^{-1}(u_i[k])`.
pub fn complete_information(profiles: &[PatientProfile], grid: &MarginalGrid) -> Result<CompleteInformation> {
    if profiles.is_empty() {
        return Err(Error::Empty("patient profiles"));
    }
    let k = grid.endpoints();
    if let Some(p) = profiles.iter().find(|p| p.endpoints() != k) {
        return Err(Error::LengthMismatch {
            left: p.endpoints(),
            right: k,
        });
    }
    let n = profiles.len();
    let mut uniforms = Vec::with_capacity(n * k);
    for p in profiles {
        uniforms.extend_from_slice(p.as_slice());
    }
    let mut info = CompleteInformation::zeroed(n, grid.doses(), k);
    let mut scratch = vec![0.0; n];
    GridTransform::new(grid).fill(&uniforms, n, info.values_mut(), &mut scratch);
    Ok(info)
}

#[derive(Debug, Clone, Copy)]
enum PreparedMarginal {
    Normal {
        mean: f64,
        sd: f64,
    },
    Gamma {
        shape: f64,
        rate: f64,
        ln_gamma_shape: f64,
    },
    Bernoulli {
        p: f64,
    },
    Other(Marginal),
}

impl PreparedMarginal {
    fn new(m: Marginal) -> Self {
        match m {
            Marginal::Normal { mean, sd } => Self::Normal { mean, sd },
            Marginal::Gamma { shape, rate } => Self::Gamma {
                shape,
                rate,
                ln_gamma_shape: ln_gamma_unchecked(shape),
            },
            Marginal::Bernoulli { p } => Self::Bernoulli { p },
            other => Self::Other(other),
        }
    }
}

#[derive(Debug, Clone)]
struct DistinctColumn {
    marginal: PreparedMarginal,
    doses: Vec<usize>,
}

/// Quantile transform for a whole grid. Identical marginals within an
/// endpoint are evaluated once, and normal scores are shared across all
/// normal marginals of an endpoint.
#[derive(Debug, Clone)]
pub(crate) struct GridTransform {
    doses: usize,
    endpoints: usize,
    columns: Vec<Vec<DistinctColumn>>,
    needs_normal_score: Vec<bool>,
}

impl GridTransform {
    pub(crate) fn new(grid: &MarginalGrid) -> Self {
        let mut columns = Vec::with_capacity(grid.endpoints());
        let mut needs_normal_score = Vec::with_capacity(grid.endpoints());
        for k in 0..grid.endpoints() {
            let mut distinct: Vec<(Marginal, Vec<usize>)> = Vec::new();
            for j in 0..grid.doses() {
                let m = *grid.get(j, k);
                match distinct.iter_mut().find(|(seen, _)| *seen == m) {
                    Some((_, doses)) => doses.push(j),
                    None => distinct.push((m, vec![j])),
                }
            }
            needs_normal_score.push(distinct.iter().any(|(m, _)| matches!(m, Marginal::Normal { .. })));
            columns.push(
                distinct
                    .into_iter()
                    .map(|(m, doses)| DistinctColumn {
                        marginal: PreparedMarginal::new(m),
                        doses,
                    })
                    .collect(),
            );
        }
        Self {
            doses: grid.doses(),
            endpoints: grid.endpoints(),
            columns,
            needs_normal_score,
        }
    }

    /// `uniforms` is patient-major (`n × K`); `out` is column-major as in
    /// [`CompleteInformation`]; `scratch` holds `n` normal scores.
    pub(crate) fn fill(&self, uniforms: &[f64], n: usize, out: &mut [f64], scratch: &mut [f64]) {
        let kk = self.endpoints;
        debug_assert_eq!(out.len(), n * self.doses * kk);
        for (k, distinct) in self.columns.iter().enumerate() {
            let u = |i: usize| uniforms[i * kk + k];
            if self.needs_normal_score[k] {
                for (i, z) in scratch.iter_mut().enumerate().take(n) {
                    *z = std_normal_quantile_unchecked(u(i));
                }
            }
            for col in distinct {
                let first = (col.doses[0] * kk + k) * n;
                {
                    let target = &mut out[first..first + n];
                    match col.marginal {
                        PreparedMarginal::Normal { mean, sd } => {
                            for (i, y) in target.iter_mut().enumerate() {
                                *y = mean + sd * scratch[i];
                            }
                        }
                        PreparedMarginal::Gamma {
                            shape,
                            rate,
                            ln_gamma_shape,
                        } => {
                            for (i, y) in target.iter_mut().enumerate() {
                                *y = standard_gamma_quantile(shape, ln_gamma_shape, u(i)) / rate;
                            }
                        }
                        PreparedMarginal::Bernoulli { p } => {
                            for (i, y) in target.iter_mut().enumerate() {
                                *y = bernoulli_quantile(p, u(i));
                            }
                        }
                        PreparedMarginal::Other(m) => {
                            for (i, y) in target.iter_mut().enumerate() {
                                *y = m.quantile_unchecked(u(i));
                            }
                        }
                    }
                }
                for &j in &col.doses[1..] {
                    let dst = (j * kk + k) * n;
                    out.copy_within(first..first + n, dst);
                }
            }
        }
    }
}
