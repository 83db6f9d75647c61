//! JSON file formats. Rationals are strings, indices are 0-based, sparse entries are sorted.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::HomLieAntialgebra;
use crate::cochain::{Cochain, CochainShape, CochainSignature};
use crate::deformations::NijenhuisCandidate;
use crate::error::{Error, Result};
use crate::extensions::Omega;
use crate::matrix::Matrix;
use crate::representation::{HomModule, Representation};
use crate::scalar::{serde_str, serde_str_vec, Rational};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    #[serde(with = "serde_str")]
    pub c: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub i: usize,
    pub row: usize,
    pub col: usize,
    #[serde(with = "serde_str")]
    pub c: Rational,
}

fn sparse_tensor(t: &Tensor3) -> Vec<TensorEntry> {
    t.nonzero()
        .map(|(i, j, k, c)| TensorEntry { i, j, k, c: c.clone() })
        .collect()
}

fn dense_tensor(what: &str, entries: &[TensorEntry], dims: [usize; 3]) -> Result<Tensor3> {
    let mut t = Tensor3::zeros(dims[0], dims[1], dims[2]);
    let mut seen = BTreeSet::new();
    for e in entries {
        if e.i >= dims[0] || e.j >= dims[1] || e.k >= dims[2] {
            return Err(Error::Input(format!(
                "{what} entry ({},{},{}) out of range {dims:?}",
                e.i, e.j, e.k
            )));
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(Error::Input(format!("{what} entry ({},{},{}) repeated", e.i, e.j, e.k)));
        }
        t.set(e.i, e.j, e.k, e.c.clone());
    }
    Ok(t)
}

fn flat_matrix(m: &Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn square_matrix(what: &str, flat: &[Rational], n: usize) -> Result<Matrix> {
    if flat.len() != n * n {
        return Err(Error::Input(format!("{what} has {} entries, expected {}", flat.len(), n * n)));
    }
    Ok(Matrix::from_vec(n, n, flat.to_vec())?)
}

fn sparse_matrices(ms: &[Matrix]) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        for row in 0..m.rows() {
            for col in 0..m.cols() {
                let c = &m[(row, col)];
                if !num_traits::Zero::is_zero(c) {
                    out.push(MatrixEntry { i, row, col, c: c.clone() });
                }
            }
        }
    }
    out
}

fn dense_matrices(what: &str, entries: &[MatrixEntry], n: usize, rows: usize, cols: usize) -> Result<Vec<Matrix>> {
    let mut data = vec![vec![crate::scalar::zero(); rows * cols]; n];
    let mut seen = BTreeSet::new();
    for e in entries {
        if e.i >= n || e.row >= rows || e.col >= cols {
            return Err(Error::Input(format!(
                "{what} entry ({},{},{}) out of range",
                e.i, e.row, e.col
            )));
        }
        if !seen.insert((e.i, e.row, e.col)) {
            return Err(Error::Input(format!("{what} entry ({},{},{}) repeated", e.i, e.row, e.col)));
        }
        data[e.i][e.row * cols + e.col] = e.c.clone();
    }
    data.into_iter()
        .map(|d| Ok(Matrix::from_vec(rows, cols, d)?))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub even_dim: usize,
    pub odd_dim: usize,
    pub mu: Vec<TensorEntry>,
    pub nu: Vec<TensorEntry>,
    pub br: Vec<TensorEntry>,
    #[serde(with = "serde_str_vec")]
    pub alpha: Vec<Rational>,
    #[serde(with = "serde_str_vec")]
    pub beta: Vec<Rational>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &HomLieAntialgebra) -> Self {
        AlgebraFile {
            even_dim: a.even_dim(),
            odd_dim: a.odd_dim(),
            mu: sparse_tensor(a.mu()),
            nu: sparse_tensor(a.nu()),
            br: sparse_tensor(a.br()),
            alpha: flat_matrix(a.alpha()),
            beta: flat_matrix(a.beta()),
        }
    }

    pub fn to_algebra(&self) -> Result<HomLieAntialgebra> {
        let (p, q) = (self.even_dim, self.odd_dim);
        HomLieAntialgebra::new(
            p,
            q,
            dense_tensor("mu", &self.mu, [p, p, p])?,
            dense_tensor("nu", &self.nu, [p, q, q])?,
            dense_tensor("br", &self.br, [q, q, p])?,
            square_matrix("alpha", &self.alpha, p)?,
            square_matrix("beta", &self.beta, q)?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub even_dim: usize,
    pub odd_dim: usize,
    #[serde(with = "serde_str_vec")]
    pub alpha: Vec<Rational>,
    #[serde(with = "serde_str_vec")]
    pub beta: Vec<Rational>,
    pub rho0_even: Vec<MatrixEntry>,
    pub rho0_odd: Vec<MatrixEntry>,
    pub rho1_up: Vec<MatrixEntry>,
    pub rho1_down: Vec<MatrixEntry>,
}

impl RepFile {
    pub fn from_representation(rho: &Representation) -> Self {
        RepFile {
            even_dim: rho.even_dim(),
            odd_dim: rho.odd_dim(),
            alpha: flat_matrix(rho.module().alpha_v()),
            beta: flat_matrix(rho.module().beta_v()),
            rho0_even: sparse_matrices(rho.rho0_even()),
            rho0_odd: sparse_matrices(rho.rho0_odd()),
            rho1_up: sparse_matrices(rho.rho1_up()),
            rho1_down: sparse_matrices(rho.rho1_down()),
        }
    }

    /// Action matrices are indexed by the basis of `a`.
    pub fn to_representation(&self, a: &HomLieAntialgebra) -> Result<Representation> {
        let (p, q) = (a.even_dim(), a.odd_dim());
        let (r, s) = (self.even_dim, self.odd_dim);
        let module = HomModule::new(square_matrix("alpha", &self.alpha, r)?, square_matrix("beta", &self.beta, s)?)?;
        Representation::new(
            module,
            dense_matrices("rho0_even", &self.rho0_even, p, r, r)?,
            dense_matrices("rho0_odd", &self.rho0_odd, p, s, s)?,
            dense_matrices("rho1_up", &self.rho1_up, q, s, r)?,
            dense_matrices("rho1_down", &self.rho1_down, q, r, s)?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaFile {
    pub omega0: Vec<TensorEntry>,
    pub omega1: Vec<TensorEntry>,
    pub omega2: Vec<TensorEntry>,
}

impl OmegaFile {
    pub fn from_omega(w: &Omega) -> Self {
        OmegaFile {
            omega0: sparse_tensor(&w.w0),
            omega1: sparse_tensor(&w.w1),
            omega2: sparse_tensor(&w.w2),
        }
    }

    /// Blocks `p×p→r`, `p×q→s`, `q×q→r`.
    pub fn to_omega(&self, p: usize, q: usize, r: usize, s: usize) -> Result<Omega> {
        Ok(Omega {
            w0: dense_tensor("omega0", &self.omega0, [p, p, r])?,
            w1: dense_tensor("omega1", &self.omega1, [p, q, s])?,
            w2: dense_tensor("omega2", &self.omega2, [q, q, r])?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
    pub v: usize,
    #[serde(with = "serde_str")]
    pub c: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub m: usize,
    pub n: usize,
    pub parity: String,
    pub entries: Vec<CochainEntry>,
}

impl CochainFile {
    pub fn from_cochain(f: &Cochain) -> Self {
        let shape = f.shape();
        let space = crate::cochain::CochainSpace::new(*shape);
        let vd = shape.value_dim;
        let mut entries = Vec::new();
        for (idx, c) in f.coeffs().iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let (xt, yt) = space.column_args(idx / vd);
            entries.push(CochainEntry {
                even: xt.to_vec(),
                odd: yt.to_vec(),
                v: idx % vd,
                c: c.clone(),
            });
        }
        CochainFile {
            m: shape.sig.m,
            n: shape.sig.n,
            parity: shape.sig.value_parity().to_string(),
            entries,
        }
    }

    /// Odd tuples must be strictly increasing.
    pub fn to_cochain(&self, even_dim: usize, odd_dim: usize, value_dims: (usize, usize)) -> Result<Cochain> {
        let sig = CochainSignature::new(self.m, self.n);
        if self.parity != sig.value_parity().to_string() {
            return Err(Error::Input(format!(
                "parity {:?} does not match n = {} (expected {})",
                self.parity,
                self.n,
                sig.value_parity()
            )));
        }
        let vd = if self.n.is_multiple_of(2) { value_dims.0 } else { value_dims.1 };
        let mut f = Cochain::zero(CochainShape::new(sig, even_dim, odd_dim, vd));
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            let ok = e.even.len() == self.m
                && e.odd.len() == self.n
                && e.even.iter().all(|&i| i < even_dim)
                && e.odd.iter().all(|&j| j < odd_dim)
                && e.odd.windows(2).all(|w| w[0] < w[1])
                && e.v < vd;
            if !ok {
                return Err(Error::Input(format!("cochain entry {:?};{:?};{} invalid", e.even, e.odd, e.v)));
            }
            if !seen.insert((e.even.clone(), e.odd.clone(), e.v)) {
                return Err(Error::Input(format!("cochain entry {:?};{:?};{} repeated", e.even, e.odd, e.v)));
            }
            let mut value = f.eval(&e.even, &e.odd);
            value[e.v] = e.c.clone();
            f.set(&e.even, &e.odd, &value)?;
        }
        Ok(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    pub base: AlgebraFile,
    pub rep: RepFile,
    pub omega: OmegaFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorFile {
    #[serde(with = "serde_str_vec")]
    pub phi0: Vec<Rational>,
    #[serde(with = "serde_str_vec")]
    pub phi1: Vec<Rational>,
}

impl OperatorFile {
    pub fn from_candidate(phi: &NijenhuisCandidate) -> Self {
        OperatorFile {
            phi0: flat_matrix(&phi.phi0),
            phi1: flat_matrix(&phi.phi1),
        }
    }

    pub fn to_candidate(&self, p: usize, q: usize) -> Result<NijenhuisCandidate> {
        Ok(NijenhuisCandidate {
            phi0: square_matrix("phi0", &self.phi0, p)?,
            phi1: square_matrix("phi1", &self.phi1, q)?,
        })
    }
}

/// Canonical text: pretty JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}
