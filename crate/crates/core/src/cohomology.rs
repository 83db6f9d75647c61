//! The twisted cochain complex of an algebra with coefficients in a representation.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{check_multiplicative, HomLieAntialgebra};
use crate::cochain::{combinations, Cochain, CochainShape, CochainSignature, CochainSpace, DegreeCochain, Parity};
use crate::error::{Error, Result};
use crate::linalg::{determinant, rank, solve, RankCertificate, Subspace};
use crate::matrix::{kron, mat_pow, vec_is_zero, Matrix};
use crate::representation::Representation;
use crate::scalar::{frac, half, one, sign, zero, Rational};

/// `Λⁿβ`: entry `[S', S]` is the minor of `beta` on rows `S'`, columns `S`.
pub fn exterior_power(beta: &Matrix, n: usize) -> Matrix {
    let subsets = combinations(beta.rows(), n);
    Matrix::from_fn(subsets.len(), subsets.len(), |r, c| {
        if n == 0 {
            one()
        } else {
            determinant(&beta.select(&subsets[r], &subsets[c])).expect("square minor")
        }
    })
}

/// Dense accumulator for the raw coboundary matrix.
struct Accum {
    cols: usize,
    data: Vec<Rational>,
}

impl Accum {
    fn add(&mut self, r: usize, c: usize, x: &Rational) {
        self.data[r * self.cols + c] += x;
    }
}

/// Terms `coeff · op(f(columns))` of one target entry; `op = None` is the identity.
type Terms = Vec<(Rational, Vec<(usize, Rational)>, Option<Matrix>)>;
type TermFn<'f> = dyn FnMut(&[Vec<Rational>], &[Vec<Rational>]) -> Terms + 'f;

pub struct CochainComplex<'a> {
    alg: &'a HomLieAntialgebra,
    rho: &'a Representation,
}

/// `d^k` restricted to admissible cochains, in admissible coordinates.
#[derive(Debug, Clone)]
pub struct ComplexSlice {
    pub degree: usize,
    pub source: Subspace,
    pub target: Subspace,
    pub matrix: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub degree: usize,
    pub cochain_dim: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub cohomology_dim: usize,
    pub rank_d: RankCertificate,
    pub rank_d_prev: Option<RankCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoboundaryCheck {
    /// `f = d g` for the witness `g`.
    Coboundary(DegreeCochain),
    NotCoboundary,
}

impl<'a> CochainComplex<'a> {
    /// Fails unless the algebra is multiplicative and the representation has matching size.
    pub fn new(alg: &'a HomLieAntialgebra, rho: &'a Representation) -> Result<Self> {
        rho.check_compatible(alg)?;
        if !check_multiplicative(alg).passed() {
            return Err(Error::NotMultiplicative);
        }
        Ok(CochainComplex { alg, rho })
    }

    pub fn algebra(&self) -> &HomLieAntialgebra {
        self.alg
    }

    pub fn representation(&self) -> &Representation {
        self.rho
    }

    pub fn shape(&self, sig: CochainSignature) -> CochainShape {
        let vd = match sig.value_parity() {
            Parity::Even => self.rho.even_dim(),
            Parity::Odd => self.rho.odd_dim(),
        };
        CochainShape::new(sig, self.alg.even_dim(), self.alg.odd_dim(), vd)
    }

    pub fn shapes(&self, k: usize) -> Vec<CochainShape> {
        CochainSignature::of_degree(k).into_iter().map(|s| self.shape(s)).collect()
    }

    pub fn raw_dim(&self, k: usize) -> usize {
        self.shapes(k).iter().map(CochainShape::raw_dim).sum()
    }

    fn offset(&self, sig: CochainSignature) -> usize {
        self.shapes(sig.degree())
            .iter()
            .take_while(|s| s.sig != sig)
            .map(CochainShape::raw_dim)
            .sum()
    }

    fn check_degree(k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::DegreeOutOfRange(k));
        }
        Ok(())
    }

    /// Operator whose kernel is the admissible part of `C^{m,n}`:
    /// `f ∘ (α^{⊗m} ⊗ Λⁿβ) = M_V ∘ f`.
    pub fn admissibility_operator(&self, sig: CochainSignature) -> Matrix {
        let shape = self.shape(sig);
        let mut t = Matrix::identity(1);
        for _ in 0..sig.m {
            t = kron(&t, self.alg.alpha());
        }
        t = kron(&t, &exterior_power(self.alg.beta(), sig.n));
        let mv = match sig.value_parity() {
            Parity::Even => self.rho.module().alpha_v(),
            Parity::Odd => self.rho.module().beta_v(),
        };
        let left = kron(&Matrix::identity(shape.columns()), mv);
        let right = kron(&t.transpose(), &Matrix::identity(shape.value_dim));
        left.sub(&right).expect("same shape")
    }

    pub fn admissible_subspace(&self, sig: CochainSignature) -> Subspace {
        Subspace::kernel_of(&self.admissibility_operator(sig))
    }

    pub fn admissible_basis(&self, sig: CochainSignature) -> Vec<Cochain> {
        let shape = self.shape(sig);
        self.admissible_subspace(sig)
            .basis()
            .iter()
            .map(|v| Cochain::from_coeffs(shape, v.clone()).expect("shape"))
            .collect()
    }

    /// Admissible degree-`k` cochains inside the flattened raw space.
    pub fn admissible_degree(&self, k: usize) -> Subspace {
        let blocks: Vec<Subspace> = CochainSignature::of_degree(k)
            .into_iter()
            .map(|s| self.admissible_subspace(s))
            .collect();
        Subspace::block_diagonal(&blocks)
    }

    pub fn is_admissible(&self, f: &Cochain) -> bool {
        f.shape() == &self.shape(f.signature())
            && vec_is_zero(
                &self
                    .admissibility_operator(f.signature())
                    .mul_vec(f.coeffs())
                    .expect("shape"),
            )
    }

    /// `d^k` on the full (not necessarily admissible) flattened cochain space.
    pub fn raw_coboundary(&self, k: usize) -> Result<Matrix> {
        Self::check_degree(k)?;
        let mut acc = Accum {
            cols: self.raw_dim(k),
            data: vec![zero(); self.raw_dim(k + 1) * self.raw_dim(k)],
        };
        for sig in CochainSignature::of_degree(k) {
            self.assemble_from(sig, &mut acc)?;
        }
        Ok(Matrix::from_vec(self.raw_dim(k + 1), self.raw_dim(k), acc.data)?)
    }

    fn assemble_from(&self, sig: CochainSignature, acc: &mut Accum) -> Result<()> {
        let a = self.alg;
        let (m, n) = (sig.m, sig.n);
        let k = m + n;
        let ak = mat_pow(a.alpha(), k - 1)?;
        let bk = mat_pow(a.beta(), k - 1)?;
        let src_shape = self.shape(sig);
        let src = CochainSpace::new(src_shape);
        let src_off = self.offset(sig);
        let rho0 = |x: &[Rational]| match sig.value_parity() {
            Parity::Even => self.rho.act_even_on_even(x),
            Parity::Odd => self.rho.act_even_on_odd(x),
        };

        let expand = |xs: &[Vec<Rational>], ys: &[Vec<Rational>]| {
            let xr: Vec<&[Rational]> = xs.iter().map(Vec::as_slice).collect();
            let yr: Vec<&[Rational]> = ys.iter().map(Vec::as_slice).collect();
            src.expand(&xr, &yr)
        };
        // Arguments with the Hochschild contraction at positions i-1, i and α elsewhere.
        let contracted = |xs: &[Vec<Rational>], i: usize| -> Vec<Vec<Rational>> {
            let mut args = Vec::with_capacity(xs.len() - 1);
            for x in &xs[..i - 1] {
                args.push(a.al(x));
            }
            args.push(a.ee(&xs[i - 1], &xs[i]));
            for x in &xs[i + 1..] {
                args.push(a.al(x));
            }
            args
        };

        // Even-direction part, target (m+1, n).
        self.emit(acc, src_shape, src_off, CochainSignature::new(m + 1, n), &mut |xs, ys| {
            let mut terms = Vec::new();
            let first_weight = if n % 2 == 0 { half() } else { one() };
            terms.push((
                first_weight,
                expand(&xs[1..], ys),
                Some(rho0(&ak.mul_vec(&xs[0]).expect("shape"))),
            ));
            let bys: Vec<Vec<Rational>> = ys.iter().map(|y| a.be(y)).collect();
            let ys_here: &[Vec<Rational>] = if n == 0 { ys } else { &bys };
            for i in 1..=m {
                terms.push((half() * sign(i), expand(&contracted(xs, i), ys_here), None));
            }
            if n == 0 {
                terms.push((
                    half() * sign(m + 1),
                    expand(&xs[..m], &[]),
                    Some(rho0(&ak.mul_vec(&xs[m]).expect("shape"))),
                ));
            } else {
                let axs: Vec<Vec<Rational>> = xs[..m].iter().map(|x| a.al(x)).collect();
                for j in 1..=n {
                    let mut args = vec![a.eo(&xs[m], &ys[j - 1])];
                    args.extend((0..n).filter(|&t| t != j - 1).map(|t| bys[t].clone()));
                    terms.push((frac(1, n as i64) * sign(m + j), expand(&axs, &args), None));
                }
            }
            terms
        });

        // Odd-direction part, target (m, n+1).
        self.emit(acc, src_shape, src_off, CochainSignature::new(m, n + 1), &mut |xs, ys| {
            let mut terms = Vec::new();
            for j in 1..=n + 1 {
                let rest: Vec<Vec<Rational>> = (0..=n).filter(|&t| t != j - 1).map(|t| ys[t].clone()).collect();
                let c = if m == 0 && n % 2 == 1 {
                    frac(2, n as i64 + 1) * sign(j + 1)
                } else {
                    frac(1, n as i64 + 1) * sign(m + n + j)
                };
                let y = bk.mul_vec(&ys[j - 1]).expect("shape");
                let op = match sig.value_parity() {
                    Parity::Even => self.rho.act_odd_up(&y),
                    Parity::Odd => self.rho.act_odd_down(&y),
                };
                terms.push((c, expand(xs, &rest), Some(op)));
            }
            terms
        });

        // Bracket part, target (m-1, n+2).
        if m > 0 {
            self.emit(acc, src_shape, src_off, CochainSignature::new(m - 1, n + 2), &mut |xs, ys| {
                let mut terms = Vec::new();
                let mut axs: Vec<Vec<Rational>> = xs.iter().map(|x| a.al(x)).collect();
                axs.push(Vec::new());
                let w = frac(2, ((n + 1) * (n + 2)) as i64);
                for i in 1..=n + 2 {
                    for j in i + 1..=n + 2 {
                        *axs.last_mut().expect("slot") = a.brk(&ys[i - 1], &ys[j - 1]);
                        let rest: Vec<Vec<Rational>> = (0..n + 2)
                            .filter(|&t| t != i - 1 && t != j - 1)
                            .map(|t| a.be(&ys[t]))
                            .collect();
                        terms.push((&w * sign(m + i + j + 1), expand(&axs, &rest), None));
                    }
                }
                terms
            });
        }
        Ok(())
    }

    fn emit(
        &self,
        acc: &mut Accum,
        src_shape: CochainShape,
        src_off: usize,
        tsig: CochainSignature,
        body: &mut TermFn<'_>,
    ) {
        let a = self.alg;
        let tshape = self.shape(tsig);
        let tgt = CochainSpace::new(tshape);
        let toff = self.offset(tsig);
        let (vt, vs) = (tshape.value_dim, src_shape.value_dim);
        for tcol in 0..tshape.columns() {
            let (xt, yt) = tgt.column_args(tcol);
            let xs: Vec<Vec<Rational>> = xt.iter().map(|&i| a.e(i)).collect();
            let ys: Vec<Vec<Rational>> = yt.iter().map(|&j| a.f(j)).collect();
            for (coeff, cols, op) in body(&xs, &ys) {
                for (scol, c) in &cols {
                    let w = &coeff * c;
                    for i in 0..vt {
                        for j in 0..vs {
                            let x = match &op {
                                Some(mat) => &w * &mat[(i, j)],
                                None if i == j => w.clone(),
                                None => continue,
                            };
                            if !x.is_zero() {
                                acc.add(toff + tcol * vt + i, src_off + scol * vs + j, &x);
                            }
                        }
                    }
                }
            }
        }
    }

    /// Applies `d^k` to a degree-`k` cochain.
    pub fn apply(&self, f: &DegreeCochain) -> Result<DegreeCochain> {
        let k = f.degree();
        if f.parts().iter().zip(self.shapes(k)).any(|(c, s)| c.shape() != &s) {
            return Err(Error::Shape("cochain does not match this complex".into()));
        }
        let out = self.raw_coboundary(k)?.mul_vec(&f.flatten())?;
        DegreeCochain::unflatten(k + 1, &self.shapes(k + 1), &out)
    }

    /// `d^k` from admissible `C^k` to admissible `C^{k+1}`.
    pub fn slice(&self, k: usize) -> Result<ComplexSlice> {
        let raw = self.raw_coboundary(k)?;
        let source = self.admissible_degree(k);
        let target = self.admissible_degree(k + 1);
        let mut columns = Vec::with_capacity(source.dim());
        for b in source.basis() {
            let image = raw.mul_vec(b)?;
            let coords = target
                .coordinates(&image)
                .ok_or(Error::AdmissibilityNotPreserved(k))?;
            columns.push(coords);
        }
        let matrix = Matrix::from_columns(target.dim(), &columns);
        Ok(ComplexSlice {
            degree: k,
            source,
            target,
            matrix,
        })
    }

    /// Dimensions of admissible cochains, cocycles, coboundaries and cohomology in degree `k`.
    pub fn cohomology_dim(&self, k: usize) -> Result<CohomologyDims> {
        let s = self.slice(k)?;
        let rank_d = RankCertificate::of(&s.matrix);
        let cocycle_dim = s.source.dim() - rank_d.rational;
        let (coboundary_dim, rank_d_prev) = if k >= 2 {
            let prev = self.slice(k - 1)?;
            if !s.matrix.mul(&prev.matrix)?.is_zero() {
                return Err(Error::NotAComplex(k, k - 1));
            }
            let cert = RankCertificate::of(&prev.matrix);
            (cert.rational, Some(cert))
        } else {
            (0, None)
        };
        Ok(CohomologyDims {
            degree: k,
            cochain_dim: s.source.dim(),
            cocycle_dim,
            coboundary_dim,
            cohomology_dim: cocycle_dim - coboundary_dim,
            rank_d,
            rank_d_prev,
        })
    }

    fn require_admissible(&self, f: &DegreeCochain) -> Result<()> {
        for c in f.parts() {
            if !self.is_admissible(c) {
                return Err(Error::Inadmissible(format!("component {}", c.signature())));
            }
        }
        Ok(())
    }

    /// `d f = 0`; the cochain must be admissible.
    pub fn is_cocycle(&self, f: &DegreeCochain) -> Result<bool> {
        self.require_admissible(f)?;
        Ok(self.apply(f)?.is_zero())
    }

    /// Searches for an admissible `g` of degree `k-1` with `d g = f`.
    pub fn is_coboundary(&self, f: &DegreeCochain) -> Result<CoboundaryCheck> {
        let k = f.degree();
        if k < 2 {
            return Err(Error::DegreeOutOfRange(k));
        }
        self.require_admissible(f)?;
        let prev = self.admissible_degree(k - 1);
        let m = self.raw_coboundary(k - 1)?.mul(&prev.basis_matrix())?;
        match solve(&m, &f.flatten())? {
            None => Ok(CoboundaryCheck::NotCoboundary),
            Some(coords) => {
                let g = DegreeCochain::unflatten(k - 1, &self.shapes(k - 1), &prev.combine(&coords))?;
                assert_eq!(self.apply(&g)?, *f, "coboundary witness check failed");
                Ok(CoboundaryCheck::Coboundary(g))
            }
        }
    }

    /// Rank of `d^k` on the raw space; used by sanity checks.
    pub fn raw_rank(&self, k: usize) -> Result<usize> {
        Ok(rank(&self.raw_coboundary(k)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{k1, twisted_k1};
    use crate::representation::{adjoint_representation, semidirect, trivial_representation, HomModule};
    use crate::scalar::int;

    fn dims(c: &CochainComplex, k: usize) -> (usize, usize, usize, usize, usize) {
        let d = c.cohomology_dim(k).unwrap();
        assert!(d.rank_d.agrees());
        (k, d.cochain_dim, d.cocycle_dim, d.coboundary_dim, d.cohomology_dim)
    }

    #[test]
    fn k1_adjoint_dimensions() {
        let a = k1();
        let rho = adjoint_representation(&a).unwrap();
        let c = CochainComplex::new(&a, &rho).unwrap();
        assert_eq!(dims(&c, 1), (1, 5, 3, 0, 3));
        assert_eq!(dims(&c, 2), (2, 6, 2, 2, 0));
        assert_eq!(dims(&c, 3), (3, 6, 4, 4, 0));
    }

    #[test]
    fn twisted_adjoint_dimensions() {
        let a = twisted_k1(&int(3)).unwrap();
        let rho = adjoint_representation(&a).unwrap();
        let c = CochainComplex::new(&a, &rho).unwrap();
        assert_eq!(dims(&c, 1), (1, 3, 1, 0, 1));
        assert_eq!(dims(&c, 2), (2, 4, 2, 2, 0));
        assert_eq!(dims(&c, 3), (3, 4, 2, 2, 0));
    }

    #[test]
    fn trivial_dimensions() {
        let a = k1();
        let rho = trivial_representation(&a, HomModule::identity(1, 0));
        let c = CochainComplex::new(&a, &rho).unwrap();
        assert_eq!(dims(&c, 1), (1, 1, 0, 0, 0));
        assert_eq!(dims(&c, 2), (2, 2, 1, 1, 0));
    }

    #[test]
    fn square_zero_on_k1() {
        let a = k1();
        for rho in [
            adjoint_representation(&a).unwrap(),
            trivial_representation(&a, HomModule::identity(1, 1)),
            trivial_representation(&a, HomModule::identity(2, 1)),
        ] {
            let c = CochainComplex::new(&a, &rho).unwrap();
            for k in 1..4 {
                let dd = c.raw_coboundary(k + 1).unwrap().mul(&c.raw_coboundary(k).unwrap()).unwrap();
                assert!(dd.is_zero(), "d^{} d^{} != 0", k + 1, k);
            }
        }
    }

    #[test]
    fn larger_algebra_is_not_a_complex() {
        let a = k1();
        let rho = adjoint_representation(&a).unwrap();
        let s = semidirect(&a, &rho).unwrap();
        let adj = adjoint_representation(&s).unwrap();
        let c = CochainComplex::new(&s, &adj).unwrap();
        let err = (2..=3).find_map(|k| c.cohomology_dim(k).err());
        assert!(matches!(err, Some(Error::NotAComplex(_, _))), "{err:?}");
    }

    #[test]
    fn exterior_power_of_diagonal() {
        let b = Matrix::diagonal(&[int(2), int(3), int(5)]);
        let l = exterior_power(&b, 2);
        assert_eq!(l, Matrix::diagonal(&[int(6), int(10), int(15)]));
        assert_eq!(exterior_power(&b, 0), Matrix::identity(1));
    }

    #[test]
    fn degree_zero_rejected() {
        let a = k1();
        let rho = adjoint_representation(&a).unwrap();
        let c = CochainComplex::new(&a, &rho).unwrap();
        assert!(matches!(c.raw_coboundary(0), Err(Error::DegreeOutOfRange(0))));
    }
}
