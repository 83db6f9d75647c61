//! Hom-Lie antialgebras, their defining identities, homomorphisms and twists.

use crate::error::{Error, Result};
use crate::matrix::{axpy, unit_vector, vec_sub, Matrix};
use crate::report::{even_label, odd_label, IdentityReport, IdentityVerdict};
use crate::scalar::{half, one, zero, Rational};
use crate::tensor::Tensor3;

/// Even part spanned by `e_0..e_{p-1}`, odd part by `f_0..f_{q-1}`.
/// Matrices act on column vectors: column `j` of `alpha` is `alpha(e_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomLieAntialgebra {
    p: usize,
    q: usize,
    mu: Tensor3,
    nu: Tensor3,
    br: Tensor3,
    alpha: Matrix,
    beta: Matrix,
}

fn check_shape(what: &str, got: [usize; 3], want: [usize; 3]) -> Result<()> {
    if got != want {
        return Err(Error::Shape(format!("{what} has shape {got:?}, expected {want:?}")));
    }
    Ok(())
}

fn check_square(what: &str, m: &Matrix, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::Shape(format!(
            "{what} is {}x{}, expected {n}x{n}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

impl HomLieAntialgebra {
    pub fn new(
        p: usize,
        q: usize,
        mu: Tensor3,
        nu: Tensor3,
        br: Tensor3,
        alpha: Matrix,
        beta: Matrix,
    ) -> Result<Self> {
        check_shape("mu", mu.dims(), [p, p, p])?;
        check_shape("nu", nu.dims(), [p, q, q])?;
        check_shape("br", br.dims(), [q, q, p])?;
        check_square("alpha", &alpha, p)?;
        check_square("beta", &beta, q)?;
        if let Some((i, j)) = mu.symmetry_defect() {
            return Err(Error::MuNotSymmetric(i, j));
        }
        if let Some((i, j)) = br.antisymmetry_defect() {
            return Err(Error::BracketNotAntisymmetric(i, j));
        }
        Ok(HomLieAntialgebra {
            p,
            q,
            mu,
            nu,
            br,
            alpha,
            beta,
        })
    }

    /// All products zero.
    pub fn abelian(alpha: Matrix, beta: Matrix) -> Result<Self> {
        let (p, q) = (alpha.rows(), beta.rows());
        HomLieAntialgebra::new(
            p,
            q,
            Tensor3::zeros(p, p, p),
            Tensor3::zeros(p, q, q),
            Tensor3::zeros(q, q, p),
            alpha,
            beta,
        )
    }

    pub fn even_dim(&self) -> usize {
        self.p
    }

    pub fn odd_dim(&self) -> usize {
        self.q
    }

    pub fn mu(&self) -> &Tensor3 {
        &self.mu
    }

    pub fn nu(&self) -> &Tensor3 {
        &self.nu
    }

    pub fn br(&self) -> &Tensor3 {
        &self.br
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    /// Same products, new twist maps.
    pub fn with_twists(&self, alpha: Matrix, beta: Matrix) -> Result<Self> {
        HomLieAntialgebra::new(
            self.p,
            self.q,
            self.mu.clone(),
            self.nu.clone(),
            self.br.clone(),
            alpha,
            beta,
        )
    }

    pub fn has_identity_twists(&self) -> bool {
        self.alpha == Matrix::identity(self.p) && self.beta == Matrix::identity(self.q)
    }

    pub fn is_abelian(&self) -> bool {
        self.mu.is_zero() && self.nu.is_zero() && self.br.is_zero()
    }

    fn check_len(what: &str, v: &[Rational], n: usize) -> Result<()> {
        if v.len() != n {
            return Err(Error::Shape(format!("{what} has length {}, expected {n}", v.len())));
        }
        Ok(())
    }

    pub fn prod_ee(&self, x1: &[Rational], x2: &[Rational]) -> Result<Vec<Rational>> {
        Self::check_len("x1", x1, self.p)?;
        Self::check_len("x2", x2, self.p)?;
        Ok(self.ee(x1, x2))
    }

    pub fn prod_eo(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        Self::check_len("x", x, self.p)?;
        Self::check_len("y", y, self.q)?;
        Ok(self.eo(x, y))
    }

    pub fn bracket(&self, y1: &[Rational], y2: &[Rational]) -> Result<Vec<Rational>> {
        Self::check_len("y1", y1, self.q)?;
        Self::check_len("y2", y2, self.q)?;
        Ok(self.brk(y1, y2))
    }

    pub(crate) fn ee(&self, x1: &[Rational], x2: &[Rational]) -> Vec<Rational> {
        self.mu.contract(x1, x2)
    }

    pub(crate) fn eo(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.nu.contract(x, y)
    }

    pub(crate) fn brk(&self, y1: &[Rational], y2: &[Rational]) -> Vec<Rational> {
        self.br.contract(y1, y2)
    }

    pub(crate) fn al(&self, x: &[Rational]) -> Vec<Rational> {
        self.alpha.mul_vec(x).expect("even vector length")
    }

    pub(crate) fn be(&self, y: &[Rational]) -> Vec<Rational> {
        self.beta.mul_vec(y).expect("odd vector length")
    }

    pub(crate) fn e(&self, i: usize) -> Vec<Rational> {
        unit_vector(self.p, i)
    }

    pub(crate) fn f(&self, j: usize) -> Vec<Rational> {
        unit_vector(self.q, j)
    }
}

pub const AXIOM_NAMES: [&str; 4] = [
    "hom-associativity",
    "even-odd-action",
    "bracket-derivation",
    "odd-cyclic",
];

type ResidualRows = Vec<(Vec<String>, Vec<Rational>)>;

/// Residuals of the four defining identities on every basis tuple, zeros included.
fn axiom_residuals(a: &HomLieAntialgebra) -> [ResidualRows; 4] {
    let (p, q) = (a.p, a.q);
    let mut assoc = Vec::new();
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                let (x1, x2, x3) = (a.e(i), a.e(j), a.e(k));
                let lhs = a.ee(&a.al(&x1), &a.ee(&x2, &x3));
                let rhs = a.ee(&a.ee(&x1, &x2), &a.al(&x3));
                assoc.push((
                    vec![even_label(i), even_label(j), even_label(k)],
                    vec_sub(&lhs, &rhs),
                ));
            }
        }
    }
    let mut action = Vec::new();
    for i in 0..p {
        for j in 0..p {
            for l in 0..q {
                let (x1, x2, y) = (a.e(i), a.e(j), a.f(l));
                let lhs = a.eo(&a.al(&x1), &a.eo(&x2, &y));
                let rhs = a.eo(&a.ee(&x1, &x2), &a.be(&y));
                action.push((
                    vec![even_label(i), even_label(j), odd_label(l)],
                    lhs.iter().zip(&rhs).map(|(l, r)| l - r * half()).collect(),
                ));
            }
        }
    }
    let mut derivation = Vec::new();
    for i in 0..p {
        for l1 in 0..q {
            for l2 in 0..q {
                let (x, y1, y2) = (a.e(i), a.f(l1), a.f(l2));
                let lhs = a.ee(&a.al(&x), &a.brk(&y1, &y2));
                let r1 = a.brk(&a.eo(&x, &y1), &a.be(&y2));
                let r2 = a.brk(&a.be(&y1), &a.eo(&x, &y2));
                derivation.push((
                    vec![even_label(i), odd_label(l1), odd_label(l2)],
                    (0..p).map(|k| &lhs[k] - &r1[k] - &r2[k]).collect(),
                ));
            }
        }
    }
    let mut cyclic = Vec::new();
    for l1 in 0..q {
        for l2 in 0..q {
            for l3 in 0..q {
                let ys = [a.f(l1), a.f(l2), a.f(l3)];
                let mut res = vec![zero(); q];
                for s in 0..3 {
                    let (u, v, w) = (&ys[s], &ys[(s + 1) % 3], &ys[(s + 2) % 3]);
                    // odd·even is written through the even·odd tensor
                    axpy(&mut res, &one(), &a.eo(&a.brk(v, w), &a.be(u)));
                }
                cyclic.push((vec![odd_label(l1), odd_label(l2), odd_label(l3)], res));
            }
        }
    }
    [assoc, action, derivation, cyclic]
}

pub fn check_axioms(a: &HomLieAntialgebra) -> IdentityReport {
    let rows = axiom_residuals(a);
    IdentityReport::new(
        rows.into_iter()
            .zip(AXIOM_NAMES)
            .map(|(rows, name)| {
                let mut v = IdentityVerdict::new(name);
                for (tuple, res) in rows {
                    v.record(tuple, res);
                }
                v
            })
            .collect(),
    )
}

/// Concatenated residuals of the four identities over every basis tuple in a fixed layout.
pub fn axiom_residual_vector(a: &HomLieAntialgebra) -> Vec<Rational> {
    axiom_residuals(a)
        .into_iter()
        .flat_map(|rows| rows.into_iter().flat_map(|(_, r)| r))
        .collect()
}

pub const MULTIPLICATIVITY_NAMES: [&str; 3] = [
    "alpha-even-product",
    "beta-even-odd-product",
    "alpha-bracket",
];

pub fn check_multiplicative(a: &HomLieAntialgebra) -> IdentityReport {
    let (p, q) = (a.p, a.q);
    let mut ee = IdentityVerdict::new(MULTIPLICATIVITY_NAMES[0]);
    for i in 0..p {
        for j in 0..p {
            let (x1, x2) = (a.e(i), a.e(j));
            ee.record(
                vec![even_label(i), even_label(j)],
                vec_sub(&a.al(&a.ee(&x1, &x2)), &a.ee(&a.al(&x1), &a.al(&x2))),
            );
        }
    }
    let mut eo = IdentityVerdict::new(MULTIPLICATIVITY_NAMES[1]);
    for i in 0..p {
        for l in 0..q {
            let (x, y) = (a.e(i), a.f(l));
            eo.record(
                vec![even_label(i), odd_label(l)],
                vec_sub(&a.be(&a.eo(&x, &y)), &a.eo(&a.al(&x), &a.be(&y))),
            );
        }
    }
    let mut br = IdentityVerdict::new(MULTIPLICATIVITY_NAMES[2]);
    for l1 in 0..q {
        for l2 in 0..q {
            let (y1, y2) = (a.f(l1), a.f(l2));
            br.record(
                vec![odd_label(l1), odd_label(l2)],
                vec_sub(&a.al(&a.brk(&y1, &y2)), &a.brk(&a.be(&y1), &a.be(&y2))),
            );
        }
    }
    IdentityReport::new(vec![ee, eo, br])
}

/// A parity-preserving linear map between two algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub phi0: Matrix,
    pub phi1: Matrix,
}

impl AlgebraMorphism {
    pub fn new(phi0: Matrix, phi1: Matrix) -> Self {
        AlgebraMorphism { phi0, phi1 }
    }

    pub fn identity(a: &HomLieAntialgebra) -> Self {
        AlgebraMorphism::new(Matrix::identity(a.p), Matrix::identity(a.q))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        Ok(AlgebraMorphism::new(
            other.phi0.mul(&self.phi0)?,
            other.phi1.mul(&self.phi1)?,
        ))
    }

    fn check_shapes(&self, src: &HomLieAntialgebra, dst: &HomLieAntialgebra) -> Result<()> {
        let ok = self.phi0.rows() == dst.p
            && self.phi0.cols() == src.p
            && self.phi1.rows() == dst.q
            && self.phi1.cols() == src.q;
        if !ok {
            return Err(Error::Shape(format!(
                "morphism blocks {}x{} and {}x{} do not map {}|{} to {}|{}",
                self.phi0.rows(),
                self.phi0.cols(),
                self.phi1.rows(),
                self.phi1.cols(),
                src.p,
                src.q,
                dst.p,
                dst.q
            )));
        }
        Ok(())
    }
}

pub const HOMOMORPHISM_NAMES: [&str; 5] = [
    "preserves-even-product",
    "preserves-even-odd-product",
    "preserves-bracket",
    "intertwines-alpha",
    "intertwines-beta",
];

fn matrix_columns_verdict(name: &str, diff: &Matrix, label: fn(usize) -> String) -> IdentityVerdict {
    let mut v = IdentityVerdict::new(name);
    for j in 0..diff.cols() {
        v.record(vec![label(j)], diff.column(j));
    }
    v
}

pub fn is_homomorphism(
    phi: &AlgebraMorphism,
    src: &HomLieAntialgebra,
    dst: &HomLieAntialgebra,
) -> Result<IdentityReport> {
    phi.check_shapes(src, dst)?;
    let f0 = |x: &[Rational]| phi.phi0.mul_vec(x).expect("shape");
    let f1 = |y: &[Rational]| phi.phi1.mul_vec(y).expect("shape");
    let mut ee = IdentityVerdict::new(HOMOMORPHISM_NAMES[0]);
    for i in 0..src.p {
        for j in 0..src.p {
            let (x1, x2) = (src.e(i), src.e(j));
            ee.record(
                vec![even_label(i), even_label(j)],
                vec_sub(&f0(&src.ee(&x1, &x2)), &dst.ee(&f0(&x1), &f0(&x2))),
            );
        }
    }
    let mut eo = IdentityVerdict::new(HOMOMORPHISM_NAMES[1]);
    for i in 0..src.p {
        for l in 0..src.q {
            let (x, y) = (src.e(i), src.f(l));
            eo.record(
                vec![even_label(i), odd_label(l)],
                vec_sub(&f1(&src.eo(&x, &y)), &dst.eo(&f0(&x), &f1(&y))),
            );
        }
    }
    let mut br = IdentityVerdict::new(HOMOMORPHISM_NAMES[2]);
    for l1 in 0..src.q {
        for l2 in 0..src.q {
            let (y1, y2) = (src.f(l1), src.f(l2));
            br.record(
                vec![odd_label(l1), odd_label(l2)],
                vec_sub(&f0(&src.brk(&y1, &y2)), &dst.brk(&f1(&y1), &f1(&y2))),
            );
        }
    }
    let da = phi.phi0.mul(&src.alpha)?.sub(&dst.alpha.mul(&phi.phi0)?)?;
    let db = phi.phi1.mul(&src.beta)?.sub(&dst.beta.mul(&phi.phi1)?)?;
    Ok(IdentityReport::new(vec![
        ee,
        eo,
        br,
        matrix_columns_verdict(HOMOMORPHISM_NAMES[3], &da, even_label),
        matrix_columns_verdict(HOMOMORPHISM_NAMES[4], &db, odd_label),
    ]))
}

/// Induced Hom-structure: products post-composed with the endomorphism, which
/// also becomes the twist pair.
pub fn twist(a: &HomLieAntialgebra, phi: &AlgebraMorphism) -> Result<HomLieAntialgebra> {
    if !a.has_identity_twists() {
        return Err(Error::Precondition("twist needs identity twist maps".into()));
    }
    let axioms = check_axioms(a);
    if !axioms.passed() {
        return Err(Error::Precondition(format!(
            "input is not a Lie antialgebra (fails {:?})",
            axioms.failing()
        )));
    }
    let hom = is_homomorphism(phi, a, a)?;
    if !hom.passed() {
        return Err(Error::Precondition(format!(
            "map is not an endomorphism (fails {:?})",
            hom.failing()
        )));
    }
    let out = HomLieAntialgebra::new(
        a.p,
        a.q,
        a.mu.map_output(&phi.phi0),
        a.nu.map_output(&phi.phi1),
        a.br.map_output(&phi.phi0),
        phi.phi0.clone(),
        phi.phi1.clone(),
    )?;
    let check = check_axioms(&out);
    assert!(check.passed(), "twist produced an algebra failing {:?}", check.failing());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::k1;
    use crate::scalar::{frac, int};

    #[test]
    fn rejects_asymmetric_mu() {
        let mut mu = Tensor3::zeros(2, 2, 2);
        mu.set(0, 1, 0, int(1));
        let r = HomLieAntialgebra::new(
            2,
            0,
            mu,
            Tensor3::zeros(2, 0, 0),
            Tensor3::zeros(0, 0, 2),
            Matrix::identity(2),
            Matrix::identity(0),
        );
        assert!(matches!(r, Err(Error::MuNotSymmetric(0, 1))));
    }

    #[test]
    fn rejects_symmetric_bracket() {
        let mut br = Tensor3::zeros(1, 1, 1);
        br.set(0, 0, 0, int(1));
        let r = HomLieAntialgebra::new(
            1,
            1,
            Tensor3::zeros(1, 1, 1),
            Tensor3::zeros(1, 1, 1),
            br,
            Matrix::identity(1),
            Matrix::identity(1),
        );
        assert!(matches!(r, Err(Error::BracketNotAntisymmetric(0, 0))));
    }

    #[test]
    fn k1_products() {
        let a = k1();
        let e = vec![int(1)];
        let fa = vec![int(1), int(0)];
        let fb = vec![int(0), int(1)];
        assert_eq!(a.prod_ee(&e, &e).unwrap(), e);
        assert_eq!(a.prod_eo(&e, &fa).unwrap(), vec![frac(1, 2), zero()]);
        assert_eq!(a.bracket(&fa, &fb).unwrap(), vec![frac(1, 2)]);
        assert_eq!(a.bracket(&fb, &fa).unwrap(), vec![frac(-1, 2)]);
        assert_eq!(a.bracket(&fa, &fa).unwrap(), vec![zero()]);
        assert!(a.prod_ee(&fa, &e).is_err());
    }

    #[test]
    fn abelian_is_valid_with_any_twists() {
        let alpha = Matrix::from_rows(vec![vec![int(2), int(1)], vec![int(0), int(0)]]).unwrap();
        let a = HomLieAntialgebra::abelian(alpha, Matrix::zeros(3, 3)).unwrap();
        assert!(check_axioms(&a).passed());
        assert!(check_multiplicative(&a).passed());
    }

    #[test]
    fn non_endomorphism_scaling() {
        let a = k1();
        let phi = AlgebraMorphism::new(Matrix::scalar(1, &int(2)), Matrix::identity(2));
        let rep = is_homomorphism(&phi, &a, &a).unwrap();
        let v = rep.verdict(HOMOMORPHISM_NAMES[0]).unwrap();
        assert_eq!(v.violations.len(), 1);
        // 2ε - 4ε
        assert_eq!(v.violations[0].residual, vec![int(-2)]);
    }

    #[test]
    fn residual_vector_matches_report() {
        let a = k1();
        assert!(crate::matrix::vec_is_zero(&axiom_residual_vector(&a)));
        let report = check_axioms(&a);
        let total: usize = report.identities.iter().map(|r| r.tuples_checked).sum();
        assert_eq!(total, 1 + 2 + 4 + 8);
    }
}
