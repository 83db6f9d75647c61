//! One-parameter infinitesimal deformations, Nijenhuis operators and trivial deformations.

use serde::Serialize;

use crate::algebra::{
    axiom_residual_vector, check_axioms, check_multiplicative, is_homomorphism, AlgebraMorphism,
    HomLieAntialgebra,
};
use crate::cohomology::CochainComplex;
use crate::error::{Error, Result};
use crate::extensions::{omega_to_cochain, Omega};
use crate::linalg::solve;
use crate::matrix::{vec_sub, Matrix};
use crate::report::{even_label, odd_label, IdentityReport, IdentityVerdict};
use crate::representation::adjoint_unchecked;
use crate::scalar::{format_rational, frac, int, one, Rational};
use crate::tensor::Tensor3;

/// Sample values of `t` used to decide statements that are polynomial of degree ≤ 2 in `t`.
pub fn default_t_samples() -> [Rational; 4] {
    [int(1), int(-1), int(2), frac(1, 3)]
}

/// The zero `ω` valued in the algebra itself.
pub fn zero_omega(a: &HomLieAntialgebra) -> Omega {
    let (p, q) = (a.even_dim(), a.odd_dim());
    Omega {
        w0: Tensor3::zeros(p, p, p),
        w1: Tensor3::zeros(p, q, q),
        w2: Tensor3::zeros(q, q, p),
    }
}

fn check_adjoint_shape(a: &HomLieAntialgebra, omega: &Omega) -> Result<()> {
    let (p, q) = (a.even_dim(), a.odd_dim());
    let want = [[p, p, p], [p, q, q], [q, q, p]];
    let got = [omega.w0.dims(), omega.w1.dims(), omega.w2.dims()];
    if got != want {
        return Err(Error::Shape(format!("omega blocks {got:?}, expected {want:?}")));
    }
    Ok(())
}

/// Products `mu + tω0`, `nu + tω1`, `br + tω2` with the original twists.
pub fn deform(a: &HomLieAntialgebra, omega: &Omega, t: &Rational) -> Result<HomLieAntialgebra> {
    check_adjoint_shape(a, omega)?;
    HomLieAntialgebra::new(
        a.even_dim(),
        a.odd_dim(),
        a.mu().add(&omega.w0.scale(t)),
        a.nu().add(&omega.w1.scale(t)),
        a.br().add(&omega.w2.scale(t)),
        a.alpha().clone(),
        a.beta().clone(),
    )
}

/// `ω`'s own products as an algebra with the twists of `a`.
fn omega_algebra(a: &HomLieAntialgebra, omega: &Omega) -> Result<HomLieAntialgebra> {
    HomLieAntialgebra::new(
        a.even_dim(),
        a.odd_dim(),
        omega.w0.clone(),
        omega.w1.clone(),
        omega.w2.clone(),
        a.alpha().clone(),
        a.beta().clone(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocycleCondition {
    pub admissible: bool,
    pub closed: bool,
}

impl CocycleCondition {
    pub fn passed(&self) -> bool {
        self.admissible && self.closed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleVerdict {
    pub t: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfinitesimalReport {
    /// `ω` itself defines a multiplicative algebra with the same twists.
    pub condition_i: IdentityReport,
    /// `(½ω0, ω1, ω2)` is an adjoint 2-cocycle.
    pub condition_ii: CocycleCondition,
    /// `deform(a, ω, t)` passes the axioms at each sampled `t`.
    pub samples: Vec<SampleVerdict>,
}

impl InfinitesimalReport {
    pub fn passed(&self) -> bool {
        self.condition_i.passed() && self.condition_ii.passed()
    }

    /// Both conditions hold exactly when every sample passes.
    pub fn consistent(&self) -> bool {
        self.passed() == self.samples.iter().all(|s| s.passed)
    }
}

pub fn check_infinitesimal(a: &HomLieAntialgebra, omega: &Omega) -> Result<InfinitesimalReport> {
    check_adjoint_shape(a, omega)?;
    if !check_multiplicative(a).passed() {
        return Err(Error::NotMultiplicative);
    }
    let w = omega_algebra(a, omega)?;
    let mut condition_i = check_axioms(&w);
    condition_i.extend(check_multiplicative(&w));

    let rho = adjoint_unchecked(a);
    let c = CochainComplex::new(a, &rho)?;
    let f = omega_to_cochain(&c, omega)?;
    let condition_ii = CocycleCondition {
        admissible: f.parts().iter().all(|p| c.is_admissible(p)),
        closed: c.apply(&f)?.is_zero(),
    };

    let samples = default_t_samples()
        .iter()
        .map(|t| {
            Ok(SampleVerdict {
                t: format_rational(t),
                passed: check_axioms(&deform(a, omega, t)?).passed(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InfinitesimalReport {
        condition_i,
        condition_ii,
        samples,
    })
}

/// Axiom residuals of `deform(a, ω, t)` interpolated as cubics in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualFit {
    /// `coefficients[d][i]`: coefficient of `t^d` in residual entry `i`.
    pub coefficients: Vec<Vec<Rational>>,
    /// Highest power of `t` with a nonzero coefficient, `None` if all residuals vanish.
    pub degree: Option<usize>,
}

pub fn fit_axiom_residuals(
    a: &HomLieAntialgebra,
    omega: &Omega,
    samples: &[Rational; 4],
) -> Result<ResidualFit> {
    let values: Vec<Vec<Rational>> = samples
        .iter()
        .map(|t| Ok(axiom_residual_vector(&deform(a, omega, t)?)))
        .collect::<Result<_>>()?;
    let vander = Matrix::from_fn(4, 4, |i, d| {
        (0..d).fold(one(), |acc, _| acc * &samples[i])
    });
    let n = values[0].len();
    let mut coefficients: Vec<Vec<Rational>> = (0..4).map(|_| Vec::with_capacity(n)).collect();
    for i in 0..n {
        let rhs: Vec<Rational> = values.iter().map(|v| v[i].clone()).collect();
        let c = solve(&vander, &rhs)?
            .ok_or_else(|| Error::Parameter("t samples must be distinct".into()))?;
        for (d, x) in c.into_iter().enumerate() {
            coefficients[d].push(x);
        }
    }
    let degree = (0..4)
        .rev()
        .find(|&d| coefficients[d].iter().any(|x| !num_traits::Zero::is_zero(x)));
    Ok(ResidualFit {
        coefficients,
        degree,
    })
}

/// A pair of linear maps `φ0` on `a0`, `φ1` on `a1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisCandidate {
    pub phi0: Matrix,
    pub phi1: Matrix,
}

impl NijenhuisCandidate {
    pub fn identity(a: &HomLieAntialgebra) -> Self {
        NijenhuisCandidate {
            phi0: Matrix::identity(a.even_dim()),
            phi1: Matrix::identity(a.odd_dim()),
        }
    }

    pub fn zero(a: &HomLieAntialgebra) -> Self {
        NijenhuisCandidate {
            phi0: Matrix::zeros(a.even_dim(), a.even_dim()),
            phi1: Matrix::zeros(a.odd_dim(), a.odd_dim()),
        }
    }

    fn check_shape(&self, a: &HomLieAntialgebra) -> Result<()> {
        let (p, q) = (a.even_dim(), a.odd_dim());
        if (self.phi0.rows(), self.phi0.cols(), self.phi1.rows(), self.phi1.cols()) != (p, p, q, q) {
            return Err(Error::Shape(format!("operator blocks must be {p}x{p} and {q}x{q}")));
        }
        Ok(())
    }

    /// `id + tφ`.
    pub fn at(&self, t: &Rational) -> AlgebraMorphism {
        let p = self.phi0.rows();
        let q = self.phi1.rows();
        AlgebraMorphism::new(
            Matrix::identity(p).add(&self.phi0.scale(t)).expect("square"),
            Matrix::identity(q).add(&self.phi1.scale(t)).expect("square"),
        )
    }
}

pub const NIJENHUIS_NAMES: [&str; 5] = [
    "commutes-with-alpha",
    "commutes-with-beta",
    "nijenhuis-even-product",
    "nijenhuis-even-odd-product",
    "nijenhuis-bracket",
];

pub fn is_nijenhuis(a: &HomLieAntialgebra, phi: &NijenhuisCandidate) -> Result<IdentityReport> {
    phi.check_shape(a)?;
    let p0 = |x: &[Rational]| phi.phi0.mul_vec(x).expect("shape");
    let p1 = |y: &[Rational]| phi.phi1.mul_vec(y).expect("shape");
    let commute = |name: &str, m: &Matrix, t: &Matrix, label: fn(usize) -> String| -> Result<IdentityVerdict> {
        let d = m.mul(t)?.sub(&t.mul(m)?)?;
        let mut v = IdentityVerdict::new(name);
        for j in 0..d.cols() {
            v.record(vec![label(j)], d.column(j));
        }
        Ok(v)
    };
    let ca = commute(NIJENHUIS_NAMES[0], &phi.phi0, a.alpha(), even_label)?;
    let cb = commute(NIJENHUIS_NAMES[1], &phi.phi1, a.beta(), odd_label)?;

    let mut n1 = IdentityVerdict::new(NIJENHUIS_NAMES[2]);
    for i in 0..a.even_dim() {
        for j in 0..a.even_dim() {
            let (x1, x2) = (a.e(i), a.e(j));
            let lhs = p0(&a.ee(&x1, &p0(&x2)));
            let lhs = crate::matrix::vec_add(&lhs, &p0(&a.ee(&p0(&x1), &x2)));
            let lhs = vec_sub(&lhs, &p0(&p0(&a.ee(&x1, &x2))));
            n1.record(vec![even_label(i), even_label(j)], vec_sub(&lhs, &a.ee(&p0(&x1), &p0(&x2))));
        }
    }
    let mut n2 = IdentityVerdict::new(NIJENHUIS_NAMES[3]);
    for i in 0..a.even_dim() {
        for j in 0..a.odd_dim() {
            let (x, y) = (a.e(i), a.f(j));
            let lhs = p1(&a.eo(&x, &p1(&y)));
            let lhs = crate::matrix::vec_add(&lhs, &p1(&a.eo(&p0(&x), &y)));
            let lhs = vec_sub(&lhs, &p1(&p1(&a.eo(&x, &y))));
            n2.record(vec![even_label(i), odd_label(j)], vec_sub(&lhs, &a.eo(&p0(&x), &p1(&y))));
        }
    }
    let mut n3 = IdentityVerdict::new(NIJENHUIS_NAMES[4]);
    for i in 0..a.odd_dim() {
        for j in 0..a.odd_dim() {
            let (y1, y2) = (a.f(i), a.f(j));
            let lhs = p0(&a.brk(&y1, &p1(&y2)));
            let lhs = crate::matrix::vec_add(&lhs, &p0(&a.brk(&p1(&y1), &y2)));
            let lhs = vec_sub(&lhs, &p0(&p0(&a.brk(&y1, &y2))));
            n3.record(vec![odd_label(i), odd_label(j)], vec_sub(&lhs, &a.brk(&p1(&y1), &p1(&y2))));
        }
    }
    Ok(IdentityReport::new(vec![ca, cb, n1, n2, n3]))
}

/// The `ω` of the coboundary-shaped formulas, without checking the Nijenhuis identities.
pub fn nijenhuis_omega(a: &HomLieAntialgebra, phi: &NijenhuisCandidate) -> Result<Omega> {
    phi.check_shape(a)?;
    let (p, q) = (a.even_dim(), a.odd_dim());
    let p0 = |x: &[Rational]| phi.phi0.mul_vec(x).expect("shape");
    let p1 = |y: &[Rational]| phi.phi1.mul_vec(y).expect("shape");
    let sum3 = |u: Vec<Rational>, v: Vec<Rational>, w: Vec<Rational>| {
        vec_sub(&crate::matrix::vec_add(&u, &v), &w)
    };
    let mut omega = zero_omega(a);
    for i in 0..p {
        for j in 0..p {
            let (x1, x2) = (a.e(i), a.e(j));
            let v = sum3(a.ee(&x1, &p0(&x2)), a.ee(&p0(&x1), &x2), p0(&a.ee(&x1, &x2)));
            omega.w0.set_fiber(i, j, &v);
        }
        for j in 0..q {
            let (x, y) = (a.e(i), a.f(j));
            let v = sum3(a.eo(&x, &p1(&y)), a.eo(&p0(&x), &y), p1(&a.eo(&x, &y)));
            omega.w1.set_fiber(i, j, &v);
        }
    }
    for i in 0..q {
        for j in 0..q {
            let (y1, y2) = (a.f(i), a.f(j));
            let v = sum3(a.brk(&y1, &p1(&y2)), a.brk(&p1(&y1), &y2), p0(&a.brk(&y1, &y2)));
            omega.w2.set_fiber(i, j, &v);
        }
    }
    Ok(omega)
}

/// `ω` generated by a Nijenhuis operator; refuses operators failing [`is_nijenhuis`].
pub fn deformation_from_nijenhuis(a: &HomLieAntialgebra, phi: &NijenhuisCandidate) -> Result<Omega> {
    let report = is_nijenhuis(a, phi)?;
    if !report.passed() {
        return Err(Error::NotNijenhuis(format!("fails {:?}", report.failing())));
    }
    nijenhuis_omega(a, phi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityReport {
    /// Homomorphism check of `id + tφ: deform(a, ω, t) → a` per sample.
    pub samples: Vec<(Rational, IdentityReport)>,
}

impl TrivialityReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(|(_, r)| r.passed())
    }
}

pub fn verify_trivial(
    a: &HomLieAntialgebra,
    omega: &Omega,
    phi: &NijenhuisCandidate,
    t_samples: &[Rational],
) -> Result<TrivialityReport> {
    phi.check_shape(a)?;
    let samples = t_samples
        .iter()
        .map(|t| {
            let deformed = deform(a, omega, t)?;
            Ok((t.clone(), is_homomorphism(&phi.at(t), &deformed, a)?))
        })
        .collect::<Result<_>>()?;
    Ok(TrivialityReport { samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::k1;

    #[test]
    fn identity_operator_gives_structure_constants() {
        let a = k1();
        let phi = NijenhuisCandidate::identity(&a);
        assert!(is_nijenhuis(&a, &phi).unwrap().passed());
        let w = deformation_from_nijenhuis(&a, &phi).unwrap();
        assert_eq!((&w.w0, &w.w1, &w.w2), (a.mu(), a.nu(), a.br()));
        let doubled = deform(&a, &w, &int(1)).unwrap();
        assert_eq!(doubled.mu(), &a.mu().scale(&int(2)));
        let r = check_infinitesimal(&a, &w).unwrap();
        assert!(r.passed() && r.consistent());
    }

    #[test]
    fn mismatched_scalars_are_not_nijenhuis() {
        let a = k1();
        let phi = NijenhuisCandidate {
            phi0: Matrix::identity(1),
            phi1: Matrix::scalar(2, &int(2)),
        };
        let r = is_nijenhuis(&a, &phi).unwrap();
        assert_eq!(r.failing(), vec!["nijenhuis-bracket"]);
        // [f0, f1]: 2·½ + 2·½ − ½ = 3/2 against 4·½ = 2
        let v = r.verdict("nijenhuis-bracket").unwrap();
        assert_eq!(v.violations[0].residual, vec![frac(-1, 2)]);
    }

    #[test]
    fn coboundaries_of_k1_stay_algebras() {
        // ω = d¹φ is (c·mu, c·nu, (tr φ1 − c)·br) on K(1), which is again an algebra.
        let a = k1();
        let phi = NijenhuisCandidate {
            phi0: Matrix::identity(1),
            phi1: Matrix::scalar(2, &int(2)),
        };
        let w = nijenhuis_omega(&a, &phi).unwrap();
        assert_eq!(w.w2, a.br().scale(&int(3)));
        let r = check_infinitesimal(&a, &w).unwrap();
        assert!(r.passed() && r.consistent());
    }

    #[test]
    fn cocycle_that_is_not_an_algebra() {
        // On an abelian base d = 0, so any admissible ω is a cocycle.
        let a = HomLieAntialgebra::abelian(Matrix::identity(1), Matrix::identity(2)).unwrap();
        let mut w = zero_omega(&a);
        w.w0.set(0, 0, 0, int(1));
        w.w1.set(0, 0, 0, int(1));
        w.w1.set(0, 1, 1, frac(1, 2));
        w.w2.set(0, 1, 0, frac(1, 2));
        w.w2.set(1, 0, 0, frac(-1, 2));
        let r = check_infinitesimal(&a, &w).unwrap();
        assert!(r.condition_ii.passed());
        assert!(!r.condition_i.passed());
        assert!(r.samples.iter().all(|s| !s.passed));
        assert!(r.consistent());
        let fit = fit_axiom_residuals(&a, &w, &default_t_samples()).unwrap();
        assert_eq!(fit.degree, Some(2));
        assert!(!verify_trivial(&a, &w, &NijenhuisCandidate::zero(&a), &[int(1)]).unwrap().passed());
    }
}
