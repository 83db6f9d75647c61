//! Representations on graded Hom-modules, the adjoint representation and semidirect products.

use crate::algebra::HomLieAntialgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{
    even_label, module_even_label, module_odd_label, odd_label, IdentityReport, IdentityVerdict,
};
use crate::scalar::{half, Rational};
use crate::tensor::Tensor3;

/// `V = V0 ⊕ V1` with twist maps `alpha_v` on `V0` and `beta_v` on `V1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomModule {
    alpha_v: Matrix,
    beta_v: Matrix,
}

impl HomModule {
    pub fn new(alpha_v: Matrix, beta_v: Matrix) -> Result<Self> {
        if !alpha_v.is_square() || !beta_v.is_square() {
            return Err(Error::Shape("module twist maps must be square".into()));
        }
        Ok(HomModule { alpha_v, beta_v })
    }

    /// Module of dimension `r|s` with identity twists.
    pub fn identity(r: usize, s: usize) -> Self {
        HomModule {
            alpha_v: Matrix::identity(r),
            beta_v: Matrix::identity(s),
        }
    }

    pub fn even_dim(&self) -> usize {
        self.alpha_v.rows()
    }

    pub fn odd_dim(&self) -> usize {
        self.beta_v.rows()
    }

    pub fn alpha_v(&self) -> &Matrix {
        &self.alpha_v
    }

    pub fn beta_v(&self) -> &Matrix {
        &self.beta_v
    }
}

/// One action matrix per algebra basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    module: HomModule,
    rho0_even: Vec<Matrix>,
    rho0_odd: Vec<Matrix>,
    rho1_up: Vec<Matrix>,
    rho1_down: Vec<Matrix>,
}

fn check_all(what: &str, mats: &[Matrix], rows: usize, cols: usize) -> Result<()> {
    for (i, m) in mats.iter().enumerate() {
        if m.rows() != rows || m.cols() != cols {
            return Err(Error::Shape(format!(
                "{what}[{i}] is {}x{}, expected {rows}x{cols}",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(())
}

fn combine(mats: &[Matrix], coeffs: &[Rational], rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (m, c) in mats.iter().zip(coeffs) {
        if !num_traits::Zero::is_zero(c) {
            out = out.add(&m.scale(c)).expect("shape");
        }
    }
    out
}

impl Representation {
    pub fn new(
        module: HomModule,
        rho0_even: Vec<Matrix>,
        rho0_odd: Vec<Matrix>,
        rho1_up: Vec<Matrix>,
        rho1_down: Vec<Matrix>,
    ) -> Result<Self> {
        let (r, s) = (module.even_dim(), module.odd_dim());
        if rho0_even.len() != rho0_odd.len() || rho1_up.len() != rho1_down.len() {
            return Err(Error::Shape("action lists have inconsistent lengths".into()));
        }
        check_all("rho0_even", &rho0_even, r, r)?;
        check_all("rho0_odd", &rho0_odd, s, s)?;
        check_all("rho1_up", &rho1_up, s, r)?;
        check_all("rho1_down", &rho1_down, r, s)?;
        Ok(Representation {
            module,
            rho0_even,
            rho0_odd,
            rho1_up,
            rho1_down,
        })
    }

    pub fn module(&self) -> &HomModule {
        &self.module
    }

    pub fn rho0_even(&self) -> &[Matrix] {
        &self.rho0_even
    }

    pub fn rho0_odd(&self) -> &[Matrix] {
        &self.rho0_odd
    }

    pub fn rho1_up(&self) -> &[Matrix] {
        &self.rho1_up
    }

    pub fn rho1_down(&self) -> &[Matrix] {
        &self.rho1_down
    }

    pub fn even_dim(&self) -> usize {
        self.module.even_dim()
    }

    pub fn odd_dim(&self) -> usize {
        self.module.odd_dim()
    }

    /// Replaces one action matrix; used to build perturbed fixtures.
    pub fn with_rho1_down(&self, j: usize, m: Matrix) -> Result<Self> {
        let mut down = self.rho1_down.clone();
        down[j] = m;
        Representation::new(
            self.module.clone(),
            self.rho0_even.clone(),
            self.rho0_odd.clone(),
            self.rho1_up.clone(),
            down,
        )
    }

    pub fn check_compatible(&self, a: &HomLieAntialgebra) -> Result<()> {
        if self.rho0_even.len() != a.even_dim() || self.rho1_up.len() != a.odd_dim() {
            return Err(Error::Shape(format!(
                "representation of a {}|{} algebra used with a {}|{} algebra",
                self.rho0_even.len(),
                self.rho1_up.len(),
                a.even_dim(),
                a.odd_dim()
            )));
        }
        Ok(())
    }

    /// `ρ0(x)` on `V0`.
    pub fn act_even_on_even(&self, x: &[Rational]) -> Matrix {
        let r = self.even_dim();
        combine(&self.rho0_even, x, r, r)
    }

    /// `ρ0(x)` on `V1`.
    pub fn act_even_on_odd(&self, x: &[Rational]) -> Matrix {
        let s = self.odd_dim();
        combine(&self.rho0_odd, x, s, s)
    }

    /// `ρ1(y)`: `V0 → V1`.
    pub fn act_odd_up(&self, y: &[Rational]) -> Matrix {
        combine(&self.rho1_up, y, self.odd_dim(), self.even_dim())
    }

    /// `ρ1(y)`: `V1 → V0`.
    pub fn act_odd_down(&self, y: &[Rational]) -> Matrix {
        combine(&self.rho1_down, y, self.even_dim(), self.odd_dim())
    }
}

pub const REPRESENTATION_NAMES: [&str; 7] = [
    "even-action-on-even",
    "even-action-on-odd",
    "even-after-odd-on-even",
    "odd-of-product-on-even",
    "even-after-odd-on-odd",
    "bracket-action-on-even",
    "bracket-action-on-odd",
];

fn columns_into(v: &mut IdentityVerdict, prefix: &[String], m: &Matrix, label: fn(usize) -> String) {
    for c in 0..m.cols() {
        let mut t = prefix.to_vec();
        t.push(label(c));
        v.record(t, m.column(c));
    }
}

/// The seven representation identities, evaluated on basis elements. The last one
/// carries the sign forced by the semidirect product (the two orders of the odd
/// pair enter with `+ρ1(βy2)ρ1(y1)` on the right).
pub fn check_representation(a: &HomLieAntialgebra, rho: &Representation) -> Result<IdentityReport> {
    rho.check_compatible(a)?;
    let (p, q) = (a.even_dim(), a.odd_dim());
    let av = rho.module.alpha_v();
    let bv = rho.module.beta_v();
    let mul = |x: &Matrix, y: &Matrix| x.mul(y).expect("shape");
    let sub = |x: &Matrix, y: &Matrix| x.sub(y).expect("shape");
    let add = |x: &Matrix, y: &Matrix| x.add(y).expect("shape");
    let h = half();

    let mut v: Vec<IdentityVerdict> =
        REPRESENTATION_NAMES.iter().map(|n| IdentityVerdict::new(*n)).collect();
    for i in 0..p {
        let x1 = a.e(i);
        let ax1 = a.al(&x1);
        for j in 0..p {
            let x2 = a.e(j);
            let x12 = a.ee(&x1, &x2);
            let prefix = [even_label(i), even_label(j)];
            let r1 = sub(
                &mul(&rho.act_even_on_even(&ax1), &rho.act_even_on_even(&x2)),
                &mul(&rho.act_even_on_even(&x12), av),
            );
            columns_into(&mut v[0], &prefix, &r1, module_even_label);
            let r2 = sub(
                &mul(&rho.act_even_on_odd(&ax1), &rho.act_even_on_odd(&x2)),
                &mul(&rho.act_even_on_odd(&x12), bv).scale(&h),
            );
            columns_into(&mut v[1], &prefix, &r2, module_odd_label);
        }
        for l in 0..q {
            let y = a.f(l);
            let by = a.be(&y);
            let xy = a.eo(&x1, &y);
            let prefix = [even_label(i), odd_label(l)];
            let shared = mul(&rho.act_odd_up(&by), &rho.act_even_on_even(&x1)).scale(&h);
            let r3 = sub(&mul(&rho.act_even_on_odd(&ax1), &rho.act_odd_up(&y)), &shared);
            columns_into(&mut v[2], &prefix, &r3, module_even_label);
            let r4 = sub(&mul(&rho.act_odd_up(&xy), av), &shared);
            columns_into(&mut v[3], &prefix, &r4, module_even_label);
            let r5 = sub(
                &sub(
                    &mul(&rho.act_even_on_even(&ax1), &rho.act_odd_down(&y)),
                    &mul(&rho.act_odd_down(&xy), bv),
                ),
                &mul(&rho.act_odd_down(&by), &rho.act_even_on_odd(&x1)),
            );
            columns_into(&mut v[4], &prefix, &r5, module_odd_label);
        }
    }
    for l1 in 0..q {
        let y1 = a.f(l1);
        let by1 = a.be(&y1);
        for l2 in 0..q {
            let y2 = a.f(l2);
            let by2 = a.be(&y2);
            let b12 = a.brk(&y1, &y2);
            let prefix = [odd_label(l1), odd_label(l2)];
            let r6 = add(
                &sub(
                    &mul(&rho.act_even_on_even(&b12), av),
                    &mul(&rho.act_odd_down(&by1), &rho.act_odd_up(&y2)),
                ),
                &mul(&rho.act_odd_down(&by2), &rho.act_odd_up(&y1)),
            );
            columns_into(&mut v[5], &prefix, &r6, module_even_label);
            let r7 = sub(
                &add(
                    &mul(&rho.act_even_on_odd(&b12), bv),
                    &mul(&rho.act_odd_up(&by1), &rho.act_odd_down(&y2)),
                ),
                &mul(&rho.act_odd_up(&by2), &rho.act_odd_down(&y1)),
            );
            columns_into(&mut v[6], &prefix, &r7, module_odd_label);
        }
    }
    Ok(IdentityReport::new(v))
}

/// The algebra acting on itself through its own products.
pub fn adjoint_representation(a: &HomLieAntialgebra) -> Result<Representation> {
    let axioms = crate::algebra::check_axioms(a);
    if !axioms.passed() {
        return Err(Error::Precondition(format!(
            "algebra fails {:?}",
            axioms.failing()
        )));
    }
    if !crate::algebra::check_multiplicative(a).passed() {
        return Err(Error::NotMultiplicative);
    }
    let rho = adjoint_unchecked(a);
    let report = check_representation(a, &rho)?;
    assert!(report.passed(), "adjoint fails {:?}", report.failing());
    Ok(rho)
}

/// Adjoint action matrices without the axiom precondition.
pub fn adjoint_unchecked(a: &HomLieAntialgebra) -> Representation {
    let (p, q) = (a.even_dim(), a.odd_dim());
    let (mu, nu, br) = (a.mu(), a.nu(), a.br());
    let rho0_even = (0..p)
        .map(|i| Matrix::from_fn(p, p, |k, j| mu.get(i, j, k).clone()))
        .collect();
    let rho0_odd = (0..p)
        .map(|i| Matrix::from_fn(q, q, |k, j| nu.get(i, j, k).clone()))
        .collect();
    let rho1_up = (0..q)
        .map(|j| Matrix::from_fn(q, p, |k, i| nu.get(i, j, k).clone()))
        .collect();
    let rho1_down = (0..q)
        .map(|j| Matrix::from_fn(p, q, |k, l| br.get(j, l, k).clone()))
        .collect();
    Representation::new(
        HomModule::new(a.alpha().clone(), a.beta().clone()).expect("square twists"),
        rho0_even,
        rho0_odd,
        rho1_up,
        rho1_down,
    )
    .expect("adjoint shapes")
}

/// All actions zero.
pub fn trivial_representation(a: &HomLieAntialgebra, module: HomModule) -> Representation {
    let (p, q) = (a.even_dim(), a.odd_dim());
    let (r, s) = (module.even_dim(), module.odd_dim());
    Representation::new(
        module,
        vec![Matrix::zeros(r, r); p],
        vec![Matrix::zeros(s, s); p],
        vec![Matrix::zeros(s, r); q],
        vec![Matrix::zeros(r, s); q],
    )
    .expect("trivial shapes")
}

/// Structure tensors of `a ⋉ V` on `(a0 ⊕ V0, a1 ⊕ V1)`, algebra coordinates first.
pub(crate) fn semidirect_tensors(
    a: &HomLieAntialgebra,
    rho: &Representation,
) -> (Tensor3, Tensor3, Tensor3) {
    let (p, q) = (a.even_dim(), a.odd_dim());
    let (r, s) = (rho.even_dim(), rho.odd_dim());
    let (pp, qq) = (p + r, q + s);
    let mut mu = Tensor3::zeros(pp, pp, pp);
    let mut nu = Tensor3::zeros(pp, qq, qq);
    let mut br = Tensor3::zeros(qq, qq, pp);
    for (i, j, k, c) in a.mu().nonzero() {
        mu.set(i, j, k, c.clone());
    }
    for (i, j, k, c) in a.nu().nonzero() {
        nu.set(i, j, k, c.clone());
    }
    for (i, j, k, c) in a.br().nonzero() {
        br.set(i, j, k, c.clone());
    }
    for i in 0..p {
        let m = &rho.rho0_even[i];
        for u in 0..r {
            for k in 0..r {
                mu.set(i, p + u, p + k, m[(k, u)].clone());
                mu.set(p + u, i, p + k, m[(k, u)].clone());
            }
        }
        let m = &rho.rho0_odd[i];
        for w in 0..s {
            for k in 0..s {
                nu.set(i, q + w, q + k, m[(k, w)].clone());
            }
        }
    }
    for j in 0..q {
        let up = &rho.rho1_up[j];
        for u in 0..r {
            for k in 0..s {
                nu.set(p + u, j, q + k, up[(k, u)].clone());
            }
        }
        let down = &rho.rho1_down[j];
        for w in 0..s {
            for k in 0..r {
                br.set(j, q + w, p + k, down[(k, w)].clone());
                br.set(q + w, j, p + k, -down[(k, w)].clone());
            }
        }
    }
    (mu, nu, br)
}

pub fn semidirect(a: &HomLieAntialgebra, rho: &Representation) -> Result<HomLieAntialgebra> {
    rho.check_compatible(a)?;
    let (mu, nu, br) = semidirect_tensors(a, rho);
    HomLieAntialgebra::new(
        a.even_dim() + rho.even_dim(),
        a.odd_dim() + rho.odd_dim(),
        mu,
        nu,
        br,
        a.alpha().direct_sum(rho.module.alpha_v()),
        a.beta().direct_sum(rho.module.beta_v()),
    )
}
