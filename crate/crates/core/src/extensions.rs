//! Abelian extensions `0 → V → a ⊕_ω V → a → 0` and their classification by `H²`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{check_axioms, is_homomorphism, AlgebraMorphism, HomLieAntialgebra};
use crate::cochain::{Cochain, CochainSignature, DegreeCochain};
use crate::cohomology::{CoboundaryCheck, CochainComplex};
use crate::error::{Error, Result};
use crate::linalg::{rank, Subspace};
use crate::matrix::{unit_vector, vec_is_zero, Matrix};
use crate::report::IdentityReport;
use crate::representation::{semidirect_tensors, HomModule, Representation};
use crate::scalar::{half, int, Rational};
use crate::tensor::Tensor3;

/// `ω0: a0×a0 → V0`, `ω1: a0×a1 → V1`, `ω2: a1×a1 → V0` as coefficient tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Omega {
    pub w0: Tensor3,
    pub w1: Tensor3,
    pub w2: Tensor3,
}

impl Omega {
    pub fn zero(a: &HomLieAntialgebra, rho: &Representation) -> Self {
        let (p, q, r, s) = (a.even_dim(), a.odd_dim(), rho.even_dim(), rho.odd_dim());
        Omega {
            w0: Tensor3::zeros(p, p, r),
            w1: Tensor3::zeros(p, q, s),
            w2: Tensor3::zeros(q, q, r),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.w0.is_zero() && self.w1.is_zero() && self.w2.is_zero()
    }

    pub fn add(&self, other: &Omega) -> Omega {
        Omega {
            w0: self.w0.add(&other.w0),
            w1: self.w1.add(&other.w1),
            w2: self.w2.add(&other.w2),
        }
    }

    pub fn sub(&self, other: &Omega) -> Omega {
        Omega {
            w0: self.w0.sub(&other.w0),
            w1: self.w1.sub(&other.w1),
            w2: self.w2.sub(&other.w2),
        }
    }

    pub fn scale(&self, c: &Rational) -> Omega {
        Omega {
            w0: self.w0.scale(c),
            w1: self.w1.scale(c),
            w2: self.w2.scale(c),
        }
    }

    fn check_shape(&self, a: &HomLieAntialgebra, rho: &Representation) -> Result<()> {
        let (p, q, r, s) = (a.even_dim(), a.odd_dim(), rho.even_dim(), rho.odd_dim());
        let want = [[p, p, r], [p, q, s], [q, q, r]];
        let got = [self.w0.dims(), self.w1.dims(), self.w2.dims()];
        if got != want {
            return Err(Error::Shape(format!("omega blocks {got:?}, expected {want:?}")));
        }
        Ok(())
    }

    fn check_symmetry(&self) -> Result<()> {
        if let Some((i, j)) = self.w0.symmetry_defect() {
            return Err(Error::NotSymmetric {
                what: "omega0".into(),
                i,
                j,
            });
        }
        if let Some((i, j)) = self.w2.antisymmetry_defect() {
            return Err(Error::NotAntisymmetric {
                what: "omega2".into(),
                i,
                j,
            });
        }
        Ok(())
    }
}

/// The degree-2 cochain `(½ω0, ω1, ω2)`; the single place where the `½` enters.
pub fn omega_to_cochain(c: &CochainComplex, omega: &Omega) -> Result<DegreeCochain> {
    omega.check_shape(c.algebra(), c.representation())?;
    let (p, q) = (c.algebra().even_dim(), c.algebra().odd_dim());
    let mut f20 = Cochain::zero(c.shape(CochainSignature::new(2, 0)));
    for i in 0..p {
        for j in 0..p {
            let v: Vec<Rational> = omega.w0.fiber(i, j).iter().map(|x| x * half()).collect();
            f20.set(&[i, j], &[], &v)?;
        }
    }
    let mut f11 = Cochain::zero(c.shape(CochainSignature::new(1, 1)));
    for i in 0..p {
        for j in 0..q {
            f11.set(&[i], &[j], omega.w1.fiber(i, j))?;
        }
    }
    let mut f02 = Cochain::zero(c.shape(CochainSignature::new(0, 2)));
    for i in 0..q {
        for j in i + 1..q {
            f02.set(&[], &[i, j], omega.w2.fiber(i, j))?;
        }
    }
    DegreeCochain::new(2, vec![f20, f11, f02])
}

/// Inverse of [`omega_to_cochain`].
pub fn cochain_to_omega(c: &CochainComplex, f: &DegreeCochain) -> Result<Omega> {
    if f.degree() != 2 {
        return Err(Error::DegreeOutOfRange(f.degree()));
    }
    let mut omega = Omega::zero(c.algebra(), c.representation());
    let (p, q) = (c.algebra().even_dim(), c.algebra().odd_dim());
    let parts = f.parts();
    for i in 0..p {
        for j in 0..p {
            let v: Vec<Rational> = parts[0].eval(&[i, j], &[]).iter().map(|x| x * int(2)).collect();
            omega.w0.set_fiber(i, j, &v);
        }
        for j in 0..q {
            omega.w1.set_fiber(i, j, &parts[1].eval(&[i], &[j]));
        }
    }
    for i in 0..q {
        for j in 0..q {
            omega.w2.set_fiber(i, j, &parts[2].eval(&[], &[i, j]));
        }
    }
    Ok(omega)
}

/// Base algebra, module and representation together with an `ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionDatum {
    pub base: HomLieAntialgebra,
    pub rep: Representation,
    pub omega: Omega,
}

/// The algebra `a ⊕ V` whose products are those of the semidirect product shifted by `ω`.
pub fn extension_from_cocycle(
    a: &HomLieAntialgebra,
    rho: &Representation,
    omega: &Omega,
) -> Result<HomLieAntialgebra> {
    rho.check_compatible(a)?;
    omega.check_shape(a, rho)?;
    omega.check_symmetry()?;
    let c = CochainComplex::new(a, rho)?;
    for part in omega_to_cochain(&c, omega)?.parts() {
        if !c.is_admissible(part) {
            return Err(Error::Inadmissible(format!("omega component {}", part.signature())));
        }
    }
    let (p, q) = (a.even_dim(), a.odd_dim());
    let (mut mu, mut nu, mut br) = semidirect_tensors(a, rho);
    for (i, j, k, x) in omega.w0.nonzero() {
        mu.add_at(i, j, p + k, x);
    }
    for (i, j, k, x) in omega.w1.nonzero() {
        nu.add_at(i, j, q + k, x);
    }
    for (i, j, k, x) in omega.w2.nonzero() {
        br.add_at(i, j, p + k, x);
    }
    HomLieAntialgebra::new(
        p + rho.even_dim(),
        q + rho.odd_dim(),
        mu,
        nu,
        br,
        a.alpha().direct_sum(rho.module().alpha_v()),
        a.beta().direct_sum(rho.module().beta_v()),
    )
}

/// Which coordinates of the big algebra span the base complement and the fibre `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionFrame {
    pub base_even: Vec<usize>,
    pub base_odd: Vec<usize>,
    pub fiber_even: Vec<usize>,
    pub fiber_odd: Vec<usize>,
}

impl ExtensionFrame {
    /// Base coordinates first, fibre after; the layout produced by [`extension_from_cocycle`].
    pub fn standard(p: usize, q: usize, r: usize, s: usize) -> Self {
        ExtensionFrame {
            base_even: (0..p).collect(),
            base_odd: (0..q).collect(),
            fiber_even: (p..p + r).collect(),
            fiber_odd: (q..q + s).collect(),
        }
    }

    fn validate(&self, big: &HomLieAntialgebra) -> Result<()> {
        let partition = |a: &[usize], b: &[usize], n: usize| {
            let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
            all.sort_unstable();
            all == (0..n).collect::<Vec<_>>()
        };
        if !partition(&self.base_even, &self.fiber_even, big.even_dim())
            || !partition(&self.base_odd, &self.fiber_odd, big.odd_dim())
        {
            return Err(Error::Shape("frame does not partition the coordinates".into()));
        }
        Ok(())
    }
}

/// Linear maps `σ0: a0 → big0`, `σ1: a1 → big1` (columns are images of basis vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub sigma0: Matrix,
    pub sigma1: Matrix,
}

impl Section {
    pub fn canonical(big: &HomLieAntialgebra, frame: &ExtensionFrame) -> Self {
        let pick = |n: usize, idx: &[usize]| {
            Matrix::from_fn(n, idx.len(), |r, c| if r == idx[c] { int(1) } else { int(0) })
        };
        Section {
            sigma0: pick(big.even_dim(), &frame.base_even),
            sigma1: pick(big.odd_dim(), &frame.base_odd),
        }
    }

    /// `σ + ι∘f` for a 1-cochain `(f0: a0 → V0, f1: a1 → V1)`.
    pub fn shifted(&self, frame: &ExtensionFrame, f0: &Matrix, f1: &Matrix) -> Result<Self> {
        let lift = |m: &Matrix, idx: &[usize], rows: usize| {
            Matrix::from_fn(rows, m.cols(), |r, c| match idx.iter().position(|&i| i == r) {
                Some(k) => m[(k, c)].clone(),
                None => int(0),
            })
        };
        Ok(Section {
            sigma0: self.sigma0.add(&lift(f0, &frame.fiber_even, self.sigma0.rows()))?,
            sigma1: self.sigma1.add(&lift(f1, &frame.fiber_odd, self.sigma1.rows()))?,
        })
    }
}

fn pick(v: &[Rational], idx: &[usize]) -> Vec<Rational> {
    idx.iter().map(|&i| v[i].clone()).collect()
}

fn embed(v: &[Rational], idx: &[usize], n: usize) -> Vec<Rational> {
    let mut out = vec![int(0); n];
    for (x, &i) in v.iter().zip(idx) {
        out[i] = x.clone();
    }
    out
}

fn fiber_violation(v: &[Rational], base: &[usize]) -> bool {
    base.iter().any(|&i| !v[i].is_zero())
}

fn check_abelian_ideal(big: &HomLieAntialgebra, fr: &ExtensionFrame) -> Result<()> {
    let (pp, qq) = (big.even_dim(), big.odd_dim());
    let bad = |what: String| Err(Error::NotAbelianIdeal(what));
    for &u in &fr.fiber_even {
        let eu = big.e(u);
        for &u2 in &fr.fiber_even {
            if !vec_is_zero(&big.ee(&eu, &big.e(u2))) {
                return bad(format!("e{u} e{u2} != 0"));
            }
        }
        for &w in &fr.fiber_odd {
            if !vec_is_zero(&big.eo(&eu, &big.f(w))) {
                return bad(format!("e{u} f{w} != 0"));
            }
        }
        for i in 0..pp {
            if fiber_violation(&big.ee(&big.e(i), &eu), &fr.base_even) {
                return bad(format!("e{i} e{u} leaves the fibre"));
            }
        }
        for j in 0..qq {
            if fiber_violation(&big.eo(&eu, &big.f(j)), &fr.base_odd) {
                return bad(format!("e{u} f{j} leaves the fibre"));
            }
        }
        if fiber_violation(&big.al(&eu), &fr.base_even) {
            return bad(format!("alpha(e{u}) leaves the fibre"));
        }
    }
    for &w in &fr.fiber_odd {
        let fw = big.f(w);
        for &w2 in &fr.fiber_odd {
            if !vec_is_zero(&big.brk(&fw, &big.f(w2))) {
                return bad(format!("[f{w}, f{w2}] != 0"));
            }
        }
        for i in 0..pp {
            if fiber_violation(&big.eo(&big.e(i), &fw), &fr.base_odd) {
                return bad(format!("e{i} f{w} leaves the fibre"));
            }
        }
        for j in 0..qq {
            if fiber_violation(&big.brk(&big.f(j), &fw), &fr.base_even) {
                return bad(format!("[f{j}, f{w}] leaves the fibre"));
            }
        }
        if fiber_violation(&big.be(&fw), &fr.base_odd) {
            return bad(format!("beta(f{w}) leaves the fibre"));
        }
    }
    Ok(())
}

/// Base algebra, representation and `ω` read off an extension through a section.
pub fn extract_cocycle(
    big: &HomLieAntialgebra,
    frame: &ExtensionFrame,
    section: &Section,
) -> Result<ExtensionDatum> {
    frame.validate(big)?;
    check_abelian_ideal(big, frame)?;
    let (pp, qq) = (big.even_dim(), big.odd_dim());
    let (p, q) = (frame.base_even.len(), frame.base_odd.len());
    let (r, s) = (frame.fiber_even.len(), frame.fiber_odd.len());
    let (s0, s1) = (&section.sigma0, &section.sigma1);
    if (s0.rows(), s0.cols(), s1.rows(), s1.cols()) != (pp, p, qq, q) {
        return Err(Error::InvalidSection("section has the wrong shape".into()));
    }
    for c in 0..p {
        if pick(&s0.column(c), &frame.base_even) != unit_vector(p, c) {
            return Err(Error::InvalidSection(format!("projection of sigma0(e{c}) is not e{c}")));
        }
    }
    for c in 0..q {
        if pick(&s1.column(c), &frame.base_odd) != unit_vector(q, c) {
            return Err(Error::InvalidSection(format!("projection of sigma1(f{c}) is not f{c}")));
        }
    }
    let sx = |i: usize| s0.column(i);
    let sy = |j: usize| s1.column(j);
    let pe = |v: &[Rational]| pick(v, &frame.base_even);
    let po = |v: &[Rational]| pick(v, &frame.base_odd);
    let ve = |v: &[Rational]| pick(v, &frame.fiber_even);
    let vo = |v: &[Rational]| pick(v, &frame.fiber_odd);
    let ue = |v: &[Rational]| embed(v, &frame.fiber_even, pp);
    let uo = |v: &[Rational]| embed(v, &frame.fiber_odd, qq);

    let mu = Tensor3::from_fn(p, p, p, |i, j, k| pe(&big.ee(&sx(i), &sx(j)))[k].clone());
    let nu = Tensor3::from_fn(p, q, q, |i, j, k| po(&big.eo(&sx(i), &sy(j)))[k].clone());
    let br = Tensor3::from_fn(q, q, p, |i, j, k| pe(&big.brk(&sy(i), &sy(j)))[k].clone());
    let alpha = Matrix::from_columns(p, &(0..p).map(|i| pe(&big.al(&sx(i)))).collect::<Vec<_>>());
    let beta = Matrix::from_columns(q, &(0..q).map(|j| po(&big.be(&sy(j)))).collect::<Vec<_>>());
    if s0.mul(&alpha)? != big.alpha().mul(s0)? {
        return Err(Error::InvalidSection("sigma0 does not intertwine the even twists".into()));
    }
    if s1.mul(&beta)? != big.beta().mul(s1)? {
        return Err(Error::InvalidSection("sigma1 does not intertwine the odd twists".into()));
    }
    let base = HomLieAntialgebra::new(p, q, mu, nu, br, alpha, beta)?;

    let restrict = |m: &Matrix, idx: &[usize]| m.select(idx, idx);
    let module = HomModule::new(
        restrict(big.alpha(), &frame.fiber_even),
        restrict(big.beta(), &frame.fiber_odd),
    )?;
    let cols = |n: usize, f: &dyn Fn(Vec<Rational>) -> Vec<Rational>| -> Vec<Vec<Rational>> {
        (0..n).map(|u| f(unit_vector(n, u))).collect()
    };
    let rho0_even = (0..p)
        .map(|i| Matrix::from_columns(r, &cols(r, &|u| ve(&big.ee(&sx(i), &ue(&u))))))
        .collect();
    let rho0_odd = (0..p)
        .map(|i| Matrix::from_columns(s, &cols(s, &|w| vo(&big.eo(&sx(i), &uo(&w))))))
        .collect();
    let rho1_up = (0..q)
        .map(|j| Matrix::from_columns(s, &cols(r, &|u| vo(&big.eo(&ue(&u), &sy(j))))))
        .collect();
    let rho1_down = (0..q)
        .map(|j| Matrix::from_columns(r, &cols(s, &|w| ve(&big.brk(&sy(j), &uo(&w))))))
        .collect();
    let rep = Representation::new(module, rho0_even, rho0_odd, rho1_up, rho1_down)?;

    let w0 = Tensor3::from_fn(p, p, r, |i, j, k| {
        let lhs = big.ee(&sx(i), &sx(j));
        let rhs = s0.mul_vec(&pe(&lhs)).expect("shape");
        ve(&lhs)[k].clone() - ve(&rhs)[k].clone()
    });
    let w1 = Tensor3::from_fn(p, q, s, |i, j, k| {
        let lhs = big.eo(&sx(i), &sy(j));
        let rhs = s1.mul_vec(&po(&lhs)).expect("shape");
        vo(&lhs)[k].clone() - vo(&rhs)[k].clone()
    });
    let w2 = Tensor3::from_fn(q, q, r, |i, j, k| {
        let lhs = big.brk(&sy(i), &sy(j));
        let rhs = s0.mul_vec(&pe(&lhs)).expect("shape");
        ve(&lhs)[k].clone() - ve(&rhs)[k].clone()
    });
    Ok(ExtensionDatum {
        base,
        rep,
        omega: Omega { w0, w1, w2 },
    })
}

/// `f0: a0 → V0`, `f1: a1 → V1`; the map `(x, u) ↦ (x, f(x) + u)` between extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub f0: Matrix,
    pub f1: Matrix,
    pub homomorphism: IdentityReport,
}

impl EquivalenceWitness {
    /// Block map `[[I, 0], [F, I]]` on the standard frame.
    pub fn morphism(&self) -> AlgebraMorphism {
        let block = |f: &Matrix| {
            let (n, m) = (f.cols(), f.rows());
            Matrix::from_fn(n + m, n + m, |r, c| {
                if r == c {
                    int(1)
                } else if r >= n && c < n {
                    f[(r - n, c)].clone()
                } else {
                    int(0)
                }
            })
        };
        AlgebraMorphism::new(block(&self.f0), block(&self.f1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent(EquivalenceWitness),
    Inequivalent,
}

fn cochain_blocks(c: &CochainComplex, g: &DegreeCochain) -> (Matrix, Matrix) {
    let (p, q) = (c.algebra().even_dim(), c.algebra().odd_dim());
    let (r, s) = (c.representation().even_dim(), c.representation().odd_dim());
    let parts = g.parts();
    let f0 = Matrix::from_columns(r, &(0..p).map(|i| parts[0].eval(&[i], &[])).collect::<Vec<_>>());
    let f1 = Matrix::from_columns(s, &(0..q).map(|j| parts[1].eval(&[], &[j])).collect::<Vec<_>>());
    (f0, f1)
}

/// The 1-cochain with components `f0`, `f1`.
pub fn one_cochain(c: &CochainComplex, f0: &Matrix, f1: &Matrix) -> Result<DegreeCochain> {
    let (p, q) = (c.algebra().even_dim(), c.algebra().odd_dim());
    let mut g10 = Cochain::zero(c.shape(CochainSignature::new(1, 0)));
    let mut g01 = Cochain::zero(c.shape(CochainSignature::new(0, 1)));
    if (f0.rows(), f0.cols(), f1.rows(), f1.cols())
        != (c.representation().even_dim(), p, c.representation().odd_dim(), q)
    {
        return Err(Error::Shape("1-cochain blocks have the wrong shape".into()));
    }
    for i in 0..p {
        g10.set(&[i], &[], &f0.column(i))?;
    }
    for j in 0..q {
        g01.set(&[], &[j], &f1.column(j))?;
    }
    DegreeCochain::new(1, vec![g10, g01])
}

/// Decides whether the extensions built from `ω` and `ω′` are equivalent.
pub fn check_equivalence(
    a: &HomLieAntialgebra,
    rho: &Representation,
    omega: &Omega,
    omega_prime: &Omega,
) -> Result<Equivalence> {
    let c = CochainComplex::new(a, rho)?;
    let f = omega_to_cochain(&c, omega)?;
    let fp = omega_to_cochain(&c, omega_prime)?;
    for (name, g) in [("omega", &f), ("omega'", &fp)] {
        if !c.is_cocycle(g)? {
            return Err(Error::NotACocycle(name.into()));
        }
    }
    let diff = omega_to_cochain(&c, &omega.sub(omega_prime))?;
    match c.is_coboundary(&diff)? {
        CoboundaryCheck::NotCoboundary => Ok(Equivalence::Inequivalent),
        CoboundaryCheck::Coboundary(g) => {
            let (f0, f1) = cochain_blocks(&c, &g);
            let src = extension_from_cocycle(a, rho, omega)?;
            let dst = extension_from_cocycle(a, rho, omega_prime)?;
            let mut w = EquivalenceWitness {
                f0,
                f1,
                homomorphism: IdentityReport::new(vec![]),
            };
            w.homomorphism = is_homomorphism(&w.morphism(), &src, &dst)?;
            assert!(
                w.homomorphism.passed(),
                "equivalence witness fails {:?}",
                w.homomorphism.failing()
            );
            Ok(Equivalence::Equivalent(w))
        }
    }
}

#[derive(Debug, Clone)]
pub struct H2Representative {
    pub omega: Omega,
    pub cocycle: DegreeCochain,
    /// Present when `ω0` is symmetric, so that `a ⊕_ω V` exists.
    pub extension: Option<HomLieAntialgebra>,
    pub axioms: Option<IdentityReport>,
    pub construction_error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct H2Report {
    pub dim: usize,
    /// Dimension of the classes with a symmetric `ω0` representative.
    pub realizable_dim: usize,
    pub representatives: Vec<H2Representative>,
}

#[derive(Debug, Clone, Serialize)]
pub struct H2Summary {
    pub dim: usize,
    pub realizable_dim: usize,
    pub extensions_pass_axioms: Vec<Option<bool>>,
}

impl H2Report {
    pub fn summary(&self) -> H2Summary {
        H2Summary {
            dim: self.dim,
            realizable_dim: self.realizable_dim,
            extensions_pass_axioms: self
                .representatives
                .iter()
                .map(|r| r.axioms.as_ref().map(IdentityReport::passed))
                .collect(),
        }
    }
}

/// Rows forcing the `(2,0)` component of a raw degree-2 cochain to be symmetric.
fn symmetry_rows(c: &CochainComplex) -> Matrix {
    let p = c.algebra().even_dim();
    let r = c.representation().even_dim();
    let n = c.raw_dim(2);
    let mut rows = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            for v in 0..r {
                let mut row = vec![int(0); n];
                row[(i * p + j) * r + v] = int(1);
                row[(j * p + i) * r + v] = int(-1);
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, n);
    }
    Matrix::from_rows(rows).expect("rows")
}

fn stack(a: &Matrix, b: &Matrix) -> Matrix {
    let rows: Vec<Vec<Rational>> = (0..a.rows())
        .map(|i| a.row(i).to_vec())
        .chain((0..b.rows()).map(|i| b.row(i).to_vec()))
        .collect();
    if rows.is_empty() {
        return Matrix::zeros(0, a.cols());
    }
    Matrix::from_rows(rows).expect("equal widths")
}

/// `dim H²` with representative cocycles and the extension each one builds.
pub fn h2_classification_report(a: &HomLieAntialgebra, rho: &Representation) -> Result<H2Report> {
    let c = CochainComplex::new(a, rho)?;
    let dims = c.cohomology_dim(2)?;
    let d2 = c.slice(2)?;
    let d1 = c.slice(1)?;
    let sym = symmetry_rows(&c).mul(&d2.source.basis_matrix())?;
    let cocycles = Subspace::kernel_of(&d2.matrix);
    let symmetric_cocycles = Subspace::kernel_of(&stack(&d2.matrix, &sym));

    let mut span: Vec<Vec<Rational>> = (0..d1.matrix.cols()).map(|j| d1.matrix.column(j)).collect();
    let base_rank = rank(&Matrix::from_columns(d2.source.dim(), &span));
    let mut chosen = Vec::new();
    let mut realizable_dim = 0;
    for (pass, sub) in [&symmetric_cocycles, &cocycles].into_iter().enumerate() {
        for v in sub.basis() {
            let mut trial = span.clone();
            trial.push(v.clone());
            if rank(&Matrix::from_columns(d2.source.dim(), &trial)) > base_rank + chosen.len() {
                span = trial;
                chosen.push(v.clone());
                if pass == 0 {
                    realizable_dim += 1;
                }
            }
        }
    }
    assert_eq!(chosen.len(), dims.cohomology_dim, "representative count");

    let mut representatives = Vec::new();
    for coords in chosen {
        let raw = d2.source.combine(&coords);
        let cocycle = DegreeCochain::unflatten(2, &c.shapes(2), &raw)?;
        let omega = cochain_to_omega(&c, &cocycle)?;
        let (extension, axioms, construction_error) = match extension_from_cocycle(a, rho, &omega) {
            Ok(e) => {
                let rep = check_axioms(&e);
                (Some(e), Some(rep), None)
            }
            Err(err) => (None, None, Some(err.to_string())),
        };
        representatives.push(H2Representative {
            omega,
            cocycle,
            extension,
            axioms,
            construction_error,
        });
    }
    Ok(H2Report {
        dim: dims.cohomology_dim,
        realizable_dim,
        representatives,
    })
}
