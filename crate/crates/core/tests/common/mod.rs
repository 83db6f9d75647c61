//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use homanti::algebra::HomLieAntialgebra;
use homanti::catalog::{k1, twisted_k1};
use homanti::cochain::{Cochain, CochainSpace, DegreeCochain};
use homanti::cohomology::CochainComplex;
use homanti::matrix::{unit_vector, vec_add, vec_scale, vec_sub, Matrix};
use homanti::scalar::{frac, int, Rational};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-5..=5`, denominator in `1..=4`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let x = small_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

/// Rank by elimination that scans columns from the last to the first and
/// pivots on the lowest nonzero row; shares no code with the library kernel.
pub fn dual_rank(m: &Matrix) -> usize {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut used = vec![false; a.len()];
    let mut rank = 0;
    for c in (0..m.cols()).rev() {
        let Some(piv) = (0..a.len()).rev().find(|&r| !used[r] && !a[r][c].is_zero()) else {
            continue;
        };
        used[piv] = true;
        rank += 1;
        let prow = a[piv].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != piv && !row[c].is_zero() {
                let factor = &row[c] / &prow[c];
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &factor * y;
                }
            }
        }
    }
    rank
}

/// Multilinear evaluation of a cochain on arbitrary argument vectors.
pub fn eval_on(f: &Cochain, xs: &[Vec<Rational>], ys: &[Vec<Rational>]) -> Vec<Rational> {
    fn go(
        f: &Cochain,
        xs: &[Vec<Rational>],
        ys: &[Vec<Rational>],
        xt: &mut Vec<usize>,
        yt: &mut Vec<usize>,
        coeff: Rational,
        acc: &mut Vec<Rational>,
    ) {
        if coeff.is_zero() {
            return;
        }
        if xt.len() < xs.len() {
            let x = &xs[xt.len()];
            for (i, c) in x.iter().enumerate() {
                xt.push(i);
                go(f, xs, ys, xt, yt, &coeff * c, acc);
                xt.pop();
            }
        } else if yt.len() < ys.len() {
            let y = &ys[yt.len()];
            for (j, c) in y.iter().enumerate() {
                yt.push(j);
                go(f, xs, ys, xt, yt, &coeff * c, acc);
                yt.pop();
            }
        } else {
            let v = f.eval(xt, yt);
            for (a, b) in acc.iter_mut().zip(v) {
                *a += &coeff * b;
            }
        }
    }
    let mut acc = vec![int(0); f.shape().value_dim];
    go(f, xs, ys, &mut Vec::new(), &mut Vec::new(), int(1), &mut acc);
    acc
}

fn mv(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.mul_vec(v).expect("shape")
}

/// `d²` written out term by term on each target signature, as columns over
/// the raw degree-2 coordinates. Signs follow the resolved convention:
/// `(3,0)` and `(2,1)` come from the general formulas at `k = 2`, while the
/// `(1,2)` and `(0,3)` rows are the extension cocycle conditions under
/// `f = (½ω0, ω1, ω2)`.
pub fn degree2_oracle(c: &CochainComplex) -> Matrix {
    let a = c.algebra();
    let rho = c.representation();
    let (p, q) = (a.even_dim(), a.odd_dim());
    let al = |x: &[Rational]| mv(a.alpha(), x);
    let be = |y: &[Rational]| mv(a.beta(), y);
    let ee = |x: &[Rational], y: &[Rational]| a.prod_ee(x, y).expect("shape");
    let eo = |x: &[Rational], y: &[Rational]| a.prod_eo(x, y).expect("shape");
    let br = |x: &[Rational], y: &[Rational]| a.bracket(x, y).expect("shape");
    let r0e = |x: &[Rational], v: &[Rational]| mv(&rho.act_even_on_even(x), v);
    let r0o = |x: &[Rational], v: &[Rational]| mv(&rho.act_even_on_odd(x), v);
    let up = |y: &[Rational], v: &[Rational]| mv(&rho.act_odd_up(y), v);
    let down = |y: &[Rational], v: &[Rational]| mv(&rho.act_odd_down(y), v);
    let h = frac(1, 2);
    let third = frac(1, 3);

    let raw = c.raw_dim(2);
    let shapes2 = c.shapes(2);
    let shapes3 = c.shapes(3);
    let mut columns = Vec::with_capacity(raw);
    for idx in 0..raw {
        let f = DegreeCochain::unflatten(2, &shapes2, &unit_vector(raw, idx)).expect("layout");
        let (f20, f11, f02) = (&f.parts()[0], &f.parts()[1], &f.parts()[2]);
        let mut parts = Vec::new();
        for shape in &shapes3 {
            let space = CochainSpace::new(*shape);
            let mut out = Cochain::zero(*shape);
            for col in 0..shape.columns() {
                let (xt, yt) = space.column_args(col);
                let x: Vec<Vec<Rational>> = xt.iter().map(|&i| unit_vector(p, i)).collect();
                let y: Vec<Vec<Rational>> = yt.iter().map(|&j| unit_vector(q, j)).collect();
                let value = match (xt.len(), yt.len()) {
                    (3, 0) => {
                        let t1 = r0e(&al(&x[0]), &eval_on(f20, &[x[1].clone(), x[2].clone()], &[]));
                        let t2 = eval_on(f20, &[ee(&x[0], &x[1]), al(&x[2])], &[]);
                        let t3 = eval_on(f20, &[al(&x[0]), ee(&x[1], &x[2])], &[]);
                        let t4 = r0e(&al(&x[2]), &eval_on(f20, &[x[0].clone(), x[1].clone()], &[]));
                        vec_scale(&vec_sub(&vec_add(&vec_sub(&t1, &t2), &t3), &t4), &h)
                    }
                    (2, 1) => {
                        let t1 = r0o(&al(&x[0]), &eval_on(f11, &[x[1].clone()], &[y[0].clone()]));
                        let t2 = vec_scale(&eval_on(f11, &[ee(&x[0], &x[1])], &[be(&y[0])]), &h);
                        let t3 = eval_on(f11, &[al(&x[0])], &[eo(&x[1], &y[0])]);
                        let t4 = up(&be(&y[0]), &eval_on(f20, &[x[0].clone(), x[1].clone()], &[]));
                        vec_sub(&vec_add(&vec_sub(&t1, &t2), &t3), &t4)
                    }
                    (1, 2) => {
                        let t1 = r0e(&al(&x[0]), &eval_on(f02, &[], &[y[0].clone(), y[1].clone()]));
                        let t2 = eval_on(f02, &[], &[eo(&x[0], &y[0]), be(&y[1])]);
                        let t3 = eval_on(f02, &[], &[eo(&x[0], &y[1]), be(&y[0])]);
                        let t4 = down(&be(&y[0]), &eval_on(f11, &[x[0].clone()], &[y[1].clone()]));
                        let t5 = down(&be(&y[1]), &eval_on(f11, &[x[0].clone()], &[y[0].clone()]));
                        let t6 = eval_on(f20, &[al(&x[0]), br(&y[0], &y[1])], &[]);
                        let halfpart = vec_add(&vec_sub(&vec_add(&vec_sub(&t1, &t2), &t3), &t4), &t5);
                        vec_add(&vec_scale(&halfpart, &h), &t6)
                    }
                    (0, 3) => {
                        let pair = |i: usize, j: usize| vec![y[i].clone(), y[j].clone()];
                        let s1 = up(&be(&y[0]), &eval_on(f02, &[], &pair(1, 2)));
                        let s2 = up(&be(&y[1]), &eval_on(f02, &[], &pair(0, 2)));
                        let s3 = up(&be(&y[2]), &eval_on(f02, &[], &pair(0, 1)));
                        let b12 = eval_on(f11, &[br(&y[0], &y[1])], &[be(&y[2])]);
                        let b13 = eval_on(f11, &[br(&y[0], &y[2])], &[be(&y[1])]);
                        let b23 = eval_on(f11, &[br(&y[1], &y[2])], &[be(&y[0])]);
                        let sum = vec_add(&vec_sub(&vec_add(&vec_add(&vec_sub(&s1, &s2), &s3), &b12), &b13), &b23);
                        vec_scale(&sum, &-third.clone())
                    }
                    _ => unreachable!("degree 3"),
                };
                out.set(xt, yt, &value).expect("value length");
            }
            parts.push(out);
        }
        columns.push(DegreeCochain::new(3, parts).expect("signatures").flatten());
    }
    Matrix::from_columns(c.raw_dim(3), &columns)
}

/// `k1()` and `twisted_k1(μ)` for the reference parameters.
pub fn finite_catalog() -> Vec<(String, HomLieAntialgebra)> {
    let mut out = vec![("k1".to_string(), k1())];
    for mu in [int(2), int(3), frac(1, 5), int(-1)] {
        out.push((format!("k1-twisted?mu={mu}"), twisted_k1(&mu).expect("nonzero")));
    }
    out
}

/// A random element of `SL(2)` as a product of elementary and diagonal factors.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::identity(2);
    for _ in 0..3 {
        let s = small_rational(rng);
        let d = nonzero_rational(rng);
        let f = match rng.gen_range(0..3) {
            0 => Matrix::from_rows(vec![vec![int(1), s], vec![int(0), int(1)]]),
            1 => Matrix::from_rows(vec![vec![int(1), int(0)], vec![s, int(1)]]),
            _ => Matrix::from_rows(vec![vec![d.clone(), int(0)], vec![int(0), d.recip()]]),
        }
        .expect("2x2");
        m = m.mul(&f).expect("2x2");
    }
    m
}

pub fn inverse2(m: &Matrix) -> Matrix {
    let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
    let inv = det.recip();
    Matrix::from_rows(vec![
        vec![&m[(1, 1)] * &inv, -&m[(0, 1)] * &inv],
        vec![-&m[(1, 0)] * &inv, &m[(0, 0)] * &inv],
    ])
    .expect("2x2")
}

/// Blocks `(f0: r×p, f1: s×q)` of a degree-1 cochain.
pub fn one_cochain_blocks(c: &CochainComplex, g: &DegreeCochain) -> (Matrix, Matrix) {
    let (p, q) = (c.algebra().even_dim(), c.algebra().odd_dim());
    let (r, s) = (c.representation().even_dim(), c.representation().odd_dim());
    let f0 = Matrix::from_columns(r, &(0..p).map(|i| g.parts()[0].eval(&[i], &[])).collect::<Vec<_>>());
    let f1 = Matrix::from_columns(s, &(0..q).map(|j| g.parts()[1].eval(&[], &[j])).collect::<Vec<_>>());
    (f0, f1)
}

/// A random admissible cochain of degree `k`.
pub fn random_admissible(c: &CochainComplex, k: usize, rng: &mut ChaCha8Rng) -> DegreeCochain {
    let space = c.admissible_degree(k);
    let coords = random_vec(rng, space.dim());
    DegreeCochain::unflatten(k, &c.shapes(k), &space.combine(&coords)).expect("layout")
}
