//! Rank, nullspace and linear solves by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::matrix::{vec_is_zero, LinalgError, Matrix};
use crate::scalar::{one, zero, Rational};

/// Two primes above 2^31 used by the modular rank oracle.
pub const ORACLE_PRIMES: [u64; 2] = [2_147_483_659, 2_147_483_693];

/// Integer row echelon form together with its pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Bareiss elimination with leftmost-nonzero pivoting: for each column the first
/// remaining row with a nonzero entry becomes the pivot row.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row[c + 1..cols].iter_mut().filter(|x| !x.is_zero()) {
                    *x = (piv * &*x) / &prev;
                }
            } else {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    let v = piv * &row[j] - &lead * &pivot_row[j];
                    row[j] = v / &prev;
                }
            }
        }
        prev = piv.clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

fn echelon(m: &Matrix) -> Echelon {
    bareiss(integer_rows(m), m.cols())
}

pub fn rank(m: &Matrix) -> usize {
    echelon(m).pivots.len()
}

/// Solves the echelon system for the pivot variables given values of the others.
fn back_substitute(e: &Echelon, x: &mut [Rational], rhs: Option<&[BigInt]>) {
    for (r, &pc) in e.pivots.iter().enumerate().rev() {
        let row = &e.rows[r];
        let mut acc = match rhs {
            Some(b) => Rational::from_integer(b[r].clone()),
            None => zero(),
        };
        for j in pc + 1..x.len() {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = acc / Rational::from_integer(row[pc].clone());
    }
}

/// Basis of `{v : m v = 0}`. The vector for free column `f` has a 1 at `f` and
/// zeros at every other free column.
pub fn nullspace_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    Subspace::kernel_of(m).basis
}

/// Any exact solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            m.rows(),
            m.cols(),
            b.len()
        )));
    }
    let n = m.cols();
    let aug = Matrix::from_fn(m.rows(), n + 1, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let e = echelon(&aug);
    if e.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let rhs: Vec<BigInt> = e.rows.iter().map(|row| row[n].clone()).collect();
    let mut x = vec![zero(); n];
    back_substitute(&e, &mut x, Some(&rhs));
    let check = m.mul_vec(&x)?;
    assert_eq!(check, b, "solve: substitution check failed");
    Ok(Some(x))
}

pub fn determinant(m: &Matrix) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(zero());
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][c..n].iter_mut().zip(&top[c][c..n]) {
                *x -= &f * y;
            }
        }
    }
    Ok(det)
}

/// A subspace of `Q^n` stored as the nullspace-style basis of some matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    free: Vec<usize>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        Subspace {
            ambient: n,
            basis: (0..n).map(|i| crate::matrix::unit_vector(n, i)).collect(),
            free: (0..n).collect(),
        }
    }

    pub fn kernel_of(m: &Matrix) -> Self {
        let n = m.cols();
        let e = echelon(m);
        let free: Vec<usize> = (0..n).filter(|c| !e.pivots.contains(c)).collect();
        let basis: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut x = vec![zero(); n];
                x[f] = one();
                back_substitute(&e, &mut x, None);
                x
            })
            .collect();
        for v in &basis {
            assert!(
                vec_is_zero(&m.mul_vec(v).expect("shape")),
                "nullspace vector check failed"
            );
        }
        Subspace {
            ambient: n,
            basis,
            free,
        }
    }

    /// Direct sum of subspaces of consecutive coordinate blocks.
    pub fn block_diagonal(blocks: &[Subspace]) -> Self {
        let ambient = blocks.iter().map(|b| b.ambient).sum();
        let mut basis = Vec::new();
        let mut free = Vec::new();
        let mut off = 0;
        for b in blocks {
            for v in &b.basis {
                let mut w = vec![zero(); ambient];
                w[off..off + b.ambient].clone_from_slice(v);
                basis.push(w);
            }
            free.extend(b.free.iter().map(|f| f + off));
            off += b.ambient;
        }
        Subspace {
            ambient,
            basis,
            free,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut v = vec![zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::matrix::axpy(&mut v, c, b);
        }
        v
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Rational> = self.free.iter().map(|&f| v[f].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Rank over `GF(p)`, or `None` when `p` divides some denominator.
pub fn modular_rank(m: &Matrix, p: u64) -> Option<usize> {
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for x in m.row(i) {
            let d = reduce(x.denom(), p);
            if d == 0 {
                return None;
            }
            let n = reduce(x.numer(), p);
            row.push(((n as u128 * mod_inverse(d, p) as u128) % p as u128) as u64);
        }
        a.push(row);
    }
    let cols = m.cols();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = mod_inverse(a[r][c], p);
        for i in r + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let f = (a[i][c] as u128 * inv as u128 % p as u128) as u64;
            let (top, rest) = a.split_at_mut(i);
            for (x, &y) in rest[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                let sub = (f as u128 * y as u128 % p as u128) as u64;
                *x = (*x + p - sub) % p;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    Some(r)
}

/// Rank cross-check at both oracle primes.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RankCertificate {
    pub rational: usize,
    pub modular: Vec<(u64, Option<usize>)>,
}

impl RankCertificate {
    pub fn of(m: &Matrix) -> Self {
        RankCertificate {
            rational: rank(m),
            modular: ORACLE_PRIMES.iter().map(|&p| (p, modular_rank(m, p))).collect(),
        }
    }

    /// True when every modular rank equals the rational rank.
    pub fn agrees(&self) -> bool {
        self.modular.iter().all(|(_, r)| *r == Some(self.rational))
    }
}
