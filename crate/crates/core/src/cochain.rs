//! Cochain spaces `C^{m,n}`: tensorial in even arguments, alternating in odd ones.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::vec_is_zero;
use crate::scalar::{one, zero, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `m` even arguments, `n` odd arguments; values lie in `V0` for even `n`, `V1` for odd `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CochainSignature {
    pub m: usize,
    pub n: usize,
}

impl CochainSignature {
    pub fn new(m: usize, n: usize) -> Self {
        CochainSignature { m, n }
    }

    pub fn degree(&self) -> usize {
        self.m + self.n
    }

    pub fn value_parity(&self) -> Parity {
        if self.n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The signatures of total degree `k`, ordered `(k,0), (k-1,1), …, (0,k)`.
    pub fn of_degree(k: usize) -> Vec<CochainSignature> {
        (0..=k).rev().map(|m| CochainSignature::new(m, k - m)).collect()
    }
}

impl fmt::Display for CochainSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// Dimensions fixing the coordinate layout of one cochain space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CochainShape {
    pub sig: CochainSignature,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub value_dim: usize,
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `n`-tuples from `0..q`, lexicographic.
pub fn combinations(q: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(start: usize, q: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..q {
            cur.push(i);
            rec(i + 1, q, n, cur, out);
            cur.pop();
        }
    }
    rec(0, q, n, &mut cur, &mut out);
    out
}

/// All `m`-tuples from `0..p`, lexicographic with the first index most significant.
pub fn tuples(p: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..p).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Sign of the sorting permutation, or `None` when an index repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut negative = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                negative = !negative;
            } else if v[j] == v[j + 1] {
                return None;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, negative))
}

impl CochainShape {
    pub fn new(sig: CochainSignature, even_dim: usize, odd_dim: usize, value_dim: usize) -> Self {
        CochainShape {
            sig,
            even_dim,
            odd_dim,
            value_dim,
        }
    }

    pub fn even_tuple_count(&self) -> usize {
        self.even_dim.pow(self.sig.m as u32)
    }

    pub fn odd_tuple_count(&self) -> usize {
        binomial(self.odd_dim, self.sig.n)
    }

    /// Number of argument columns `p^m · C(q,n)`.
    pub fn columns(&self) -> usize {
        self.even_tuple_count() * self.odd_tuple_count()
    }

    /// `p^m · C(q,n) · dim V_{n mod 2}`.
    pub fn raw_dim(&self) -> usize {
        self.columns() * self.value_dim
    }
}

/// Index helper for one cochain space.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    shape: CochainShape,
    even_tuples: Vec<Vec<usize>>,
    odd_tuples: Vec<Vec<usize>>,
    odd_index: HashMap<Vec<usize>, usize>,
}

impl CochainSpace {
    pub fn new(shape: CochainShape) -> Self {
        let even_tuples = tuples(shape.even_dim, shape.sig.m);
        let odd_tuples = combinations(shape.odd_dim, shape.sig.n);
        let odd_index = odd_tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        CochainSpace {
            shape,
            even_tuples,
            odd_tuples,
            odd_index,
        }
    }

    pub fn shape(&self) -> &CochainShape {
        &self.shape
    }

    pub fn even_tuples(&self) -> &[Vec<usize>] {
        &self.even_tuples
    }

    pub fn odd_tuples(&self) -> &[Vec<usize>] {
        &self.odd_tuples
    }

    /// `(even tuple, increasing odd tuple)` of a column.
    pub fn column_args(&self, col: usize) -> (&[usize], &[usize]) {
        let no = self.odd_tuples.len();
        (&self.even_tuples[col / no], &self.odd_tuples[col % no])
    }

    fn even_index(&self, xt: &[usize]) -> usize {
        xt.iter().fold(0, |acc, &i| acc * self.shape.even_dim + i)
    }

    /// Column of basis arguments, with the alternating sign; `None` if an odd index repeats.
    pub fn column_of(&self, xt: &[usize], yt: &[usize]) -> Option<(usize, bool)> {
        let (sorted, negative) = sort_with_sign(yt)?;
        let yi = self.odd_index[&sorted];
        Some((self.even_index(xt) * self.odd_tuples.len() + yi, negative))
    }

    /// Multilinear expansion of `f(xs; ys)` for vector arguments as `Σ weight · f(column)`.
    pub fn expand(&self, xs: &[&[Rational]], ys: &[&[Rational]]) -> Vec<(usize, Rational)> {
        assert_eq!(xs.len(), self.shape.sig.m, "even argument count");
        assert_eq!(ys.len(), self.shape.sig.n, "odd argument count");
        let support = |v: &[Rational]| -> Vec<(usize, Rational)> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect()
        };
        let xsup: Vec<_> = xs.iter().map(|v| support(v)).collect();
        let ysup: Vec<_> = ys.iter().map(|v| support(v)).collect();
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        let mut xt = vec![0; xs.len()];
        let mut yt = vec![0; ys.len()];
        self.expand_rec(&xsup, &ysup, 0, one(), &mut xt, &mut yt, &mut acc);
        let mut out: Vec<(usize, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by_key(|(c, _)| *c);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn expand_rec(
        &self,
        xsup: &[Vec<(usize, Rational)>],
        ysup: &[Vec<(usize, Rational)>],
        pos: usize,
        weight: Rational,
        xt: &mut Vec<usize>,
        yt: &mut Vec<usize>,
        acc: &mut HashMap<usize, Rational>,
    ) {
        let m = xsup.len();
        if pos == m + ysup.len() {
            if let Some((col, negative)) = self.column_of(xt, yt) {
                let w = if negative { -weight } else { weight };
                *acc.entry(col).or_insert_with(zero) += w;
            }
            return;
        }
        let (sup, slot) = if pos < m {
            (&xsup[pos], pos)
        } else {
            (&ysup[pos - m], pos - m)
        };
        for (i, c) in sup {
            if pos < m {
                xt[slot] = *i;
            } else {
                yt[slot] = *i;
            }
            self.expand_rec(xsup, ysup, pos + 1, &weight * c, xt, yt, acc);
        }
    }
}

/// A single-signature cochain; coefficient `(col, v)` sits at `col * value_dim + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    shape: CochainShape,
    coeffs: Vec<Rational>,
}

impl Cochain {
    pub fn zero(shape: CochainShape) -> Self {
        Cochain {
            shape,
            coeffs: vec![zero(); shape.raw_dim()],
        }
    }

    pub fn from_coeffs(shape: CochainShape, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != shape.raw_dim() {
            return Err(Error::Shape(format!(
                "{} coefficients for a cochain space of dimension {}",
                coeffs.len(),
                shape.raw_dim()
            )));
        }
        Ok(Cochain { shape, coeffs })
    }

    pub fn shape(&self) -> &CochainShape {
        &self.shape
    }

    pub fn signature(&self) -> CochainSignature {
        self.shape.sig
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.coeffs)
    }

    /// Value on basis arguments in any order of the odd indices.
    pub fn eval(&self, xt: &[usize], yt: &[usize]) -> Vec<Rational> {
        let space = CochainSpace::new(self.shape);
        let vd = self.shape.value_dim;
        match space.column_of(xt, yt) {
            None => vec![zero(); vd],
            Some((col, negative)) => self.coeffs[col * vd..(col + 1) * vd]
                .iter()
                .map(|c| if negative { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Sets the value on basis arguments given in increasing odd order.
    pub fn set(&mut self, xt: &[usize], yt: &[usize], value: &[Rational]) -> Result<()> {
        let space = CochainSpace::new(self.shape);
        match space.column_of(xt, yt) {
            Some((col, false)) => {
                let vd = self.shape.value_dim;
                self.coeffs[col * vd..(col + 1) * vd].clone_from_slice(value);
                Ok(())
            }
            _ => Err(Error::Shape("odd arguments must be strictly increasing".into())),
        }
    }
}

/// A degree-`k` cochain: one component per signature, ordered `(k,0), …, (0,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCochain {
    k: usize,
    parts: Vec<Cochain>,
}

impl DegreeCochain {
    pub fn new(k: usize, parts: Vec<Cochain>) -> Result<Self> {
        let sigs = CochainSignature::of_degree(k);
        if parts.len() != sigs.len() || parts.iter().zip(&sigs).any(|(c, s)| c.signature() != *s) {
            return Err(Error::Shape(format!("components do not match degree {k}")));
        }
        Ok(DegreeCochain { k, parts })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Cochain] {
        &self.parts
    }

    pub fn part(&self, sig: CochainSignature) -> Option<&Cochain> {
        self.parts.iter().find(|c| c.signature() == sig)
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.parts.iter().flat_map(|c| c.coeffs.iter().cloned()).collect()
    }

    /// Splits a flat vector according to `shapes`.
    pub fn unflatten(k: usize, shapes: &[CochainShape], flat: &[Rational]) -> Result<Self> {
        let mut parts = Vec::with_capacity(shapes.len());
        let mut off = 0;
        for s in shapes {
            let d = s.raw_dim();
            if off + d > flat.len() {
                return Err(Error::Shape("flat vector too short".into()));
            }
            parts.push(Cochain::from_coeffs(*s, flat[off..off + d].to_vec())?);
            off += d;
        }
        if off != flat.len() {
            return Err(Error::Shape("flat vector too long".into()));
        }
        DegreeCochain::new(k, parts)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Cochain::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn counts() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(tuples(2, 3).len(), 8);
        assert_eq!(tuples(2, 2)[1], vec![0, 1]);
        let s = CochainShape::new(CochainSignature::new(1, 1), 1, 2, 2);
        assert_eq!(s.raw_dim(), 4);
    }

    #[test]
    fn sorting_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
        assert_eq!(sort_with_sign(&[]), Some((vec![], false)));
    }

    #[test]
    fn swapped_odd_pair_negates() {
        let shape = CochainShape::new(CochainSignature::new(0, 2), 1, 3, 1);
        let mut f = Cochain::zero(shape);
        f.set(&[], &[0, 2], &[int(5)]).unwrap();
        assert_eq!(f.eval(&[], &[2, 0]), vec![int(-5)]);
        assert_eq!(f.eval(&[], &[2, 2]), vec![int(0)]);
        assert!(f.set(&[], &[2, 0], &[int(1)]).is_err());
    }

    #[test]
    fn expansion_is_multilinear() {
        let shape = CochainShape::new(CochainSignature::new(1, 2), 2, 2, 1);
        let space = CochainSpace::new(shape);
        let x = [int(1), int(2)];
        let y1 = [int(1), int(3)];
        let y2 = [int(1), int(0)];
        // f(x; y1, y2) = Σ x_i (y1_0 y2_1 - y1_1 y2_0) f(e_i; f0, f1)
        let e = space.expand(&[&x], &[&y1, &y2]);
        assert_eq!(e, vec![(0, int(-3)), (1, int(-6))]);
    }
}
