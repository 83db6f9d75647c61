//! Three-index structure-constant tensors.

use num_traits::Zero;

use crate::matrix::{axpy, Matrix};
use crate::scalar::{zero, Rational};

/// `t[i][j][k]`: coefficient of output basis vector `k` in the product of inputs `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            dims: [d0, d1, d2],
            data: vec![zero(); d0 * d1 * d2],
        }
    }

    pub fn from_fn(
        d0: usize,
        d1: usize,
        d2: usize,
        mut f: impl FnMut(usize, usize, usize) -> Rational,
    ) -> Self {
        let mut t = Tensor3::zeros(d0, d1, d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    t.set(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        assert!(
            i < self.dims[0] && j < self.dims[1] && k < self.dims[2],
            "tensor index ({i},{j},{k}) out of range {:?}",
            self.dims
        );
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        let o = self.offset(i, j, k);
        self.data[o] = c;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, c: &Rational) {
        let o = self.offset(i, j, k);
        self.data[o] += c;
    }

    /// Output vector `t[i][j][·]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Rational] {
        let o = (i * self.dims[1] + j) * self.dims[2];
        &self.data[o..o + self.dims[2]]
    }

    pub fn set_fiber(&mut self, i: usize, j: usize, v: &[Rational]) {
        for (k, c) in v.iter().enumerate() {
            self.set(i, j, k, c.clone());
        }
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let [_, d1, d2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(o, c)| (o / (d1 * d2), (o / d2) % d1, o % d2, c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Bilinear contraction `Σ x_i y_j t[i][j][·]`.
    pub fn contract(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.dims[2]];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.fiber(i, j));
            }
        }
        out
    }

    /// Applies `m` to every output fiber.
    pub fn map_output(&self, m: &Matrix) -> Tensor3 {
        let mut out = Tensor3::zeros(self.dims[0], self.dims[1], m.rows());
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                let v = m.mul_vec(self.fiber(i, j)).expect("fiber length");
                out.set_fiber(i, j, &v);
            }
        }
        out
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims, "tensor shape mismatch");
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims, "tensor shape mismatch");
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Tensor3 {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// First `(i,j)` with `t[i][j] != t[j][i]`.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        let n = self.dims[0].min(self.dims[1]);
        for i in 0..n {
            for j in i + 1..n {
                if self.fiber(i, j) != self.fiber(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First `(i,j)` with `t[i][j] != -t[j][i]`.
    pub fn antisymmetry_defect(&self) -> Option<(usize, usize)> {
        let n = self.dims[0].min(self.dims[1]);
        for i in 0..n {
            for j in i..n {
                let a = self.fiber(i, j);
                let b = self.fiber(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}
