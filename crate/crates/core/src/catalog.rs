//! Built-in algebras: K(1), its twisted family, and the lazy conformal algebra.

use std::fmt;

use num_traits::Zero;

use crate::algebra::HomLieAntialgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{IdentityReport, IdentityVerdict};
use crate::scalar::{frac, half, one, parse_rational, powi, Rational};
use crate::tensor::Tensor3;

/// K(1) twisted by `β = diag(μ, 1/μ)` on the odd basis `a = f0`, `b = f1`.
pub fn twisted_k1(mu: &Rational) -> Result<HomLieAntialgebra> {
    if mu.is_zero() {
        return Err(Error::Parameter("mu must be nonzero".into()));
    }
    let inv = mu.recip();
    let mut m = Tensor3::zeros(1, 1, 1);
    m.set(0, 0, 0, one());
    let mut n = Tensor3::zeros(1, 2, 2);
    n.set(0, 0, 0, half() * mu);
    n.set(0, 1, 1, half() * &inv);
    let mut br = Tensor3::zeros(2, 2, 1);
    br.set(0, 1, 0, half());
    br.set(1, 0, 0, -half());
    HomLieAntialgebra::new(
        1,
        2,
        m,
        n,
        br,
        Matrix::identity(1),
        Matrix::diagonal(&[mu.clone(), inv]),
    )
}

/// The 1|2-dimensional Lie antialgebra: `ε·ε = ε`, `ε·a = ½a`, `ε·b = ½b`, `[a,b] = ½ε`.
pub fn k1() -> HomLieAntialgebra {
    twisted_k1(&one()).expect("mu = 1")
}

/// A half-integer `k/2` with `k` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    /// The half-integer `twice / 2`; `twice` must be odd.
    pub fn from_twice(twice: i64) -> Result<Self> {
        if twice % 2 == 0 {
            return Err(Error::Parameter(format!("{twice}/2 is not a half-integer")));
        }
        Ok(HalfInt(twice))
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn add_int(self, n: i64) -> HalfInt {
        HalfInt(self.0 + 2 * n)
    }

    /// `i + j` for two half-integers is an integer.
    pub fn sum(self, other: HalfInt) -> i64 {
        (self.0 + other.0) / 2
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

/// The infinite-dimensional conformal algebra, evaluated one basis element at a time.
/// Even basis `ε_n` (`n ∈ Z`), odd basis `a_i` (`i ∈ Z + ½`), `q = r²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalAlgebra {
    r: Rational,
}

pub fn conformal(r: &Rational) -> Result<ConformalAlgebra> {
    if r.is_zero() || *r == one() || *r == -one() {
        return Err(Error::Parameter("r must avoid 0, 1 and -1".into()));
    }
    Ok(ConformalAlgebra { r: r.clone() })
}

fn eps(n: i64) -> String {
    format!("eps({n})")
}

fn odd(i: HalfInt) -> String {
    format!("a({i})")
}

impl ConformalAlgebra {
    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn q(&self) -> Rational {
        &self.r * &self.r
    }

    /// `q^i = r^(2i)`.
    pub fn q_pow(&self, i: HalfInt) -> Rational {
        powi(&self.r, i.twice())
    }

    /// `{i} = (q^i - 1)/(q - 1)`.
    pub fn q_number(&self, i: HalfInt) -> Rational {
        (self.q_pow(i) - one()) / (self.q() - one())
    }

    /// `ε_n · ε_m = ε_{n+m}`.
    pub fn prod_ee(&self, n: i64, m: i64) -> (i64, Rational) {
        (n + m, one())
    }

    /// `ε_n · a_i = ½(1 + q^i) a_{n+i}`.
    pub fn prod_eo(&self, n: i64, i: HalfInt) -> (HalfInt, Rational) {
        (i.add_int(n), half() * (one() + self.q_pow(i)))
    }

    /// `[a_i, a_j] = ½({j} - {i}) ε_{i+j}`.
    pub fn bracket(&self, i: HalfInt, j: HalfInt) -> (i64, Rational) {
        (i.sum(j), half() * (self.q_number(j) - self.q_number(i)))
    }

    pub fn alpha_coeff(&self, _n: i64) -> Rational {
        one()
    }

    pub fn beta_coeff(&self, i: HalfInt) -> Rational {
        one() + self.q_pow(i)
    }

    /// Closed form of the even-odd action residual on `(ε_n, ε_m, a_i)`:
    /// `¼(1+q^i)(q^{m+i} - q^i)`, independent of `n` and zero only for `m = 0`.
    pub fn action_residual_closed_form(&self, m: i64, i: HalfInt) -> Rational {
        frac(1, 4) * (one() + self.q_pow(i)) * (self.q_pow(i.add_int(m)) - self.q_pow(i))
    }

    fn assoc_residual(&self, n: i64, m: i64, l: i64) -> Rational {
        let (k1, c1) = self.prod_ee(m, l);
        let (_, c2) = self.prod_ee(n, k1);
        let lhs = self.alpha_coeff(n) * c1 * c2;
        let (k3, c3) = self.prod_ee(n, m);
        let (_, c4) = self.prod_ee(k3, l);
        let rhs = self.alpha_coeff(l) * c3 * c4;
        lhs - rhs
    }

    fn action_residual(&self, n: i64, m: i64, i: HalfInt) -> Rational {
        let (i1, c1) = self.prod_eo(m, i);
        let (_, c2) = self.prod_eo(n, i1);
        let lhs = self.alpha_coeff(n) * c1 * c2;
        let (k, c3) = self.prod_ee(n, m);
        let (_, c4) = self.prod_eo(k, i);
        let rhs = half() * c3 * self.beta_coeff(i) * c4;
        lhs - rhs
    }

    fn derivation_residual(&self, n: i64, i: HalfInt, j: HalfInt) -> Rational {
        let (k, c1) = self.bracket(i, j);
        let (_, c2) = self.prod_ee(n, k);
        let lhs = self.alpha_coeff(n) * c1 * c2;
        let (i1, c3) = self.prod_eo(n, i);
        let (_, c4) = self.bracket(i1, j);
        let t1 = c3 * self.beta_coeff(j) * c4;
        let (j1, c5) = self.prod_eo(n, j);
        let (_, c6) = self.bracket(i, j1);
        let t2 = self.beta_coeff(i) * c5 * c6;
        lhs - t1 - t2
    }

    fn cyclic_residual(&self, i: HalfInt, j: HalfInt, k: HalfInt) -> Rational {
        let term = |u: HalfInt, v: HalfInt, w: HalfInt| {
            let (e, c1) = self.bracket(v, w);
            let (_, c2) = self.prod_eo(e, u);
            self.beta_coeff(u) * c1 * c2
        };
        term(i, j, k) + term(j, k, i) + term(k, i, j)
    }

    /// Evaluates the four defining identities on the given index tuples. Every
    /// term lands on the same basis element, so each residual is one coefficient.
    pub fn spot_check_axioms(&self, samples: &ConformalSamples) -> IdentityReport {
        let mut v: Vec<IdentityVerdict> = crate::algebra::AXIOM_NAMES
            .iter()
            .map(|n| IdentityVerdict::new(*n))
            .collect();
        for &(n, m, l) in &samples.assoc {
            v[0].record(vec![eps(n), eps(m), eps(l)], vec![self.assoc_residual(n, m, l)]);
        }
        for &(n, m, i) in &samples.action {
            v[1].record(vec![eps(n), eps(m), odd(i)], vec![self.action_residual(n, m, i)]);
        }
        for &(n, i, j) in &samples.derivation {
            v[2].record(vec![eps(n), odd(i), odd(j)], vec![self.derivation_residual(n, i, j)]);
        }
        for &(i, j, k) in &samples.cyclic {
            v[3].record(vec![odd(i), odd(j), odd(k)], vec![self.cyclic_residual(i, j, k)]);
        }
        IdentityReport::new(v)
    }
}

/// Index tuples for the four identities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConformalSamples {
    pub assoc: Vec<(i64, i64, i64)>,
    pub action: Vec<(i64, i64, HalfInt)>,
    pub derivation: Vec<(i64, HalfInt, HalfInt)>,
    pub cyclic: Vec<(HalfInt, HalfInt, HalfInt)>,
}

impl ConformalSamples {
    /// Every tuple with integer indices in `[-w, w]` and half-integer indices in `[-w-½, w+½]`.
    pub fn window(w: i64) -> Self {
        let ints: Vec<i64> = (-w..=w).collect();
        let halves: Vec<HalfInt> = (-w - 1..=w).map(|k| HalfInt(2 * k + 1)).collect();
        let mut s = ConformalSamples::default();
        for &n in &ints {
            for &m in &ints {
                for &l in &ints {
                    s.assoc.push((n, m, l));
                }
                for &i in &halves {
                    s.action.push((n, m, i));
                }
            }
            for &i in &halves {
                for &j in &halves {
                    s.derivation.push((n, i, j));
                }
            }
        }
        for &i in &halves {
            for &j in &halves {
                for &k in &halves {
                    s.cyclic.push((i, j, k));
                }
            }
        }
        s
    }
}

/// A catalog lookup result.
#[derive(Debug, Clone)]
pub enum CatalogEntry {
    Finite(HomLieAntialgebra),
    Conformal(ConformalAlgebra),
}

fn split_query(name: &str) -> (&str, Vec<(&str, &str)>) {
    match name.split_once('?') {
        None => (name, Vec::new()),
        Some((base, query)) => (
            base,
            query
                .split('&')
                .map(|kv| kv.split_once('=').unwrap_or((kv, "")))
                .collect(),
        ),
    }
}

fn single_param(name: &str, params: &[(&str, &str)], key: &str) -> Result<Rational> {
    match params {
        [(k, v)] if *k == key => Ok(parse_rational(v)?),
        _ => Err(Error::Parameter(format!("{name}: expected exactly one parameter `{key}`"))),
    }
}

/// Resolves `k1`, `k1-twisted?mu=<rational>` and `conformal?r=<rational>`.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let (base, params) = split_query(name);
    match base {
        "k1" if params.is_empty() => Ok(CatalogEntry::Finite(k1())),
        "k1-twisted" => Ok(CatalogEntry::Finite(twisted_k1(&single_param(
            name, &params, "mu",
        )?)?)),
        "conformal" => Ok(CatalogEntry::Conformal(conformal(&single_param(
            name, &params, "r",
        )?)?)),
        _ => Err(Error::Parameter(format!("unknown catalog entry {name:?}"))),
    }
}

pub fn catalog_names() -> [&'static str; 3] {
    ["k1", "k1-twisted?mu=<rational>", "conformal?r=<rational>"]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_axioms, check_multiplicative};
    use crate::scalar::int;

    #[test]
    fn k1_is_valid() {
        let a = k1();
        assert!(check_axioms(&a).passed());
        assert!(check_multiplicative(&a).passed());
        assert_eq!(twisted_k1(&one()).unwrap(), a);
    }

    #[test]
    fn twisted_products() {
        let a = twisted_k1(&int(3)).unwrap();
        assert_eq!(a.nu().get(0, 0, 0), &frac(3, 2));
        assert_eq!(a.nu().get(0, 1, 1), &frac(1, 6));
        assert_eq!(a.br().get(0, 1, 0), &half());
        assert!(twisted_k1(&int(0)).is_err());
    }

    #[test]
    fn lookup_names() {
        assert!(matches!(lookup("k1").unwrap(), CatalogEntry::Finite(_)));
        match lookup("k1-twisted?mu=3/1").unwrap() {
            CatalogEntry::Finite(a) => assert_eq!(a, twisted_k1(&int(3)).unwrap()),
            _ => panic!(),
        }
        assert!(matches!(lookup("conformal?r=2").unwrap(), CatalogEntry::Conformal(_)));
        assert!(lookup("conformal?r=1").is_err());
        assert!(lookup("k1-twisted").is_err());
        assert!(lookup("k1?mu=2").is_err());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn conformal_relations() {
        let c = conformal(&int(2)).unwrap();
        assert_eq!(c.prod_ee(2, 3), (5, one()));
        let h = HalfInt::from_twice(1).unwrap();
        assert_eq!(c.prod_eo(0, h), (h, frac(3, 2)));
        assert_eq!(c.bracket(h, h).1, Rational::zero());
        assert!(HalfInt::from_twice(2).is_err());
    }

    #[test]
    fn action_residual_matches_closed_form() {
        let c = conformal(&frac(2, 3)).unwrap();
        for m in -2..=2 {
            for k in -3..=3 {
                let i = HalfInt(2 * k + 1);
                assert_eq!(c.action_residual(5, m, i), c.action_residual_closed_form(m, i));
                assert_eq!(c.action_residual_closed_form(0, i), Rational::zero());
            }
        }
    }
}
